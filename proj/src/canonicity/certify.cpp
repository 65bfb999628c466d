#include <random>

#include "canonform/apolarity.hpp"
#include "canonform/canonicity.hpp"
#include "canonform/error.hpp"

namespace canonform {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::NotFullRankAtWitness: return "NotFullRankAtWitness";
        case Verdict::ExceptionalStructure: return "ExceptionalStructure";
    }
    return "?";
}

namespace {

std::vector<Scalar> random_witness(std::mt19937_64& g, int M) {
    std::uniform_int_distribution<int> U(-9, 9);
    std::vector<Scalar> u(M);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& c : u) {
            int v = U(g);
            c = Scalar(v);
            nonzero = nonzero || v != 0;
        }
        if (M == 0) break;
    }
    return u;
}

}  // namespace

CertifyReport jacobian_certify(const ParamMap& map, const std::optional<std::vector<Scalar>>& witness, int trials,
                               std::uint64_t seed) {
    CertifyReport R;
    R.target = static_cast<int>(dimension(map.n, map.d));
    R.seed = seed;
    R.trials = 0;
    auto check = [&](const std::vector<Scalar>& u) {
        ++R.trials;
        int r = rank(map.jacobian(u));
        if (r >= R.rank || R.witness.empty()) {
            R.rank = r;
            R.witness = u;
        }
        return r == R.target;
    };
    if (witness) {
        if (static_cast<int>(witness->size()) != map.M)
            throw Error(ErrorKind::ShapeMismatch, "witness has the wrong number of parameters");
        R.verdict = check(*witness) ? Verdict::Certified : Verdict::NotFullRankAtWitness;
        if (R.verdict != Verdict::Certified && map.M < R.target) R.verdict = Verdict::ExceptionalStructure;
        return R;
    }
    if (map.M < R.target) {
        // Too few parameters: the rank can never reach N(n,d).
        std::mt19937_64 g(seed);
        check(map.witnesses.empty() ? random_witness(g, map.M) : map.witnesses.front());
        R.verdict = Verdict::ExceptionalStructure;
        return R;
    }
    for (const auto& w : map.witnesses)
        if (check(w)) {
            R.verdict = Verdict::Certified;
            return R;
        }
    std::mt19937_64 g(seed);
    for (int k = 0; k < trials; ++k)
        if (check(random_witness(g, map.M))) {
            R.verdict = Verdict::Certified;
            return R;
        }
    R.verdict = Verdict::NotFullRankAtWitness;
    return R;
}

int apolar_kernel_dimension(const ParamMap& map, const std::vector<Scalar>& u) {
    std::vector<Form> P = map.partials(u);
    auto basis = index_set(map.n, map.d);
    int N = static_cast<int>(basis.size());
    Matrix A(map.M, N);
    for (int j = 0; j < map.M; ++j)
        for (int i = 0; i < N; ++i) A(j, i) = pair(P[j], Form::from_normalized(map.n, map.d, {{basis[i], Scalar(1)}}));
    return N - rank(A);
}

CertifyReport zerosum_verify(int s, int trials, std::uint64_t seed) {
    if (s < 1) throw Error(ErrorKind::BadShape, "zerosum needs s >= 1");
    return jacobian_certify(build_map("zerosum", {{"s", std::to_string(s)}}), std::nullopt, trials, seed);
}

}  // namespace canonform
