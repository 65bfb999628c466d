#include <optional>

#include "canonform/canonicity.hpp"
#include "canonform/error.hpp"
#include "internal.hpp"

namespace canonform {

HyperplaneResult hyperplane_classify(const std::vector<Scalar>& c, std::uint64_t seed, int trials) {
    if (c.size() != 4) throw Error(ErrorKind::BadShape, "hyperplane needs four coefficients");
    auto zero = [](const Scalar& z) { return z.is_zero(z.is_exact() ? 0.0 : kDefaultEps); };
    int piv = detail::hyperplane_pivot(c);
    if (piv < 0) throw Error(ErrorKind::AllZero, "all hyperplane coefficients vanish");
    HyperplaneResult R;

    // c3 = eps c1, c4 = eps c2 with eps^2 = -1
    std::optional<Scalar> eps;
    if (!zero(c[0]))
        eps = c[2] / c[0];
    else if (!zero(c[1]))
        eps = c[3] / c[1];
    if (eps && zero(*eps * *eps + Scalar(1)) && zero(c[2] - *eps * c[0]) && zero(c[3] - *eps * c[1])) {
        R.exceptional = true;
        R.epsilon = *eps;
        if (!zero(c[3]))
            R.zero_point = {-c[0] / c[3], *eps};
        else
            R.zero_point = {c[0], c[1]};
        return R;
    }

    ParamMap map = detail::hyperplane_map(c);
    CertifyReport rep = jacobian_certify(map, std::nullopt, trials, seed);
    if (rep.verdict != Verdict::Certified) return R;
    std::vector<Scalar> t(4);
    Scalar acc = 0;
    for (int j = 0, k = 0; j < 4; ++j) {
        if (j == piv) continue;
        t[j] = rep.witness[k++];
        acc += c[j] * t[j];
    }
    t[piv] = -acc / c[piv];
    R.witness = t;
    return R;
}

}  // namespace canonform
