// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../unit/oracle.hpp"
#include "canonform/apolarity.hpp"
#include "canonform/binary_decomp.hpp"
#include "canonform/canonicity.hpp"
#include "canonform/enumeration.hpp"
#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "canonform/roots.hpp"
#include "canonform/text.hpp"

using namespace canonform;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Rational coefficients from a wide range, so the measure-zero degenerate loci are not hit.
Form generic_form(std::mt19937_64& g, int n, int d) {
    std::vector<Scalar> a;
    std::uniform_int_distribution<int> U(1, 999), S(0, 1), Q(1, 9);
    for (size_t k = 0; k < index_set(n, d).size(); ++k) a.push_back(Scalar::rational(S(g) ? U(g) : -U(g), Q(g)));
    return Form::from_vector(n, d, a);
}

cplx node(const Form& l) {
    cplx a = l.raw({1, 0}).to_complex(), b = l.raw({0, 1}).to_complex();
    return std::abs(a) < 1e-12 ? cplx(INFINITY, 0) : b / a;
}

bool same_sets(std::vector<cplx> a, std::vector<cplx> b, double tol) {
    if (a.size() != b.size()) return false;
    for (cplx x : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](cplx y) { return chordal(x, y) <= tol; });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

std::vector<int> support(const Form& l, double tol = 1e-9) {
    std::vector<int> s;
    LinearForm a = LinearForm::from_form(l);
    for (int j = 0; j < a.n(); ++j)
        if (!a.alpha[j].is_zero(a.alpha[j].is_exact() ? 0.0 : tol)) s.push_back(j);
    return s;
}

Outcome ac1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Form p = parse_form("2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3");
    Decomposition D = sylvester_decompose(p);
    double t = seconds_since(t0);
    o.require(D.terms.size() == 2 && D.is_exact(), "expected two exact terms");
    if (!o.pass) return o;
    o.require(D.terms[0].multiplier == Scalar(5) && D.terms[0].base.equals(parse_form("x + 2*y")), "first term");
    o.require(D.terms[1].multiplier == Scalar(-3) && D.terms[1].base.equals(parse_form("x + 3*y")), "second term");
    o.require(format_decomposition(D) == "5*(x+2*y)^3 - 3*(x+3*y)^3", "text " + format_decomposition(D));
    o.require(D.reconstructs(p), "reconstruction");
    o.require(t < 0.1, "runtime " + std::to_string(t) + " s");
    return o;
}

Outcome ac2() {
    Outcome o;
    Form p = parse_form("-x^5 + 15*x^4*y - 170*x^3*y^2 + 390*x^2*y^3 - 505*x*y^4 + 483*y^5");
    MixedSpec spec{{LinearForm({1, 1}), LinearForm({-1, 3})}, 2};
    Decomposition D = mixed_decompose(p, spec);
    o.require(D.terms.size() == 4 && D.is_exact(), "expected four exact terms");
    if (!o.pass) return o;
    std::vector<Scalar> want = {-4, 1, Scalar::rational(7, 2), Scalar::rational(3, 2)};
    std::vector<const char*> bases = {"x + 2*y", "x + 3*y", "x + y", "-x + 3*y"};
    for (int k = 0; k < 4; ++k) {
        o.require(D.terms[k].multiplier == want[k], "coefficient " + std::to_string(k));
        o.require(D.terms[k].base.equals(parse_form(bases[k])), "linear form " + std::to_string(k));
    }
    o.require(D.reconstructs(p, 0.0), "reconstruction");
    return o;
}

Outcome ac3() {
    Outcome o;
    std::mt19937_64 g(3);
    for (int n = 1; n <= 3 && o.pass; ++n)
        for (int d = 1; d <= 6 && o.pass; ++d)
            for (int trial = 0; trial < 100; ++trial) {
                std::string at = " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
                Form p = oracle::rand_form(g, n, d), q = oracle::rand_form(g, n, d);
                Scalar dfac = Scalar(factorial(d));
                o.require(pair(p, q) == pair(q, p), "symmetry" + at);
                o.require(apply_diff(p, q).raw(MultiIndex(n, 0)) == dfac * pair(p, q), "p(D)q = d! [p,q]" + at);
                LinearForm a = oracle::rand_linear(g, n, -3, 3);
                o.require(pair(p, a.power(d)) == p.evaluate(a.alpha), "duality" + at);
                int e = 1 + trial % d;
                Form f = oracle::rand_form(g, n, e, -3, 3), h = oracle::rand_form(g, n, d - e, -3, 3);
                o.require(dfac * pair(f * h, p) == Scalar(factorial(e)) * pair(f, apply_diff(h, p)),
                          "product rule" + at);
                o.require(apply_diff(h, a.power(d)).equals(a.power(e) * (dfac / Scalar(factorial(e)) * h.evaluate(a.alpha))),
                          "h(D) on a power" + at);
            }
    return o;
}

Outcome ac4() {
    Outcome o;
    std::mt19937_64 g(4);
    for (int s = 1; s <= 3; ++s) {
        size_t want = binomial(2 * s - 1, s).get_si();
        o.require(want == std::vector<size_t>{1, 3, 10}[s - 1], "binomial");
        for (int trial = 0; trial < 10; ++trial) {
            Form p;
            do p = oracle::rand_form(g, 2, 2 * s);
            while (p.raw({2 * s, 0}).is_zero(0.0) || !is_squarefree_binary(p));
            auto R = two_squares_all(p);
            o.require(R.size() == want, "degree " + std::to_string(2 * s) + ": " + std::to_string(R.size()) + " reps");
            for (auto& D : R) o.require(D.error(p) <= 1e-9, "reconstruction in degree " + std::to_string(2 * s));
        }
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    std::mt19937_64 g(5);
    std::uniform_int_distribution<int> U(-20, 20), V(1, 20);
    const std::vector<cplx> want{cplx(INFINITY, 0), 0, 1, -1, cplx(0, 1), cplx(0, -1)};
    int done = 0;
    while (done < 20) {
        Scalar lam = Scalar::gauss(U(g), U(g)) / Scalar(V(g));
        // the normal quartic is singular at lambda = +-1/3
        if (lam == Scalar::rational(1, 3) || lam == Scalar::rational(-1, 3)) continue;
        ++done;
        Form p = quartic_normal_form(lam);
        auto R = quartic_six_reps(lam);
        o.require(R.size() == 6, "six reps");
        std::vector<cplx> ratios;
        for (auto& D : R) {
            o.require(D.reconstructs(p), "six-rep reconstruction");
            ratios.push_back(quartic_ratio(D));
        }
        o.require(same_sets(ratios, want, 0.0), "ratio set for lambda = " + format_scalar(lam));
    }
    Form q = oracle::rand_form(g, 2, 4);
    auto R = quartic_six_reps_of(q);
    o.require(R.size() == 6, "pullback count " + std::to_string(R.size()));
    for (auto& D : R) o.require(D.reconstructs(q, 1e-8), "pullback reconstruction");
    LinearForm l1 = oracle::rand_linear(g, 2), l2 = oracle::rand_linear(g, 2);
    while (proportional(l1, l2)) l2 = oracle::rand_linear(g, 2);
    auto T = quartic_two_fixed(q, l1, l2);
    o.require(T.size() == 2, "two-fixed count " + std::to_string(T.size()));
    for (auto& D : T) o.require(D.reconstructs(q, 1e-9), "two-fixed reconstruction");
    return o;
}

Outcome ac6() {
    Outcome o;
    std::mt19937_64 g(6);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + trial % 3;
        Form p = generic_form(g, n, 3);
        Decomposition D = reichstein_full(p);
        long want = (n + 1) * (n + 1) / 4;
        o.require(static_cast<long>(D.terms.size()) == want, "n=" + std::to_string(n) + ": " +
                                                                 std::to_string(D.terms.size()) + " cubes");
        o.require(D.error(p) <= 1e-8, "reconstruction error " + std::to_string(D.error(p)));
    }
    int compared = 0;
    for (int trial = 0; compared < 20 && trial < 100; ++trial) {
        Form p = generic_form(g, 2, 3);
        Decomposition R;
        try {
            R = reichstein_full(p);
        } catch (const Error& e) {
            // a square first partial has no simultaneous diagonalization
            o.require(e.kind() == ErrorKind::DegeneratePencil, e.what());
            continue;
        }
        ++compared;
        Decomposition S = sylvester_decompose(p);
        std::vector<cplx> a, b;
        for (auto& t : R.terms) a.push_back(node(t.base));
        for (auto& t : S.terms) b.push_back(node(t.base));
        o.require(same_sets(a, b, 1e-6), "binary nodes differ from the Sylvester nodes");
    }
    o.require(compared == 20, "too many degenerate binary draws");
    return o;
}

Outcome ac7() {
    Outcome o;
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 3;
        Form p = generic_form(g, n, 3);
        Decomposition D = slinky(p);
        o.require(static_cast<int>(D.terms.size()) == n * (n + 1) / 2, "cube count");
        if (!o.pass) return o;
        o.require(D.error(p) <= 1e-8, "reconstruction");
        size_t idx = 0;
        for (int k = n - 1; k >= 0; --k)
            for (int j = 0; j <= k; ++j, ++idx) {
                std::vector<int> want;
                for (int v = j; v <= k; ++v) want.push_back(v);
                o.require(support(D.terms[idx].base) == want, "support of cube " + std::to_string(idx));
            }
        Decomposition E = slinky(p);
        for (size_t k = 0; k < D.terms.size(); ++k)
            o.require(D.terms[k].expand().equals(E.terms[k].expand(), 1e-10), "rerun differs");
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    auto check = [&](const Form& p, const std::string& what) {
        Decomposition D = slowpoke(p);
        int n = p.n();
        o.require(static_cast<int>(D.terms.size()) <= n * (n + 1) / 2, what + ": too many cubes");
        o.require(D.error(p) <= 1e-7, what + ": reconstruction");
    };
    check(parse_form("x1*x2*x3"), "x1 x2 x3");
    std::mt19937_64 g(8);
    // rank deficient: a cubic in k < n variables pulled back along a random n x k matrix
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 5, k = 1 + trial % (n - 1);
        Form q = oracle::rand_form(g, k, 3);
        if (q.is_zero(0.0)) continue;
        Matrix A(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = oracle::rand_int(g, -3, 3);
        Form p = q.substitute(A);
        if (p.is_zero(0.0)) continue;
        check(p, "rank-deficient n=" + std::to_string(n));
    }
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 6;
        Form p = oracle::rand_form(g, n, 3);
        if (p.is_zero(0.0)) continue;
        check(p, "random n=" + std::to_string(n));
    }
    for (int m = 1; m <= 8; ++m) {
        auto L = slowpoke_family(m);
        Form s(m, 1), sq(m, 2), y2(m, 2);
        for (const auto& l : L) {
            s += l.form();
            sq += l.power(2);
        }
        for (int k = 0; k < m; ++k) y2 += Form::variable(m, k).pow(2);
        o.require(L.size() == static_cast<size_t>(m + 1) && s.is_zero(1e-12) && (sq - y2).is_zero(1e-12),
                  "family identities for m = " + std::to_string(m));
    }
    return o;
}

Outcome ac9() {
    Outcome o;
    double slowest = 0;
    auto certify = [&](const std::string& name, const MapParams& P) {
        auto t0 = std::chrono::steady_clock::now();
        ParamMap m = build_map(name, P);
        CertifyReport r = m.witnesses.empty() ? jacobian_certify(m) : jacobian_certify(m, m.witnesses.front());
        double t = seconds_since(t0);
        slowest = std::max(slowest, t);
        std::string what = name;
        for (auto& [k, v] : P) what += " " + k + "=" + v;
        o.require(r.verdict == Verdict::Certified && r.rank == dimension(m.n, m.d), what + ": " + verdict_name(r.verdict));
        o.require(t < 5, what + ": " + std::to_string(t) + " s");
    };
    for (int n = 1; n <= 5; ++n) certify("uppertri", {{"n", std::to_string(n)}});
    certify("sextican", {});
    for (int n = 1; n <= 3; ++n)
        for (int d = 3; d <= 5; ++d) certify("wakeford", {{"n", std::to_string(n)}, {"d", std::to_string(d)}});
    for (int d = 3; d <= 6; ++d)
        for (int m1 = 0; m1 <= d; ++m1)
            for (int m2 = m1 + 1; m2 <= d; ++m2) {
                if ((m1 == 0 && m2 == 1) || (m1 == d - 1 && m2 == d)) continue;
                for (int n1 = 0; n1 <= d; ++n1)
                    for (int n2 = n1 + 1; n2 <= d; ++n2) {
                        if (std::set<int>{m1, m2, n1, n2}.size() != 4) continue;
                        std::ostringstream B;
                        B << m1 << "," << m2 << "," << n1 << "," << n2;
                        certify("quarticgen", {{"d", std::to_string(d)}, {"B", B.str()}});
                    }
            }
    certify("notclebsch", {});
    for (int r = 2; r <= 6; ++r)
        for (const auto& f : neat_enumerate(r, 12)) {
            std::string e;
            for (size_t k = 0; k < f.e.size(); ++k) e += (k ? "," : "") + std::to_string(f.e[k]);
            certify("omnibus", {{"d", std::to_string(f.d)}, {"e", e}, {"m", "0"}});
        }
    for (int s = 1; s <= 4; ++s) certify("sylv622", {{"s", std::to_string(s)}});
    // s = 1 is l^2 + lambda l^2, which only reaches squares
    for (int s = 2; s <= 4; ++s) certify("sylwake", {{"s", std::to_string(s)}});
    certify("so3s", {});
    for (int s = 1; s <= 4; ++s) {
        auto t0 = std::chrono::steady_clock::now();
        CertifyReport r = zerosum_verify(s);
        double t = seconds_since(t0);
        slowest = std::max(slowest, t);
        o.require(r.verdict == Verdict::Certified, "zerosum s=" + std::to_string(s));
        o.require(t < 5, "zerosum s=" + std::to_string(s) + ": " + std::to_string(t) + " s");
    }
    if (o.pass) o.detail = "slowest run " + std::to_string(slowest) + " s";
    return o;
}

Outcome ac10() {
    Outcome o;
    std::mt19937_64 g(10);
    auto sample_t = [&](const std::vector<Scalar>& c) {
        std::vector<Scalar> t;
        for (int j = 0; j < 4; ++j) t.push_back(oracle::rand_int(g, -9, 9));
        int p = -1;
        for (int j : {3, 1, 2, 0})
            if (!c[j].is_zero(0.0)) {
                p = j;
                break;
            }
        Scalar acc = 0;
        for (int j = 0; j < 4; ++j)
            if (j != p) acc += c[j] * t[j];
        t[p] = -acc / c[p];
        return t;
    };
    for (int trial = 0; trial < 40; ++trial) {
        Scalar c1 = oracle::rand_gauss(g, -5, 5), c2 = oracle::rand_gauss(g, -5, 5);
        if (c1.is_zero(0.0) && c2.is_zero(0.0)) continue;
        for (Scalar eps : {Scalar::i(), -Scalar::i()}) {
            std::vector<Scalar> c = {c1, c2, eps * c1, eps * c2};
            HyperplaneResult r = hyperplane_classify(c);
            o.require(r.exceptional && r.epsilon == eps, "exceptional case not flagged");
            if (!r.exceptional) continue;
            for (int s = 0; s < 20; ++s) {
                std::vector<Scalar> t = sample_t(c);
                Form F = linear({t[0], t[1]}).pow(2) + linear({t[2], t[3]}).pow(2);
                o.require(F.evaluate(r.zero_point).is_zero(0.0), "zero point misses a representation");
            }
        }
        // off the locus: a different multiplier, or eps = +-i on only one coordinate
        for (const auto& c : std::vector<std::vector<Scalar>>{{c1, c2, Scalar(2) * c1, Scalar(2) * c2},
                                                              {c1, c2, Scalar::i() * c1, -Scalar::i() * c2 + Scalar(1)},
                                                              {c1, c2, oracle::rand_gauss(g, -5, 5), c1}}) {
            bool on = false;
            for (Scalar eps : {Scalar::i(), -Scalar::i()}) on = on || (c[2] == eps * c[0] && c[3] == eps * c[1]);
            if (on) continue;
            HyperplaneResult r = hyperplane_classify(c);
            o.require(!r.exceptional, "canonical case flagged as exceptional");
            Scalar dot = 0;
            for (int j = 0; j < 4 && r.witness.size() == 4; ++j) dot += c[j] * r.witness[j];
            o.require(r.witness.size() == 4 && dot.is_zero(0.0), "witness off the hyperplane");
        }
    }
    return o;
}

Outcome ac11() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    o.require(s_of_d(15) == 2, "s(15)");
    o.require(s_of_d(99) == 3, "s(99)");
    o.require(s_of_d(7316000) == 12, "s(7316000)");
    std::vector<NeatForm> two = {{3, {1, 1}}, {4, {2, 1}}, {6, {3, 2}}};
    o.require(neat_enumerate(2) == two, "neat forms with r = 2");
    o.require(neat_enumerate(3).size() == 22, "neat forms with r = 3");
    std::vector<std::pair<int, long>> smallest = {{10, 6}, {8, 1792}, {12, 242}, {14, 338}, {15, 273}};
    for (auto [d, n] : smallest) {
        auto s = smallest_in_A(d, 2000);
        o.require(s && *s == n, "smallest in A_" + std::to_string(d));
    }
    o.require(obstruction_A(4, 12), "12 in A_4");
    for (int p : {2, 3, 5, 7}) o.require(members_of_A(p, 500).empty(), "A_" + std::to_string(p) + " nonempty");
    double t = seconds_since(t0);
    o.require(t < 60, "runtime " + std::to_string(t) + " s");
    if (o.pass) o.detail = std::to_string(t) + " s";
    return o;
}

// The d = 4 counts gate; the sextic count is reported only.
Outcome ac12(std::string& stretch) {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        MonteCarloResult a = count_reps_monte_carlo(4, {2, 1}, 0, 200, seed);
        MonteCarloResult b = count_reps_monte_carlo(4, {2}, 2, 200, seed);
        o.require(a.count == 6, "(4;[2,1];0) estimate " + std::to_string(a.count));
        o.require(b.count == 2, "(4;[2];2) estimate " + std::to_string(b.count));
        o.require(a.converged >= 190 && b.converged >= 190, "trial success below 95%");
    }
    MonteCarloResult c = count_reps_monte_carlo(6, {3, 2}, 0, 4000, 1);
    stretch = "(6;[3,2];0) ESTIMATE " + std::to_string(c.count) + " (converged " + std::to_string(c.converged) + "/" +
              std::to_string(c.trials) + ")";
    return o;
}

}  // namespace

int main() {
    std::string stretch;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked cubic decomposes exactly", ac1},
        {"worked quintic mixed decomposition", ac2},
        {"apolarity identities", ac3},
        {"two-squares counts", ac4},
        {"quartic six-pack and two fixed forms", ac5},
        {"Reichstein cube counts", ac6},
        {"slinky shapes and uniqueness", ac7},
        {"slowpoke totality", ac8},
        {"certification catalog", ac9},
        {"hyperplane classification", ac10},
        {"enumeration values", ac11},
        {"Monte Carlo counter", [&] { return ac12(stretch); }},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double t = seconds_since(t0);
        failed += !o.pass;
        std::printf("AC%-2zu %s  %s (%.2f s)%s%s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), t,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    if (!stretch.empty()) std::printf("     info  %s, not gating\n", stretch.c_str());
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
