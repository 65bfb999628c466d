#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"

namespace canonform {

namespace {

using Poly = std::vector<cplx>;  // coefficient j multiplies x^(deg-j) y^j

Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly power(const Poly& a, int k) {
    Poly r = {1.0};
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Poly raw_binary(const Form& f) {
    Poly out(f.d() + 1);
    for (int j = 0; j <= f.d(); ++j) out[j] = f.raw({f.d() - j, j}).to_complex();
    return out;
}

struct System {
    int d;
    std::vector<int> e;
    std::vector<Poly> fixed;  // l_j^d
    Poly target;
    int M;

    // unknowns: t_0..t_{m-1}, then the coefficients of each f_k
    void residual(const Eigen::VectorXcd& u, Eigen::VectorXcd& R, Eigen::MatrixXcd* J) const {
        R = Eigen::VectorXcd::Zero(d + 1);
        if (J) *J = Eigen::MatrixXcd::Zero(d + 1, M);
        int col = 0;
        for (const auto& L : fixed) {
            for (int i = 0; i <= d; ++i) {
                R(i) += u(col) * L[i];
                if (J) (*J)(i, col) = L[i];
            }
            ++col;
        }
        for (int ek : e) {
            Poly f(u.data() + col, u.data() + col + ek + 1);
            int mk = d / ek;
            Poly lower = power(f, mk - 1);
            Poly full = mul(lower, f);
            for (int i = 0; i <= d; ++i) R(i) += full[i];
            if (J)
                for (int j = 0; j <= ek; ++j)
                    for (size_t i = 0; i < lower.size(); ++i) (*J)(i + j, col + j) += double(mk) * lower[i];
            col += ek + 1;
        }
        for (int i = 0; i <= d; ++i) R(i) -= target[i];
    }

    // t_j and f_k^(d/e_k): the data identified up to roots of unity
    std::vector<Poly> signature(const Eigen::VectorXcd& u) const {
        std::vector<Poly> out;
        int col = 0;
        for (size_t j = 0; j < fixed.size(); ++j) out.push_back({u(col++)});
        for (int ek : e) {
            Poly f(u.data() + col, u.data() + col + ek + 1);
            out.push_back(power(f, d / ek));
            col += ek + 1;
        }
        return out;
    }
};

double chordal(const Poly& a, const Poly& b) {
    double na = 0, nb = 0;
    cplx ip = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
        ip += std::conj(a[i]) * b[i];
    }
    if (na == 0 || nb == 0) return (na == nb) ? 0.0 : 1.0;
    double c = std::abs(ip) / std::sqrt(na * nb);
    return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, c * c)));
}

// Same solution when every fixed coefficient agrees and the free powers match up to order within equal e_k.
bool same(const System& S, const std::vector<Poly>& a, const std::vector<Poly>& b, double tol) {
    size_t m = S.fixed.size();
    for (size_t j = 0; j < m; ++j)
        if (std::abs(a[j][0] - b[j][0]) > tol * std::max(1.0, std::abs(a[j][0]))) return false;
    std::vector<bool> used(S.e.size(), false);
    for (size_t k = 0; k < S.e.size(); ++k) {
        bool found = false;
        for (size_t l = 0; l < S.e.size() && !found; ++l) {
            if (used[l] || S.e[l] != S.e[k]) continue;
            const Poly &x = a[m + k], &y = b[m + l];
            double nx = 0, ny = 0;
            for (size_t i = 0; i < x.size(); ++i) {
                nx += std::norm(x[i]);
                ny += std::norm(y[i]);
            }
            // projective agreement plus matching scale
            if (chordal(x, y) < tol && std::abs(std::sqrt(nx) - std::sqrt(ny)) < tol * std::max(1.0, std::sqrt(nx))) {
                used[l] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

void check_shape(int d, const std::vector<int>& e, int m) {
    if (d < 1 || m < 0) throw Error(ErrorKind::BadShape, "need d >= 1 and m >= 0");
    long total = m;
    for (int ek : e) {
        if (ek < 1 || ek >= d || d % ek != 0) throw Error(ErrorKind::BadShape, "each e_k must divide d with 1 <= e_k < d");
        total += ek + 1;
    }
    if (total != d + 1) throw Error(ErrorKind::BadShape, "need m + sum(e_k + 1) = d + 1");
}

}  // namespace

MonteCarloResult count_reps_for(const Form& p, const std::vector<int>& e, const std::vector<LinearForm>& fixed,
                                int trials, std::uint64_t seed) {
    if (p.n() != 2) throw Error(ErrorKind::UnsupportedShape, "Monte Carlo counting handles binary forms only");
    int d = p.d();
    check_shape(d, e, static_cast<int>(fixed.size()));
    for (const auto& l : fixed)
        if (l.n() != 2) throw Error(ErrorKind::ShapeMismatch, "fixed forms must be binary");
    System S;
    S.d = d;
    S.e = e;
    std::sort(S.e.rbegin(), S.e.rend());
    for (const auto& l : fixed) S.fixed.push_back(raw_binary(l.power(d)));
    S.target = raw_binary(p);
    S.M = d + 1;
    double scale = 0;
    for (const auto& c : S.target) scale = std::max(scale, std::abs(c));
    if (scale == 0) throw Error(ErrorKind::ZeroForm, "zero form");
    for (auto& c : S.target) c /= scale;

    MonteCarloResult out;
    out.trials = trials;
    out.seed = seed;
    std::vector<std::vector<Poly>> found;
    for (int k = 0; k < trials; ++k) {
        std::mt19937_64 g(seed + 1 + static_cast<std::uint64_t>(k));
        std::normal_distribution<double> N(0.0, 1.0);
        // log-normal radius so starts reach solutions of different sizes
        double radius = std::exp(N(g));
        Eigen::VectorXcd u(S.M);
        for (int i = 0; i < S.M; ++i) u(i) = radius * cplx(N(g), N(g));
        Eigen::VectorXcd R;
        Eigen::MatrixXcd J;
        bool ok = false;
        for (int it = 0; it < 100; ++it) {
            S.residual(u, R, &J);
            if (R.norm() < 1e-12) {
                ok = true;
                break;
            }
            if (!u.allFinite() || u.norm() > 1e8) break;
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
            Eigen::VectorXcd step = lu.solve(-R);
            if (!step.allFinite()) break;
            // halve the step until the residual drops
            double r0 = R.norm(), lam = 1.0;
            Eigen::VectorXcd R1;
            for (int h = 0; h < 20; ++h, lam *= 0.5) {
                S.residual(u + lam * step, R1, nullptr);
                if (R1.norm() < r0) break;
            }
            u += lam * step;
        }
        if (!ok) continue;
        ++out.converged;
        std::vector<Poly> sig = S.signature(u);
        bool dup = false;
        for (const auto& f : found)
            if (same(S, f, sig, 1e-6)) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(sig);
    }
    out.count = static_cast<int>(found.size());
    return out;
}

MonteCarloResult count_reps_monte_carlo(int d, const std::vector<int>& e, int m, int trials, std::uint64_t seed) {
    check_shape(d, e, m);
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<int> U(-100, 100);
    std::vector<Scalar> a;
    for (int k = 0; k <= d; ++k) a.push_back(Scalar::gauss(U(g), U(g)));
    Form p = Form::from_vector(2, d, a);
    std::vector<LinearForm> fixed;
    for (int j = 0; j < m; ++j) fixed.push_back(LinearForm({Scalar(1), Scalar(j)}));  // x + j y
    return count_reps_for(p, e, fixed, trials, seed);
}

}  // namespace canonform
