#include "canonform/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>

#include "canonform/error.hpp"

namespace canonform {

namespace upoly {

void trim(UPoly& p, double tol) {
    while (!p.empty() && p.back().is_zero(tol)) p.pop_back();
}

int degree(const UPoly& p) {
    UPoly q = p;
    trim(q);
    return static_cast<int>(q.size()) - 1;
}

Scalar eval(const UPoly& p, const Scalar& t) {
    Scalar s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * t + *it;
    return s;
}

UPoly derivative(const UPoly& p) {
    UPoly q;
    for (size_t k = 1; k < p.size(); ++k) q.push_back(p[k] * Scalar(static_cast<long>(k)));
    return q;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b0) {
    UPoly b = b0;
    trim(b);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    UPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    UPoly q(r.size() - b.size() + 1);
    Scalar lead_inv = b.back().inverse();
    for (int k = static_cast<int>(r.size() - b.size()); k >= 0; --k) {
        Scalar c = r[k + b.size() - 1] * lead_inv;
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
        r.pop_back();
    }
    trim(r);
    return {q, r};
}

static UPoly monic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Scalar inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::vector<UPoly> squarefree(const UPoly& p0) {
    UPoly p = p0;
    trim(p);
    std::vector<UPoly> out;
    if (p.size() <= 1) return out;
    UPoly a = gcd(p, derivative(p));
    UPoly b = divmod(p, a).first;
    UPoly c = divmod(derivative(p), a).first;
    UPoly d = c;
    UPoly bd = derivative(b);
    if (d.size() < bd.size()) d.resize(bd.size());
    for (size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
    trim(d);
    while (degree(b) > 0) {
        UPoly g = gcd(b, d);
        out.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        bd = derivative(b);
        d = c;
        if (d.size() < bd.size()) d.resize(bd.size());
        for (size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
        trim(d);
    }
    return out;
}

}  // namespace upoly

static cplx horner(const std::vector<cplx>& c, cplx t, cplx* deriv) {
    cplx v = 0, dv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = dv * t + v;
        v = v * t + *it;
    }
    if (deriv) *deriv = dv;
    return v;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
    int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};
    if (c.back() == cplx(0, 0)) throw Error(ErrorKind::DegenerateInput, "poly_roots: leading coefficient is zero");
    std::vector<cplx> roots;
    if (n == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    for (auto& r : roots) {
        for (int it = 0; it < 8; ++it) {
            cplx dv;
            cplx v = horner(c, r, &dv);
            if (dv == cplx(0, 0)) break;
            cplx step = v / dv;
            cplx cand = r - step;
            if (std::abs(horner(c, cand, nullptr)) >= std::abs(v)) break;
            r = cand;
            if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(r))) break;
        }
    }
    return roots;
}

double chordal(cplx a, cplx b) {
    if (std::isinf(std::abs(a)) && std::isinf(std::abs(b))) return 0;
    if (std::isinf(std::abs(a))) return 1.0 / std::sqrt(1 + std::norm(b));
    if (std::isinf(std::abs(b))) return 1.0 / std::sqrt(1 + std::norm(a));
    return std::abs(a - b) / (std::sqrt(1 + std::norm(a)) * std::sqrt(1 + std::norm(b)));
}

std::vector<std::pair<cplx, int>> cluster_roots(const std::vector<cplx>& roots, double tol) {
    std::vector<std::vector<cplx>> groups;
    for (cplx r : roots) {
        bool placed = false;
        for (auto& g : groups) {
            if (chordal(g.front(), r) < tol) {
                g.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({r});
    }
    std::vector<std::pair<cplx, int>> out;
    for (auto& g : groups) {
        cplx m = 0;
        for (cplx r : g) m += r;
        out.emplace_back(m / static_cast<double>(g.size()), static_cast<int>(g.size()));
    }
    return out;
}

Form BinaryFactorization::product() const {
    int n = 2;
    Form f = Form::constant(n, constant);
    for (const auto& [l, m] : factors) f = f * l.power(m);
    return f;
}

std::pair<Scalar, Scalar> zero_of(const LinearForm& l) {
    // beta x - alpha y vanishes at (alpha, beta).
    return {-l.alpha[1], l.alpha[0]};
}

static LinearForm factor_for_root(const Scalar& t) { return LinearForm{t, Scalar(-1)}; }

static std::vector<cplx> to_cplx(const UPoly& p) {
    std::vector<cplx> c;
    for (const auto& s : p) c.push_back(s.to_complex());
    return c;
}

BinaryFactorization binary_factor(const Form& p, double eps) {
    if (p.n() != 2) throw Error(ErrorKind::ShapeMismatch, "binary_factor needs n = 2");
    bool exact = p.is_exact();
    if (p.is_zero(exact ? 0.0 : eps)) throw Error(ErrorKind::ZeroForm, "binary_factor of the zero form");
    int d = p.d();
    UPoly P(d + 1);
    for (int k = 0; k <= d; ++k) P[k] = p.raw({d - k, k});
    double tol = exact ? 0.0 : eps * p.norm();
    upoly::trim(P, tol);
    int e = static_cast<int>(P.size()) - 1;
    BinaryFactorization out;
    Scalar lead = P.back();
    // p = lead * x^(d-e) * prod (y - t x) = lead * (-1)^e * x^(d-e) * prod (t x - y)
    out.constant = (e % 2 ? -lead : lead);
    if (d - e > 0) out.factors.emplace_back(LinearForm{Scalar(1), Scalar(0)}, d - e);
    if (e == 0) return out;

    if (exact) {
        auto parts = upoly::squarefree(P);
        for (size_t k = 0; k < parts.size(); ++k) {
            UPoly rest = parts[k];
            int mult = static_cast<int>(k) + 1;
            if (upoly::degree(rest) < 1) continue;
            for (cplx r : poly_roots(to_cplx(rest))) {
                auto s = snap(Scalar(r), 1000000, 1e-7);
                if (s && upoly::degree(rest) >= 1 && upoly::eval(rest, *s).is_zero()) {
                    rest = upoly::divmod(rest, UPoly{-*s, Scalar(1)}).first;
                    out.factors.emplace_back(factor_for_root(*s), mult);
                }
            }
            if (upoly::degree(rest) >= 1) {
                for (cplx r : poly_roots(to_cplx(rest))) out.factors.emplace_back(factor_for_root(Scalar(r)), mult);
            }
        }
        return out;
    }
    auto roots = poly_roots(to_cplx(P));
    for (auto& [r, m] : cluster_roots(roots, std::sqrt(eps))) out.factors.emplace_back(factor_for_root(Scalar(r)), m);
    return out;
}

}  // namespace canonform
