#include <algorithm>

#include "canonform/apolarity.hpp"
#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"

namespace canonform {

Decomposition mixed_decompose(const Form& p, const MixedSpec& spec, double eps) {
    if (p.n() != 2) throw Error(ErrorKind::ShapeMismatch, "mixed_decompose needs a binary form");
    int d = p.d();
    int m = static_cast<int>(spec.fixed.size());
    int r = spec.r;
    if (m + 2 * r != d + 1) throw Error(ErrorKind::BadShape, "need m + 2r = d + 1");
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (proportional(spec.fixed[a], spec.fixed[b], eps))
                throw Error(ErrorKind::DegenerateInput, "fixed forms are not honest", 0);
    bool exact = p.is_exact();
    for (const auto& l : spec.fixed)
        for (const auto& a : l.alpha) exact = exact && a.is_exact();
    double tol = exact ? 0.0 : eps;

    // f = prod (beta_j x - alpha_j y) annihilates every l_j^d.
    Form f = Form::constant(2, 1);
    for (const auto& l : spec.fixed) f = f * LinearForm{l.alpha[1], -l.alpha[0]}.form();

    Decomposition D;
    D.theorem = "mixed";
    Form rest = p;
    if (r > 0) {
        Form q = apply_diff(f, p);
        if (!q.is_zero(exact ? 0.0 : eps * std::max(1.0, p.norm()))) {
            Decomposition S;
            try {
                S = sylvester_decompose(q, eps);
            } catch (const Error& e) {
                throw Error(ErrorKind::DegenerateInput, std::string("sylvester stage failed: ") + e.what(), 1);
            }
            if (static_cast<int>(S.terms.size()) > r)
                throw Error(ErrorKind::DegenerateInput, "f(D)p needs more than r powers", 1);
            // f(D) u^d = d!/(2r-1)! f(u) u^(2r-1)
            Scalar ratio = Scalar(factorial(2 * r - 1)) / Scalar(factorial(d));
            for (const auto& t : S.terms) {
                LinearForm u = LinearForm::from_form(t.base);
                Scalar fu = f.evaluate(u.alpha);
                if (fu.is_zero(tol)) throw Error(ErrorKind::DegenerateInput, "f vanishes at a free node", 2);
                Scalar lam = t.multiplier * ratio / fu;
                D.terms.push_back({lam, t.base, d});
                rest -= t.base.pow(d) * lam;
            }
        }
    }
    if (m > 0) {
        Matrix V(d + 1, m);
        for (int k = 0; k < m; ++k) {
            Form pw = spec.fixed[k].power(d);
            for (int j = 0; j <= d; ++j) V(j, k) = pw.coeff({d - j, j});
        }
        std::vector<Scalar> b(d + 1);
        for (int j = 0; j <= d; ++j) b[j] = rest.coeff({d - j, j});
        auto t = solve(V, b, std::sqrt(eps));
        if (!t) throw Error(ErrorKind::DegenerateInput, "fixed-form coefficients are inconsistent", 3);
        for (int k = 0; k < m; ++k) D.terms.push_back({(*t)[k], spec.fixed[k].form(), d});
    } else if (!rest.is_zero(exact ? 0.0 : std::sqrt(eps) * std::max(1.0, p.norm()))) {
        throw Error(ErrorKind::DegenerateInput, "free powers do not reconstruct the form", 3);
    }
    return D;
}

}  // namespace canonform
