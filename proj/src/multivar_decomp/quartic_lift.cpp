#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "internal.hpp"

namespace canonform {

Decomposition quartic_lift(const Form& p, double eps) {
    if (p.d() != 4) throw Error(ErrorKind::ShapeMismatch, "quartic_lift needs a quartic");
    if (p.is_zero(0.0)) throw Error(ErrorKind::ZeroForm, "zero form");
    int n = p.n();
    Decomposition D;
    D.theorem = "quartic-lift";
    Form f = p.derivative(n - 1);
    Form q = p;
    if (f.is_zero(p.is_exact() ? 0.0 : eps * std::max(1.0, p.norm())))
        throw Error(ErrorKind::DegenerateStage, "the last partial vanishes", 1);
    Decomposition R;
    try {
        R = reichstein_full(f, eps);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("lift of the last partial: ") + e.message(), e.stage());
    }
    for (const auto& t : R.terms) {
        LinearForm l = LinearForm::from_form(t.base);
        const Scalar& tn = l.alpha[n - 1];
        if (tn.is_zero(tn.is_exact() ? 0.0 : eps))
            throw Error(ErrorKind::DegenerateStage, "a cube does not involve the last variable", 1);
        Scalar m = t.multiplier / (Scalar(4) * tn);
        D.terms.push_back({m, t.base, 4});
        q -= l.power(4) * m;
    }
    if (!detail::drop_vars(q, {n - 1}, detail::residual_tol(p, eps)))
        throw Error(ErrorKind::DegenerateStage, "residual still involves the last variable", 1);
    StageInfo info;
    info.stage = 1;
    info.eliminated = {n - 1};
    info.terms = static_cast<int>(D.terms.size());
    D.stages.push_back(info);
    D.residual = q;
    return D;
}

Decomposition quartic_lift_full(const Form& p, double eps) {
    if (p.d() != 4) throw Error(ErrorKind::ShapeMismatch, "quartic_lift_full needs a quartic");
    int n = p.n();
    Decomposition D;
    D.theorem = "quartic-lift";
    Form q = p;
    double tol = detail::residual_tol(p, eps);
    for (int k = n; k >= 1; --k) {
        if (q.is_zero(q.is_exact() ? 0.0 : tol)) break;
        if (k == 1) {
            D.terms.push_back({q.raw({4}), Form::variable(n, 0), 4});
            D.stages.push_back({n, {0}, 1});
            break;
        }
        std::vector<int> keep;
        for (int j = 0; j < k - 1; ++j) keep.push_back(j);
        if (q.derivative(k - 1).is_zero(q.is_exact() ? 0.0 : tol)) {
            D.stages.push_back({n - k + 1, {k - 1}, 0});
            detail::drop_vars(q, {k - 1}, tol);
            q = q.restrict_to(keep);
            continue;
        }
        Decomposition S = quartic_lift(q, eps);
        for (const auto& t : S.terms) D.terms.push_back({t.multiplier, t.base.extend(n), 4});
        D.stages.push_back({n - k + 1, {k - 1}, static_cast<int>(S.terms.size())});
        q = S.residual->restrict_to(keep);
    }
    return D;
}

}  // namespace canonform
