#include "canonform/decomposition.hpp"

#include "canonform/error.hpp"

namespace canonform {

Form Decomposition::reconstruct(int n, int d) const {
    Form s(n, d);
    for (const auto& t : terms) {
        if (t.base.d() * t.power != d) throw Error(ErrorKind::ShapeMismatch, "term degree");
        s += t.expand();
    }
    if (residual) s += *residual;
    return s;
}

bool Decomposition::reconstructs(const Form& p, double eps) const {
    Form r = reconstruct(p.n(), p.d());
    if (p.is_exact() && r.is_exact()) return r.equals(p);
    return error(p) <= eps;
}

double Decomposition::error(const Form& p) const {
    Form r = reconstruct(p.n(), p.d());
    return (r - p).norm() / std::max(1.0, p.norm());
}

bool Decomposition::is_exact() const {
    for (const auto& t : terms)
        if (!t.multiplier.is_exact() || !t.base.is_exact()) return false;
    return !residual || residual->is_exact();
}

}  // namespace canonform
