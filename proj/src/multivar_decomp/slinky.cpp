#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "internal.hpp"

namespace canonform {

Decomposition slinky(const Form& p, double eps) {
    if (p.d() != 3) throw Error(ErrorKind::ShapeMismatch, "slinky needs a cubic");
    if (p.is_zero(0.0)) throw Error(ErrorKind::ZeroForm, "zero form");
    int n = p.n();
    double tol = detail::residual_tol(p, eps);
    Decomposition D;
    D.theorem = "slinky";
    Form q = p;
    for (int k = n - 1; k >= 0; --k) {
        StageInfo info;
        info.stage = n - k;
        info.eliminated = {k};
        std::vector<int> keep;
        for (int j = 0; j <= k; ++j) keep.push_back(j);
        Form partial = q.derivative(k).restrict_to(keep);
        if (partial.is_zero(partial.is_exact() ? 0.0 : tol)) {
            D.stages.push_back(info);
            continue;
        }
        TriangularSquares T;
        try {
            T = uppertri(partial, eps);
        } catch (const Error& e) {
            throw Error(ErrorKind::DegenerateStage, std::string("stage ") + std::to_string(n - k) + ": " + e.what(), n - k);
        }
        for (const auto& row : T.rows) {
            if (row.is_zero(row.alpha[0].is_exact() ? 0.0 : eps)) continue;
            const Scalar& t = row.alpha[k];
            if (t.is_zero(t.is_exact() ? 0.0 : eps))
                throw Error(ErrorKind::DegenerateStage, "zero coefficient of x" + std::to_string(k + 1), n - k);
            LinearForm l = detail::embed(row, n, 0);
            Scalar m = (Scalar(3) * t).inverse();
            D.terms.push_back({m, l.form(), 3});
            q -= l.power(3) * m;
            ++info.terms;
        }
        if (!detail::drop_vars(q, {k}, tol))
            throw Error(ErrorKind::DegenerateStage, "residual still involves x" + std::to_string(k + 1), n - k);
        D.stages.push_back(info);
    }
    return D;
}

}  // namespace canonform
