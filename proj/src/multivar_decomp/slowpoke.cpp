#include <algorithm>

#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "internal.hpp"

namespace canonform {

std::vector<LinearForm> slowpoke_family(int m) {
    if (m < 1) throw Error(ErrorKind::BadShape, "slowpoke_family needs m >= 1");
    Scalar M(m), M1(m + 1);
    Scalar alpha = (sqrt(M1) - M1) / (M * M1);
    std::vector<LinearForm> out;
    for (int j = 0; j < m; ++j) {
        std::vector<Scalar> a(m, alpha);
        a[j] += Scalar(1);
        out.emplace_back(a);
    }
    out.emplace_back(std::vector<Scalar>(m, -(Scalar(1) + M * alpha)));
    return out;
}

namespace {

// Rows R (in the given coordinates) with x^T S x = sum (R x)^2, plus coordinate rows completing them to a basis.
struct Diagonalized {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::vector<Scalar>> complement;
};

// approx_tol applies once entries become approximate.
Diagonalized diagonalize(Matrix S, double approx_tol) {
    int m = S.rows();
    // S is the matrix in coordinates x' = Einv x
    Matrix Einv = Matrix::identity(m);
    std::vector<bool> used(m, false);
    Diagonalized D;
    for (;;) {
        int bi = -1, oi = -1, oj = -1;
        double tol = S.is_exact() ? 0.0 : approx_tol;
        double bd = tol, bo = tol;
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            if (S(i, i).abs() > bd || (tol == 0.0 && bi < 0 && !S(i, i).is_zero())) {
                bd = S(i, i).abs();
                bi = i;
            }
            for (int j = i + 1; j < m; ++j) {
                if (used[j]) continue;
                if (S(i, j).abs() > bo || (tol == 0.0 && oi < 0 && !S(i, j).is_zero())) {
                    bo = S(i, j).abs();
                    oi = i;
                    oj = j;
                }
            }
        }
        if (bi < 0 && oi < 0) break;
        if (oi >= 0 && (bi < 0 || bd < 0.25 * bo)) {
            // x_oj -> x_oj +- x_oi creates a diagonal entry S_ii +- 2 S_ij + S_jj at oi; one sign
            // gives at least 2 |S_ij|.
            Scalar plus = S(oi, oi) + Scalar(2) * S(oi, oj) + S(oj, oj);
            Scalar minus = S(oi, oi) - Scalar(2) * S(oi, oj) + S(oj, oj);
            Scalar sign = plus.abs() >= minus.abs() ? 1 : -1;
            Matrix F = Matrix::identity(m), Finv = Matrix::identity(m);
            F(oj, oi) = sign;
            Finv(oj, oi) = -sign;
            S = F.transpose() * S * F;
            Einv = Finv * Einv;
            bi = oi;
        }
        Scalar s = sqrt(S(bi, bi));
        std::vector<Scalar> r(m);
        for (int j = 0; j < m; ++j) r[j] = S(bi, j) / s;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) S(i, j) -= r[i] * r[j];
        used[bi] = true;
        std::vector<Scalar> v(m);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) v[j] += r[k] * Einv(k, j);
        D.rows.push_back(v);
    }
    for (int i = 0; i < m; ++i)
        if (!used[i]) D.complement.push_back(Einv.row(i));
    return D;
}

}  // namespace

Decomposition slowpoke(const Form& p, double eps) {
    if (p.d() != 3) throw Error(ErrorKind::ShapeMismatch, "slowpoke needs a cubic");
    if (p.is_zero(0.0)) throw Error(ErrorKind::ZeroForm, "zero form");
    int n = p.n();
    double rtol = detail::residual_tol(p, eps);
    Decomposition D;
    D.theorem = "slowpoke";
    Form P = p;
    Matrix C = Matrix::identity(n);
    int stage = 0;
    while (P.n() >= 1) {
        ++stage;
        int k = P.n();
        bool exact = P.is_exact();
        StageInfo info;
        info.stage = stage;
        if (P.is_zero(exact ? 0.0 : rtol)) {
            D.stages.push_back(info);
            break;
        }
        // Move a Biermann point to e_1.
        MultiIndex u = biermann_point(P);
        int piv = 0;
        while (u[piv] == 0) ++piv;
        Matrix B(k, k);
        for (int i = 0; i < k; ++i) B(i, 0) = u[i];
        for (int j = 1, c = 0; j < k; ++j, ++c) {
            if (c == piv) ++c;
            B(c, j) = 1;
        }
        Form P1 = P.substitute(B);
        Scalar a = P1.raw(MultiIndex([&] { MultiIndex i(k, 0); i[0] = 3; return i; }()));
        // Shift w_1 -> v_1 - h_1 to clear the quadratic term in v_1.
        Matrix V = Matrix::identity(k), Vinv = Matrix::identity(k);
        for (int j = 1; j < k; ++j) {
            MultiIndex i(k, 0);
            i[0] = 2;
            i[j] = 1;
            Scalar h = P1.coeff(i) / a;
            V(0, j) = h;
            Vinv(0, j) = -h;
        }
        Form P2 = P1.substitute(Vinv);
        // Linear-in-v_1 part is 3a v_1 Q(v_2..v_k).
        Matrix S(k - 1, k - 1);
        for (int i = 1; i < k; ++i)
            for (int j = 1; j < k; ++j) {
                MultiIndex idx(k, 0);
                idx[0] = 1;
                idx[i] += 1;
                idx[j] += 1;
                S(i - 1, j - 1) = P2.coeff(idx) / a;
            }
        double stol = 10 * eps * std::max(1.0, S.max_abs());
        Diagonalized Dg = diagonalize(S, stol);
        int r = 1 + static_cast<int>(Dg.rows.size());
        Matrix Y(k, k);
        Y(0, 0) = 1;
        int row = 1;
        for (const auto* group : {&Dg.rows, &Dg.complement})
            for (const auto& v : *group) {
                for (int j = 1; j < k; ++j) Y(row, j) = v[j - 1];
                ++row;
            }
        auto Binv = inverse(B);
        auto Yinv = inverse(Y);
        if (!Binv || !Yinv) throw Error(ErrorKind::DegenerateStage, "singular change of coordinates", stage);
        Form P3 = P2.substitute(*Yinv);
        Matrix T = Y * V * (*Binv) * C;

        // g = (a/r) sum_j (y_1 + sqrt(r) l_{j,r-1})^3
        std::vector<std::vector<Scalar>> bases;
        if (r == 1) {
            std::vector<Scalar> b(k, Scalar(0));
            b[0] = 1;
            bases.push_back(b);
        } else {
            Scalar sr = sqrt(Scalar(r));
            for (const auto& l : slowpoke_family(r - 1)) {
                std::vector<Scalar> b(k, Scalar(0));
                b[0] = 1;
                for (int j = 0; j < r - 1; ++j) b[1 + j] = sr * l.alpha[j];
                bases.push_back(b);
            }
        }
        Scalar mult = a / Scalar(r);
        Form q = P3;
        for (const auto& b : bases) {
            q -= LinearForm(b).power(3) * mult;
            std::vector<Scalar> bx(n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < k; ++i) bx[j] += b[i] * T(i, j);
            // scale so the leading nonzero coefficient is 1
            Scalar lead = 1;
            for (const auto& c : bx)
                if (!c.is_zero(c.is_exact() ? 0.0 : 1e-14)) {
                    lead = c;
                    break;
                }
            for (auto& c : bx) c /= lead;
            D.terms.push_back({mult * lead.pow(3), linear(bx), 3});
        }
        info.terms = r;
        info.eliminated = {0};
        if (!detail::drop_vars(q, {0}, rtol))
            throw Error(ErrorKind::DegenerateStage, "residual still involves the leading coordinate", stage);
        D.stages.push_back(info);
        if (k == 1) break;
        std::vector<int> keep;
        for (int j = 1; j < k; ++j) keep.push_back(j);
        P = q.restrict_to(keep);
        Matrix C2(k - 1, n);
        for (int i = 1; i < k; ++i)
            for (int j = 0; j < n; ++j) C2(i - 1, j) = T(i, j);
        C = C2;
    }
    return D;
}

}  // namespace canonform
