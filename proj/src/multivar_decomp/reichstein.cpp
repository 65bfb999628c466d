#include <Eigen/Dense>
#include <Eigen/SVD>

#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "canonform/roots.hpp"
#include "internal.hpp"

namespace canonform {

namespace detail {

bool drop_vars(Form& q, const std::vector<int>& vars, double tol) {
    Form out(q.n(), q.d());
    bool ok = true;
    for (const auto& [i, c] : q.terms()) {
        bool involved = false;
        for (int v : vars) involved = involved || i[v] > 0;
        if (!involved) {
            out.set_raw(i, c);
            continue;
        }
        if (c.is_exact() ? !c.is_zero() : c.abs() / static_cast<double>(multinomial(i).get_d()) > tol) ok = false;
    }
    q = out;
    return ok;
}

LinearForm embed(const LinearForm& l, int n, int offset) {
    std::vector<Scalar> a(n, l.alpha.empty() || l.alpha[0].is_exact() ? Scalar(0) : Scalar(cplx(0, 0)));
    for (int j = 0; j < l.n(); ++j) a[offset + j] = l.alpha[j];
    return LinearForm(a);
}

double residual_tol(const Form& p, double eps) { return std::sqrt(eps) * std::max(1.0, p.norm()); }

}  // namespace detail

namespace {

// Coefficients (ascending) of det(B - lambda A) by exact interpolation at 0..n.
UPoly pencil_polynomial(const Matrix& A, const Matrix& B) {
    int n = A.rows();
    Matrix V(n + 1, n + 1);
    std::vector<Scalar> vals(n + 1);
    for (int k = 0; k <= n; ++k) {
        Matrix C = B;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) C(i, j) -= Scalar(k) * A(i, j);
        vals[k] = determinant(C);
        Scalar pw = 1;
        for (int j = 0; j <= n; ++j) {
            V(k, j) = pw;
            pw *= Scalar(k);
        }
    }
    auto c = solve(V, vals, 1e-12);
    if (!c) throw Error(ErrorKind::DegeneratePencil, "pencil interpolation failed");
    return *c;
}

std::vector<Scalar> null_vector_approx(const Matrix& N) {
    int n = N.rows();
    Eigen::MatrixXcd E(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E(i, j) = N(i, j).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(n - 1);
    std::vector<Scalar> out(n);
    for (int i = 0; i < n; ++i) out[i] = Scalar(v(i));
    return out;
}

Scalar bilinear(const Matrix& M, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    Scalar s = 0;
    std::vector<Scalar> Mv = M.apply(v);
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * Mv[i];
    return s;
}

}  // namespace

PencilDiag simultaneous_diagonalize(const Form& f, const Form& g, double eps) {
    if (f.n() != g.n() || f.d() != 2 || g.d() != 2)
        throw Error(ErrorKind::ShapeMismatch, "simultaneous_diagonalize needs two quadratics in the same variables");
    int n = f.n();
    Matrix A = quadratic_matrix(f), B = quadratic_matrix(g);
    bool exact = A.is_exact() && B.is_exact();
    UPoly chi = pencil_polynomial(A, B);
    double scale = 0;
    for (const auto& c : chi) scale = std::max(scale, c.abs());
    if (chi[n].is_zero(exact ? 0.0 : eps * std::max(1.0, scale)))
        throw Error(ErrorKind::DegeneratePencil, "the first partial is a singular quadratic");
    std::vector<cplx> cc;
    for (const auto& c : chi) cc.push_back(c.to_complex());
    std::vector<cplx> lam = poly_roots(cc);
    for (size_t a = 0; a < lam.size(); ++a)
        for (size_t b = a + 1; b < lam.size(); ++b)
            if (chordal(lam[a], lam[b]) < std::sqrt(eps))
                throw Error(ErrorKind::DegeneratePencil, "the pencil has a repeated eigenvalue");

    PencilDiag out;
    for (cplx l : lam) {
        Scalar c(l);
        std::vector<Scalar> v;
        if (exact) {
            auto s = snap(c);
            if (s && upoly::eval(chi, *s).is_zero()) c = *s;
        }
        Matrix N = B;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) N(i, j) -= c * A(i, j);
        if (N.is_exact()) {
            auto K = kernel(N);
            if (K.size() != 1) throw Error(ErrorKind::DegeneratePencil, "eigenspace is not a line");
            v = K[0];
        } else {
            v = null_vector_approx(N);
        }
        Scalar s = bilinear(A, v, v);
        if (s.is_zero(exact && s.is_exact() ? 0.0 : eps)) throw Error(ErrorKind::DegeneratePencil, "isotropic eigenvector");
        Scalar r = sqrt(s);
        std::vector<Scalar> a = A.apply(v);
        for (auto& x : a) x /= r;
        out.L.emplace_back(a);
        out.c.push_back(c);
    }
    return out;
}

ReichsteinStep reichstein_step(const Form& p, double eps) {
    if (p.d() != 3 || p.n() < 2) throw Error(ErrorKind::ShapeMismatch, "reichstein_step needs a cubic in n >= 2 variables");
    if (p.is_zero(0.0)) throw Error(ErrorKind::ZeroForm, "zero form");
    Form f = p.derivative(0), g = p.derivative(1);
    PencilDiag P = simultaneous_diagonalize(f, g, eps);
    ReichsteinStep out;
    out.cubes.theorem = "reichstein";
    Form q = p;
    for (size_t i = 0; i < P.L.size(); ++i) {
        const LinearForm& L = P.L[i];
        if (L.alpha[0].is_zero(L.alpha[0].is_exact() ? 0.0 : eps))
            throw Error(ErrorKind::DegeneratePencil, "a square has no x1 component");
        if (!(L.alpha[1]).equals(P.c[i] * L.alpha[0], std::sqrt(eps)))
            throw Error(ErrorKind::DegeneratePencil, "partials are inconsistent with the pencil");
        Scalar m = (Scalar(3) * L.alpha[0]).inverse();
        out.cubes.terms.push_back({m, L.form(), 3});
        q -= L.power(3) * m;
    }
    if (!detail::drop_vars(q, {0, 1}, detail::residual_tol(p, eps)))
        throw Error(ErrorKind::DegeneratePencil, "residual still involves x1 or x2");
    out.q = q;
    out.cubes.residual = q;
    return out;
}

Decomposition reichstein_full(const Form& p, double eps) {
    if (p.d() != 3) throw Error(ErrorKind::ShapeMismatch, "reichstein_full needs a cubic");
    if (p.is_zero(0.0)) throw Error(ErrorKind::ZeroForm, "zero form");
    int n = p.n();
    Decomposition D;
    D.theorem = "reichstein";
    Form q = p;
    for (int m = 0; 2 * m < n; ++m) {
        int off = 2 * m, k = n - off;
        std::vector<int> keep;
        for (int j = off; j < n; ++j) keep.push_back(j);
        Form sub = q.restrict_to(keep);
        StageInfo info;
        info.stage = m + 1;
        if (sub.is_zero(q.is_exact() ? 0.0 : detail::residual_tol(p, eps))) {
            D.stages.push_back(info);
            break;
        }
        if (k == 1) {
            Scalar c = sub.raw({3});
            D.terms.push_back({c, Form::variable(n, n - 1), 3});
            info.eliminated = {n - 1};
            info.terms = 1;
            q = Form(n, 3);
        } else {
            ReichsteinStep st;
            try {
                st = reichstein_step(sub, eps);
            } catch (const Error& e) {
                throw Error(e.kind(), e.message(), m + 1);
            }
            for (const auto& t : st.cubes.terms) {
                LinearForm l = detail::embed(LinearForm::from_form(t.base), n, off);
                D.terms.push_back({t.multiplier, l.form(), 3});
            }
            info.eliminated = {off, off + 1};
            info.terms = static_cast<int>(st.cubes.terms.size());
            std::vector<Form> images;
            for (int j = 0; j < k; ++j) images.push_back(Form::variable(n, off + j));
            q = st.q.compose(images);
        }
        D.stages.push_back(info);
    }
    return D;
}

}  // namespace canonform
