#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"
#include "canonform/roots.hpp"

namespace canonform {

Form quartic_normal_form(const Scalar& lambda) {
    Form p(2, 4);
    p.set_raw({4, 0}, 1);
    p.set_raw({2, 2}, Scalar(6) * lambda);
    p.set_raw({0, 4}, 1);
    return p;
}

static Form quad(const Scalar& a, const Scalar& b, const Scalar& c) {
    Form q(2, 2);
    q.set_raw({2, 0}, a);
    q.set_raw({1, 1}, b);
    q.set_raw({0, 2}, c);
    return q;
}

std::vector<Decomposition> quartic_six_reps(const Scalar& lambda) {
    Scalar l3 = Scalar(3) * lambda;
    double tol = lambda.is_exact() ? 0.0 : kDefaultEps;
    if ((l3 + Scalar(1)).is_zero(tol)) throw Error(ErrorKind::DegenerateLambda, "3*lambda + 1 = 0");
    if ((l3 - Scalar(1)).is_zero(tol)) throw Error(ErrorKind::DegenerateLambda, "3*lambda - 1 = 0");
    std::vector<Decomposition> out;
    Scalar c = Scalar(1) - l3 * l3;
    Form X = Form::variable(2, 0), Y = Form::variable(2, 1);
    {
        Decomposition D;
        D.theorem = "quartic-six";
        D.terms.push_back({Scalar(1), quad(1, 0, l3), 2});
        D.terms.push_back({c, Y, 4});
        out.push_back(D);
    }
    {
        Decomposition D;
        D.theorem = "quartic-six";
        D.terms.push_back({Scalar(1), quad(l3, 0, 1), 2});
        D.terms.push_back({c, X, 4});
        out.push_back(D);
    }
    Scalar ik = 1;
    const Scalar I = Scalar::i();
    for (int k = 0; k < 4; ++k) {
        Scalar sgn = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
        Scalar i3k = ik.pow(3);
        Scalar mult = sgn * Scalar(2) / (l3 + sgn);
        Form q = quad(1, -i3k * (l3 - sgn), sgn);
        Scalar c4 = (l3 - sgn) / (l3 + sgn);
        Decomposition D;
        D.theorem = "quartic-six";
        D.terms.push_back({mult, q, 2});
        D.terms.push_back({c4, LinearForm{Scalar(1), ik}.form(), 4});
        out.push_back(D);
        ik *= I;
    }
    return out;
}

cplx quartic_ratio(const Decomposition& D) {
    for (const auto& t : D.terms) {
        if (t.power != 4) continue;
        cplx a = t.base.raw({1, 0}).to_complex(), b = t.base.raw({0, 1}).to_complex();
        if (std::abs(a) <= 1e-12 * std::abs(b)) return cplx(INFINITY, 0);
        return b / a;
    }
    throw Error(ErrorKind::BadShape, "no fourth-power term");
}

QuarticNormal quartic_normalize(const Form& p, double eps) {
    if (p.n() != 2 || p.d() != 4) throw Error(ErrorKind::ShapeMismatch, "quartic_normalize needs a binary quartic");
    BinaryFactorization F = binary_factor(p, eps);
    std::vector<Form> L;
    for (const auto& [l, m] : F.factors) {
        if (m > 1) throw Error(ErrorKind::RepeatedRoot, "quartic has a repeated root");
        L.push_back(l.form());
    }
    if (L.size() != 4) throw Error(ErrorKind::RepeatedRoot, "quartic has a repeated root");
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings) {
        Form q1 = L[pr[0]] * L[pr[1]];
        Form q2 = L[pr[2]] * L[pr[3]];
        // The Jacobian of the pair vanishes on the two fixed points of the involution they define.
        Form J = q1.derivative(0) * q2.derivative(1) - q1.derivative(1) * q2.derivative(0);
        if (!is_squarefree_binary(J, eps)) continue;
        auto JF = binary_factor(J, eps);
        if (JF.factors.size() != 2) continue;
        Matrix M(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) M(r, c) = JF.factors[r].first.alpha[c];
        auto Minv = inverse(M, eps);
        if (!Minv) continue;
        Form q = p.substitute(*Minv);
        double sc = std::max(1e-300, q.norm());
        Scalar e0 = q.raw({4, 0}), e4 = q.raw({0, 4}), e2 = q.raw({2, 2});
        if (q.raw({3, 1}).abs() > 1e-6 * sc || q.raw({1, 3}).abs() > 1e-6 * sc) continue;
        if (e0.abs() <= eps * sc || e4.abs() <= eps * sc) continue;
        Scalar k = root(e4 / e0, 4);
        Matrix S(2, 2);
        S(0, 0) = 1;
        S(1, 1) = k.inverse();
        Matrix T = *Minv * S;
        Scalar lambda = e2 / (Scalar(6) * e0 * k * k);
        Form check = p.substitute(T);
        if (!check.equals(quartic_normal_form(lambda) * e0, 1e-7)) continue;
        return {lambda, T, e0};
    }
    throw Error(ErrorKind::NormalizationFailed, "no root pairing gives an even quartic");
}

std::vector<Decomposition> quartic_six_reps_of(const Form& p, double eps) {
    QuarticNormal N = quartic_normalize(p, eps);
    auto Tinv = inverse(N.transform, eps);
    if (!Tinv) throw Error(ErrorKind::NormalizationFailed, "singular transform");
    std::vector<Decomposition> out;
    for (auto D : quartic_six_reps(N.lambda)) {
        for (auto& t : D.terms) {
            t.base = t.base.substitute(*Tinv);
            t.multiplier *= N.scale;
        }
        out.push_back(D);
    }
    return out;
}

std::vector<Decomposition> quartic_two_fixed(const Form& p, const LinearForm& l1, const LinearForm& l2, double eps) {
    if (p.n() != 2 || p.d() != 4) throw Error(ErrorKind::ShapeMismatch, "quartic_two_fixed needs a binary quartic");
    Matrix L(2, 2);
    for (int c = 0; c < 2; ++c) {
        L(0, c) = l1.alpha.at(c);
        L(1, c) = l2.alpha.at(c);
    }
    auto Linv = inverse(L, eps);
    if (!Linv) throw Error(ErrorKind::DegenerateInput, "l1 and l2 are proportional");
    Form q = p.substitute(*Linv);
    bool exact = q.is_exact();
    double tol = exact ? 0.0 : eps * std::max(1.0, q.norm());
    Scalar a0 = q.raw({4, 0}), a1 = q.raw({3, 1}), a2 = q.raw({2, 2}), a3 = q.raw({1, 3}), a4 = q.raw({0, 4});
    if (a1.is_zero(tol)) throw Error(ErrorKind::DegenerateInput, "a1 = 0 after the change of variables");
    if (a3.is_zero(tol)) throw Error(ErrorKind::DegenerateInput, "a3 = 0 after the change of variables");
    // a1 beta^2 - 2 a2 beta + 2 a3 = 0
    Scalar disc = a2 * a2 - Scalar(2) * a1 * a3;
    if (disc.is_zero(exact ? 0.0 : eps * std::max(1.0, (a2 * a2).abs())))
        throw Error(ErrorKind::DegenerateInput, "the quadratic in beta has a double root");
    Scalar sd = sqrt(disc);
    std::vector<Scalar> betas{(a2 + sd) / a1, (a2 - sd) / a1};
    Form X = l1.form(), Y = l2.form();
    std::vector<Decomposition> out;
    for (const Scalar& beta : betas) {
        Scalar t1sq = a1 / (Scalar(2) * beta);
        Scalar rho = a3 / a1;
        Form base = X * X + X * Y * beta + Y * Y * rho;
        Decomposition D;
        D.theorem = "quartic-two-fixed";
        D.terms.push_back({t1sq, base, 2});
        D.terms.push_back({a0 - t1sq, X, 4});
        D.terms.push_back({a4 - rho * rho * t1sq, Y, 4});
        out.push_back(D);
    }
    return out;
}

}  // namespace canonform
