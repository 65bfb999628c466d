#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"
#include "canonform/roots.hpp"

namespace canonform {

static void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int j = start; j < n; ++j) {
        cur.push_back(j);
        subsets(n, k, j + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Decomposition> two_squares_all(const Form& p, double eps) {
    if (p.n() != 2 || p.d() % 2 != 0 || p.d() == 0)
        throw Error(ErrorKind::ShapeMismatch, "two_squares_all needs a binary form of even degree");
    int s = p.d() / 2;
    bool exact = p.is_exact();
    Scalar a0 = p.raw({2 * s, 0});
    if (a0.is_zero(exact ? 0.0 : eps * std::max(1.0, p.norm())))
        throw Error(ErrorKind::LeadingZero, "p(1,0) = 0");
    BinaryFactorization F = binary_factor(p, eps);
    std::vector<Form> lin;
    for (const auto& [l, m] : F.factors) {
        if (m > 1) throw Error(ErrorKind::RepeatedRoot, "p has a repeated root");
        lin.push_back(l.form());
    }
    if (static_cast<int>(lin.size()) != 2 * s) throw Error(ErrorKind::RepeatedRoot, "p has a repeated root");

    // The first factor always lies in A, so each unordered split appears once.
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    subsets(2 * s - 1, s - 1, 0, cur, picks);
    std::vector<Decomposition> out;
    Scalar half = Scalar::rational(1, 2);
    Scalar inv2i = Scalar(1) / (Scalar(2) * Scalar::i());
    std::vector<Scalar> e1{Scalar(1), Scalar(0)};
    for (const auto& pick : picks) {
        std::vector<bool> inA(2 * s, false);
        inA[0] = true;
        for (int j : pick) inA[j + 1] = true;
        Form A = Form::constant(2, F.constant), B = Form::constant(2, 1);
        for (int j = 0; j < 2 * s; ++j) (inA[j] ? A : B) = (inA[j] ? A : B) * lin[j];
        Form f = (A + B) * half;
        Form g = (A - B) * inv2i;
        Scalar rho = f.evaluate(e1), tau = g.evaluate(e1);
        Scalar N = sqrt(rho * rho + tau * tau);
        Scalar u = rho / N, v = -tau / N;
        Form f2 = f * u - g * v;
        Form g2 = f * v + g * u;
        g2.set_raw({s, 0}, 0);
        Decomposition D;
        D.theorem = "two-squares";
        D.terms.push_back({Scalar(1), f2, 2});
        D.terms.push_back({Scalar(1), g2, 2});
        out.push_back(D);
    }
    return out;
}

}  // namespace canonform
