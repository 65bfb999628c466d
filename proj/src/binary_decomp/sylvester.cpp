#include <algorithm>

#include "canonform/apolarity.hpp"
#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"
#include "canonform/roots.hpp"

namespace canonform {

bool is_squarefree_binary(const Form& h, double eps) {
    bool exact = h.is_exact();
    if (h.is_zero(exact ? 0.0 : eps)) return false;
    int r = h.d();
    UPoly P(r + 1);
    for (int k = 0; k <= r; ++k) P[k] = h.raw({r - k, k});
    upoly::trim(P, exact ? 0.0 : eps * h.norm());
    int e = static_cast<int>(P.size()) - 1;
    if (r - e > 1) return false;
    if (e <= 1) return true;
    if (exact) return upoly::degree(upoly::gcd(P, upoly::derivative(P))) == 0;
    for (const auto& [l, m] : binary_factor(h, eps).factors)
        if (m > 1) return false;
    return true;
}

// Node alpha x + beta y of the factor beta x - alpha y.
static LinearForm node_of(const LinearForm& factor) {
    auto [a, b] = zero_of(factor);
    return LinearForm{a, b};
}

static bool node_less(const LinearForm& a, const LinearForm& b) {
    // Normalized nodes are x + t y or y; order by t with y last.
    auto key = [](const LinearForm& l) {
        cplx a0 = l.alpha[0].to_complex(), a1 = l.alpha[1].to_complex();
        if (std::abs(a0) == 0) return std::tuple<int, double, double>(1, 0.0, 0.0);
        cplx t = a1 / a0;
        return std::tuple<int, double, double>(0, t.real(), t.imag());
    };
    return key(a) < key(b);
}

static std::vector<Form> candidate_forms(const std::vector<std::vector<Scalar>>& K) {
    std::vector<Form> out;
    for (const auto& v : K) out.push_back(hankel_form(v));
    if (K.size() > 1) {
        // Deterministic combinations cover kernels whose basis vectors are all degenerate.
        static const long mults[][4] = {{1, 1, 1, 1}, {1, 2, 3, 5}, {3, -1, 2, 7}, {2, 5, -3, 1}, {7, -4, 5, 3}};
        for (const auto& mrow : mults) {
            std::vector<Scalar> v(K[0].size());
            for (size_t k = 0; k < K.size(); ++k)
                for (size_t t = 0; t < v.size(); ++t) v[t] += Scalar(mrow[k % 4] + static_cast<long>(k / 4)) * K[k][t];
            out.push_back(hankel_form(v));
        }
    }
    return out;
}

// Multipliers for fixed nodes by solving the Vandermonde-type system.
static std::optional<std::vector<Scalar>> solve_multipliers(const Form& p, const std::vector<LinearForm>& nodes,
                                                            double eps) {
    int d = p.d();
    Matrix V(d + 1, static_cast<int>(nodes.size()));
    for (size_t k = 0; k < nodes.size(); ++k) {
        Form pw = nodes[k].power(d);
        for (int j = 0; j <= d; ++j) V(j, static_cast<int>(k)) = pw.coeff({d - j, j});
    }
    std::vector<Scalar> b(d + 1);
    for (int j = 0; j <= d; ++j) b[j] = p.coeff({d - j, j});
    return solve(V, b, eps);
}

Decomposition sylvester_decompose(const Form& p, double eps) {
    if (p.n() != 2) throw Error(ErrorKind::ShapeMismatch, "sylvester_decompose needs a binary form");
    bool exact = p.is_exact();
    if (p.is_zero(exact ? 0.0 : eps)) throw Error(ErrorKind::ZeroForm, "sylvester_decompose of the zero form");
    int d = p.d();
    for (int r = 1; r <= d; ++r) {
        HankelMatrix H = hankel(p, r);
        auto K = kernel(H.entries, eps);
        if (K.empty()) continue;
        for (const Form& h : candidate_forms(K)) {
            if (!is_squarefree_binary(h, eps)) continue;
            std::vector<LinearForm> nodes;
            for (const auto& [l, m] : binary_factor(h, eps).factors) nodes.push_back(node_of(l));
            std::sort(nodes.begin(), nodes.end(), node_less);
            auto lam = solve_multipliers(p, nodes, std::sqrt(eps));
            if (!lam) continue;
            Decomposition D;
            D.theorem = "sylvester";
            for (size_t k = 0; k < nodes.size(); ++k) D.terms.push_back({(*lam)[k], nodes[k].form(), d});
            if (D.reconstructs(p, std::max(eps, 1e-9) * 1e3)) return D;
        }
    }
    throw Error(ErrorKind::NotGeneric, "no squarefree annihilating form; the repeated-root case is not handled");
}

}  // namespace canonform
