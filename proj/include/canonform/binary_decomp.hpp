#pragma once

#include <cstdint>
#include <vector>

#include "canonform/decomposition.hpp"
#include "canonform/linear_form.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

/// p = sum lambda_k (alpha_k x + beta_k y)^d with the fewest terms whose
/// annihilating form is squarefree. Terms are ordered by node.
Decomposition sylvester_decompose(const Form& p, double eps = kDefaultEps);

/// Fixed honest forms l_1..l_m plus r free powers with m + 2r = d + 1.
struct MixedSpec {
    std::vector<LinearForm> fixed;
    int r = 0;
};

/// sum_k lambda_k u_k^d + sum_j t_j l_j^d; the free terms come first.
Decomposition mixed_decompose(const Form& p, const MixedSpec& spec, double eps = kDefaultEps);

/// All binom(2s-1, s) ways of writing a squarefree binary 2s-ic as f^2 + g^2
/// with g free of x^s.
std::vector<Decomposition> two_squares_all(const Form& p, double eps = kDefaultEps);

struct QuarticNormal {
    Scalar lambda;
    /// substitute(p, transform) = scale * (x^4 + 6 lambda x^2 y^2 + y^4)
    Matrix transform;
    Scalar scale;
};

QuarticNormal quartic_normalize(const Form& p, double eps = kDefaultEps);

/// x^4 + 6 lambda x^2 y^2 + y^4
Form quartic_normal_form(const Scalar& lambda);

/// The six representations (quadratic)^2 + c (linear)^4 of the normal quartic.
std::vector<Decomposition> quartic_six_reps(const Scalar& lambda);

/// Six representations of a general quartic, pulled back through its normalization.
std::vector<Decomposition> quartic_six_reps_of(const Form& p, double eps = kDefaultEps);

/// Projective ratio t5/t4 of the quartic-power linear form of a six-rep term; inf for y.
cplx quartic_ratio(const Decomposition& D);

/// The two representations (quadratic)^2 + t4 l1^4 + t5 l2^4.
std::vector<Decomposition> quartic_two_fixed(const Form& p, const LinearForm& l1, const LinearForm& l2,
                                             double eps = kDefaultEps);

/// Monte Carlo estimate of the number of representations sum t_j l_j^d + sum f_k^(d/e_k)
/// of a random binary form.
struct MonteCarloResult {
    int count = 0;
    int converged = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool estimate = true;
};

MonteCarloResult count_reps_monte_carlo(int d, const std::vector<int>& e, int m, int trials, std::uint64_t seed);
/// Same, for a caller-supplied target form and fixed forms (m = fixed.size()).
MonteCarloResult count_reps_for(const Form& p, const std::vector<int>& e, const std::vector<LinearForm>& fixed,
                                int trials, std::uint64_t seed);

/// Whether a binary form has distinct projective roots.
bool is_squarefree_binary(const Form& h, double eps = kDefaultEps);

}  // namespace canonform
