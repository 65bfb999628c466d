#pragma once

#include <gmpxx.h>

#include <vector>

namespace canonform {

/// Exponent vector of a monomial x^i.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& i);

/// Graded-lex order: lower total degree first, then lexicographically descending,
/// so (2,0) < (1,1) < (0,2).
struct GradLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All of I(n,d) in graded-lex order.
std::vector<MultiIndex> index_set(int n, int d);

/// N(n,d) = binom(n+d-1, d)
long dimension(int n, int d);

/// Multinomial coefficient c(i) = d! / (i_1! ... i_n!).
mpz_class multinomial(const MultiIndex& i);

}  // namespace canonform
