#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace canonform {

/// Mixed-powers form sum f_k^(d/e_k) with no fixed summands.
struct NeatForm {
    long d = 0;
    /// weakly decreasing divisors of d, each below d
    std::vector<long> e;
    int r() const { return static_cast<int>(e.size()); }
    bool operator==(const NeatForm& o) const { return d == o.d && e == o.e; }
};

/// Number of e < d with e | d and (e+1) | (d+1).
long s_of_d(const mpz_class& d);

/// S(N) = s(1) + ... + s(N), by the floor sum over e <= sqrt(N).
mpz_class partial_sum_S(const mpz_class& N);
/// The same sum computed term by term.
mpz_class partial_sum_S_direct(long N);

/// All neat forms with r summands, sorted by (d, e). A positive max_d keeps only d <= max_d
/// and prunes the search accordingly.
std::vector<NeatForm> neat_enumerate(int r, long max_d = 0);

/// n is in A_d when n divides no difference binom(n+d-1,d) - binom(m+d-1,d), 0 <= m < n.
bool obstruction_A(int d, long n);
/// Smallest member of A_d in 1..bound.
std::optional<long> smallest_in_A(int d, long bound = 2000);
/// Members of A_d in 1..bound.
std::vector<long> members_of_A(int d, long bound);

}  // namespace canonform
