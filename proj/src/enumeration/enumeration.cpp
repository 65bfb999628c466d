#include "canonform/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "canonform/error.hpp"

namespace canonform {

long s_of_d(const mpz_class& d) {
    if (d < 1) throw Error(ErrorKind::BadShape, "s(d) needs d >= 1");
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    mpz_class d1 = d + 1;
    long count = 0;
    auto test = [&](const mpz_class& e) {
        if (e < d && mpz_divisible_p(d1.get_mpz_t(), mpz_class(e + 1).get_mpz_t())) ++count;
    };
    for (mpz_class i = 1; i <= root; ++i) {
        if (!mpz_divisible_p(d.get_mpz_t(), i.get_mpz_t())) continue;
        test(i);
        mpz_class j = d / i;
        if (j != i) test(j);
    }
    return count;
}

mpz_class partial_sum_S(const mpz_class& N) {
    if (N < 1) throw Error(ErrorKind::BadShape, "S(N) needs N >= 1");
    mpz_class root, total = 0;
    mpz_sqrt(root.get_mpz_t(), N.get_mpz_t());
    // d = e + u e (e+1), u >= 1
    for (mpz_class e = 1; e <= root; ++e) {
        mpz_class span = N - e;
        if (span <= 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), span.get_mpz_t(), mpz_class(e * e + e).get_mpz_t());
        total += q;
    }
    if (N <= 10000 && total != partial_sum_S_direct(N.get_si()))
        throw std::logic_error("floor sum and direct sum of s(d) disagree");
    return total;
}

mpz_class partial_sum_S_direct(long N) {
    if (N < 1) throw Error(ErrorKind::BadShape, "S(N) needs N >= 1");
    mpz_class total = 0;
    for (long d = 1; d <= N; ++d) total += s_of_d(d);
    return total;
}

namespace {

// 1 = sum 1/m_k + (r-1)/d with m_1 <= ... <= m_r and every m_k | d.
void search(int r, int k, const mpq_class& rem, long max_d, std::vector<long>& m, std::vector<NeatForm>& out) {
    if (k == r) {
        mpq_class d = mpq_class(r - 1) / rem;
        if (d.get_den() != 1) return;
        mpz_class D = d.get_num();
        if (max_d > 0 && D > max_d) return;
        for (long mk : m)
            if (!mpz_divisible_ui_p(D.get_mpz_t(), mk)) return;
        NeatForm f;
        f.d = D.get_si();
        for (long mk : m) f.e.push_back(f.d / mk);
        out.push_back(f);
        return;
    }
    // 2r - 1 - k unit fractions remain, none larger than 1/m_k.
    int left = 2 * r - 1 - k;
    mpz_class lo_z = rem.get_den() / rem.get_num() + 1;
    long lo = std::max<long>(m.empty() ? 2 : m.back(), lo_z.get_si());
    mpq_class hi_q = mpq_class(left) / rem;
    mpz_class hi_z = hi_q.get_num() / hi_q.get_den();
    long hi = hi_z.get_si();
    // m_k divides d
    if (max_d > 0) hi = std::min(hi, max_d);
    for (long mk = lo; mk <= hi; ++mk) {
        mpq_class next = rem - mpq_class(1, mk);
        next.canonicalize();
        if (next <= 0) continue;
        m.push_back(mk);
        search(r, k + 1, next, max_d, m, out);
        m.pop_back();
    }
}

}  // namespace

std::vector<NeatForm> neat_enumerate(int r, long max_d) {
    if (r < 1) throw Error(ErrorKind::BadShape, "neat_enumerate needs r >= 1");
    std::vector<NeatForm> out;
    if (r == 1) return out;
    std::vector<long> m;
    search(r, 0, mpq_class(1), max_d, m, out);
    std::sort(out.begin(), out.end(), [](const NeatForm& a, const NeatForm& b) {
        return a.d != b.d ? a.d < b.d : a.e > b.e;
    });
    return out;
}

namespace {

// binom(m+d-1, d) for m = 0..count-1
std::vector<mpz_class> multiset_counts(int d, long count) {
    std::vector<mpz_class> c(count);
    for (long m = 0; m < count; ++m) mpz_bin_uiui(c[m].get_mpz_t(), static_cast<unsigned long>(m + d - 1), d);
    return c;
}

bool member(const std::vector<mpz_class>& C, long n) {
    unsigned long t = mpz_fdiv_ui(C[n].get_mpz_t(), n);
    for (long m = 0; m < n; ++m)
        if (mpz_fdiv_ui(C[m].get_mpz_t(), n) == t) return false;
    return true;
}

void check_args(int d, long n) {
    if (d < 2) throw Error(ErrorKind::BadShape, "A_d needs d >= 2");
    if (n < 1) throw Error(ErrorKind::BadShape, "A_d members are positive");
}

}  // namespace

bool obstruction_A(int d, long n) {
    check_args(d, n);
    return member(multiset_counts(d, n + 1), n);
}

std::vector<long> members_of_A(int d, long bound) {
    check_args(d, std::max<long>(bound, 1));
    std::vector<long> out;
    if (bound < 1) return out;
    auto C = multiset_counts(d, bound + 1);
    for (long n = 1; n <= bound; ++n)
        if (member(C, n)) out.push_back(n);
    return out;
}

std::optional<long> smallest_in_A(int d, long bound) {
    check_args(d, std::max<long>(bound, 1));
    if (bound < 1) return std::nullopt;
    auto C = multiset_counts(d, bound + 1);
    for (long n = 1; n <= bound; ++n)
        if (member(C, n)) return n;
    return std::nullopt;
}

}  // namespace canonform
