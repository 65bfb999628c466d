#include "canonform/multi_index.hpp"

#include <numeric>

#include "canonform/scalar.hpp"

namespace canonform {

int degree(const MultiIndex& i) { return std::accumulate(i.begin(), i.end(), 0); }

bool GradLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
}

static void fill(int n, int d, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[pos] = k;
        fill(n, d - k, pos + 1, cur, out);
    }
}

std::vector<MultiIndex> index_set(int n, int d) {
    std::vector<MultiIndex> out;
    if (n < 1 || d < 0) return out;
    MultiIndex cur(n, 0);
    fill(n, d, 0, cur, out);
    return out;
}

long dimension(int n, int d) { return binomial(n + d - 1, d).get_si(); }

mpz_class multinomial(const MultiIndex& i) {
    mpz_class r = factorial(degree(i));
    for (int k : i) r /= factorial(k);
    return r;
}

}  // namespace canonform
