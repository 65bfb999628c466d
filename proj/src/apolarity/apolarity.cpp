#include "canonform/apolarity.hpp"

#include "canonform/error.hpp"

namespace canonform {

Scalar pair(const Form& p, const Form& q) {
    if (p.n() != q.n() || p.d() != q.d()) throw Error(ErrorKind::ShapeMismatch, "pair needs equal shapes");
    Scalar s = 0;
    const Form& small = p.terms().size() <= q.terms().size() ? p : q;
    const Form& big = &small == &p ? q : p;
    for (const auto& [i, c] : small.terms()) {
        auto it = big.terms().find(i);
        if (it == big.terms().end()) continue;
        s += c * it->second / Scalar(multinomial(i));
    }
    return s;
}

// j!/(j-i)! summed over coordinates.
static mpz_class falling(const MultiIndex& j, const MultiIndex& i) {
    mpz_class r = 1;
    for (size_t t = 0; t < j.size(); ++t)
        for (int k = 0; k < i[t]; ++k) r *= j[t] - k;
    return r;
}

Form apply_diff(const Form& f, const Form& p) {
    if (f.n() != p.n()) throw Error(ErrorKind::ShapeMismatch, "apply_diff needs equal variable counts");
    if (f.d() > p.d()) throw Error(ErrorKind::BadShape, "apply_diff needs deg f <= deg p");
    int n = p.n();
    Form out(n, p.d() - f.d());
    MultiIndex k(n);
    for (const auto& [i, c] : f.terms())
        for (const auto& [j, e] : p.terms()) {
            bool ok = true;
            for (int t = 0; t < n; ++t) {
                if (j[t] < i[t]) {
                    ok = false;
                    break;
                }
                k[t] = j[t] - i[t];
            }
            if (!ok) continue;
            out.add_raw(k, c * e * Scalar(falling(j, i)));
        }
    return out;
}

HankelMatrix hankel(const Form& p, int r) {
    if (p.n() != 2) throw Error(ErrorKind::ShapeMismatch, "hankel needs a binary form");
    int d = p.d();
    if (r < 0 || r > d) throw Error(ErrorKind::BadShape, "hankel order out of range");
    std::vector<Scalar> a(d + 1);
    for (int j = 0; j <= d; ++j) a[j] = p.coeff({d - j, j});
    HankelMatrix H{r, Matrix(d - r + 1, r + 1)};
    for (int m = 0; m <= d - r; ++m)
        for (int i = 0; i <= r; ++i) H.entries(m, i) = a[i + m];
    return H;
}

Form hankel_form(const std::vector<Scalar>& c) {
    int r = static_cast<int>(c.size()) - 1;
    Form h(2, r);
    for (int t = 0; t <= r; ++t) h.add_raw({r - t, t}, c[t]);
    return h;
}

}  // namespace canonform
