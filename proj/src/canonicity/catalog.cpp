#include <algorithm>
#include <functional>
#include <sstream>

#include "canonform/canonicity.hpp"
#include "canonform/error.hpp"
#include "canonform/text.hpp"
#include "internal.hpp"

namespace canonform {

namespace {

int get_int(const MapParams& P, const std::string& key, int def) {
    auto it = P.find(key);
    if (it == P.end()) return def;
    try {
        size_t pos = 0;
        int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadShape, "parameter " + key + " must be an integer, got '" + it->second + "'");
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> get_ints(const MapParams& P, const std::string& key, const std::vector<int>& def) {
    auto it = P.find(key);
    if (it == P.end()) return def;
    std::vector<int> out;
    for (const auto& s : split_list(it->second)) {
        try {
            out.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadShape, "parameter " + key + " must be a list of integers");
        }
    }
    return out;
}

std::vector<Scalar> get_scalars(const MapParams& P, const std::string& key) {
    auto it = P.find(key);
    if (it == P.end()) throw Error(ErrorKind::BadShape, "missing parameter " + key);
    std::vector<Scalar> out;
    for (const auto& s : split_list(it->second)) out.push_back(parse_scalar(s));
    return out;
}

// Accumulates parameters and their names while an expression is assembled.
struct Builder {
    int n;
    std::vector<std::string> names;

    explicit Builder(int n_) : n(n_) {}

    int add(const std::string& name) {
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    }

    // sum over the listed monomials of t * x^i; returns the expression and the first parameter index.
    ExprPtr form(const std::vector<MultiIndex>& monos, int deg, const std::string& prefix, int* first = nullptr) {
        std::vector<ExprPtr> leaves;
        if (first) *first = static_cast<int>(names.size());
        int k = 0;
        for (const auto& i : monos) {
            int j = add(prefix + std::to_string(k++));
            leaves.push_back(Expr::parameter(j, Form::monomial(i)));
        }
        return Expr::sum(leaves, n, deg);
    }

    ExprPtr generic(int deg, const std::string& prefix, int* first = nullptr) { return form(index_set(n, deg), deg, prefix, first); }

    // scalar parameter as a degree-0 leaf
    ExprPtr scalar(const std::string& name) { return Expr::parameter(add(name), Form::constant(n, 1)); }
};

MultiIndex mono(int n, std::initializer_list<std::pair<int, int>> e) {
    MultiIndex i(n, 0);
    for (auto [v, k] : e) i[v] += k;
    return i;
}

MultiIndex binary(int d, int k) { return {d - k, k}; }

ExprPtr power_or_null(const ExprPtr& a, int k) { return k == 0 ? nullptr : Expr::power(a, k); }

ExprPtr product_all(const std::vector<ExprPtr>& fs) {
    ExprPtr acc;
    for (const auto& f : fs) {
        if (!f) continue;
        acc = acc ? Expr::product(acc, f) : f;
    }
    return acc;
}

ParamMap finish(const std::string& name, int n, int d, ExprPtr e, Builder& B, bool by_design = true) {
    ParamMap m;
    m.name = name;
    m.n = n;
    m.d = d;
    m.M = static_cast<int>(B.names.size());
    m.expr = std::move(e);
    m.param_names = B.names;
    m.canonical_by_design = by_design;
    if (by_design && m.M != dimension(n, d))
        throw Error(ErrorKind::BadShape, name + " has " + std::to_string(m.M) + " parameters but N(n,d) = " +
                                             std::to_string(dimension(n, d)));
    return m;
}

ParamMap make_uppertri(const MapParams& P) {
    int n = get_int(P, "n", 3);
    if (n < 1) throw Error(ErrorKind::BadShape, "uppertri needs n >= 1");
    Builder B(n);
    std::vector<ExprPtr> squares;
    std::vector<std::pair<int, int>> diag;
    for (int k = 0; k < n; ++k) {
        std::vector<ExprPtr> leaves;
        for (int m = k; m < n; ++m) {
            int j = B.add("t" + std::to_string(k + 1) + "_" + std::to_string(m + 1));
            if (m == k) diag.push_back({k, j});
            leaves.push_back(Expr::parameter(j, Form::variable(n, m)));
        }
        squares.push_back(Expr::power(Expr::sum(leaves, n, 1), 2));
    }
    ParamMap M = finish("uppertri", n, 2, Expr::sum(squares, n, 2), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    for (auto [k, j] : diag) w[j] = 1;
    M.witnesses.push_back(w);
    return M;
}

ParamMap make_sextican(const MapParams&) {
    Builder B(2);
    int f0 = 0, g0 = 0;
    std::vector<MultiIndex> cub, quad;
    for (int k = 0; k <= 3; ++k) cub.push_back(binary(3, k));
    for (int k = 0; k <= 2; ++k) quad.push_back(binary(2, k));
    ExprPtr f = B.form(cub, 3, "f", &f0);
    ExprPtr g = B.form(quad, 2, "g", &g0);
    ParamMap M = finish("sextican", 2, 6, Expr::sum({Expr::power(f, 2), Expr::power(g, 3)}, 2, 6), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    w[f0 + 0] = 1;  // f = x^3
    w[g0 + 2] = 1;  // g = y^2
    M.witnesses.push_back(w);
    return M;
}

// X_i = sum_j alpha_ij x_j for i = 0..k-1
std::vector<ExprPtr> linear_change(Builder& B, int k, std::vector<int>& index) {
    std::vector<ExprPtr> X;
    for (int i = 0; i < k; ++i) {
        std::vector<ExprPtr> leaves;
        for (int j = 0; j < B.n; ++j) {
            int p = B.add("a" + std::to_string(i + 1) + std::to_string(j + 1));
            index.push_back(p);
            leaves.push_back(Expr::parameter(p, Form::variable(B.n, j)));
        }
        X.push_back(Expr::sum(leaves, B.n, 1));
    }
    return X;
}

ParamMap make_wakeford(const MapParams& P) {
    int n = get_int(P, "n", 2), d = get_int(P, "d", 4);
    if (n < 1 || d < 3) throw Error(ErrorKind::BadShape, "wakeford needs n >= 1 and d >= 3");
    Builder B(n);
    std::vector<int> aidx;
    std::vector<ExprPtr> X = linear_change(B, n, aidx);
    std::vector<ExprPtr> terms;
    for (int i = 0; i < n; ++i) terms.push_back(Expr::power(X[i], d));
    for (const auto& l : index_set(n, d)) {
        int mx = *std::max_element(l.begin(), l.end());
        if (mx >= d - 1) continue;  // permutations of (d,0,..) and (d-1,1,0,..)
        std::vector<ExprPtr> fs = {B.scalar("t" + std::to_string(B.names.size()))};
        for (int i = 0; i < n; ++i) fs.push_back(power_or_null(X[i], l[i]));
        terms.push_back(product_all(fs));
    }
    ParamMap M = finish("wakeford", n, d, Expr::sum(terms, n, d), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    for (int i = 0; i < n; ++i) w[aidx[i * n + i]] = 1;
    M.witnesses.push_back(w);
    return M;
}

ParamMap make_quarticgen(const MapParams& P) {
    int d = get_int(P, "d", 4);
    std::vector<int> Bv = get_ints(P, "B", {1, 3, 0, 4});
    if (Bv.size() != 4) throw Error(ErrorKind::BadShape, "quarticgen needs B = m1,m2,n1,n2");
    for (int b : Bv)
        if (b < 0 || b > d) throw Error(ErrorKind::BadShape, "entries of B must lie in 0..d");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (Bv[a] == Bv[b]) throw Error(ErrorKind::BadShape, "entries of B must be distinct");
    Builder B(2);
    std::vector<int> aidx;
    std::vector<ExprPtr> XY = linear_change(B, 2, aidx);
    auto XaYb = [&](int k) { return product_all({power_or_null(XY[0], d - k), power_or_null(XY[1], k)}); };
    std::vector<ExprPtr> terms = {XaYb(Bv[2]), XaYb(Bv[3])};
    std::vector<int> tidx;
    for (int k = 0; k <= d; ++k) {
        if (std::find(Bv.begin(), Bv.end(), k) != Bv.end()) continue;
        tidx.push_back(static_cast<int>(B.names.size()));
        terms.push_back(product_all({B.scalar("t" + std::to_string(k)), XaYb(k)}));
    }
    ParamMap M = finish("quarticgen", 2, d, Expr::sum(terms, 2, d), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    w[aidx[0]] = 1;
    w[aidx[3]] = 1;
    for (int j : tidx) w[j] = 1;
    M.witnesses.push_back(w);
    return M;
}

ParamMap make_notclebsch(const MapParams&) {
    Builder B(3);
    int q0 = 0;
    ExprPtr q = B.generic(2, "q", &q0);
    std::vector<ExprPtr> terms = {Expr::power(q, 2)};
    std::vector<int> l0;
    for (int k = 0; k < 3; ++k) {
        int first = 0;
        terms.push_back(Expr::power(B.generic(1, "l" + std::to_string(k + 1) + "_", &first), 4));
        l0.push_back(first);
    }
    ParamMap M = finish("notclebsch", 3, 4, Expr::sum(terms, 3, 4), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    auto qmon = index_set(3, 2);
    for (size_t k = 0; k < qmon.size(); ++k) {
        const auto& i = qmon[k];
        if (*std::max_element(i.begin(), i.end()) == 1) w[q0 + k] = 1;  // x1x2 + x1x3 + x2x3
    }
    for (int k = 0; k < 3; ++k) w[l0[k] + k] = 1;
    M.witnesses.push_back(w);
    return M;
}

ParamMap make_omnibus(const MapParams& P) {
    int d = get_int(P, "d", 6);
    std::vector<int> e = get_ints(P, "e", {3, 2});
    int m = get_int(P, "m", 0);
    if (d < 1 || m < 0) throw Error(ErrorKind::BadShape, "omnibus needs d >= 1 and m >= 0");
    std::sort(e.rbegin(), e.rend());
    long total = m;
    for (int ek : e) {
        if (ek < 1 || ek >= d || d % ek != 0)
            throw Error(ErrorKind::BadShape, "each e_k must be a divisor of d with 1 <= e_k < d");
        total += ek + 1;
    }
    if (total != d + 1)
        throw Error(ErrorKind::BadShape, "need m + sum(e_k + 1) = d + 1, got " + std::to_string(total) + " != " + std::to_string(d + 1));
    Builder B(2);
    std::vector<ExprPtr> terms;
    for (int j = 0; j < m; ++j) {
        Form l = linear({Scalar(1), Scalar(j)});  // x + j y, pairwise non-proportional
        terms.push_back(Expr::parameter(B.add("t" + std::to_string(j + 1)), l.pow(d)));
    }
    for (size_t k = 0; k < e.size(); ++k)
        terms.push_back(Expr::power(B.generic(e[k], "f" + std::to_string(k + 1) + "_"), d / e[k]));
    return finish("omnibus", 2, d, Expr::sum(terms, 2, d), B);
}

ParamMap make_sylvgen(const MapParams& P) {
    int u = get_int(P, "u", 2), v = get_int(P, "v", 3);
    bool normalized = get_int(P, "normalized", 1) != 0;
    if (u < 1 || v < 1) throw Error(ErrorKind::BadShape, "sylvgen needs u, v >= 1");
    int d = u * v;
    int r = (d + 1) / (u + 1), s = (d + 1) % (u + 1);
    int count = s == 0 ? r : r + 1;
    Builder B(2);
    std::vector<ExprPtr> terms;
    std::vector<int> starts;
    for (int i = 0; i < count; ++i) {
        std::vector<MultiIndex> monos;
        int top = (s > 0 && normalized && i == count - 1) ? s - 1 : u;
        for (int j = 0; j <= top; ++j) monos.push_back(binary(u, j));
        int first = 0;
        terms.push_back(Expr::power(B.form(monos, u, "f" + std::to_string(i + 1) + "_", &first), v));
        starts.push_back(first);
    }
    bool by_design = normalized || s == 0;
    ParamMap M = finish("sylvgen", 2, d, Expr::sum(terms, 2, d), B, by_design);
    if (!normalized || s == 0) {
        // f_i = (i x - y)^u
        std::vector<Scalar> w(M.M, Scalar(0));
        for (int i = 0; i < count; ++i) {
            Form f = linear({Scalar(i + 1), Scalar(-1)}).pow(u);
            for (int j = 0; j <= u; ++j) w[starts[i] + j] = f.raw(binary(u, j));
        }
        M.witnesses.push_back(w);
    }
    return M;
}

ParamMap make_sylv622(const MapParams& P) {
    int s = get_int(P, "s", 3);
    if (s < 1) throw Error(ErrorKind::BadShape, "sylv622 needs s >= 1");
    Builder B(2);
    std::vector<ExprPtr> terms = {Expr::power(B.generic(2, "q"), s)};
    for (int j = 1; j < s; ++j) terms.push_back(Expr::power(B.generic(1, "l" + std::to_string(j) + "_"), 2 * s));
    return finish("sylv622", 2, 2 * s, Expr::sum(terms, 2, 2 * s), B);
}

ParamMap make_so2s(const MapParams& P) {
    int s = get_int(P, "s", 2), k0 = get_int(P, "k0", 0);
    if (s < 1 || k0 < 0 || k0 > s) throw Error(ErrorKind::BadShape, "so2s needs s >= 1 and 0 <= k0 <= s");
    Builder B(2);
    std::vector<MultiIndex> all, rest;
    for (int k = 0; k <= s; ++k) {
        all.push_back(binary(s, k));
        if (k != k0) rest.push_back(binary(s, k));
    }
    int f0 = 0, g0 = 0;
    ExprPtr f = B.form(all, s, "f", &f0), g = B.form(rest, s, "g", &g0);
    ParamMap M = finish("so2s", 2, 2 * s, Expr::sum({Expr::power(f, 2), Expr::power(g, 2)}, 2, 2 * s), B);
    if (k0 == 0) {
        std::vector<Scalar> w(M.M, Scalar(0));
        w[f0] = 1;              // f = x^s
        w[g0 + s - 1] = 1;      // g = y^s
        M.witnesses.push_back(w);
    }
    return M;
}

ParamMap make_so3s(const MapParams&) {
    Builder B(3);
    auto all = index_set(3, 2);
    MultiIndex x2 = mono(3, {{0, 2}}), y2 = mono(3, {{1, 2}}), z2 = mono(3, {{2, 2}});
    std::vector<MultiIndex> m2, m3;
    for (const auto& i : all) {
        if (i != x2) m2.push_back(i);
        if (i != x2 && i != y2) m3.push_back(i);
    }
    int a = 0, b = 0, c = 0;
    ExprPtr q1 = B.form(all, 2, "q1_", &a), q2 = B.form(m2, 2, "q2_", &b), q3 = B.form(m3, 2, "q3_", &c);
    ParamMap M = finish("so3s", 3, 4, Expr::sum({Expr::power(q1, 2), Expr::power(q2, 2), Expr::power(q3, 2)}, 3, 4), B);
    std::vector<Scalar> w(M.M, Scalar(0));
    w[a + (std::find(all.begin(), all.end(), x2) - all.begin())] = 1;
    w[b + (std::find(m2.begin(), m2.end(), y2) - m2.begin())] = 1;
    w[c + (std::find(m3.begin(), m3.end(), z2) - m3.begin())] = 1;
    M.witnesses.push_back(w);
    return M;
}

ParamMap make_reichmap(const MapParams& P) {
    int n = get_int(P, "n", 3);
    if (n < 2) throw Error(ErrorKind::BadShape, "reichmap needs n >= 2");
    Builder B(n);
    std::vector<ExprPtr> terms;
    for (int k = 0; k < n; ++k) terms.push_back(Expr::power(B.generic(1, "l" + std::to_string(k + 1) + "_"), 3));
    if (n > 2) {
        std::vector<MultiIndex> monos;
        for (const auto& i : index_set(n - 2, 3)) {
            MultiIndex full(n, 0);
            for (int j = 0; j < n - 2; ++j) full[j + 2] = i[j];
            monos.push_back(full);
        }
        terms.push_back(B.form(monos, 3, "q"));
    }
    return finish("reichmap", n, 3, Expr::sum(terms, n, 3), B);
}

ParamMap make_slinkymap(const MapParams& P) {
    int n = get_int(P, "n", 3);
    if (n < 1) throw Error(ErrorKind::BadShape, "slinkymap needs n >= 1");
    Builder B(n);
    std::vector<ExprPtr> terms;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<ExprPtr> leaves;
            for (int k = i; k <= j; ++k)
                leaves.push_back(Expr::parameter(
                    B.add("t" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1)),
                    Form::variable(n, k)));
            terms.push_back(Expr::power(Expr::sum(leaves, n, 1), 3));
        }
    return finish("slinkymap", n, 3, Expr::sum(terms, n, 3), B);
}

ParamMap make_sylwake(const MapParams& P) {
    int s = get_int(P, "s", 2);
    if (s < 1) throw Error(ErrorKind::BadShape, "sylwake needs s >= 1");
    Builder B(2);
    std::vector<ExprPtr> ls, terms;
    for (int k = 0; k < s; ++k) {
        ls.push_back(B.generic(1, "l" + std::to_string(k + 1) + "_"));
        terms.push_back(Expr::power(ls.back(), 2 * s));
    }
    std::vector<ExprPtr> fs = {B.scalar("lambda")};
    for (const auto& l : ls) fs.push_back(Expr::power(l, 2));
    terms.push_back(product_all(fs));
    return finish("sylwake", 2, 2 * s, Expr::sum(terms, 2, 2 * s), B);
}

ParamMap make_hyperplane(const MapParams& P) { return detail::hyperplane_map(get_scalars(P, "c")); }

ParamMap make_zerosum(const MapParams& P) {
    int s = get_int(P, "s", 2);
    if (s < 1) throw Error(ErrorKind::BadShape, "zerosum needs s >= 1");
    Builder B(2);
    Form x = Form::variable(2, 0), y = Form::variable(2, 1);
    std::vector<ExprPtr> terms;
    std::vector<int> free_idx;
    for (int j = 0; j < s; ++j) {
        int a = B.add("a" + std::to_string(j + 1)), b = B.add("b" + std::to_string(j + 1));
        free_idx.push_back(a);
        free_idx.push_back(b);
        terms.push_back(Expr::power(Expr::sum({Expr::parameter(a, x), Expr::parameter(b, y)}, 2, 1), 2 * s));
    }
    // b_{s+1} = -(a_1 + ... + a_{s+1}) - (b_1 + ... + b_s)
    int last = B.add("a" + std::to_string(s + 1));
    std::vector<ExprPtr> leaves = {Expr::parameter(last, x - y)};
    for (int j : free_idx) leaves.push_back(Expr::parameter(j, -y));
    terms.push_back(Expr::power(Expr::sum(leaves, 2, 1), 2 * s));
    return finish("zerosum", 2, 2 * s, Expr::sum(terms, 2, 2 * s), B);
}

const std::vector<std::pair<std::string, std::function<ParamMap(const MapParams&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<ParamMap(const MapParams&)>>> R = {
        {"uppertri", make_uppertri},   {"sextican", make_sextican},   {"wakeford", make_wakeford},
        {"quarticgen", make_quarticgen}, {"notclebsch", make_notclebsch}, {"omnibus", make_omnibus},
        {"sylvgen", make_sylvgen},     {"sylv622", make_sylv622},     {"so2s", make_so2s},
        {"so3s", make_so3s},           {"reichmap", make_reichmap},   {"slinkymap", make_slinkymap},
        {"sylwake", make_sylwake},     {"hyperplane", make_hyperplane}, {"zerosum", make_zerosum},
    };
    return R;
}

}  // namespace

namespace detail {

int hyperplane_pivot(const std::vector<Scalar>& c) {
    for (int j : {3, 1, 2, 0})
        if (!c[j].is_zero(c[j].is_exact() ? 0.0 : kDefaultEps)) return j;
    return -1;
}

ParamMap hyperplane_map(const std::vector<Scalar>& c) {
    if (c.size() != 4) throw Error(ErrorKind::BadShape, "hyperplane needs c = c1,c2,c3,c4");
    int piv = hyperplane_pivot(c);
    if (piv < 0) throw Error(ErrorKind::AllZero, "all hyperplane coefficients vanish");
    Builder B(2);
    std::vector<int> idx(4, -1);
    for (int j = 0; j < 4; ++j)
        if (j != piv) idx[j] = B.add("t" + std::to_string(j + 1));
    auto weight = [](int j) { return Form::variable(2, j % 2); };  // t1, t3 on x; t2, t4 on y
    std::vector<ExprPtr> squares;
    for (int a = 0; a < 2; ++a) {
        std::vector<ExprPtr> leaves;
        for (int j = 2 * a; j < 2 * a + 2; ++j) {
            if (j != piv) {
                leaves.push_back(Expr::parameter(idx[j], weight(j)));
                continue;
            }
            for (int i = 0; i < 4; ++i)
                if (i != piv) leaves.push_back(Expr::parameter(idx[i], weight(j) * (-c[i] / c[piv])));
        }
        squares.push_back(Expr::power(Expr::sum(leaves, 2, 1), 2));
    }
    return finish("hyperplane", 2, 2, Expr::sum(squares, 2, 2), B);
}

}  // namespace detail

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

ParamMap build_map(const std::string& name, const MapParams& params) {
    for (const auto& [key, fn] : registry())
        if (key == name) return fn(params);
    throw Error(ErrorKind::UnknownName, "unknown catalog entry '" + name + "'");
}

}  // namespace canonform
