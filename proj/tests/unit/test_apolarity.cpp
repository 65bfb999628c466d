#include <doctest.h>

#include "canonform/apolarity.hpp"
#include "canonform/error.hpp"
#include "canonform/text.hpp"
#include "oracle.hpp"

using namespace canonform;

TEST_CASE("pair examples") {
    CHECK(pair(parse_form("x^2", 2), parse_form("y^2")).is_zero());
    CHECK(pair(parse_form("x*y"), parse_form("x*y")) == Scalar::rational(1, 2));
    Form p = parse_form("x^3", 2);
    CHECK(pair(p, LinearForm{2, 1}.power(3)) == Scalar(8));
    CHECK_THROWS_AS(pair(parse_form("x^2", 2), parse_form("x^3", 2)), Error);
}

TEST_CASE("apply_diff examples") {
    Form h = parse_form("6*x^2 - 5*x*y + y^2");
    Form p = parse_form("2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3");
    CHECK(apply_diff(h, p).is_zero());

    Form f = parse_form("(x-y)*(3*x+y)");
    Form q = parse_form("-x^5 + 15*x^4*y - 170*x^3*y^2 + 390*x^2*y^3 - 505*x*y^4 + 483*y^5");
    CHECK(apply_diff(f, q).equals(parse_form("160*x^3 + 240*x^2*y - 1680*x*y^2 - 3280*y^3")));

    Form g = parse_form("x*y");
    LinearForm a{1, 2};
    CHECK(apply_diff(g, a.power(4)).equals(a.power(2) * Scalar(24)));
    CHECK_THROWS_AS(apply_diff(p, h), Error);
}

TEST_CASE("hankel examples") {
    Form p = parse_form("2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3");
    auto H = hankel(p, 2);
    CHECK(H.entries.rows() == 2);
    CHECK(H.entries.cols() == 3);
    Matrix expect{{2, 1, -7}, {1, -7, -41}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(H.entries(i, j) == expect(i, j));
    auto prod = H.entries.apply({6, -5, 1});
    CHECK(prod[0].is_zero());
    CHECK(prod[1].is_zero());

    auto K = kernel(hankel(parse_form("x^5", 2), 1).entries);
    REQUIRE(K.size() == 1);
    CHECK(K[0][0].is_zero());
    CHECK(K[0][1] == Scalar(1));
    CHECK_THROWS_AS(hankel(p, 4), Error);
}

TEST_CASE("symmetry, duality and factorization identities") {
    std::mt19937_64 g(41);
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 6; ++d)
            for (int trial = 0; trial < 100; ++trial) {
                Form p = oracle::rand_form(g, n, d), q = oracle::rand_form(g, n, d);
                CHECK(pair(p, q) == pair(q, p));
                Scalar dfac = Scalar(factorial(d));
                CHECK(apply_diff(p, q).raw(MultiIndex(n, 0)) == dfac * pair(p, q));
                CHECK(apply_diff(q, p).equals(apply_diff(p, q)));

                LinearForm a = oracle::rand_linear(g, n, -3, 3);
                CHECK(pair(p, a.power(d)) == p.evaluate(a.alpha));

                int e = 1 + trial % d;
                Form f = oracle::rand_form(g, n, e, -3, 3), h = oracle::rand_form(g, n, d - e, -3, 3);
                // d! [f h, p] = e! [f, h(D) p]
                CHECK(dfac * pair(f * h, p) == Scalar(factorial(e)) * pair(f, apply_diff(h, p)));
                // h(D) a^d = d!/e! h(a) a^e with e = d - deg h
                CHECK(apply_diff(h, a.power(d)).equals(a.power(e) * (dfac / Scalar(factorial(e)) * h.evaluate(a.alpha))));
            }
}

TEST_CASE("hankel kernel matches the operator kernel") {
    std::mt19937_64 g(43);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + trial % 6;
        // Sums of few powers have nontrivial kernels.
        Form p(2, d);
        for (int k = 0; k < 1 + trial % 3; ++k) p += oracle::rand_linear(g, 2).power(d);
        for (int r = 0; r <= d; ++r) {
            for (const auto& c : kernel(hankel(p, r).entries)) CHECK(apply_diff(hankel_form(c), p).is_zero());
            // A vector outside the kernel gives a nonzero operator.
            std::vector<Scalar> v;
            for (int t = 0; t <= r; ++t) v.push_back(oracle::rand_int(g, -4, 4));
            bool in_kernel = true;
            for (const auto& x : hankel(p, r).entries.apply(v)) in_kernel = in_kernel && x.is_zero();
            CHECK(in_kernel == apply_diff(hankel_form(v), p).is_zero());
        }
    }
}

TEST_CASE("honest powers span") {
    std::mt19937_64 g(47);
    for (int d = 1; d <= 7; ++d) {
        Matrix V(d + 1, d + 1);
        for (int k = 0; k <= d; ++k) {
            auto col = LinearForm{Scalar(1), Scalar(k)}.power(d).to_vector();
            for (int j = 0; j <= d; ++j) V(j, k) = col[j];
        }
        CHECK(rank(V) == d + 1);
    }
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            auto I = index_set(n, d);
            Matrix V(static_cast<int>(I.size()), static_cast<int>(I.size()));
            for (size_t k = 0; k < I.size(); ++k) {
                LinearForm l;
                for (int t : I[k]) l.alpha.push_back(Scalar(t));
                auto col = l.power(d).to_vector();
                for (size_t j = 0; j < I.size(); ++j) V(static_cast<int>(j), static_cast<int>(k)) = col[j];
            }
            CHECK(rank(V) == static_cast<int>(I.size()));
        }
}
