#include <doctest.h>

#include "canonform/error.hpp"
#include "canonform/json_io.hpp"
#include "canonform/matrix.hpp"
#include "canonform/roots.hpp"
#include "canonform/text.hpp"
#include "oracle.hpp"

using namespace canonform;

TEST_CASE("index_set order and length") {
    auto I = index_set(2, 2);
    REQUIRE(I.size() == 3);
    CHECK(I[0] == MultiIndex{2, 0});
    CHECK(I[1] == MultiIndex{1, 1});
    CHECK(I[2] == MultiIndex{0, 2});
    CHECK(index_set(3, 4).size() == 15);
    CHECK(index_set(3, 4).size() == 5 * index_set(3, 1).size());
    auto one = index_set(1, 7);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == MultiIndex{7});
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d <= 10; ++d) {
            CHECK(static_cast<long>(index_set(n, d).size()) == oracle::count_compositions(n, d));
            CHECK(dimension(n, d) == oracle::count_compositions(n, d));
        }
}

TEST_CASE("normalized coefficients") {
    Form p = parse_form("x^2 + 2*x*y + 3*y^2");
    CHECK(p.coeff({2, 0}) == Scalar(1));
    CHECK(p.coeff({1, 1}) == Scalar(1));
    CHECK(p.coeff({0, 2}) == Scalar(3));
    Form xy = parse_form("x*y");
    CHECK(xy.coeff({1, 1}) == Scalar::rational(1, 2));
}

TEST_CASE("evaluate examples") {
    Form p = parse_form("x^2 + y^2");
    CHECK(p.evaluate({Scalar(1), Scalar::i()}).is_zero());
    Form q = parse_form("2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3");
    CHECK(q.evaluate({Scalar(1), Scalar(0)}) == Scalar(2));
    Form c = parse_form("(x+2*y)^3");
    CHECK(c.evaluate({Scalar(1), Scalar(1)}) == Scalar(27));
    CHECK_THROWS_AS(c.evaluate({Scalar(1)}), Error);
}

TEST_CASE("evaluation is linear") {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 3, d = trial % 5;
        Form p = oracle::rand_form(g, n, d), q = oracle::rand_form(g, n, d);
        Scalar a = oracle::rand_gauss(g, -4, 4), b = oracle::rand_gauss(g, -4, 4);
        std::vector<Scalar> u;
        for (int j = 0; j < n; ++j) u.push_back(oracle::rand_gauss(g, -3, 3));
        CHECK((p * a + q * b).evaluate(u) == a * p.evaluate(u) + b * q.evaluate(u));
        std::vector<cplx> uc;
        for (auto& s : u) uc.push_back(s.to_complex());
        CHECK(near(p.evaluate(u).to_complex(), oracle::naive_eval(p, uc), 1e-9));
    }
}

TEST_CASE("substitute examples") {
    Form p = parse_form("2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3");
    CHECK(p.substitute(Matrix::identity(2)).equals(p));
    Form sq = parse_form("x^2", 2);
    CHECK(sq.substitute(Matrix{{0, 1}, {1, 0}}).equals(parse_form("y^2")));
    Form xy = parse_form("x*y");
    CHECK(xy.substitute(Matrix{{1, 1}, {1, -1}}).equals(parse_form("x^2 - y^2")));
}

TEST_CASE("substitute then inverse is the identity") {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 2;
        Form p = oracle::rand_form(g, n, 3);
        Matrix M(n, n);
        std::optional<Matrix> Mi;
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) M(i, j) = oracle::rand_int(g, -3, 3);
            Mi = inverse(M);
        } while (!Mi);
        CHECK(p.substitute(M).substitute(*Mi).equals(p));
    }
}

TEST_CASE("biermann point") {
    CHECK(biermann_point(parse_form("x1*x2")) == MultiIndex{1, 1});
    CHECK(biermann_point(parse_form("x^4", 3)) == MultiIndex{4, 0, 0});
    CHECK_THROWS_AS(biermann_point(Form(2, 3)), Error);
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 10; ++trial) {
        Form p = oracle::rand_form(g, 3, 3, -2, 2);
        if (p.is_zero()) continue;
        MultiIndex b = biermann_point(p);
        std::vector<Scalar> pt(b.begin(), b.end());
        CHECK(!p.evaluate(pt).is_zero());
        // Exhaustive scan oracle: no earlier grid point is nonzero.
        for (const auto& i : index_set(3, 3)) {
            if (i == b) break;
            std::vector<Scalar> q(i.begin(), i.end());
            CHECK(p.evaluate(q).is_zero());
        }
    }
}

TEST_CASE("binary_factor examples") {
    auto F = binary_factor(parse_form("x^2 + y^2"));
    CHECK(F.factors.size() == 2);
    CHECK(F.product().equals(parse_form("x^2 + y^2")));
    for (auto& [l, m] : F.factors) CHECK(l.alpha[0].is_exact());

    Form h = parse_form("6*x^2 - 5*x*y + y^2");
    auto H = binary_factor(h);
    REQUIRE(H.factors.size() == 2);
    CHECK(H.product().equals(h));
    std::vector<Scalar> ts;
    for (auto& [l, m] : H.factors) ts.push_back(l.alpha[0]);
    CHECK(((ts[0] == Scalar(2) && ts[1] == Scalar(3)) || (ts[0] == Scalar(3) && ts[1] == Scalar(2))));

    Form c = parse_form("(x-y)^3");
    auto C = binary_factor(c);
    REQUIRE(C.factors.size() == 1);
    CHECK(C.factors[0].second == 3);
    CHECK(C.product().equals(c));

    CHECK_THROWS_AS(binary_factor(Form(2, 3)), Error);
}

TEST_CASE("binary_factor reconstruction") {
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 30; ++trial) {
        Form p = oracle::rand_form(g, 2, 2 + trial % 6);
        if (p.is_zero()) continue;
        auto F = binary_factor(p);
        CHECK(F.product().equals(p, 1e-9));
        Form pa = p.to_approx();
        CHECK(binary_factor(pa).product().equals(pa, 1e-9));
    }
    // Root at infinity and a mixture of rational and irrational roots.
    Form q = parse_form("x^2*(x-2*y)*(x^2-2*y^2)");
    auto Q = binary_factor(q);
    CHECK(Q.product().equals(q, 1e-9));
}

TEST_CASE("text round trip is exact") {
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 4, d = trial % 5;
        std::vector<Scalar> a;
        for (size_t k = 0; k < index_set(n, d).size(); ++k)
            a.push_back(Scalar::gauss(mpq_class(trial % 7 - 3, 1 + k % 5), static_cast<long>(k % 3) - 1));
        Form p = Form::from_vector(n, d, a);
        Form back = parse_form(format_form(p), n, d);
        CHECK(back.equals(p));
        CHECK(form_from_json(form_to_json(p)).equals(p));
    }
    CHECK(parse_form("(1+2*i)*x^2 - 3/4*x*y").raw({1, 1}) == Scalar::rational(-3, 4));
    CHECK_THROWS_AS(parse_form("x^2 + y"), Error);
    CHECK_THROWS_AS(parse_form("x^2 +"), Error);
    CHECK(!parse_form("0.5*x").is_exact());
}

TEST_CASE("linear form power agrees with form exponentiation") {
    std::mt19937_64 g(29);
    for (int trial = 0; trial < 20; ++trial) {
        LinearForm l = oracle::rand_linear(g, 1 + trial % 4);
        int d = trial % 6;
        CHECK(l.power(d).equals(l.form().pow(d)));
    }
}

TEST_CASE("scalar square roots and snapping") {
    CHECK(sqrt(Scalar(4)) == Scalar(2));
    CHECK(sqrt(Scalar(-9)) == Scalar::gauss(0, 3));
    CHECK(sqrt(Scalar::gauss(3, 4)) == Scalar::gauss(2, 1));
    CHECK(!sqrt(Scalar(2)).is_exact());
    auto s = snap(Scalar(cplx(2.5, -1.0 / 3.0)));
    REQUIRE(s);
    CHECK(*s == Scalar::gauss(mpq_class(5, 2), mpq_class(-1, 3)));
}

TEST_CASE("kernel normalization and exact rank") {
    Matrix H{{2, 1, -7}, {1, -7, -41}};
    auto K = kernel(H);
    REQUIRE(K.size() == 1);
    CHECK(K[0][0] == Scalar(1));
    CHECK(K[0][1] == Scalar::rational(-5, 6));
    CHECK(rank(H) == 2);
    CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == Scalar(-2));
}
