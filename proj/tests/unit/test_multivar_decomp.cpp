#include <doctest.h>

#include <algorithm>

#include "canonform/binary_decomp.hpp"
#include "canonform/error.hpp"
#include "canonform/multivar_decomp.hpp"
#include "canonform/roots.hpp"
#include "canonform/text.hpp"
#include "oracle.hpp"

using namespace canonform;

namespace {

ErrorKind kind_of(const std::function<void()>& f, int* stage = nullptr) {
    try {
        f();
    } catch (const Error& e) {
        if (stage) *stage = e.stage();
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

std::vector<int> support(const Form& l, double tol = 1e-9) {
    std::vector<int> s;
    LinearForm a = LinearForm::from_form(l);
    for (int j = 0; j < a.n(); ++j)
        if (!a.alpha[j].is_zero(a.alpha[j].is_exact() ? 0.0 : tol)) s.push_back(j);
    return s;
}

// Random form with nonzero integer coefficients, generic enough for the pivoted constructions.
Form generic_form(std::mt19937_64& g, int n, int d) {
    std::vector<Scalar> a;
    std::uniform_int_distribution<int> U(1, 9), S(0, 1);
    for (size_t k = 0; k < index_set(n, d).size(); ++k) a.push_back(Scalar(S(g) ? U(g) : -U(g)));
    return Form::from_vector(n, d, a);
}

long a_of(int n) { return (n + 1) * (n + 1) / 4; }

Form product_of_linears(std::mt19937_64& g, int n, int k) {
    Form p = Form::constant(n, 1);
    for (int j = 0; j < k; ++j) p = p * oracle::rand_linear(g, n, -3, 3).form();
    return p;
}

}  // namespace

TEST_CASE("uppertri examples") {
    TriangularSquares T = uppertri(parse_form("x^2 + y^2 + z^2"));
    REQUIRE(T.rows.size() == 3);
    CHECK(T.rows[0].form().equals(parse_form("x", 3)));
    CHECK(T.rows[1].form().equals(parse_form("y", 3)));
    CHECK(T.rows[2].form().equals(parse_form("z")));

    T = uppertri(parse_form("x^2 + 2*x*y + 3*y^2"));
    REQUIRE(T.rows.size() == 2);
    CHECK(T.rows[0].form().equals(parse_form("x + y")));
    CHECK(T.rows[1].alpha[0].is_zero());
    CHECK(T.rows[1].alpha[1].equals(Scalar(std::sqrt(2.0))));
    CHECK(T.sum_of_squares(2).equals(parse_form("x^2 + 2*x*y + 3*y^2")));

    int stage = 0;
    CHECK(kind_of([] { uppertri(parse_form("x*y")); }, &stage) == ErrorKind::PivotZero);
    CHECK(stage == 1);
}

TEST_CASE("uppertri reconstructs, is triangular and unique up to row signs") {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 5;
        Form p = oracle::rand_form(g, n, 2);
        TriangularSquares T;
        try {
            T = uppertri(p);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PivotZero);
            continue;
        }
        CHECK(T.sum_of_squares(n).equals(p));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < k; ++j) CHECK(T.rows[k].alpha[j].is_zero(1e-12));
        TriangularSquares U = uppertri(p);
        for (int k = 0; k < n; ++k) {
            CHECK(T.rows[k].power(2).equals(U.rows[k].power(2)));
            CHECK(T.rows[k].scaled(-1).power(2).equals(U.rows[k].power(2)));
        }
    }
}

TEST_CASE("reichstein step") {
    CHECK(kind_of([] { reichstein_step(parse_form("x^3 + y^3 + z^3")); }) == ErrorKind::DegeneratePencil);

    std::mt19937_64 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        Form p = generic_form(g, 3, 3);
        ReichsteinStep st = reichstein_step(p);
        CHECK(st.cubes.terms.size() == 3);
        CHECK(st.q.free_of(0));
        CHECK(st.q.free_of(1));
        CHECK(st.q.derivative(0).is_zero(0.0));
        CHECK(st.q.derivative(1).is_zero(0.0));
        Form sum = st.q;
        for (const auto& t : st.cubes.terms) sum += t.expand();
        CHECK(sum.equals(p, 1e-8));

        PencilDiag P = simultaneous_diagonalize(p.derivative(0), p.derivative(1));
        Form f(3, 2), h(3, 2);
        for (size_t i = 0; i < P.L.size(); ++i) {
            f += P.L[i].power(2);
            h += P.L[i].power(2) * P.c[i];
            CHECK(P.L[i].alpha[1].equals(P.c[i] * P.L[i].alpha[0], 1e-8));
        }
        CHECK(f.equals(p.derivative(0), 1e-8));
        CHECK(h.equals(p.derivative(1), 1e-8));
    }
}

TEST_CASE("binary reichstein agrees with sylvester") {
    std::mt19937_64 g(17);
    int skipped = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Form p = generic_form(g, 2, 3);
        ReichsteinStep st;
        try {
            st = reichstein_step(p);
        } catch (const Error& e) {
            // the first partial is a square for a few integer draws
            CHECK(e.kind() == ErrorKind::DegeneratePencil);
            ++skipped;
            continue;
        }
        CHECK(st.q.is_zero(1e-8));
        Decomposition S = sylvester_decompose(p);
        REQUIRE(S.terms.size() == 2);
        REQUIRE(st.cubes.terms.size() == 2);
        auto node = [](const Form& l) {
            cplx a = l.raw({1, 0}).to_complex(), b = l.raw({0, 1}).to_complex();
            return std::abs(a) < 1e-12 ? cplx(INFINITY, 0) : b / a;
        };
        cplx r0 = node(st.cubes.terms[0].base), r1 = node(st.cubes.terms[1].base);
        cplx s0 = node(S.terms[0].base), s1 = node(S.terms[1].base);
        bool same = (chordal(r0, s0) < 1e-6 && chordal(r1, s1) < 1e-6) || (chordal(r0, s1) < 1e-6 && chordal(r1, s0) < 1e-6);
        CHECK(same);
    }
    CHECK(skipped <= 3);
}

TEST_CASE("reichstein full counts and stage supports") {
    std::mt19937_64 g(23);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            Form p = generic_form(g, n, 3);
            Decomposition D = reichstein_full(p);
            CHECK(static_cast<long>(D.terms.size()) == a_of(n));
            CHECK(D.error(p) < 1e-8);
            size_t idx = 0;
            for (const auto& st : D.stages) {
                for (int t = 0; t < st.terms; ++t, ++idx) {
                    auto s = support(D.terms[idx].base);
                    CHECK(s.front() >= 2 * (st.stage - 1));
                }
            }
        }
    }
}

TEST_CASE("slinky shapes") {
    std::mt19937_64 g(29);
    for (int trial = 0; trial < 20; ++trial) {
        Form p = generic_form(g, 2, 3);
        Decomposition D = slinky(p);
        REQUIRE(D.terms.size() == 3);
        CHECK(D.error(p) < 1e-9);
        CHECK(support(D.terms[0].base) == std::vector<int>{0, 1});
        CHECK(support(D.terms[1].base) == std::vector<int>{1});
        CHECK(support(D.terms[2].base) == std::vector<int>{0});
    }
    for (int n = 3; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Form p = generic_form(g, n, 3);
            Decomposition D = slinky(p);
            CHECK(static_cast<int>(D.terms.size()) == n * (n + 1) / 2);
            CHECK(D.error(p) < 1e-8);
            // the cube built from row j at stage k involves exactly x_j..x_k
            size_t idx = 0;
            for (int k = n - 1; k >= 0; --k)
                for (int j = 0; j <= k; ++j, ++idx) {
                    std::vector<int> want;
                    for (int v = j; v <= k; ++v) want.push_back(v);
                    CHECK(support(D.terms[idx].base) == want);
                }
        }
}

TEST_CASE("slinky degenerate and uniqueness") {
    Decomposition D = slinky(parse_form("x1^3", 3));
    REQUIRE(D.terms.size() == 1);
    CHECK(D.reconstructs(parse_form("x1^3", 3)));
    CHECK(kind_of([] { slinky(parse_form("x*y*z")); }) == ErrorKind::DegenerateStage);

    std::mt19937_64 g(31);
    for (int trial = 0; trial < 10; ++trial) {
        Form p = generic_form(g, 3, 3);
        Decomposition A = slinky(p), B = slinky(p);
        REQUIRE(A.terms.size() == B.terms.size());
        for (size_t k = 0; k < A.terms.size(); ++k) CHECK(A.terms[k].expand().equals(B.terms[k].expand(), 1e-10));
        // first-stage cubes differentiate to the upper-triangular squares of the last partial
        TriangularSquares T = uppertri(p.derivative(2));
        for (int j = 0; j < 3; ++j) {
            Form dcube = A.terms[j].expand().derivative(2);
            CHECK(dcube.equals(T.rows[j].power(2), 1e-8));
        }
    }
}

TEST_CASE("slowpoke family identities") {
    for (int m = 1; m <= 8; ++m) {
        auto L = slowpoke_family(m);
        REQUIRE(static_cast<int>(L.size()) == m + 1);
        Form s(m, 1), sq(m, 2), y2(m, 2);
        for (const auto& l : L) {
            s += l.form();
            sq += l.power(2);
        }
        for (int k = 0; k < m; ++k) y2 += Form::variable(m, k).pow(2);
        CHECK(s.is_zero(1e-12));
        CHECK((sq - y2).is_zero(1e-12));
    }
}

TEST_CASE("slowpoke is total") {
    for (const char* s : {"x^3", "x*y*z", "x^2*y", "x*y^2 + z^3", "x1*x2*x3*1 + x4^3"}) {
        Form p = parse_form(s);
        Decomposition D = slowpoke(p);
        int n = p.n();
        CHECK(static_cast<int>(D.terms.size()) <= n * (n + 1) / 2);
        CHECK(D.error(p) < 1e-7);
    }
    CHECK(slowpoke(parse_form("x^3")).terms.size() == 1);
    // the quadratic part needs an off-diagonal pivot after the first square
    Form q = parse_form("9*x1^3 - 18*x1^2*x2 + 21*x1^2*x3 + 6*x1*x2^2 - 54*x1*x2*x3 + 48*x1*x2*x4 - 18*x1*x3^2 + "
                        "48*x1*x3*x4 - 15*x1*x4^2 - 3*x2^3 - 27*x2^2*x3 - 21*x2^2*x4 + 21*x2*x3^2 + 18*x2*x3*x4 - "
                        "27*x2*x4^2 - 2*x3^3 - 3*x3^2*x4 - 6*x3*x4^2 + 6*x4^3");
    Decomposition Q = slowpoke(q);
    CHECK(Q.terms.size() <= 10);
    CHECK(Q.error(q) < 1e-7);
    CHECK(kind_of([] { slowpoke(Form(3, 3)); }) == ErrorKind::ZeroForm);

    std::mt19937_64 g(37);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 6;
        Form p;
        switch (trial % 4) {
            case 0: p = oracle::rand_form(g, n, 3); break;
            case 1: p = product_of_linears(g, n, 3); break;
            case 2: p = oracle::rand_linear(g, n).power(3) + oracle::rand_linear(g, n).power(3); break;
            default: {
                MultiIndex i(n, 0);
                for (int k = 0; k < 3; ++k) i[static_cast<size_t>(g() % n)] += 1;
                p = Form::monomial(i);
            }
        }
        if (p.is_zero(0.0)) continue;
        Decomposition D = slowpoke(p);
        CHECK(static_cast<int>(D.terms.size()) <= n * (n + 1) / 2);
        CHECK(D.error(p) < 1e-7);
    }
}

TEST_CASE("quartic lift") {
    std::mt19937_64 g(41);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Form p = generic_form(g, n, 4);
            Decomposition D = quartic_lift(p);
            CHECK(static_cast<long>(D.terms.size()) == a_of(n));
            REQUIRE(D.residual);
            CHECK(D.residual->free_of(n - 1));
            CHECK(D.error(p) < 1e-8);
            Decomposition F = quartic_lift_full(p);
            CHECK(F.error(p) < 1e-7);
            CHECK(F.residual == std::nullopt);
        }
    // coefficient count of the lift: N(n,3) + N(n-1,4) = N(n,4)
    for (int n = 2; n <= 8; ++n)
        CHECK(oracle::count_compositions(n, 3) + oracle::count_compositions(n - 1, 4) == oracle::count_compositions(n, 4));
    CHECK(kind_of([] { quartic_lift(parse_form("x^4 + x^2*y^2", 3)); }) == ErrorKind::DegenerateStage);
}
