#include <functional>
#include <sstream>

#include "canonform/apolarity.hpp"
#include "canonform/binary_decomp.hpp"
#include "canonform/canonicity.hpp"
#include "canonform/cli.hpp"
#include "canonform/enumeration.hpp"
#include "canonform/multivar_decomp.hpp"
#include "canonform/roots.hpp"
#include "canonform/text.hpp"

namespace canonform::cli {

namespace {

const char* kCubic = "2*x^3 + 3*x^2*y - 21*x*y^2 - 41*y^3";
const char* kQuintic = "-x^5 + 15*x^4*y - 170*x^3*y^2 + 390*x^2*y^3 - 505*x*y^4 + 483*y^5";

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success
    bool gating = true;
};

std::string expect(bool ok, const std::string& detail) { return ok ? "" : detail; }

std::string cli_output(const std::vector<std::string>& args, const std::string& want) {
    std::ostringstream out, err;
    std::istringstream in;
    int code = run(args, out, err, in);
    std::string got = out.str();
    if (!got.empty() && got.back() == '\n') got.pop_back();
    return expect(code == 0 && got == want, "got '" + got + "' (exit " + std::to_string(code) + ")");
}

std::vector<Check> checks() {
    std::vector<Check> C;
    C.push_back({"index_set(3,4) has 15 = 5 N(3,1) entries",
                 [] { return expect(index_set(3, 4).size() == 15 && dimension(3, 1) * 5 == 15, "wrong size"); }});
    C.push_back({"cubic evaluates to 2 at (1,0)", [] {
                     return expect(parse_form(kCubic).evaluate({Scalar(1), Scalar(0)}) == Scalar(2), "wrong value");
                 }});
    C.push_back({"6x^2-5xy+y^2 factors as (2x-y)(3x-y)", [] {
                     auto F = binary_factor(parse_form("6*x^2 - 5*x*y + y^2"));
                     bool ok = F.factors.size() == 2 && F.product().equals(parse_form("(2*x - y)*(3*x - y)"));
                     std::vector<Scalar> t;
                     for (auto& [l, m] : F.factors) t.push_back(l.alpha[0]);
                     ok = ok && ((t[0] == Scalar(2) && t[1] == Scalar(3)) || (t[0] == Scalar(3) && t[1] == Scalar(2)));
                     return expect(ok, "unexpected factors");
                 }});
    C.push_back({"h(D) annihilates the cubic", [] {
                     return expect(apply_diff(parse_form("6*x^2 - 5*x*y + y^2"), parse_form(kCubic)).is_zero(0.0),
                                   "nonzero");
                 }});
    C.push_back({"(x-y)(3x+y) applied to the quintic", [] {
                     Form r = apply_diff(parse_form("(x - y)*(3*x + y)"), parse_form(kQuintic));
                     return expect(r.equals(parse_form("160*x^3 + 240*x^2*y - 1680*x*y^2 - 3280*y^3")),
                                   "got " + format_form(r));
                 }});
    C.push_back({"catalecticant of the cubic", [] {
                     auto H = hankel(parse_form(kCubic), 2);
                     Matrix want{{2, 1, -7}, {1, -7, -41}};
                     bool ok = H.entries.rows() == 2 && H.entries.cols() == 3;
                     for (int i = 0; ok && i < 2; ++i)
                         for (int j = 0; j < 3; ++j) ok = ok && H.entries(i, j) == want(i, j);
                     return expect(ok, "wrong entries");
                 }});
    C.push_back({"catalecticant kernel contains (6,-5,1)", [] {
                     Matrix A = hankel(parse_form(kCubic), 2).entries;
                     auto v = A.apply({Scalar(6), Scalar(-5), Scalar(1)});
                     return expect(v[0].is_zero(0.0) && v[1].is_zero(0.0) && kernel(A).size() == 1, "not in kernel");
                 }});
    C.push_back({"sylvester cubic: 5(x+2y)^3 - 3(x+3y)^3", [] {
                     std::string s = format_decomposition(sylvester_decompose(parse_form(kCubic)));
                     return expect(s == "5*(x+2*y)^3 - 3*(x+3*y)^3", "got " + s);
                 }});
    C.push_back({"mixed quintic: -4, 1, 7/2, 3/2", [] {
                     MixedSpec spec{{LinearForm({1, 1}), LinearForm({-1, 3})}, 2};
                     Decomposition D = mixed_decompose(parse_form(kQuintic), spec);
                     std::string s = format_decomposition(D);
                     return expect(s == "-4*(x+2*y)^5 + (x+3*y)^5 + 7/2*(x+y)^5 + 3/2*(-x+3*y)^5", "got " + s);
                 }});
    C.push_back({"representation count (4;[2,1];0) = 6", [] {
                     auto R = count_reps_monte_carlo(4, {2, 1}, 0, 200, 1);
                     return expect(R.count == 6, "estimate " + std::to_string(R.count));
                 }});
    C.push_back({"representation count (4;[2];2) = 2", [] {
                     auto R = count_reps_monte_carlo(4, {2}, 2, 200, 1);
                     return expect(R.count == 2, "estimate " + std::to_string(R.count));
                 }});
    C.push_back({"representation count (6;[3,2];0) = 40 (best effort)",
                 [] {
                     auto R = count_reps_monte_carlo(6, {3, 2}, 0, 4000, 1);
                     return expect(R.count == 40, "estimate " + std::to_string(R.count));
                 },
                 false});
    C.push_back({"slowpoke family identities for m = 1..8", [] {
                     for (int m = 1; m <= 8; ++m) {
                         auto L = slowpoke_family(m);
                         Form sum(m, 1), sq(m, 2), want(m, 2);
                         for (auto& l : L) {
                             sum += l.form();
                             sq += l.power(2);
                         }
                         for (int k = 0; k < m; ++k) want += Form::variable(m, k).pow(2);
                         if (!sum.is_zero(1e-12) || !(sq - want).is_zero(1e-12)) return "m = " + std::to_string(m);
                     }
                     return std::string();
                 }});
    C.push_back({"omnibus(84,[42,28,12],0) is a valid map", [] {
                     ParamMap m = build_map("omnibus", {{"d", "84"}, {"e", "42,28,12"}, {"m", "0"}});
                     return expect(m.M == 85, "M = " + std::to_string(m.M));
                 }});
    C.push_back({"sextican at f = x^3, g = y^2 has rank 7", [] {
                     ParamMap m = build_map("sextican");
                     auto R = jacobian_certify(m, m.witnesses.front());
                     return expect(R.verdict == Verdict::Certified && R.rank == 7, "rank " + std::to_string(R.rank));
                 }});
    C.push_back({"uppertri at t = delta certifies", [] {
                     for (int n = 1; n <= 5; ++n) {
                         ParamMap m = build_map("uppertri", {{"n", std::to_string(n)}});
                         if (jacobian_certify(m, m.witnesses.front()).verdict != Verdict::Certified)
                             return "n = " + std::to_string(n);
                     }
                     return std::string();
                 }});
    C.push_back({"quarticgen with {m1,m2} = {0,1} never certifies", [] {
                     auto R = jacobian_certify(build_map("quarticgen", {{"d", "4"}, {"B", "0,1,2,4"}}), std::nullopt, 20, 1);
                     return expect(R.verdict == Verdict::NotFullRankAtWitness, verdict_name(R.verdict));
                 }});
    C.push_back({"hyperplane (1,0,i,0) is exceptional with epsilon = i", [] {
                     auto H = hyperplane_classify({1, 0, Scalar::i(), 0});
                     return expect(H.exceptional && H.epsilon == Scalar::i(), "not exceptional");
                 }});
    C.push_back({"zero-sum map certifies for s = 1", [] {
                     return expect(zerosum_verify(1).verdict == Verdict::Certified, "not certified");
                 }});
    C.push_back({"zero-sum map certifies for s = 4", [] {
                     return expect(zerosum_verify(4).verdict == Verdict::Certified, "not certified");
                 }});
    C.push_back({"s(15) = 2", [] { return expect(s_of_d(15) == 2, std::to_string(s_of_d(15))); }});
    C.push_back({"s(99) = 3", [] { return expect(s_of_d(99) == 3, std::to_string(s_of_d(99))); }});
    C.push_back({"three neat forms with r = 2", [] {
                     std::vector<NeatForm> want = {{3, {1, 1}}, {4, {2, 1}}, {6, {3, 2}}};
                     return expect(neat_enumerate(2) == want, "mismatch");
                 }});
    C.push_back({"twenty-two neat forms with r = 3", [] {
                     auto v = neat_enumerate(3);
                     return expect(v.size() == 22, std::to_string(v.size()));
                 }});
    C.push_back({"12 is in A_4", [] { return expect(obstruction_A(4, 12), "not a member"); }});
    C.push_back({"6 is the smallest member of A_10", [] {
                     auto s = smallest_in_A(10, 100);
                     return expect(obstruction_A(10, 6) && s && *s == 6, "mismatch");
                 }});
    C.push_back({"A_p is empty for p = 2, 3, 5, 7 up to 500", [] {
                     for (int p : {2, 3, 5, 7})
                         if (!members_of_A(p, 500).empty()) return "p = " + std::to_string(p);
                     return std::string();
                 }});
    C.push_back({"cli: decompose sylvester", [] {
                     return cli_output({"decompose", "sylvester", "2*x^3+3*x^2*y-21*x*y^2-41*y^3"},
                                       "5*(x+2*y)^3 - 3*(x+3*y)^3");
                 }});
    C.push_back({"cli: count s --d 15", [] { return cli_output({"count", "s", "--d", "15"}, "2"); }});
    C.push_back({"cli: certify sextican", [] { return cli_output({"certify", "sextican"}, "Certified (rank 7/7)"); }});
    return C;
}

}  // namespace

std::vector<ExampleResult> verify_examples() {
    std::vector<ExampleResult> out;
    for (const auto& c : checks()) {
        ExampleResult r;
        r.name = c.name;
        r.gating = c.gating;
        try {
            r.detail = c.run();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace canonform::cli
