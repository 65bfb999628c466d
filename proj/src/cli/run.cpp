#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "canonform/binary_decomp.hpp"
#include "canonform/canonicity.hpp"
#include "canonform/cli.hpp"
#include "canonform/enumeration.hpp"
#include "canonform/error.hpp"
#include "canonform/json_io.hpp"
#include "canonform/multivar_decomp.hpp"
#include "canonform/text.hpp"

namespace canonform::cli {

namespace {

enum class Backend { Auto, Exact, Approx };

struct Config {
    bool json = false;
    std::optional<std::uint64_t> seed;
    double eps = kDefaultEps;
    Backend backend = Backend::Auto;

    std::uint64_t resolved_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("CANONFORM_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, std::string("CANONFORM_SEED is not an integer: ") + env);
            }
        }
        return 1;
    }
};

const std::vector<std::string>& algorithms() {
    static const std::vector<std::string> A = {"sylvester",  "mixed",     "two-squares", "quartic-six",
                                               "quartic-two-fixed", "quartic-normalize", "uppertri",
                                               "reichstein", "slinky",    "slowpoke",    "quartic-lift",
                                               "quartic-lift-full"};
    return A;
}

bool binary_algorithm(const std::string& a) {
    return a == "sylvester" || a == "mixed" || a == "two-squares" || a == "quartic-six" || a == "quartic-two-fixed" ||
           a == "quartic-normalize";
}

std::string read_input(const std::string& text, std::istream& in) {
    if (text != "-") return text;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Form apply_backend(const Form& p, const Config& C) {
    switch (C.backend) {
        case Backend::Auto: return p;
        case Backend::Approx: return p.to_approx();
        case Backend::Exact: {
            if (p.is_exact()) return p;
            auto s = p.snapped();
            if (!s) throw Error(ErrorKind::Parse, "input has no exact rational reconstruction; drop --exact");
            return *s;
        }
    }
    return p;
}

std::vector<LinearForm> parse_linear_list(const std::string& text, int n) {
    std::vector<LinearForm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(LinearForm::from_form(parse_form(item, n, 1)));
    return out;
}

// random integer change of variables with determinant 1 and nonzero off-diagonal factors
std::pair<Matrix, Matrix> shear(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<int> U(1, 3), S(0, 1);
    auto draw = [&] { return S(g) ? U(g) : -U(g); };
    Matrix Lo = Matrix::identity(n), Up = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) Lo(i, j) = draw();
            if (i < j) Up(i, j) = draw();
        }
    Matrix T = Lo * Up;
    return {T, *inverse(T)};
}

Decomposition pull_back(const Decomposition& D, const Matrix& Tinv) {
    Decomposition E = D;
    for (auto& t : E.terms) t.base = t.base.substitute(Tinv);
    if (E.residual) E.residual = E.residual->substitute(Tinv);
    return E;
}

std::vector<Decomposition> decompose(const std::string& algo, const Form& p, const std::string& fixed,
                                     const std::string& l1, const std::string& l2, double eps) {
    if (algo == "sylvester") return {sylvester_decompose(p, eps)};
    if (algo == "mixed") {
        MixedSpec spec;
        spec.fixed = parse_linear_list(fixed, 2);
        int r2 = p.d() + 1 - static_cast<int>(spec.fixed.size());
        if (r2 < 0 || r2 % 2 != 0)
            throw Error(ErrorKind::BadShape, "mixed needs d + 1 - (number of --fixed forms) to be even and non-negative");
        spec.r = r2 / 2;
        return {mixed_decompose(p, spec, eps)};
    }
    if (algo == "two-squares") return two_squares_all(p, eps);
    if (algo == "quartic-six") return quartic_six_reps_of(p, eps);
    if (algo == "quartic-two-fixed") {
        if (l1.empty() || l2.empty()) throw Error(ErrorKind::BadShape, "quartic-two-fixed needs --l1 and --l2");
        return quartic_two_fixed(p, LinearForm::from_form(parse_form(l1, 2, 1)), LinearForm::from_form(parse_form(l2, 2, 1)),
                                 eps);
    }
    if (algo == "uppertri") {
        TriangularSquares T = uppertri(p, eps);
        Decomposition D;
        D.theorem = "uppertri";
        for (const auto& r : T.rows)
            if (!r.is_zero(0.0)) D.terms.push_back({Scalar(1), r.form(), 2});
        return {D};
    }
    if (algo == "reichstein") return {reichstein_full(p, eps)};
    if (algo == "slinky") return {slinky(p, eps)};
    if (algo == "slowpoke") return {slowpoke(p, eps)};
    if (algo == "quartic-lift") return {quartic_lift(p, eps)};
    if (algo == "quartic-lift-full") return {quartic_lift_full(p, eps)};
    throw Error(ErrorKind::UnknownName, "unknown algorithm '" + algo + "'");
}

json stages_json(const Decomposition& D) {
    json a = json::array();
    for (const auto& s : D.stages) a.push_back({{"stage", s.stage}, {"eliminated", s.eliminated}, {"terms", s.terms}});
    return a;
}

int cmd_decompose(const Config& C, const std::string& algo, const std::string& text, int n, const std::string& fixed,
                  const std::string& l1, const std::string& l2, bool do_shear, std::ostream& out, std::istream& in) {
    bool binary = binary_algorithm(algo);
    if (std::find(algorithms().begin(), algorithms().end(), algo) == algorithms().end())
        throw Error(ErrorKind::UnknownName, "unknown algorithm '" + algo + "'");
    Form p = apply_backend(parse_form(read_input(text, in), binary ? 2 : n, -1, binary ? 2 : 1), C);

    if (algo == "quartic-normalize") {
        QuarticNormal Q = quartic_normalize(p, C.eps);
        if (C.json) {
            out << json{{"lambda", scalar_to_json(Q.lambda)}, {"scale", scalar_to_json(Q.scale)},
                        {"transform", matrix_to_json(Q.transform)}}
                       .dump(2)
                << "\n";
        } else {
            out << "lambda = " << format_scalar(Q.lambda) << "\n"
                << "scale = " << format_scalar(Q.scale) << "\n"
                << "transform = [[" << format_scalar(Q.transform(0, 0)) << ", " << format_scalar(Q.transform(0, 1))
                << "], [" << format_scalar(Q.transform(1, 0)) << ", " << format_scalar(Q.transform(1, 1)) << "]]\n";
        }
        return kOk;
    }

    std::vector<Decomposition> Ds;
    if (do_shear) {
        auto [T, Tinv] = shear(p.n(), C.resolved_seed());
        for (const auto& D : decompose(algo, p.substitute(T), fixed, l1, l2, C.eps)) Ds.push_back(pull_back(D, Tinv));
    } else {
        Ds = decompose(algo, p, fixed, l1, l2, C.eps);
    }
    bool all_ok = true;
    for (const auto& D : Ds) all_ok = all_ok && D.reconstructs(p, std::sqrt(C.eps));
    if (C.json) {
        json a = json::array();
        for (const auto& D : Ds) {
            json j = decomposition_to_json(D);
            j["meta"]["stages"] = stages_json(D);
            j["meta"]["reconstructs"] = D.reconstructs(p, std::sqrt(C.eps));
            a.push_back(j);
        }
        json top = {{"algorithm", algo}, {"input", form_to_json(p)}};
        if (do_shear) top["shear_seed"] = C.resolved_seed();
        top["decompositions"] = a;
        out << top.dump(2) << "\n";
    } else {
        for (const auto& D : Ds) out << format_decomposition(D) << "\n";
    }
    return all_ok ? kOk : kInternal;
}

std::vector<Scalar> read_witness(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot open witness file " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    std::vector<Scalar> w;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const std::exception& e) {
            throw Error(ErrorKind::Parse, std::string("witness file is not valid JSON: ") + e.what());
        }
        for (const auto& v : j) {
            if (v.is_string())
                w.push_back(parse_scalar(v.get<std::string>()));
            else if (v.is_number_integer())
                w.push_back(Scalar(v.get<long long>()));
            else if (v.is_object())
                w.push_back(scalar_from_json(v));
            else
                throw Error(ErrorKind::Parse, "witness entries must be strings, integers or scalar objects");
        }
        return w;
    }
    std::string tok;
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!tok.empty()) w.push_back(parse_scalar(tok));
            tok.clear();
        } else {
            tok += ch;
        }
    }
    if (!tok.empty()) w.push_back(parse_scalar(tok));
    return w;
}

int cmd_certify(const Config& C, const std::string& name, const std::vector<std::string>& params,
                const std::string& witness_file, int trials, bool list, std::ostream& out) {
    if (list) {
        for (const auto& n : catalog_names()) out << n << "\n";
        return kOk;
    }
    if (name.empty()) throw Error(ErrorKind::BadShape, "certify needs a catalog name (see certify --list)");
    MapParams P;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Parse, "--param expects key=value, got '" + kv + "'");
        P[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    ParamMap map = build_map(name, P);
    std::optional<std::vector<Scalar>> w;
    if (!witness_file.empty()) w = read_witness(witness_file);
    std::uint64_t seed = C.resolved_seed();
    CertifyReport R = jacobian_certify(map, w, trials, seed);
    std::optional<HyperplaneResult> H;
    if (name == "hyperplane") {
        std::vector<Scalar> c;
        std::stringstream ss(P.at("c"));
        std::string item;
        while (std::getline(ss, item, ',')) c.push_back(parse_scalar(item));
        H = hyperplane_classify(c, seed, trials);
    }
    if (C.json) {
        json wj = json::array();
        for (const auto& s : R.witness) wj.push_back(scalar_to_json(s));
        json pj = json::object();
        for (const auto& [k, v] : P) pj[k] = v;
        json j = {{"map", name},       {"params", pj},       {"n", map.n},         {"d", map.d},
                  {"M", map.M},        {"verdict", verdict_name(R.verdict)}, {"rank", R.rank}, {"target", R.target},
                  {"seed", R.seed},    {"trials", R.trials}, {"witness", wj}};
        if (H) {
            json zp = json::array();
            for (const auto& s : H->zero_point) zp.push_back(scalar_to_json(s));
            j["hyperplane"] = {{"exceptional", H->exceptional}, {"epsilon", scalar_to_json(H->epsilon)}, {"zero_point", zp}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << verdict_name(R.verdict) << " (rank " << R.rank << "/" << R.target << ")\n";
        if (H && H->exceptional)
            out << "Exceptional (epsilon = " << format_scalar(H->epsilon) << ", zero point (" << format_scalar(H->zero_point[0])
                << ", " << format_scalar(H->zero_point[1]) << "))\n";
    }
    return R.verdict == Verdict::Certified ? kOk : kInconclusive;
}

std::string list_text(const std::vector<long>& v) {
    std::string s = "[";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" []") != std::string::npos) {
            try {
                out.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "expected a comma-separated list of integers, got '" + s + "'");
            }
        }
    return out;
}

mpz_class parse_big(const std::string& s, const char* what) {
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, std::string(what) + " must be an integer, got '" + s + "'");
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Canonical forms and Waring-type decompositions of polynomial forms", "canonform"};
    app.require_subcommand(1);
    app.fallthrough();
    Config C;
    std::uint64_t seed_value = 0;
    std::string backend = "auto";
    app.add_flag("--json", C.json, "Machine-readable output");
    auto* seed_opt = app.add_option("--seed", seed_value, "Random seed (falls back to CANONFORM_SEED, then 1)");
    app.add_option("--eps", C.eps, "Tolerance for approximate arithmetic")->check(CLI::PositiveNumber);
    app.add_option("--backend", backend, "auto, exact or approx")->check(CLI::IsMember({"auto", "exact", "approx"}));

    // decompose
    auto* dec = app.add_subcommand("decompose", "Decompose a form with one of the constructive algorithms");
    std::string algo, form_text, fixed, l1, l2;
    int nvars = -1;
    bool do_shear = false;
    dec->add_option("algo", algo, "sylvester, mixed, two-squares, quartic-six, quartic-two-fixed, quartic-normalize, "
                                  "uppertri, reichstein, slinky, slowpoke, quartic-lift, quartic-lift-full")
        ->required();
    dec->add_option("form", form_text, "Form text, or - to read standard input")->required();
    dec->add_option("--n", nvars, "Number of variables (default: inferred)");
    dec->add_option("--fixed", fixed, "Fixed linear forms for mixed, separated by ';'");
    dec->add_option("--l1", l1, "First fixed form for quartic-two-fixed");
    dec->add_option("--l2", l2, "Second fixed form for quartic-two-fixed");
    dec->add_flag("--shear", do_shear, "Apply a seeded random change of variables first and pull the result back");

    // certify
    auto* cert = app.add_subcommand("certify", "Jacobian full-rank certification of a catalog map");
    std::string map_name, witness_file;
    std::vector<std::string> params;
    int trials = 20;
    bool list = false;
    cert->add_option("name", map_name, "Catalog entry");
    cert->add_option("--param", params, "Shape parameter key=value (repeatable)");
    cert->add_option("--witness", witness_file, "File with a parameter point (JSON array or whitespace separated)");
    cert->add_option("--trials", trials, "Random witnesses to try")->check(CLI::NonNegativeNumber);
    cert->add_flag("--list", list, "List catalog entries");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Enumerate neat forms or obstruction sets");
    en->require_subcommand(1);
    auto* neat = en->add_subcommand("neat", "Neat canonical forms with r summands");
    int r = 2;
    neat->add_option("--r", r, "Number of summands")->required()->check(CLI::PositiveNumber);
    long neat_max_d = 0;
    neat->add_option("--max-d", neat_max_d, "Keep only degrees up to this bound (faster for large r)")
        ->check(CLI::PositiveNumber);
    auto* obs = en->add_subcommand("obstruction", "Members of A_d up to a bound");
    int od = 4;
    long omax = 100;
    obs->add_option("--d", od, "Degree")->required()->check(CLI::Range(2, 1000));
    obs->add_option("--max", omax, "Largest n to test")->check(CLI::PositiveNumber);

    // count
    auto* cnt = app.add_subcommand("count", "Counting functions");
    cnt->require_subcommand(1);
    auto* cs = cnt->add_subcommand("s", "s(d), the number of Sylvester-type neat forms of degree d");
    std::string sd;
    cs->add_option("--d", sd, "Degree")->required();
    auto* cS = cnt->add_subcommand("S", "S(N) = s(1) + ... + s(N)");
    std::string sN;
    cS->add_option("--N", sN, "Upper limit")->required();
    auto* cr = cnt->add_subcommand("reps", "Monte Carlo estimate of the number of representations");
    int rd = 4, rm = 0, rtrials = 200;
    std::string re;
    cr->add_option("--d", rd, "Degree")->required();
    cr->add_option("--e", re, "Exponent list, e.g. 2,1")->required();
    cr->add_option("--m", rm, "Number of fixed forms");
    cr->add_option("--trials", rtrials, "Newton starts")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify-examples", "Re-run the built-in worked examples and reference values");

    // Forms such as "-x^5+y^5" would otherwise be read as short options; a leading blank is harmless to the parser.
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        rev.push_back(it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h" ? " " + *it : *it);
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'canonform --help' for usage\n";
        return kUsage;
    }
    if (*seed_opt) C.seed = seed_value;
    C.backend = backend == "exact" ? Backend::Exact : backend == "approx" ? Backend::Approx : Backend::Auto;

    try {
        if (*dec) return cmd_decompose(C, algo, form_text, nvars, fixed, l1, l2, do_shear, out, in);
        if (*cert) return cmd_certify(C, map_name, params, witness_file, trials, list, out);
        if (*neat) {
            auto forms = neat_enumerate(r, neat_max_d);
            if (C.json) {
                json a = json::array();
                for (const auto& f : forms) a.push_back({{"d", f.d}, {"e", f.e}});
                out << a.dump(2) << "\n";
            } else {
                for (const auto& f : forms) out << "d=" << f.d << " e=" << list_text(f.e) << "\n";
            }
            return kOk;
        }
        if (*obs) {
            auto members = members_of_A(od, omax);
            if (C.json)
                out << json{{"d", od}, {"max", omax}, {"members", members}}.dump(2) << "\n";
            else
                out << list_text(members) << "\n";
            return kOk;
        }
        if (*cs) {
            long v = s_of_d(parse_big(sd, "--d"));
            if (C.json)
                out << json{{"d", sd}, {"s", v}}.dump(2) << "\n";
            else
                out << v << "\n";
            return kOk;
        }
        if (*cS) {
            mpz_class v = partial_sum_S(parse_big(sN, "--N"));
            if (C.json)
                out << json{{"N", sN}, {"S", v.get_str()}}.dump(2) << "\n";
            else
                out << v.get_str() << "\n";
            return kOk;
        }
        if (*cr) {
            std::uint64_t seed = C.resolved_seed();
            MonteCarloResult R = count_reps_monte_carlo(rd, parse_int_list(re), rm, rtrials, seed);
            if (C.json)
                out << json{{"estimate", true}, {"count", R.count}, {"converged", R.converged}, {"trials", R.trials},
                            {"seed", R.seed}}
                           .dump(2)
                    << "\n";
            else
                out << "ESTIMATE " << R.count << " (converged " << R.converged << "/" << R.trials << ", seed " << R.seed
                    << ")\n";
            return kOk;
        }
        if (*ver) {
            auto results = verify_examples();
            bool ok = true;
            json a = json::array();
            for (const auto& x : results) {
                ok = ok && (x.pass || !x.gating);
                if (C.json)
                    a.push_back({{"name", x.name}, {"pass", x.pass}, {"gating", x.gating}, {"detail", x.detail}});
                else
                    out << (x.pass ? "PASS " : x.gating ? "FAIL " : "MISS ") << x.name
                        << (x.detail.empty() ? "" : ": " + x.detail) << "\n";
            }
            if (C.json) out << a.dump(2) << "\n";
            return ok ? kOk : kInternal;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Parse:
            case ErrorKind::BadShape:
            case ErrorKind::UnknownName:
            case ErrorKind::ShapeMismatch:
            case ErrorKind::UnsupportedShape: return kUsage;
            default: return kInconclusive;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "error: no command given\n";
    return kUsage;
}

}  // namespace canonform::cli
