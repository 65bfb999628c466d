#include "canonform/json_io.hpp"

#include "canonform/error.hpp"

namespace canonform {

static std::string d17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

static bool looks_decimal(const std::string& s) { return s.find_first_of(".eEn") != std::string::npos; }

static mpq_class parse_q(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational \"" + s + "\"");
    q.canonicalize();
    return q;
}

json scalar_to_json(const Scalar& s) {
    json j;
    if (s.is_exact()) {
        j["re"] = s.exact().re.get_str();
        j["im"] = s.exact().im.get_str();
    } else {
        cplx z = s.to_complex();
        j["re"] = d17(z.real());
        j["im"] = d17(z.imag());
        j["approx"] = true;
    }
    return j;
}

Scalar scalar_from_json(const json& j) {
    std::string re = j.at("re").get<std::string>();
    std::string im = j.contains("im") ? j.at("im").get<std::string>() : "0";
    bool approx = j.value("approx", false) || looks_decimal(re) || looks_decimal(im);
    if (approx) return Scalar(cplx(std::stod(re), std::stod(im)));
    return Scalar::gauss(parse_q(re), parse_q(im));
}

json form_to_json(const Form& p) {
    json j;
    j["n"] = p.n();
    j["d"] = p.d();
    json cs = json::array();
    for (const auto& [i, c] : p.terms()) {
        json e;
        e["idx"] = i;
        json v = scalar_to_json(p.coeff(i));
        e["re"] = v["re"];
        e["im"] = v["im"];
        if (v.contains("approx")) e["approx"] = true;
        cs.push_back(e);
    }
    j["coeffs"] = cs;
    return j;
}

Form form_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    std::vector<std::pair<MultiIndex, Scalar>> a;
    for (const auto& e : j.at("coeffs")) a.emplace_back(e.at("idx").get<MultiIndex>(), scalar_from_json(e));
    return Form::from_normalized(n, d, a);
}

json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < M.cols(); ++k) r.push_back(M(i, k).to_string());
        rows.push_back(r);
    }
    return rows;
}

json decomposition_to_json(const Decomposition& D) {
    json j;
    j["meta"] = {{"theorem", D.theorem}};
    if (!D.stages.empty()) {
        json st = json::array();
        for (const auto& s : D.stages) st.push_back({{"stage", s.stage}, {"eliminated", s.eliminated}, {"terms", s.terms}});
        j["meta"]["stages"] = st;
    }
    json ts = json::array();
    for (const auto& t : D.terms)
        ts.push_back({{"multiplier", scalar_to_json(t.multiplier)}, {"base", form_to_json(t.base)}, {"power", t.power}});
    j["terms"] = ts;
    j["residual"] = D.residual ? form_to_json(*D.residual) : json(nullptr);
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition D;
    if (j.contains("meta")) D.theorem = j["meta"].value("theorem", "");
    for (const auto& t : j.at("terms"))
        D.terms.push_back({scalar_from_json(t.at("multiplier")), form_from_json(t.at("base")), t.at("power").get<int>()});
    if (j.contains("residual") && !j["residual"].is_null()) D.residual = form_from_json(j["residual"]);
    return D;
}

}  // namespace canonform
