#include "tangokv/report.hpp"

#include <fstream>
#include <sstream>

namespace tangokv {

using nlohmann::json;

CurveSpec parse_curve_spec_text(const std::string& text) {
    CurveSpec spec;
    bool saw_family = false, saw_p = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw;
        auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = strip(s);
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value', got '" +
                             strip(raw) + "'");
        std::string key = strip(s.substr(0, colon));
        std::string val = strip(s.substr(colon + 1));
        if (val.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        auto as_long = [&](const std::string& what) {
            try {
                size_t used = 0;
                long v = std::stol(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
                return v;
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": '" + what +
                                 "' must be an integer, got '" + val + "'");
            }
        };
        if (key == "family") {
            spec.family = val;
            saw_family = true;
        } else if (key == "p") {
            spec.p = as_long("p");
            saw_p = true;
        } else if (key == "h") {
            spec.h = as_long("h");
        } else if (key == "budget") {
            spec.budget = (int)as_long("budget");
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_family) throw ParseError("curve spec is missing 'family'");
    if (!saw_p) throw ParseError("curve spec is missing 'p'");
    return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve spec '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_spec_text(ss.str());
}

CurveModel curve_from_spec(const CurveSpec& spec) {
    auto fam = family_from_name(spec.family);
    if (!fam) throw ParseError("unknown family '" + spec.family + "'");
    bool needs_h = *fam == Family::HyperellipticOdd || *fam == Family::Superelliptic;
    if (needs_h && !spec.h)
        throw ParseError("family '" + spec.family + "' needs 'h'");
    return CurveModel::make(*fam, spec.p, spec.h.value_or(0));
}

json to_json(const CurveSpec& spec) {
    json j{{"family", spec.family}, {"p", spec.p}};
    if (spec.h) j["h"] = *spec.h;
    if (spec.budget) j["budget"] = *spec.budget;
    return j;
}

static json divisor_json(const std::optional<Divisor>& d) {
    if (!d) return nullptr;
    return d->str();
}

json to_json(const TangoReport& r) {
    json j;
    j["curve"] = r.curve_id;
    j["p"] = r.p;
    j["genus"] = r.genus;
    j["n_lower"] = r.n_lower;
    j["n_upper"] = r.n_upper;
    j["exact"] = r.exact;
    j["witness"] = r.witness ? json(r.witness->label) : json(nullptr);
    j["witness_differential"] = divisor_json(r.witness_differential);
    j["base_divisor"] = divisor_json(r.base_divisor);
    j["is_tango"] = r.is_tango;
    j["is_integral_type"] = r.is_integral_type;
    j["is_raynaud_tango"] = r.is_raynaud_tango;
    j["classified_from_lower_bound_only"] = r.classified_from_lower_bound_only;
    return j;
}

TangoReport tango_report_from_json(const json& j) {
    TangoReport r;
    r.curve_id = j.at("curve").get<std::string>();
    r.p = j.at("p").get<long>();
    r.genus = j.at("genus").get<long>();
    r.n_lower = j.at("n_lower").get<long>();
    r.n_upper = j.at("n_upper").get<long>();
    r.exact = j.at("exact").get<bool>();
    r.is_tango = j.at("is_tango").get<bool>();
    r.is_integral_type = j.at("is_integral_type").get<bool>();
    r.is_raynaud_tango = j.at("is_raynaud_tango").get<bool>();
    r.classified_from_lower_bound_only = j.at("classified_from_lower_bound_only").get<bool>();
    return r;
}

json to_json(const CheckLine& c) {
    return json{{"name", c.name}, {"detail", c.detail}, {"pass", c.pass}};
}

json to_json(const KVCertificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks) checks.push_back(to_json(ch));
    json j;
    j["curve"] = c.curve_id;
    j["p"] = c.p;
    j["c"] = c.c.str();
    j["q"] = c.q;
    j["genus"] = c.genus;
    j["deg_L"] = c.deg_l;
    j["base_divisor"] = c.base_divisor_text;
    j["classes"] = json{{"Cprime", c.Cprime.str()},
                        {"B", c.Bclass.str()},
                        {"D", c.Dclass.str()},
                        {"H", c.Hclass.str()},
                        {"K_X", c.KX.str()}};
    j["checks"] = checks;
    j["h1_lower_bound"] = c.h1_lower_bound;
    j["oracle_h1"] = c.oracle_h1 ? json(*c.oracle_h1) : json(nullptr);
    j["all_pass"] = c.all_pass();
    return j;
}

KVCertificate certificate_from_json(const json& j) {
    KVCertificate c;
    c.curve_id = j.at("curve").get<std::string>();
    c.p = j.at("p").get<long>();
    c.c = Rat::parse(j.at("c").get<std::string>());
    c.q = j.at("q").get<long>();
    c.genus = j.at("genus").get<long>();
    c.deg_l = j.at("deg_L").get<long>();
    c.base_divisor_text = j.at("base_divisor").get<std::string>();
    for (const auto& ch : j.at("checks"))
        c.checks.push_back(CheckLine{ch.at("name").get<std::string>(),
                                     ch.at("detail").get<std::string>(),
                                     ch.at("pass").get<bool>()});
    c.h1_lower_bound = j.at("h1_lower_bound").get<long>();
    if (!j.at("oracle_h1").is_null()) c.oracle_h1 = j.at("oracle_h1").get<long>();
    return c;
}

json to_json(const Verdict& v) {
    json j;
    j["kind"] = v.kind == VerdictKind::VanishingGuaranteed ? "VanishingGuaranteed"
                                                           : "PossibleCounterexample";
    j["reason"] = v.reason ? json(vanish_reason_name(*v.reason)) : json(nullptr);
    j["hypothesis"] = v.hypothesis ? json(hypothesis_name(*v.hypothesis)) : json(nullptr);
    j["trace"] = v.trace;
    return j;
}

json RunReport::to_json() const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["timing_ms"] = timing_ms;
    j["seed"] = seed;
    return j;
}

} // namespace tangokv
