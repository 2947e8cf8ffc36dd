// Command-line front end: Tango invariants of explicit curves, vanishing
// counterexample certificates, and the named verification suites, all
// reported as versioned JSON.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tangokv/report.hpp"
#include "tangokv/suites.hpp"

using namespace tangokv;

namespace {

// exit codes: 0 pass, 1 usage/parse, 2 non-exact under --require-exact,
// 3 precondition violations
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotExact = 2;
constexpr int kExitPrecondition = 3;

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const RunReport& report, const std::string& out_path) {
    std::string text = report.to_json().dump(2);
    if (out_path.empty()) {
        std::cout << text << std::endl;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << text << std::endl;
    }
}

int cmd_tango(const std::string& spec_path, int budget_flag, bool require_exact,
              std::uint64_t seed, const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    CurveSpec spec = load_curve_spec(spec_path);
    CurveModel curve = curve_from_spec(spec);
    int budget = budget_flag > 0 ? budget_flag : spec.budget.value_or(500);
    TangoReport tr = tango_search(curve, budget);

    RunReport rep;
    rep.command = "tango";
    rep.inputs = to_json(spec);
    rep.inputs["budget"] = budget;
    rep.results = to_json(tr);
    rep.seed = seed;
    rep.timing_ms = elapsed_ms(start);
    emit(rep, out_path);
    if (require_exact && !tr.exact) return kExitNotExact;
    return kExitOk;
}

int cmd_construct(const std::string& spec_path, const std::string& c_flag, bool preset,
                  std::uint64_t seed, const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    CurveSpec spec = load_curve_spec(spec_path);
    CurveModel curve = curve_from_spec(spec);
    TangoReport tr = tango_search(curve, spec.budget.value_or(500));
    Rat c;
    long q_expected = -1;
    if (preset) {
        auto pq = preset_for(curve.p());
        c = pq.first;
        q_expected = pq.second;
    } else {
        c = Rat::parse(c_flag);
    }
    KVCertificate cert = certify_counterexample(curve, tr, c);

    RunReport rep;
    rep.command = "construct";
    rep.inputs = to_json(spec);
    rep.inputs["c"] = c.str();
    rep.inputs["preset"] = preset;
    rep.results = to_json(cert);
    if (q_expected >= 0) rep.results["preset_q"] = q_expected;
    rep.seed = seed;
    rep.timing_ms = elapsed_ms(start);
    emit(rep, out_path);
    return cert.all_pass() ? kExitOk : kExitPrecondition;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult res = run_named_suite(suite, seed);

    nlohmann::json lines = nlohmann::json::array();
    for (const auto& ln : res.lines) {
        std::cerr << (ln.pass ? "PASS  " : "FAIL  ") << ln.name
                  << (ln.detail.empty() ? "" : "  [" + ln.detail + "]") << "\n";
        lines.push_back({{"name", ln.name}, {"pass", ln.pass}, {"detail", ln.detail}});
    }
    RunReport rep;
    rep.command = "verify";
    rep.inputs = {{"suite", suite}};
    rep.results = {{"suite", res.suite}, {"all_pass", res.all_pass()}, {"lines", lines}};
    rep.seed = seed;
    rep.timing_ms = elapsed_ms(start);
    emit(rep, out_path);
    return res.all_pass() ? kExitOk : kExitPrecondition;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Tango-invariant and Kawamata-Viehweg vanishing toolkit"};
    app.require_subcommand(1);

    std::string spec_path, out_path, c_flag, suite;
    int budget = 0;
    bool require_exact = false, preset = false;
    std::uint64_t seed = 0;

    auto* tango = app.add_subcommand("tango", "compute the Tango invariant of a curve spec");
    tango->add_option("spec", spec_path, "curve spec file")->required();
    tango->add_option("--budget", budget, "candidate budget (overrides the spec file)");
    tango->add_flag("--require-exact", require_exact, "exit 2 when the interval is not exact");
    tango->add_option("--seed", seed, "seed echoed into the report");
    tango->add_option("--out", out_path, "write the JSON report to a file");

    auto* construct = app.add_subcommand("construct", "build and check a vanishing counterexample");
    construct->add_option("spec", spec_path, "curve spec file")->required();
    auto* copt = construct->add_option("--c", c_flag, "boundary coefficient as num/den");
    auto* popt = construct->add_flag("--preset", preset, "use the standard (c, q) for this p");
    copt->excludes(popt);
    construct->add_option("--seed", seed, "seed echoed into the report");
    construct->add_option("--out", out_path, "write the JSON report to a file");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify
        ->add_option("--suite", suite,
                     "examples24 | cor34 | thm35 | classifier-grid | kodaira-grid")
        ->required();
    verify->add_option("--seed", seed, "seed for randomized sweeps");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tango->parsed()) return cmd_tango(spec_path, budget, require_exact, seed, out_path);
        if (construct->parsed()) {
            if (!preset && c_flag.empty()) {
                std::cerr << "construct needs --c or --preset\n";
                return kExitUsage;
            }
            return cmd_construct(spec_path, c_flag, preset, seed, out_path);
        }
        if (verify->parsed()) return cmd_verify(suite, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotTango& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
