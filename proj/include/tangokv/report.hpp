#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tangokv/pathology.hpp"

namespace tangokv {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// One curve per file; UTF-8 "key: value" lines, '#' comments.
struct CurveSpec {
    std::string family;
    long p = 0;
    std::optional<long> h;
    std::optional<int> budget;
};

CurveSpec parse_curve_spec_text(const std::string& text);
CurveSpec load_curve_spec(const std::string& path);
CurveModel curve_from_spec(const CurveSpec& spec);

nlohmann::json to_json(const CurveSpec& spec);
nlohmann::json to_json(const TangoReport& r);
TangoReport tango_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const KVCertificate& c);
KVCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CheckLine& c);
nlohmann::json to_json(const Verdict& v);

/// Envelope for every CLI result: versioned schema, command echo, payload,
/// integer timing, seed. Deterministic for fixed inputs and seed (timing is
/// excluded from equality concerns by consumers).
struct RunReport {
    std::string command;
    nlohmann::json inputs;
    nlohmann::json results;
    long timing_ms = 0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

} // namespace tangokv
