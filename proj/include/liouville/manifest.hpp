#pragma once

#include "liouville/eval_config.hpp"
#include "liouville/kernels.hpp"
#include "liouville/quadrature.hpp"

#include <cstdint>
#include <string>

#include "json.hpp"

namespace liouville {

inline constexpr const char* kToolVersion = "1.0.0";

/// Provenance record embedded at the head of every report file.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::int64_t table_limit = 0;
    nlohmann::ordered_json config_snapshot = nlohmann::ordered_json::object();
    std::string tool_version = kToolVersion;
    std::string started;
    std::string finished;

    bool operator==(const RunManifest&) const = default;
};

nlohmann::ordered_json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json config_snapshot(const EvalConfig& eval, const KernelConfig& kernel,
                                       const QuadratureSpec& quadrature);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace liouville
