#include "liouville/manifest.hpp"

#include <chrono>
#include <ctime>

namespace liouville {

using Json = nlohmann::ordered_json;

Json to_json(const RunManifest& m) {
    return Json{{"command", m.command},
                {"parameters", m.parameters},
                {"table_limit", m.table_limit},
                {"config_snapshot", m.config_snapshot},
                {"tool_version", m.tool_version},
                {"started", m.started},
                {"finished", m.finished}};
}

RunManifest manifest_from_json(const Json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.table_limit = j.at("table_limit").get<std::int64_t>();
    m.config_snapshot = j.at("config_snapshot");
    m.tool_version = j.at("tool_version").get<std::string>();
    m.started = j.at("started").get<std::string>();
    m.finished = j.at("finished").get<std::string>();
    return m;
}

Json config_snapshot(const EvalConfig& eval, const KernelConfig& kernel, const QuadratureSpec& q) {
    return Json{
        {"eval",
         {{"series_terms", eval.series_terms},
          {"accel_order", eval.accel_order},
          {"target_rel_err", eval.target_rel_err},
          {"zero_threshold", eval.zero_threshold}}},
        {"kernel",
         {{"n_terms_N", kernel.n_terms_N},
          {"n_terms_M", kernel.n_terms_M},
          {"series_order_K", kernel.series_order_K},
          {"abel_tail_tol", kernel.abel_tail_tol}}},
        {"quadrature",
         {{"split_point", q.split_point},
          {"de_levels", q.de_levels},
          {"panel_growth", q.panel_growth},
          {"panel_nodes", q.panel_nodes},
          {"tail_stop_rel", q.tail_stop_rel},
          {"max_panels", q.max_panels}}},
    };
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace liouville
