#include "liouville/cli.hpp"

#include "liouville/arith_table.hpp"
#include "liouville/errors.hpp"
#include "liouville/kernels.hpp"
#include "liouville/manifest.hpp"
#include "liouville/special.hpp"
#include "liouville/verification.hpp"
#include "liouville/zeta_family.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace liouville {

namespace {

namespace fs = std::filesystem;

constexpr std::int64_t kDefaultLimit = 2'000'001;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double_field(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("bad number '" + s + "' in CSV");
    return v;
}

const char* const kCsvHeader = "check_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass";

std::string render(const std::vector<VerificationReport>& reports, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << kCsvHeader << '\n';
        for (const auto& r : reports) {
            os << r.check_id << ',' << csv_quote(r.inputs.dump()) << ',' << format_double(r.lhs.real()) << ','
               << format_double(r.lhs.imag()) << ',' << format_double(r.rhs.real()) << ','
               << format_double(r.rhs.imag()) << ',' << format_double(r.abs_err) << ','
               << format_double(r.rel_err) << ',' << (r.pass ? "true" : "false") << '\n';
        }
    } else {
        for (const auto& r : reports) os << to_json(r).dump() << '\n';
    }
    return os.str();
}

std::vector<Complex> parse_grid(const std::string& text) {
    std::vector<Complex> grid;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) throw UsageError("empty entry in --grid");
        grid.push_back(parse_complex(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return grid;
}

ArithTable obtain_table(std::int64_t limit, const std::string& cache_dir, std::ostream& err) {
    if (cache_dir.empty()) return ArithTable::build(limit);
    const fs::path path = fs::path(cache_dir) / ("arith_" + std::to_string(limit) + ".bin");
    if (fs::exists(path)) {
        try {
            return ArithTable::load(path);
        } catch (const TableFormatError& e) {
            err << "warning: rebuilding unreadable cache " << path.string() << ": " << e.what() << '\n';
        }
    }
    ArithTable table = ArithTable::build(limit);
    fs::create_directories(path.parent_path());
    table.save(path);
    return table;
}

KernelConfig kernel_config_for(std::int64_t limit) {
    KernelConfig config;
    const std::int64_t fit = (limit - 1) / 2;
    if (fit < 1) throw UsageError("--limit must be at least 3 for kernel evaluations");
    config.n_terms_N = std::min(config.n_terms_N, fit);
    config.n_terms_M = std::min(config.n_terms_M, fit);
    return config;
}

Complex evaluate_family(const std::string& name, Complex s, AlphaMode mode) {
    if (name == "zeta") return zeta(s);
    if (name == "zeta_a") return zeta_a(s);
    if (name == "zeta_imp") return zeta_imp(s);
    if (name == "zeta_lambda") return zeta_lambda(s);
    if (name == "zeta_mu") return zeta_mu(s);
    if (name == "zeta_alpha") return zeta_alpha(s, mode);
    if (name == "zeta_beta") return zeta_beta(s);
    if (name == "zeta_nu") return zeta_nu(s);
    if (name == "gamma") return complex_gamma(s);
    throw UsageError("unknown function " + name);
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<VerificationReport> read_reports(const fs::path& path, std::optional<RunManifest>& manifest) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path.string());
    std::vector<VerificationReport> reports;
    std::string line;
    bool csv = path.extension() == ".csv";
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("# manifest: ", 0) == 0) {
            csv = true;
            manifest = manifest_from_json(Json::parse(line.substr(12)));
            first = false;
            continue;
        }
        if (line == kCsvHeader) {
            csv = true;
            first = false;
            continue;
        }
        first = false;
        if (csv) {
            const auto f = split_csv_line(line);
            if (f.size() != 9) throw UsageError("malformed CSV row: " + line);
            VerificationReport r;
            r.check_id = f[0];
            r.inputs = Json::parse(f[1]);
            r.lhs = {parse_double_field(f[2]), parse_double_field(f[3])};
            r.rhs = {parse_double_field(f[4]), parse_double_field(f[5])};
            r.abs_err = parse_double_field(f[6]);
            r.rel_err = parse_double_field(f[7]);
            r.pass = f[8] == "true";
            reports.push_back(std::move(r));
        } else {
            const Json j = Json::parse(line);
            if (j.contains("manifest")) {
                manifest = manifest_from_json(j.at("manifest"));
                continue;
            }
            reports.push_back(report_from_json(j));
        }
    }
    return reports;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic tables, zeta-family evaluators, kernels and numerical verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::int64_t limit = kDefaultLimit;
    std::string cache_dir;
    std::string format = "jsonl";
    auto add_table_options = [&](CLI::App* cmd) {
        cmd->add_option("--limit", limit, "Table covers 1..limit")
            ->envname("LIOUVILLE_LIMIT")
            ->check(CLI::Range(std::int64_t{1}, std::int64_t{10'000'000}));
        cmd->add_option("--cache-dir", cache_dir, "Directory for cached tables")->envname("LIOUVILLE_CACHE_DIR");
    };
    auto add_format = [&](CLI::App* cmd) {
        return cmd->add_option("--format", format, "Output format")
            ->envname("LIOUVILLE_FORMAT")
            ->check(CLI::IsMember({"jsonl", "csv"}));
    };

    auto* sieve = app.add_subcommand("sieve", "Build the arithmetic table, optionally caching it");
    add_table_options(sieve);

    std::string function;
    std::string s_text;
    std::string alpha_mode = "definition";
    auto* eval = app.add_subcommand("eval", "Evaluate a zeta-family member at complex s");
    eval->add_option("function", function, "zeta-family member")
        ->required()
        ->check(CLI::IsMember({"zeta", "zeta_a", "zeta_imp", "zeta_lambda", "zeta_mu", "zeta_alpha", "zeta_beta",
                               "zeta_nu", "gamma"}));
    eval->add_option("--s", s_text, "Argument, written a, a+bi or a-bi")->required();
    eval->add_option("--alpha-mode", alpha_mode, "zeta_alpha route")
        ->check(CLI::IsMember({"definition", "lambda_relation"}));
    CLI::Option* eval_format = add_format(eval);

    std::string kernel_name;
    std::string z_text;
    std::string form = "half_shifted";
    std::int64_t terms_n = 0, terms_m = 0;
    int series_order = 30;
    double abel_tol = 1e-8;
    auto* kernel = app.add_subcommand("kernel", "Evaluate N, M, M', the N power series or the Fermi kernel at z");
    kernel->add_option("kernel", kernel_name, "Kernel")
        ->required()
        ->check(CLI::IsMember({"N", "M", "Mprime", "Nseries", "fermi"}));
    kernel->add_option("--z", z_text, "Argument, written a, a+bi or a-bi")->required();
    kernel->add_option("--form", form, "Form of M")->check(CLI::IsMember({"half_shifted", "plain"}));
    kernel->add_option("--terms-N", terms_n, "Terms of N (default: as many as the table allows, at most 10^6)");
    kernel->add_option("--terms-M", terms_m, "Terms of M (default: as many as the table allows, at most 10^6)");
    kernel->add_option("--order", series_order, "Power-series order for Nseries")->check(CLI::Range(1, 60));
    kernel->add_option("--abel-tol", abel_tol, "Remainder target for M and M'");
    add_table_options(kernel);
    CLI::Option* kernel_format = add_format(kernel);

    std::string group;
    bool list = false;
    double tol = 0.0;
    std::string grid_text;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "Run a verification group");
    verify->add_option("group", group, "theorem1 identity theorem2 functional decay bounds residues calibration all");
    verify->add_flag("--list", list, "List groups and their check ids");
    verify->add_option("--tol", tol, "Override the pass tolerance of theorem2, identity and functional")
        ->envname("LIOUVILLE_TOL");
    verify->add_option("--grid", grid_text, "Comma-separated complex points replacing the default grid");
    verify->add_option("--out", out_path, "Also write the reports, headed by a run manifest, to this file");
    add_table_options(verify);
    add_format(verify);

    std::string report_path;
    auto* report = app.add_subcommand("report", "Summarize a report file written with --out");
    report->add_option("file", report_path, "JSONL or CSV report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        err << app.help();
        return 2;
    }

    try {
        if (*sieve) {
            const ArithTable table = obtain_table(limit, cache_dir, err);
            Json j{{"limit", table.limit()}, {"S", table.nu_partial_sum(table.limit())}};
            if (!cache_dir.empty()) {
                j["cache"] = (fs::path(cache_dir) / ("arith_" + std::to_string(limit) + ".bin")).string();
            }
            out << j.dump() << '\n';
            return 0;
        }

        if (*eval) {
            const Complex s = parse_complex(s_text);
            const AlphaMode mode = alpha_mode == "definition" ? AlphaMode::definition : AlphaMode::lambda_relation;
            const Complex v = evaluate_family(function, s, mode);
            if (eval_format->count() > 0) {
                out << Json{{"function", function}, {"s", complex_json(s)}, {"value", complex_json(v)}}.dump() << '\n';
            } else {
                out << format_complex(v) << '\n';
            }
            return 0;
        }

        if (*kernel) {
            const Complex z = parse_complex(z_text);
            Json j{{"kernel", kernel_name}, {"z", complex_json(z)}};
            Complex value;
            if (kernel_name == "fermi") {
                value = fermi(z);
            } else if (kernel_name == "Nseries") {
                KernelConfig config;
                config.series_order_K = series_order;
                value = kernel_N_series(z, config);
            } else {
                KernelConfig config = kernel_config_for(limit);
                if (terms_n > 0) config.n_terms_N = terms_n;
                if (terms_m > 0) config.n_terms_M = terms_m;
                config.abel_tail_tol = abel_tol;
                const ArithTable table = obtain_table(limit, cache_dir, err);
                KernelValue k;
                if (kernel_name == "N") {
                    k = kernel_N(z, table, config);
                } else if (kernel_name == "M") {
                    k = kernel_M(z, table, config, form == "plain" ? MForm::plain : MForm::half_shifted);
                    j["form"] = form;
                } else {
                    if (z.imag() != 0.0) throw UsageError("Mprime takes a real argument");
                    k = kernel_M_prime(z.real(), table, config);
                }
                value = k.value;
                j["tail_bound"] = k.tail_bound;
                j["last_index"] = k.last_index;
            }
            if (kernel_format->count() > 0) {
                j["value"] = complex_json(value);
                out << j.dump() << '\n';
            } else {
                out << format_complex(value) << '\n';
            }
            return 0;
        }

        if (*verify) {
            if (list) {
                for (const auto& g : verification_groups()) {
                    out << g << ':';
                    for (const auto& id : check_ids(g)) out << ' ' << id;
                    out << '\n';
                }
                return 0;
            }
            if (group.empty()) throw UsageError("verify needs a group or --list");
            check_ids(group);
            RunManifest manifest;
            manifest.started = utc_timestamp();
            SuiteOptions options;
            options.kernel = kernel_config_for(limit);
            if (!grid_text.empty()) options.grid = parse_grid(grid_text);
            if (tol > 0.0) {
                options.tolerances.theorem2_rel = tol;
                options.tolerances.identity_abs = tol;
                options.tolerances.functional_rel = tol;
            } else if (verify->get_option("--tol")->count() > 0) {
                throw UsageError("--tol must be positive");
            }
            const ArithTable table = obtain_table(limit, cache_dir, err);
            const auto reports = run_suite(group, table, options);
            const std::string body = render(reports, format);
            out << body;
            if (!out_path.empty()) {
                manifest.finished = utc_timestamp();
                manifest.command = "verify " + group;
                manifest.table_limit = limit;
                manifest.parameters = Json{{"group", group}, {"format", format}, {"grid", grid_text}, {"tol", tol}};
                manifest.config_snapshot = config_snapshot(EvalConfig{}, options.kernel, options.quadrature);
                std::ofstream file(out_path);
                if (!file) throw UsageError("cannot write " + out_path);
                if (format == "csv") {
                    file << "# manifest: " << to_json(manifest).dump() << '\n';
                } else {
                    file << Json{{"manifest", to_json(manifest)}}.dump() << '\n';
                }
                file << body;
            }
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
            return ok ? 0 : 1;
        }

        if (*report) {
            std::optional<RunManifest> manifest;
            const auto reports = read_reports(report_path, manifest);
            if (manifest) {
                out << "command: " << manifest->command << "  limit: " << manifest->table_limit
                    << "  version: " << manifest->tool_version << "  started: " << manifest->started << '\n';
            }
            std::map<std::string, std::pair<int, int>> tally;
            for (const auto& r : reports) {
                auto& t = tally[r.check_id];
                ++t.first;
                if (!r.pass) ++t.second;
            }
            int failed = 0;
            for (const auto& [id, t] : tally) {
                out << (t.second == 0 ? "PASS " : "FAIL ") << id << "  " << t.first << " rows";
                if (t.second > 0) out << ", " << t.second << " failed";
                out << '\n';
                failed += t.second;
            }
            out << reports.size() << " rows, " << failed << " failed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace liouville
