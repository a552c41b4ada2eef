#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teich/errors.hpp"
#include "teich/family.hpp"
#include "teich/mapclass.hpp"
#include "teich/report.hpp"
#include "teich/torus.hpp"

namespace cli {

// exit codes: 0 ok, 1 validation failure, 2 bad input/usage
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

inline int exit_code_for(const teich::Error& e) {
    return e.kind() == teich::ErrorKind::Assembly ? kExitValidation : kExitUsage;
}

struct OutputSink {
    std::string path; // empty = stdout
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) teich::raise(teich::ErrorKind::BadInput, "cannot open output file " + path);
        }
        return *file;
    }
    std::unique_ptr<std::ofstream> file;
};

// --config <file>: a JSON object whose keys mirror the long flag names.
// Values from the file fill any flag not given on the command line.
class ConfigDefaults {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) teich::raise(teich::ErrorKind::BadInput, "cannot open config " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            json_ = nlohmann::json::parse(buf.str());
        } catch (const nlohmann::json::parse_error& e) {
            teich::raise(teich::ErrorKind::BadInput, std::string("config JSON: ") + e.what());
        }
        if (!json_.is_object()) teich::raise(teich::ErrorKind::BadInput, "config must be a JSON object");
    }

    template <typename T>
    void fill(const CLI::App& app, const std::string& flag, T& var) const {
        if (json_.is_null() || app.count("--" + flag) > 0) return;
        auto it = json_.find(flag);
        if (it == json_.end()) return;
        try {
            var = it->get<T>();
        } catch (const nlohmann::json::exception&) {
            teich::raise(teich::ErrorKind::BadInput, "config key '" + flag + "' has the wrong type");
        }
    }

private:
    nlohmann::json json_;
};

// attaches the standard --config/--out/--format trio
struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";

    void attach(CLI::App* app, bool with_format = true) {
        app->add_option("--config", config_path, "JSON file mirroring the flags");
        app->add_option("--out", out_path, "write the report to a file instead of stdout");
        if (with_format)
            app->add_option("--format", format, "csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
    }

    ConfigDefaults defaults(const CLI::App& app) const {
        ConfigDefaults d;
        if (!config_path.empty()) d.load(config_path);
        (void)app;
        return d;
    }
};

inline std::vector<double> parse_levels(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            teich::raise(teich::ErrorKind::BadInput, "bad level '" + item + "' in '" + spec + "'");
        }
    }
    if (out.empty()) teich::raise(teich::ErrorKind::BadInput, "empty level list");
    return out;
}

// family mini-language: "farey:N", "iter:p/q:K", "arcs:N", unions with '+'.
// iter needs the surrounding command's --map.
teich::Family parse_family(const std::string& spec, const teich::MappingClass* map);

inline std::string fmt(double v) { return teich::format_number(v); }

// doubles destined for JSON go through the same 12-digit rounding
inline double j12(double v) { return std::stod(teich::format_number(v)); }

std::string read_file(const std::string& path);

} // namespace cli

// subcommand registrars
void register_geometry_commands(CLI::App& app, int& rc);
void register_surface_commands(CLI::App& app, int& rc);
void register_sweep_commands(CLI::App& app, int& rc);
void register_mcg_commands(CLI::App& app, int& rc);
