#include "awnev/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "awnev/errors.hpp"

namespace awnev {

void Config::validate() const {
    if (!(s > 0 && s < 1)) throw DomainError("config: s must lie in (0, 1)");
    if (theta_points < 64) throw DomainError("config: theta_points must be >= 64");
    if (!(cluster_tol > 0)) throw DomainError("config: cluster_tol must be positive");
    if (!(quad_eps > 0)) throw DomainError("config: quad_eps must be positive");
    if (!(slack > 0 && slack < 1)) throw DomainError("config: slack must lie in (0, 1)");
    if (relation_degree < 0) throw DomainError("config: relation_degree must be >= 0");
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "table") return OutputFormat::table;
    throw DomainError("config: unknown output format '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config config_from_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: missing '=' on line " + std::to_string(lineno));
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key == "s") {
            base.s = rat_from_string(value);
        } else if (key == "theta_points") {
            base.theta_points = std::stoi(value);
        } else if (key == "cluster_tol") {
            base.cluster_tol = std::stod(value);
        } else if (key == "quad_eps") {
            base.quad_eps = std::stod(value);
        } else if (key == "slack") {
            base.slack = std::stod(value);
        } else if (key == "relation_degree") {
            base.relation_degree = std::stoi(value);
        } else if (key == "format") {
            base.format = output_format_from_string(value);
        } else {
            throw DomainError("config: unknown key '" + key + "' on line " +
                              std::to_string(lineno));
        }
    }
    base.validate();
    return base;
}

Config config_from_env(Config base) {
    const char* path = std::getenv("AWNEV_CONFIG");
    if (path == nullptr || *path == '\0') return base;
    return config_from_file(path, std::move(base));
}

}  // namespace awnev
