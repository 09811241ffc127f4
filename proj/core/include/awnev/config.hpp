#pragma once

#include <string>

#include "awnev/rational.hpp"

namespace awnev {

enum class OutputFormat { json, csv, table };

// Session configuration. Defaults: s = 1/2 (q = 1/4), 2048 quadrature
// nodes, clustering tolerance 1e-8, trend slack 0.05.
struct Config {
    Rat s = Rat(1, 2);
    int theta_points = 2048;
    double cluster_tol = 1e-8;
    double quad_eps = 1e-12;
    double slack = 0.05;
    int relation_degree = 0;  // 0: derived from the curve degree
    OutputFormat format = OutputFormat::table;

    void validate() const;
};

// "key = value" lines; '#' starts a comment. Unknown keys are rejected.
Config config_from_file(const std::string& path, Config base = {});
// Path taken from the AWNEV_CONFIG environment variable when set.
Config config_from_env(Config base = {});

OutputFormat output_format_from_string(const std::string& name);

}  // namespace awnev
