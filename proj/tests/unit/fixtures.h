#pragma once

#include <complex>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fixtures {

/// One JSON object per line of tests/fixtures/<name>.
inline std::vector<nlohmann::json> load(const std::string& name)
{
    std::ifstream in(std::string(PPWELL_FIXTURE_DIR) + "/" + name);
    std::vector<nlohmann::json> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            out.push_back(nlohmann::json::parse(line));
        }
    }
    return out;
}

inline std::complex<double> cplx(const nlohmann::json& v)
{
    return {v.at(0).get<double>(), v.at(1).get<double>()};
}

inline double rel(std::complex<double> a, std::complex<double> b)
{
    const double s = std::abs(b);
    return s > 0.0 ? std::abs(a - b) / s : std::abs(a - b);
}

} // namespace fixtures
