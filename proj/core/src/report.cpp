#include "bispec/report.hpp"

#include <json.hpp>

#include <sstream>

namespace bispec {

std::string Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["status"] = status;
    nlohmann::json res = nlohmann::json::array();
    for (const auto& [k, v] : residuals) res.push_back({{"entry", k}, {"value", v}});
    j["residuals"] = res;
    j["dims"] = dims;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& e : basis)
        b.push_back({{"pretty", e.pretty}, {"coeffs", e.coeffs}});
    j["basis"] = b;
    j["bounds_used"] = bounds_used;
    if (!notes.empty()) j["notes"] = notes;
    j["ms"] = ms;
    return j.dump();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << command << ": " << status << "\n";
    if (!residuals.empty()) {
        os << "nonzero residuals:\n";
        for (const auto& [k, v] : residuals)
            os << "  " << k << " = " << v << "\n";
    }
    for (const auto& [k, v] : dims) os << k << " = " << v << "\n";
    if (!bounds_used.empty()) {
        os << "bounds used:";
        for (const auto& [k, v] : bounds_used) os << " " << k << "=" << v;
        os << "\n";
    }
    for (const auto& e : basis) os << "  basis: " << e.pretty << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    os << "elapsed ms: " << ms << "\n";
    return os.str();
}

}  // namespace bispec
