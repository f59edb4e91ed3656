#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bispec {

// Machine-readable run summary. Exact values are carried as strings
// (integer-ratio form); no floating point anywhere.
struct Report {
    std::string command;
    std::string status;  // "verified", "failed", "equal", ...
    // (entry label, exact value) pairs for nonzero residuals; empty means
    // every checked identity came out exactly zero.
    std::vector<std::pair<std::string, std::string>> residuals;
    std::map<std::string, std::int64_t> dims;
    // Basis elements rendered both as coefficient lists and readable text.
    struct BasisElement {
        std::string pretty;
        std::vector<std::string> coeffs;
    };
    std::vector<BasisElement> basis;
    std::map<std::string, std::int64_t> bounds_used;
    std::vector<std::string> notes;
    std::int64_t ms = 0;

    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace bispec
