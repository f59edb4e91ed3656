#pragma once

#include <map>
#include <optional>

#include "bispec/expkernel.hpp"

namespace bispec {

// A parsed problem file: one optional field declaration plus named
// bindings. Names must be defined before use; dimension consistency is
// checked during parsing.
struct ProblemFile {
    enum class Kind { let_k, mat_k, op_k, fun_k };
    struct Binding {
        Kind kind;
        std::string name;
    };

    FieldPtr field;  // null: plain Q
    bool field_declared = false;
    std::vector<Binding> order;
    std::map<std::string, RatFunc> lets;
    std::map<std::string, MatRF> mats;
    std::map<std::string, DiffOp> ops;
    std::map<std::string, ExpKernel> funs;

    bool has(const std::string& name) const;
    // Pretty-print as parseable problem text.
    std::string print() const;

    bool operator==(const ProblemFile& o) const;
};

ProblemFile parse_problem(const std::string& text);

// Parse one scalar-valued expression (used for --den, --poles and other
// command-line fragments). The optional field supplies a generator name.
RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field = nullptr);

// Parse "p:nu,p:nu,..." pole specifications; each p is a constant scalar
// expression over the optional field.
std::vector<std::pair<Scalar, int>> parse_pole_spec(const std::string& text,
                                                    const FieldPtr& field);

// Parse a monic-able modulus like "a^2 - a + 1" into a NumberField.
FieldPtr parse_field_modulus(const std::string& text,
                             const std::string& generator = "a");

}  // namespace bispec
