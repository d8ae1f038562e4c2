#pragma once
// Data-driven Kimberling center registry: index -> evaluator, plus the special
// set flags used by the verification suites.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cq/formula.hpp"
#include "cq/geometry.hpp"

namespace cq {

struct UnknownCenter : CqError {
    explicit UnknownCenter(int n) : CqError("unknown center X" + std::to_string(n)) {}
};
struct MissingCenters : CqError {
    std::vector<int> missing;
    explicit MissingCenters(std::vector<int> m);
};
struct RegistryError : CqError { using CqError::CqError; };

struct CenterPoint {
    bool at_infinity = false;
    Point p;            // finite position when !at_infinity
    Point direction;    // direction when at_infinity
};

struct CenterDefinition {
    int index = 0;
    FormulaPtr formula;          // null for pure builtins
    std::string builtin;         // builtin name, empty otherwise
    bool on_circumcircle = false;
    bool set_a = false;          // coincides with apex on isosceles triangles
    bool set_m = false;          // coincides with base midpoint
    bool set_t = false;          // coincides with apex antipode
    std::optional<double> euler_t;  // Euler-line parameter (Shinagawa-constant family)
};

class CenterRegistry {
public:
    // parses `n;formula;flags` lines; validates each euler:t against the
    // formula when both are present
    static CenterRegistry from_text(const std::string& text);
    static const CenterRegistry& builtin_default();

    bool contains(int n) const { return defs_.count(n) != 0; }
    const CenterDefinition& def(int n) const;
    std::vector<int> indices() const;
    std::vector<int> with_flag(bool CenterDefinition::*flag) const;
    std::vector<int> euler_family() const;

    CenterPoint center(int n, const Triangle& T, const Tolerance& tol = {}) const;
    // finite position or DegenerateTriangle/eval error; throws CqError("at infinity")
    Point center_point(int n, const Triangle& T, const Tolerance& tol = {}) const;

    // the indices the spec obliges a registry to provide
    static const std::set<int>& required_registry();
    void validate_required() const;  // throws MissingCenters

private:
    std::map<int, CenterDefinition> defs_;
};

Point euler_line_point(const Triangle& T, double t, const Tolerance& tol = {});

// the embedded default registry (src/registry_data.cpp)
extern const char* const kDefaultRegistryText;

}  // namespace cq
