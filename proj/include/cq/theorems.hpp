#pragma once
// Regression catalog: every theorem and results-table row as an executable,
// seeded numeric check.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cq/centers.hpp"
#include "cq/classify.hpp"
#include "cq/quad.hpp"
#include "cq/radiators.hpp"

namespace cq {

enum class CenterFamily { None, SetM, SetT, AllRegistered };
enum class SpecialCheck { None, SubQuadCentroid, SubQuadSteiner, SubQuadPoncelet };

struct TheoremCase {
    std::string id;
    QuadType type = QuadType::General;
    RadiatorKind radiator = RadiatorKind::Arbitrary;
    std::vector<int> centers;           // explicit indices
    CenterFamily family = CenterFamily::None;  // additional flag-derived indices
    std::vector<Shape> expect;          // all must hold at `ordering`
    Ordering ordering = Ordering::FGHI;
    std::vector<Extra> extras;
    bool numeric_only = false;          // the paper marks these entries red
    SpecialCheck special = SpecialCheck::None;
};

struct TheoremResult {
    std::string id;
    bool pass = false;
    double max_residual = 0.0;
    int samples = 0;
    int degenerate = 0;
    std::string detail;  // first failure description
};

const std::vector<TheoremCase>& theorem_catalog();

TheoremResult verify_theorem(const CenterRegistry& reg, const TheoremCase& tc, int samples,
                             std::uint64_t seed, const Tolerance& tol = {});

std::vector<TheoremResult> verify_theorems(const CenterRegistry& reg,
                                           const std::vector<std::string>& ids,  // empty = all
                                           int samples, std::uint64_t seed,
                                           const Tolerance& tol = {});

}  // namespace cq
