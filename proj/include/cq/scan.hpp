#pragma once
// The (type x radiator x center) scanner: multi-sample confirmation, claim
// reduction, and ancestor suppression. Serial and OpenMP execution paths
// produce identical results.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cq/centers.hpp"
#include "cq/classify.hpp"
#include "cq/quad.hpp"
#include "cq/radiators.hpp"

namespace cq {

struct ScanConfig {
    std::vector<QuadType> types;
    std::vector<RadiatorKind> radiators;
    std::vector<int> centers;
    int samples = 10;       // >= 3
    std::uint64_t seed = 1;
    Tolerance tol;
    int jobs = 1;           // 1 = serial reference path, 0 = all hardware threads
};

struct ScanRecord {
    QuadType type;
    RadiatorKind radiator;
    int center = 0;
    // confirmed claims per ordering, post most_specific and ancestor suppression
    std::array<std::set<Shape>, kNumOrderings> confirmed;
    std::set<Extra> extras;
    int samples_used = 0;
    int degenerate = 0;
    double max_residual = 0.0;
    bool dropped = false;  // more than half the samples degenerate

    bool empty() const;
};

// F,G,H,I = X_n of ABE, BCE, CDE, DAE; nullopt when a radial triangle is
// degenerate, the center is at infinity, or a formula fails to evaluate
std::optional<std::array<Point, 4>> run_pipeline(const CenterRegistry& reg,
                                                 const Quadrilateral& q, const Point& E, int n,
                                                 const Tolerance& tol = {});

std::vector<ScanRecord> scan(const CenterRegistry& reg, const ScanConfig& config);

std::string scan_to_csv(const std::vector<ScanRecord>& records);
std::string scan_to_json(const std::vector<ScanRecord>& records);
std::vector<ScanRecord> scan_from_json(const std::string& json);

}  // namespace cq
