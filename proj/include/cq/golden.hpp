#pragma once
// The published results tables (Sections 4-8) as an embedded expectation
// resource, plus the three-way scan diff.

#include <string>
#include <vector>

#include "cq/centers.hpp"
#include "cq/scan.hpp"

namespace cq {

struct GoldenRow {
    QuadType type;
    RadiatorKind radiator;
    std::vector<Shape> shapes;          // the row's shape (conjunction when composite)
    Ordering ordering = Ordering::FGHI;
    std::vector<int> centers;           // explicit indices
    CenterFamily family = CenterFamily::None;
    std::vector<int> numeric_only;      // centers the paper colored red
    bool family_numeric_only = false;
};

const std::vector<GoldenRow>& golden_rows();

enum class DiffStatus { Confirmed, Missing, NotScanned };

struct DiffEntry {
    const GoldenRow* row;
    int center;
    DiffStatus status;
    bool numeric_only;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    std::vector<const ScanRecord*> extras;  // scan found, tables silent (informational)
    int confirmed = 0, missing = 0, not_scanned = 0;
};

DiffReport golden_table_diff(const CenterRegistry& reg, const std::vector<ScanRecord>& records);

std::string diff_to_text(const DiffReport& report);

}  // namespace cq
