#include "cq/golden.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cq {

namespace {

std::vector<GoldenRow> build_rows() {
    using S = Shape;
    using Q = QuadType;
    using R = RadiatorKind;
    std::vector<GoldenRow> v;

    // Section 4 (arbitrary radiator)
    v.push_back({Q::General, R::Arbitrary, {S::Parallelogram}, Ordering::FGHI, {2}});
    v.push_back({Q::Equidiagonal, R::Arbitrary, {S::Rhombus}, Ordering::FGHI, {2}});
    v.push_back({Q::Orthodiagonal, R::Arbitrary, {S::Rectangle}, Ordering::FGHI, {2}});
    v.push_back({Q::EquidiagonalOrthodiagonal, R::Arbitrary, {S::Square}, Ordering::FGHI, {2}});
    v.push_back({Q::Rectangle, R::Arbitrary, {S::Orthodiagonal}, Ordering::FGHI, {},
                 CenterFamily::None});
    v.back().centers = {};  // Shinagawa family, resolved from euler flags
    v.push_back({Q::Square, R::Arbitrary, {S::Square}, Ordering::FGHI, {2}});
    v.push_back({Q::Square, R::Arbitrary, {S::Cyclic}, Ordering::FGHI, {99, 925}});
    v.push_back({Q::Square, R::Arbitrary, {S::Equidiagonal, S::Orthodiagonal}, Ordering::FGHI,
                 {372, 373, 640}});

    // Section 5 (restricted lines; every center)
    v.push_back({Q::Kite, R::OnAxis, {S::IsoscelesTrapezoid}, Ordering::FGHI, {},
                 CenterFamily::AllRegistered});
    v.push_back({Q::IsoscelesTrapezoid, R::OnPerpBisector, {S::Kite}, Ordering::FGHI, {},
                 CenterFamily::AllRegistered});

    // Section 6 (vertex centroid)
    v.push_back({Q::Equidiagonal, R::VertexCentroid, {S::Orthodiagonal}, Ordering::FGHI, {591}});
    v.push_back({Q::EquidiagonalOrthodiagonal, R::VertexCentroid, {S::Parallelogram},
                 Ordering::FGHI, {491, 615}});

    // Section 7 (Steiner point)
    v.push_back({Q::Cyclic, R::SteinerPoint, {S::Parallelogram}, Ordering::FGHI,
                 {148, 149, 150, 290, 402, 620, 671, 903}, CenterFamily::SetM});
    v.push_back({Q::Cyclic, R::SteinerPoint, {S::Tangential}, Ordering::FGHI, {3, 399},
                 CenterFamily::SetT});
    v.push_back({Q::Orthodiagonal, R::SteinerPoint, {S::Cyclic}, Ordering::FGHI, {3}});
    v.push_back({Q::Orthodiagonal, R::SteinerPoint, {S::Trapezoid}, Ordering::FGIH, {4}});
    v.push_back({Q::EquidiagonalOrthodiagonal, R::SteinerPoint, {S::Orthodiagonal},
                 Ordering::FGHI, {486, 487, 642}});
    v.push_back({Q::Bicentric, R::SteinerPoint, {S::Cyclic}, Ordering::FGHI, {1, 165, 214}});
    // cyclic orthodiagonal: the printed rectangle row omits 290 (the theorem has it;
    // the scan reports it as an informational extra)
    v.push_back({Q::CyclicOrthodiagonal, R::SteinerPoint, {S::Rectangle}, Ordering::FGHI,
                 {2, 148, 149, 150, 402, 620, 671, 903}, CenterFamily::SetM});
    {
        GoldenRow r{Q::CyclicOrthodiagonal, R::SteinerPoint, {S::Bicentric}, Ordering::FGHI,
                    {3, 399}, CenterFamily::SetT};
        r.numeric_only = {399};
        r.family_numeric_only = true;  // the T-set entry is colored red in the table
        v.push_back(std::move(r));
    }
    v.push_back({Q::CyclicOrthodiagonal, R::SteinerPoint, {S::Equidiagonal}, Ordering::FGHI,
                 {13, 14, 616, 617, 618, 619}});
    v.push_back({Q::CyclicOrthodiagonal, R::SteinerPoint, {S::IsoscelesTrapezoid},
                 Ordering::FHGI, {154}});
    v.push_back({Q::CyclicOrthodiagonal, R::SteinerPoint, {S::Trapezoid}, Ordering::FHGI,
                 {26, 139, 155, 156, 157}});
    v.push_back({Q::EquidiagonalOrthodiagonalTrapezoid, R::SteinerPoint, {S::Square},
                 Ordering::FGHI, {2, 148, 149, 150, 290, 402, 620, 671, 903},
                 CenterFamily::SetM});
    v.push_back({Q::EquidiagonalOrthodiagonalTrapezoid, R::SteinerPoint,
                 {S::Kite, S::Equidiagonal}, Ordering::FGHI, {13, 14, 616, 617, 618}});
    v.push_back({Q::EquidiagonalOrthodiagonalTrapezoid, R::SteinerPoint, {S::RightKite},
                 Ordering::FGHI, {3, 399}, CenterFamily::SetT});
    v.push_back({Q::EquidiagonalKite, R::SteinerPoint, {S::Square}, Ordering::FGHI, {486, 642}});
    v.push_back({Q::EquidiagonalKite, R::SteinerPoint, {S::Rectangle}, Ordering::FGHI, {586}});

    // Section 8 (Poncelet point; the area-centroid section reports no new rows)
    v.push_back({Q::Hjelmslev, R::PonceletPoint, {S::Trapezoid}, Ordering::FGHI, {3, 69}});
    v.push_back({Q::Hjelmslev, R::PonceletPoint, {S::TangentialTrapezoid}, Ordering::FGHI, {4}});

    return v;
}

bool claim_implies_shape(const std::set<Shape>& claim, Shape s) {
    for (Shape c : claim)
        if (c == s || implied_shapes(c).count(s)) return true;
    return false;
}

std::vector<int> resolve_row_centers(const CenterRegistry& reg, const GoldenRow& row) {
    std::vector<int> out = row.centers;
    switch (row.family) {
        case CenterFamily::SetM:
            for (int n : reg.with_flag(&CenterDefinition::set_m)) out.push_back(n);
            break;
        case CenterFamily::SetT:
            for (int n : reg.with_flag(&CenterDefinition::set_t)) out.push_back(n);
            break;
        case CenterFamily::AllRegistered: out = reg.indices(); break;
        case CenterFamily::None: break;
    }
    if (row.family == CenterFamily::None && row.centers.empty() &&
        row.shapes == std::vector<Shape>{Shape::Orthodiagonal} && row.type == QuadType::Rectangle)
        out = reg.euler_family();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = build_rows();
    return rows;
}

DiffReport golden_table_diff(const CenterRegistry& reg, const std::vector<ScanRecord>& records) {
    DiffReport rep;
    std::map<std::tuple<int, int, int>, const ScanRecord*> index;
    for (const auto& r : records)
        index[{static_cast<int>(r.type), static_cast<int>(r.radiator), r.center}] = &r;

    // marks a record as explained by some golden row
    std::map<const ScanRecord*, bool> used;

    for (const GoldenRow& row : golden_rows()) {
        const bool fam_red = row.family_numeric_only && row.family != CenterFamily::None;
        const std::vector<int> explicit_set = row.centers;
        for (int n : resolve_row_centers(reg, row)) {
            DiffEntry e;
            e.row = &row;
            e.center = n;
            e.numeric_only =
                std::find(row.numeric_only.begin(), row.numeric_only.end(), n) !=
                    row.numeric_only.end() ||
                (fam_red && std::find(explicit_set.begin(), explicit_set.end(), n) ==
                                explicit_set.end());
            auto it = index.find({static_cast<int>(row.type), static_cast<int>(row.radiator), n});
            if (it == index.end()) {
                e.status = DiffStatus::NotScanned;
                ++rep.not_scanned;
            } else {
                const ScanRecord& rec = *it->second;
                used[&rec] = true;
                bool all = !rec.dropped;
                for (Shape s : row.shapes) {
                    bool covered = false;
                    for (int oi = 0; oi < kNumOrderings; ++oi)
                        if (claim_implies_shape(rec.confirmed[oi], s)) covered = true;
                    // the row's stated ordering must be among those that cover it
                    if (!claim_implies_shape(rec.confirmed[static_cast<int>(row.ordering)], s))
                        covered = false;
                    if (!covered) all = false;
                }
                e.status = all ? DiffStatus::Confirmed : DiffStatus::Missing;
                ++(all ? rep.confirmed : rep.missing);
            }
            rep.entries.push_back(e);
        }
    }

    for (const auto& r : records)
        if (!r.empty() && !used[&r]) rep.extras.push_back(&r);
    return rep;
}

std::string diff_to_text(const DiffReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        if (e.status == DiffStatus::Confirmed) continue;
        os << (e.status == DiffStatus::Missing ? "MISSING    " : "NOT-SCANNED") << "  "
           << quad_type_name(e.row->type) << " / " << radiator_name(e.row->radiator) << " / X"
           << e.center << " :";
        for (Shape s : e.row->shapes) os << " " << shape_name(s);
        if (e.numeric_only) os << "  [numeric-only]";
        os << "\n";
    }
    os << "confirmed " << rep.confirmed << ", missing " << rep.missing << ", not scanned "
       << rep.not_scanned << ", informational extras " << rep.extras.size() << "\n";
    return os.str();
}

}  // namespace cq
