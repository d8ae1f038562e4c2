#include "cq/scan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef CQUAD_HAVE_OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace cq {

bool ScanRecord::empty() const {
    for (const auto& s : confirmed)
        if (!s.empty()) return false;
    return extras.empty();
}

std::optional<std::array<Point, 4>> run_pipeline(const CenterRegistry& reg,
                                                 const Quadrilateral& q, const Point& E, int n,
                                                 const Tolerance& tol) {
    std::array<Point, 4> out;
    const double sc = q.scale();
    for (int i = 0; i < 4; ++i) {
        const Triangle T{q.V[i], q.V[(i + 1) % 4], E};
        if (std::abs(T.signed_area()) <= tol.rel * sc * sc) return std::nullopt;
        try {
            const CenterPoint cp = reg.center(n, T, tol);
            if (cp.at_infinity || !cp.p.finite()) return std::nullopt;
            out[i] = cp.p;
        } catch (const CqError&) {
            return std::nullopt;  // formula pole or construction degeneracy
        }
    }
    return out;
}

namespace {

struct CellResult {
    std::array<std::set<Shape>, kNumOrderings> claims;  // post most_specific
    std::array<std::set<Shape>, kNumOrderings> raw;     // all confirmed predicates
    std::set<Extra> extras;
    int samples_used = 0;
    int degenerate = 0;
    double max_residual = 0.0;
    bool dropped = false;
};

CellResult run_cell(const CenterRegistry& reg, QuadType type, RadiatorKind rad, int n,
                    const ScanConfig& cfg, std::uint64_t cell_seed) {
    CellResult res;
    std::array<std::set<Shape>, kNumOrderings> confirmed;
    std::set<Extra> extras_confirmed;
    bool first = true;

    SeededRng rng(cell_seed);
    for (int s = 0; s < cfg.samples; ++s) {
        Quadrilateral q;
        Point E;
        try {
            q = generate(type, rng);
            E = radiator_point(q, rad, rng, cfg.tol);
        } catch (const CqError&) {
            ++res.degenerate;
            continue;
        }
        const auto pts = run_pipeline(reg, q, E, n, cfg.tol);
        if (!pts) {
            ++res.degenerate;
            continue;
        }
        const ShapeReport rep = classify(*pts, RefConfig{q, E}, cfg.tol);
        if (rep.degeneracy != Degeneracy::Nondegenerate) {
            ++res.degenerate;
            continue;
        }
        ++res.samples_used;

        std::array<std::set<Shape>, kNumOrderings> here;
        for (int oi = 0; oi < kNumOrderings; ++oi)
            for (const auto& [shape, r] : rep.per_ordering[oi])
                if (r.holds) here[oi].insert(shape);
        std::set<Extra> ehere;
        for (const auto& [e, r] : rep.extras)
            if (r.holds) ehere.insert(e);

        if (first) {
            confirmed = here;
            extras_confirmed = ehere;
            first = false;
        } else {
            for (int oi = 0; oi < kNumOrderings; ++oi) {
                std::set<Shape> keep;
                std::set_intersection(confirmed[oi].begin(), confirmed[oi].end(),
                                      here[oi].begin(), here[oi].end(),
                                      std::inserter(keep, keep.begin()));
                confirmed[oi] = std::move(keep);
            }
            std::set<Extra> ekeep;
            std::set_intersection(extras_confirmed.begin(), extras_confirmed.end(),
                                  ehere.begin(), ehere.end(),
                                  std::inserter(ekeep, ekeep.begin()));
            extras_confirmed = std::move(ekeep);
        }
        // residual of the confirmed shapes on this sample
        for (int oi = 0; oi < kNumOrderings; ++oi)
            for (Shape sh : confirmed[oi])
                res.max_residual = std::max(res.max_residual,
                                            rep.residual(sh, static_cast<Ordering>(oi)));
    }

    if (res.degenerate * 2 > cfg.samples) {
        res.dropped = true;
        return res;
    }
    if (first) {  // no nondegenerate sample at all
        res.dropped = true;
        return res;
    }
    res.raw = confirmed;
    for (int oi = 0; oi < kNumOrderings; ++oi) res.claims[oi] = most_specific(confirmed[oi]);
    res.extras = extras_confirmed;
    return res;
}

// does the claim set (via the shape implication lattice) imply `s`?
bool claim_implies(const std::set<Shape>& claim, Shape s) {
    for (Shape c : claim)
        if (c == s || implied_shapes(c).count(s)) return true;
    return false;
}

std::uint64_t cell_seed_of(std::uint64_t master, QuadType t, RadiatorKind r, int n) {
    const std::uint64_t cell_id =
        (static_cast<std::uint64_t>(t) << 40) ^ (static_cast<std::uint64_t>(r) << 32) ^
        static_cast<std::uint64_t>(n);
    return SeededRng::mix(master, cell_id);
}

}  // namespace

std::vector<ScanRecord> scan(const CenterRegistry& reg, const ScanConfig& cfg) {
    if (cfg.samples < 3) throw CqError("scan requires samples >= 3");
    for (int n : cfg.centers)
        if (!reg.contains(n)) throw MissingCenters({n});

    struct Cell {
        QuadType t;
        RadiatorKind r;
        int n;
    };
    std::vector<Cell> cells;
    for (QuadType t : cfg.types)
        for (RadiatorKind r : cfg.radiators)
            for (int n : cfg.centers) cells.push_back({t, r, n});

    std::vector<CellResult> results(cells.size());

    if (cfg.jobs == 1) {
        // serial reference path
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = run_cell(reg, cells[i].t, cells[i].r, cells[i].n, cfg,
                                  cell_seed_of(cfg.seed, cells[i].t, cells[i].r, cells[i].n));
    } else {
#ifdef CQUAD_HAVE_OPENMP
        if (cfg.jobs > 1) omp_set_num_threads(cfg.jobs);
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(cells.size()); ++i)
            results[i] = run_cell(reg, cells[i].t, cells[i].r, cells[i].n, cfg,
                                  cell_seed_of(cfg.seed, cells[i].t, cells[i].r, cells[i].n));
    }

    // ancestor suppression: drop a cell claim subsumed by the claim of an
    // ancestor type at the same radiator/center/ordering
    std::map<std::tuple<int, int, int>, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i)
        index[{static_cast<int>(cells[i].t), static_cast<int>(cells[i].r), cells[i].n}] = i;

    std::vector<ScanRecord> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const CellResult& r = results[i];
        ScanRecord rec;
        rec.type = c.t;
        rec.radiator = c.r;
        rec.center = c.n;
        rec.samples_used = r.samples_used;
        rec.degenerate = r.degenerate;
        rec.max_residual = r.max_residual;
        rec.dropped = r.dropped;
        rec.extras = r.extras;
        if (!r.dropped) {
            for (int oi = 0; oi < kNumOrderings; ++oi) {
                std::set<Shape> claim = r.claims[oi];
                if (claim.empty()) continue;
                bool subsumed = false;
                for (QuadType anc : ancestors(c.t)) {
                    auto it = index.find({static_cast<int>(anc), static_cast<int>(c.r), c.n});
                    if (it == index.end()) continue;
                    const CellResult& ar = results[it->second];
                    if (ar.dropped) continue;
                    bool all = !claim.empty();
                    for (Shape s : claim)
                        if (!claim_implies(ar.claims[oi], s)) all = false;
                    if (all && !ar.claims[oi].empty()) {
                        subsumed = true;
                        break;
                    }
                }
                if (!subsumed) rec.confirmed[oi] = std::move(claim);
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

std::string shapes_field(const ScanRecord& r) {
    std::string s;
    for (int oi = 0; oi < kNumOrderings; ++oi) {
        for (Shape sh : r.confirmed[oi]) {
            if (!s.empty()) s += "|";
            if (oi != 0) s += ordering_name(static_cast<Ordering>(oi)) + ":";
            s += shape_name(sh);
        }
    }
    return s;
}

std::string extras_field(const ScanRecord& r) {
    std::string s;
    for (Extra e : r.extras) {
        if (!s.empty()) s += "|";
        s += extra_name(e);
    }
    return s;
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream os;
    os << "type,radiator,center,shapes,extras,samples,degenerate,max_residual\n";
    for (const auto& r : records) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", r.max_residual);
        os << quad_type_name(r.type) << "," << radiator_name(r.radiator) << "," << r.center
           << "," << shapes_field(r) << "," << extras_field(r) << "," << r.samples_used << ","
           << r.degenerate << "," << buf << "\n";
    }
    return os.str();
}

std::string scan_to_json(const std::vector<ScanRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j;
        j["type"] = quad_type_name(r.type);
        j["radiator"] = radiator_name(r.radiator);
        j["center"] = r.center;
        j["shapes"] = shapes_field(r);
        j["extras"] = extras_field(r);
        j["samples"] = r.samples_used;
        j["degenerate"] = r.degenerate;
        j["max_residual"] = r.max_residual;
        arr.push_back(std::move(j));
    }
    return arr.dump(1);
}

std::vector<ScanRecord> scan_from_json(const std::string& json) {
    const auto arr = nlohmann::json::parse(json);
    std::vector<ScanRecord> out;
    for (const auto& j : arr) {
        ScanRecord r;
        r.type = quad_type_from_name(j.at("type").get<std::string>());
        r.radiator = radiator_from_name(j.at("radiator").get<std::string>());
        r.center = j.at("center").get<int>();
        r.samples_used = j.at("samples").get<int>();
        r.degenerate = j.at("degenerate").get<int>();
        r.max_residual = j.at("max_residual").get<double>();
        auto parse_shapes = [&r](const std::string& field) {
            std::istringstream ss(field);
            std::string item;
            while (std::getline(ss, item, '|')) {
                if (item.empty()) continue;
                int oi = 0;
                auto colon = item.find(':');
                std::string name = item;
                if (colon != std::string::npos) {
                    const std::string on = item.substr(0, colon);
                    name = item.substr(colon + 1);
                    for (int k = 0; k < kNumOrderings; ++k)
                        if (ordering_name(static_cast<Ordering>(k)) == on) oi = k;
                }
                r.confirmed[oi].insert(shape_from_name(name));
            }
        };
        parse_shapes(j.at("shapes").get<std::string>());
        std::istringstream es(j.at("extras").get<std::string>());
        std::string item;
        while (std::getline(es, item, '|')) {
            if (item.empty()) continue;
            for (const auto e : {Extra::IncenterIsE, Extra::IncircleEqualsRefCircumcircle,
                                 Extra::InradiusHalfRefCircumradius, Extra::CircleThroughE,
                                 Extra::DiagonalsMeetAtE, Extra::DiagonalsParallelToRefSides,
                                 Extra::SidesParallelToRefDiagonals, Extra::SameDiagonalPointAsRef,
                                 Extra::ContactPointsOnRefDiagonal})
                if (extra_name(e) == item) r.extras.insert(e);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cq
