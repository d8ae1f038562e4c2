#include "cq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cq {

namespace {

const std::vector<Shape> kShapes = {
    Shape::Parallelogram, Shape::Rhombus, Shape::Rectangle, Shape::Square, Shape::Kite,
    Shape::RightKite, Shape::Trapezoid, Shape::IsoscelesTrapezoid, Shape::Cyclic,
    Shape::Tangential, Shape::Extangential, Shape::Bicentric, Shape::TangentialTrapezoid,
    Shape::Orthodiagonal, Shape::Equidiagonal, Shape::EqualProdOpp, Shape::EqualProdAdj,
    Shape::Pythagorean, Shape::Hjelmslev, Shape::APquad, Shape::Harmonic};

const std::map<Shape, std::string> kShapeNames = {
    {Shape::Parallelogram, "parallelogram"},
    {Shape::Rhombus, "rhombus"},
    {Shape::Rectangle, "rectangle"},
    {Shape::Square, "square"},
    {Shape::Kite, "kite"},
    {Shape::RightKite, "right_kite"},
    {Shape::Trapezoid, "trapezoid"},
    {Shape::IsoscelesTrapezoid, "isosceles_trapezoid"},
    {Shape::Cyclic, "cyclic"},
    {Shape::Tangential, "tangential"},
    {Shape::Extangential, "extangential"},
    {Shape::Bicentric, "bicentric"},
    {Shape::TangentialTrapezoid, "tangential_trapezoid"},
    {Shape::Orthodiagonal, "orthodiagonal"},
    {Shape::Equidiagonal, "equidiagonal"},
    {Shape::EqualProdOpp, "equal_prod_opp"},
    {Shape::EqualProdAdj, "equal_prod_adj"},
    {Shape::Pythagorean, "pythagorean"},
    {Shape::Hjelmslev, "hjelmslev"},
    {Shape::APquad, "ap_quad"},
    {Shape::Harmonic, "harmonic"},
};

const std::map<Extra, std::string> kExtraNames = {
    {Extra::IncenterIsE, "incenter_is_e"},
    {Extra::IncircleEqualsRefCircumcircle, "incircle_equals_ref_circumcircle"},
    {Extra::InradiusHalfRefCircumradius, "inradius_half_ref_circumradius"},
    {Extra::CircleThroughE, "circle_through_e"},
    {Extra::DiagonalsMeetAtE, "diagonals_meet_at_e"},
    {Extra::DiagonalsParallelToRefSides, "diagonals_parallel_to_ref_sides"},
    {Extra::SidesParallelToRefDiagonals, "sides_parallel_to_ref_diagonals"},
    {Extra::SameDiagonalPointAsRef, "same_diagonal_point_as_ref"},
    {Extra::ContactPointsOnRefDiagonal, "contact_points_on_ref_diagonal"},
};

const std::array<std::string, 3> kOrderingNames = {"fghi", "fgih", "fhgi"};

}  // namespace

const std::vector<Shape>& all_shapes() { return kShapes; }
const std::string& shape_name(Shape s) { return kShapeNames.at(s); }
const std::string& extra_name(Extra e) { return kExtraNames.at(e); }
const std::string& ordering_name(Ordering o) { return kOrderingNames[static_cast<int>(o)]; }

Shape shape_from_name(const std::string& name) {
    for (const auto& [s, n] : kShapeNames)
        if (n == name) return s;
    throw CqError("unknown shape '" + name + "'");
}

std::array<Point, 4> reorder(const std::array<Point, 4>& p, Ordering o) {
    switch (o) {
        case Ordering::FGHI: return p;
        case Ordering::FGIH: return {p[0], p[1], p[3], p[2]};
        case Ordering::FHGI: return {p[0], p[2], p[1], p[3]};
    }
    return p;
}

bool ShapeReport::holds(Shape s, Ordering o) const {
    if (degeneracy != Degeneracy::Nondegenerate) return false;
    const auto& m = per_ordering[static_cast<int>(o)];
    auto it = m.find(s);
    return it != m.end() && it->second.holds;
}

double ShapeReport::residual(Shape s, Ordering o) const {
    const auto& m = per_ordering[static_cast<int>(o)];
    auto it = m.find(s);
    return it == m.end() ? 1.0 : it->second.residual;
}

namespace {

bool convex_any_orientation(const std::array<Point, 4>& p, double margin) {
    const double sc = scale_of(p);
    int pos = 0, neg = 0;
    for (int i = 0; i < 4; ++i) {
        const double s = signed_area(p[i], p[(i + 1) % 4], p[(i + 2) % 4]);
        if (s > margin * sc * sc) ++pos;
        if (s < -margin * sc * sc) ++neg;
    }
    return pos == 4 || neg == 4;
}

struct Metrics {
    double a, b, c, d, p, q, sc;
    std::array<Point, 4> pts;
};

Metrics metrics_of(const std::array<Point, 4>& pts) {
    Metrics m;
    m.pts = pts;
    m.a = dist(pts[0], pts[1]);
    m.b = dist(pts[1], pts[2]);
    m.c = dist(pts[2], pts[3]);
    m.d = dist(pts[3], pts[0]);
    m.p = dist(pts[0], pts[2]);
    m.q = dist(pts[1], pts[3]);
    m.sc = scale_of(pts);
    return m;
}

double corner_dot(const std::array<Point, 4>& p, int i) {
    return dot(p[(i + 3) % 4] - p[i], p[(i + 1) % 4] - p[i]);
}

}  // namespace

Incircle incircle_of(const std::array<Point, 4>& pts) {
    auto bisector_dir = [](const Point& P, const Point& U, const Point& W) {
        return (U - P) / dist(U, P) + (W - P) / dist(W, P);
    };
    const Point d0 = bisector_dir(pts[0], pts[1], pts[3]);
    const Point d1 = bisector_dir(pts[1], pts[2], pts[0]);
    Incircle inc;
    inc.center = line_intersection(pts[0], pts[0] + d0, pts[1], pts[1] + d1);
    double lo = 1e300, hi = 0.0, sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Line side{pts[i], pts[(i + 1) % 4] - pts[i]};
        const double r = point_line_distance(inc.center, side);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        sum += r;
    }
    inc.radius = sum / 4.0;
    inc.spread = hi - lo;
    return inc;
}

ShapeReport classify(const std::array<Point, 4>& pts, const std::optional<RefConfig>& ref,
                     const Tolerance& tol) {
    ShapeReport rep;
    const double sc = scale_of(pts);

    // degeneracy
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (dist(pts[i], pts[j]) <= tol.rel * std::max(sc, 1e-300)) {
                rep.degeneracy = Degeneracy::CoincidentPoints;
                return rep;
            }
    {
        bool collinear = true;
        const Line L{pts[0], pts[1] - pts[0]};
        for (int i = 2; i < 4; ++i)
            if (point_line_distance(pts[i], L) > tol.rel * sc) collinear = false;
        if (collinear) {
            rep.degeneracy = Degeneracy::Collinear;
            return rep;
        }
    }

    for (int oi = 0; oi < kNumOrderings; ++oi) {
        const auto ord = reorder(pts, static_cast<Ordering>(oi));
        const Metrics m = metrics_of(ord);
        auto& out = rep.per_ordering[oi];
        const double sc2 = m.sc * m.sc;

        // residuals are stored normalized by scale^degree, directly comparable to rel
        auto put = [&](Shape s, double residual, int degree) {
            const double rn = std::abs(residual) / std::pow(m.sc, degree);
            out[s] = {rn <= tol.rel, rn};
        };
        auto conj = [&](Shape s, Shape x, Shape y) {
            out[s] = {out[x].holds && out[y].holds,
                      std::max(out[x].residual, out[y].residual)};
        };

        // parallelogram: diagonal midpoints coincide
        const double r_para = dist(midpoint(ord[0], ord[2]), midpoint(ord[1], ord[3]));
        put(Shape::Parallelogram, r_para, 1);

        const double r_sides_eq =
            std::max({m.a, m.b, m.c, m.d}) - std::min({m.a, m.b, m.c, m.d});
        put(Shape::Rhombus, std::max(r_para, r_sides_eq), 1);

        const double r_right = std::abs(corner_dot(ord, 1));
        out[Shape::Rectangle] = {out[Shape::Parallelogram].holds && r_right <= tol.rel * sc2,
                                 std::max(out[Shape::Parallelogram].residual, r_right / sc2)};
        conj(Shape::Square, Shape::Rectangle, Shape::Rhombus);

        const double r_kite = std::min(std::max(std::abs(m.a - m.b), std::abs(m.c - m.d)),
                                       std::max(std::abs(m.b - m.c), std::abs(m.d - m.a)));
        put(Shape::Kite, r_kite, 1);

        // trapezoid (exclusive: exactly one pair of parallel opposite sides)
        const double c1 = std::abs(cross(ord[1] - ord[0], ord[2] - ord[3]));
        const double c2 = std::abs(cross(ord[2] - ord[1], ord[3] - ord[0]));
        const bool par1 = c1 <= tol.rel * sc2, par2 = c2 <= tol.rel * sc2;
        out[Shape::Trapezoid] = {par1 != par2, std::min(c1, c2) / sc2};

        const double r_eqdiag = std::abs(m.p - m.q);
        put(Shape::Equidiagonal, r_eqdiag, 1);
        conj(Shape::IsoscelesTrapezoid, Shape::Trapezoid, Shape::Equidiagonal);

        double r_cyc = 1.0;
        try {
            const Circle cc = circumcircle(ord[0], ord[1], ord[2], tol);
            r_cyc = std::abs(dist(cc.center, ord[3]) - cc.radius);
        } catch (const Collinear&) {
            try {
                const Circle cc = circumcircle(ord[0], ord[1], ord[3], tol);
                r_cyc = std::abs(dist(cc.center, ord[2]) - cc.radius);
            } catch (const Collinear&) {
                r_cyc = m.sc;  // three collinear points: treat as non-cyclic
            }
        }
        put(Shape::Cyclic, r_cyc, 1);

        const double r_pitot = std::abs(m.a + m.c - m.b - m.d);
        out[Shape::Tangential] = {convex_any_orientation(ord, tol.rel) &&
                                      r_pitot <= tol.rel * m.sc,
                                  r_pitot / m.sc};

        const double r_ext = std::min(std::abs(m.a + m.b - m.c - m.d),
                                      std::abs(m.d + m.a - m.b - m.c));
        put(Shape::Extangential, r_ext, 1);

        conj(Shape::Bicentric, Shape::Cyclic, Shape::Tangential);
        conj(Shape::TangentialTrapezoid, Shape::Tangential, Shape::Trapezoid);
        conj(Shape::RightKite, Shape::Kite, Shape::Cyclic);

        put(Shape::Orthodiagonal, m.a * m.a + m.c * m.c - m.b * m.b - m.d * m.d, 2);
        put(Shape::EqualProdOpp, m.a * m.c - m.b * m.d, 2);
        put(Shape::EqualProdAdj, m.a * m.b - m.c * m.d, 2);
        put(Shape::Pythagorean, m.a * m.a + m.b * m.b - m.c * m.c - m.d * m.d, 2);

        const double r_hj = std::min(
            std::max(std::abs(corner_dot(ord, 0)), std::abs(corner_dot(ord, 2))),
            std::max(std::abs(corner_dot(ord, 1)), std::abs(corner_dot(ord, 3))));
        put(Shape::Hjelmslev, r_hj, 2);

        const double r_ap = std::max(std::abs((m.d - m.c) - (m.c - m.b)),
                                     std::abs((m.c - m.b) - (m.b - m.a)));
        put(Shape::APquad, r_ap, 1);

        conj(Shape::Harmonic, Shape::Cyclic, Shape::EqualProdOpp);
    }

    // relational extras (FGHI ordering unless noted)
    if (ref) {
        const auto& q = ref->quad;
        const Point& E = ref->E;
        const double refsc = q.scale();
        const auto& fghi = rep.per_ordering[0];

        auto tang_ordering = [&]() -> std::optional<Ordering> {
            for (int oi = 0; oi < kNumOrderings; ++oi)
                if (rep.per_ordering[oi].at(Shape::Tangential).holds)
                    return static_cast<Ordering>(oi);
            return std::nullopt;
        };

        if (auto to = tang_ordering()) {
            const auto ord = reorder(pts, *to);
            const Incircle inc = incircle_of(ord);
            const double r_ie = dist(inc.center, E);
            rep.extras[Extra::IncenterIsE] = {r_ie <= 1e-7 * sc, r_ie};
            try {
                const Circle refcc = circumcircle(q.V[0], q.V[1], q.V[2], tol);
                const double rc = dist(inc.center, refcc.center);
                const double rr = std::abs(inc.radius - refcc.radius);
                rep.extras[Extra::IncircleEqualsRefCircumcircle] = {
                    rc <= 1e-8 * sc && rr <= 1e-8 * sc, std::max(rc, rr)};
                const double ratio = inc.radius / refcc.radius;
                rep.extras[Extra::InradiusHalfRefCircumradius] = {std::abs(ratio - 0.5) <= 1e-8,
                                                                  std::abs(ratio - 0.5)};
            } catch (const Collinear&) {
            }
            // contact points of the incircle with the two parallel sides lie on BD
            try {
                const Line bd{q.V[1], q.V[3] - q.V[1]};
                double worst = 0.0;
                for (int i : {0, 2}) {
                    const Line side{ord[i], ord[(i + 1) % 4] - ord[i]};
                    const Point contact = foot_on_line(inc.center, side);
                    worst = std::max(worst, point_line_distance(contact, bd));
                }
                rep.extras[Extra::ContactPointsOnRefDiagonal] = {worst <= 1e-7 * sc, worst};
            } catch (...) {
            }
        }

        if (fghi.at(Shape::Cyclic).holds) {
            try {
                const Circle cc = circumcircle(pts[0], pts[1], pts[2], tol);
                const double r = std::abs(dist(cc.center, E) - cc.radius);
                rep.extras[Extra::CircleThroughE] = {r <= 1e-7 * sc, r};
            } catch (const Collinear&) {
            }
        }

        try {
            const Point dp = line_intersection(pts[0], pts[2], pts[1], pts[3], tol);
            const double r = dist(dp, E);
            rep.extras[Extra::DiagonalsMeetAtE] = {r <= 1e-7 * sc, r};
            const Point dpr = line_intersection(q.V[0], q.V[2], q.V[1], q.V[3], tol);
            const double r2 = dist(dp, dpr);
            rep.extras[Extra::SameDiagonalPointAsRef] = {r2 <= 1e-7 * sc, r2};
        } catch (const ParallelLines&) {
        }

        {
            // diagonals of FGHI vs sides of the reference
            const Point d1 = pts[2] - pts[0], d2 = pts[3] - pts[1];
            const Point s1 = q.V[1] - q.V[0], s2 = q.V[2] - q.V[1];
            auto pr = [&](const Point& u, const Point& v) {
                return std::abs(cross(u, v)) / (norm(u) * norm(v));
            };
            const double m1 = std::max(pr(d1, s1), pr(d2, s2));
            const double m2 = std::max(pr(d1, s2), pr(d2, s1));
            const double r = std::min(m1, m2);
            rep.extras[Extra::DiagonalsParallelToRefSides] = {r <= 1e-7, r};

            // sides of FGHI vs diagonals of the reference
            const Point fg = pts[1] - pts[0], fi = pts[3] - pts[0];
            const Point ac = q.V[2] - q.V[0], bd = q.V[3] - q.V[1];
            const double n1 = std::max(pr(fg, ac), pr(fi, bd));
            const double n2 = std::max(pr(fg, bd), pr(fi, ac));
            const double r2 = std::min(n1, n2);
            rep.extras[Extra::SidesParallelToRefDiagonals] = {r2 <= 1e-7, r2};
        }
        (void)refsc;
    }

    return rep;
}

namespace {

std::map<Shape, std::set<Shape>> build_implications() {
    using S = Shape;
    std::map<Shape, std::set<Shape>> d;  // shape -> everything it implies
    for (Shape s : kShapes) d[s] = {s};
    d[S::Square].insert({S::Rectangle, S::Rhombus, S::RightKite, S::Hjelmslev});
    d[S::Rectangle].insert({S::Parallelogram, S::Cyclic, S::Equidiagonal, S::EqualProdAdj,
                            S::Extangential, S::Pythagorean});
    d[S::Rhombus].insert({S::Parallelogram, S::Kite, S::Orthodiagonal, S::Tangential,
                          S::Extangential, S::EqualProdOpp, S::EqualProdAdj, S::Pythagorean,
                          S::APquad});
    d[S::Parallelogram].insert({S::Extangential, S::EqualProdAdj, S::Pythagorean});
    d[S::Kite].insert({S::Orthodiagonal, S::Extangential});
    d[S::RightKite].insert({S::Kite, S::Cyclic, S::Hjelmslev, S::Bicentric});
    d[S::IsoscelesTrapezoid].insert({S::Trapezoid, S::Cyclic, S::Equidiagonal});
    d[S::Bicentric].insert({S::Cyclic, S::Tangential});
    d[S::TangentialTrapezoid].insert({S::Tangential, S::Trapezoid});
    d[S::Harmonic].insert({S::Cyclic, S::EqualProdOpp});
    // transitive closure
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [s, set] : d) {
            std::set<Shape> add;
            for (Shape t : set)
                for (Shape u : d[t])
                    if (!set.count(u)) add.insert(u);
            if (!add.empty()) {
                set.insert(add.begin(), add.end());
                changed = true;
            }
        }
    }
    return d;
}

const std::map<Shape, std::set<Shape>>& implications() {
    static const auto d = build_implications();
    return d;
}

}  // namespace

const std::set<Shape>& implied_shapes(Shape s) { return implications().at(s); }

std::set<Shape> most_specific(const std::set<Shape>& holding) {
    std::set<Shape> out;
    for (Shape s : holding) {
        bool has_stronger = false;
        for (Shape t : holding) {
            if (t == s) continue;
            if (implied_shapes(t).count(s)) has_stronger = true;
        }
        if (!has_stronger) out.insert(s);
    }
    return out;
}

std::set<Shape> most_specific(const std::map<Shape, PredicateResult>& results) {
    std::set<Shape> holding;
    for (const auto& [s, r] : results)
        if (r.holds) holding.insert(s);
    return most_specific(holding);
}

std::string ShapeReport::to_json() const {
    std::ostringstream os;
    os << "{";
    os << "\"degeneracy\":\"";
    switch (degeneracy) {
        case Degeneracy::Nondegenerate: os << "nondegenerate"; break;
        case Degeneracy::Collinear: os << "collinear"; break;
        case Degeneracy::CoincidentPoints: os << "coincident_points"; break;
    }
    os << "\"";
    if (degeneracy == Degeneracy::Nondegenerate) {
        os << ",\"orderings\":{";
        for (int oi = 0; oi < kNumOrderings; ++oi) {
            if (oi) os << ",";
            os << "\"" << kOrderingNames[oi] << "\":{";
            bool first = true;
            for (const auto& [s, r] : per_ordering[oi]) {
                if (!first) os << ",";
                first = false;
                os << "\"" << shape_name(s) << "\":{\"holds\":" << (r.holds ? "true" : "false")
                   << ",\"residual\":" << r.residual << "}";
            }
            os << "}";
        }
        os << "}";
        if (!extras.empty()) {
            os << ",\"extras\":{";
            bool first = true;
            for (const auto& [e, r] : extras) {
                if (!first) os << ",";
                first = false;
                os << "\"" << extra_name(e) << "\":{\"holds\":" << (r.holds ? "true" : "false")
                   << ",\"residual\":" << r.residual << "}";
            }
            os << "}";
        }
    }
    os << "}";
    return os.str();
}

}  // namespace cq
