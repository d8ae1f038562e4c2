#include "cq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cq {

namespace {

const std::vector<QuadType> kAllTypes = {
    QuadType::General, QuadType::Cyclic, QuadType::Tangential, QuadType::Extangential,
    QuadType::Parallelogram, QuadType::EqualProdOpp, QuadType::EqualProdAdj,
    QuadType::Orthodiagonal, QuadType::Equidiagonal, QuadType::Pythagorean, QuadType::Kite,
    QuadType::Trapezoid, QuadType::Rhombus, QuadType::Rectangle, QuadType::Hjelmslev,
    QuadType::IsoscelesTrapezoid, QuadType::APquad, QuadType::Bicentric, QuadType::Exbicentric,
    QuadType::BicentricTrapezoid, QuadType::CyclicOrthodiagonal, QuadType::EquidiagonalKite,
    QuadType::EquidiagonalOrthodiagonal, QuadType::EquidiagonalOrthodiagonalTrapezoid,
    QuadType::Harmonic, QuadType::OrthodiagonalTrapezoid, QuadType::TangentialTrapezoid,
    QuadType::Square, QuadType::RightKite};

const std::map<QuadType, std::string> kNames = {
    {QuadType::General, "general"},
    {QuadType::Cyclic, "cyclic"},
    {QuadType::Tangential, "tangential"},
    {QuadType::Extangential, "extangential"},
    {QuadType::Parallelogram, "parallelogram"},
    {QuadType::EqualProdOpp, "equalProdOpp"},
    {QuadType::EqualProdAdj, "equalProdAdj"},
    {QuadType::Orthodiagonal, "orthodiagonal"},
    {QuadType::Equidiagonal, "equidiagonal"},
    {QuadType::Pythagorean, "Pythagorean"},
    {QuadType::Kite, "kite"},
    {QuadType::Trapezoid, "trapezoid"},
    {QuadType::Rhombus, "rhombus"},
    {QuadType::Rectangle, "rectangle"},
    {QuadType::Hjelmslev, "Hjelmslev"},
    {QuadType::IsoscelesTrapezoid, "isoscelesTrapezoid"},
    {QuadType::APquad, "APquad"},
    {QuadType::Bicentric, "bicentric"},
    {QuadType::Exbicentric, "exbicentric"},
    {QuadType::BicentricTrapezoid, "bicentricTrapezoid"},
    {QuadType::CyclicOrthodiagonal, "cyclicOrthodiagonal"},
    {QuadType::EquidiagonalKite, "equidiagonalKite"},
    {QuadType::EquidiagonalOrthodiagonal, "equidiagonalOrthodiagonal"},
    {QuadType::EquidiagonalOrthodiagonalTrapezoid, "equidiagonalOrthodiagonalTrapezoid"},
    {QuadType::Harmonic, "harmonic"},
    {QuadType::OrthodiagonalTrapezoid, "orthodiagonalTrapezoid"},
    {QuadType::TangentialTrapezoid, "tangentialTrapezoid"},
    {QuadType::Square, "square"},
    {QuadType::RightKite, "rightKite"},
};

}  // namespace

const std::vector<QuadType>& all_quad_types() { return kAllTypes; }

const std::string& quad_type_name(QuadType t) { return kNames.at(t); }

QuadType quad_type_from_name(const std::string& name) {
    for (const auto& [t, n] : kNames)
        if (n == name) return t;
    throw CqError("unknown quadrilateral type '" + name + "'");
}

double Quadrilateral::area() const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += cross(V[i], V[(i + 1) % 4]);
    return 0.5 * s;
}

bool Quadrilateral::convex_ccw(double margin) const {
    const double sc = scale();
    for (int i = 0; i < 4; ++i)
        if (signed_area(V[i], V[(i + 1) % 4], V[(i + 2) % 4]) <= margin * sc * sc) return false;
    return true;
}

std::uint64_t SeededRng::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SeededRng::uniform(double lo, double hi) {
    const double u = (next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::uint64_t SeededRng::mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    SeededRng r(z);
    return r.next_u64();
}

// ---------------------------------------------------------------------------
// residuals

namespace {

struct Sides {
    double a, b, c, d, p, q, sc;
    explicit Sides(const Quadrilateral& v)
        : a(v.side(0)), b(v.side(1)), c(v.side(2)), d(v.side(3)),
          p(v.diag_p()), q(v.diag_q()), sc(v.scale()) {}
};

double res_cyclic(const Quadrilateral& v) {
    try {
        const Circle c = circumcircle(v.V[0], v.V[1], v.V[2]);
        return std::abs(dist(c.center, v.V[3]) - c.radius) / v.scale();
    } catch (const Collinear&) {
        return 1.0;
    }
}

double res_parallelogram(const Quadrilateral& v) {
    return dist(midpoint(v.V[0], v.V[2]), midpoint(v.V[1], v.V[3])) / v.scale();
}

double res_trapezoid_incl(const Quadrilateral& v) {
    const double s2 = v.scale() * v.scale();
    const double c1 = std::abs(cross(v.V[1] - v.V[0], v.V[2] - v.V[3])) / s2;
    const double c2 = std::abs(cross(v.V[2] - v.V[1], v.V[3] - v.V[0])) / s2;
    return std::min(c1, c2);
}

double corner_dot(const Quadrilateral& v, int i) {
    return dot(v.V[(i + 3) % 4] - v.V[i], v.V[(i + 1) % 4] - v.V[i]);
}

}  // namespace

double check_type(const Quadrilateral& v, QuadType t) {
    const Sides s(v);
    const double sc = s.sc, sc2 = sc * sc;
    switch (t) {
        case QuadType::General:
            return 0.0;
        case QuadType::Cyclic:
            return res_cyclic(v);
        case QuadType::Tangential:
            return std::abs(s.a + s.c - s.b - s.d) / sc;
        case QuadType::Extangential:
            return std::min(std::abs(s.a + s.b - s.c - s.d), std::abs(s.d + s.a - s.b - s.c)) / sc;
        case QuadType::Parallelogram:
            return res_parallelogram(v);
        case QuadType::EqualProdOpp:
            return std::abs(s.a * s.c - s.b * s.d) / sc2;
        case QuadType::EqualProdAdj:
            return std::abs(s.a * s.b - s.c * s.d) / sc2;
        case QuadType::Orthodiagonal:
            return std::abs(s.a * s.a + s.c * s.c - s.b * s.b - s.d * s.d) / sc2;
        case QuadType::Equidiagonal:
            return std::abs(s.p - s.q) / sc;
        case QuadType::Pythagorean:
            return std::abs(s.a * s.a + s.b * s.b - s.c * s.c - s.d * s.d) / sc2;
        case QuadType::Kite:
            return std::min(std::max(std::abs(s.a - s.b), std::abs(s.c - s.d)),
                            std::max(std::abs(s.b - s.c), std::abs(s.d - s.a))) / sc;
        case QuadType::Trapezoid:
            return res_trapezoid_incl(v);
        case QuadType::Rhombus: {
            const double mx = std::max({s.a, s.b, s.c, s.d});
            const double mn = std::min({s.a, s.b, s.c, s.d});
            return (mx - mn) / sc;
        }
        case QuadType::Rectangle:
            return std::max(res_parallelogram(v), std::abs(corner_dot(v, 1)) / sc2);
        case QuadType::Hjelmslev:
            return std::min(std::max(std::abs(corner_dot(v, 0)), std::abs(corner_dot(v, 2))),
                            std::max(std::abs(corner_dot(v, 1)), std::abs(corner_dot(v, 3)))) / sc2;
        case QuadType::IsoscelesTrapezoid:
            return std::max(res_trapezoid_incl(v), std::abs(s.p - s.q) / sc);
        case QuadType::APquad:
            return std::max(std::abs((s.d - s.c) - (s.c - s.b)),
                            std::abs((s.c - s.b) - (s.b - s.a))) / sc;
        case QuadType::Bicentric:
            return std::max(check_type(v, QuadType::Cyclic), check_type(v, QuadType::Tangential));
        case QuadType::Exbicentric:
            return std::max(check_type(v, QuadType::Cyclic), check_type(v, QuadType::Extangential));
        case QuadType::BicentricTrapezoid:
            return std::max(check_type(v, QuadType::Bicentric), check_type(v, QuadType::Trapezoid));
        case QuadType::CyclicOrthodiagonal:
            return std::max(check_type(v, QuadType::Cyclic), check_type(v, QuadType::Orthodiagonal));
        case QuadType::EquidiagonalKite:
            return std::max(check_type(v, QuadType::Kite), check_type(v, QuadType::Equidiagonal));
        case QuadType::EquidiagonalOrthodiagonal:
            return std::max(check_type(v, QuadType::Equidiagonal),
                            check_type(v, QuadType::Orthodiagonal));
        case QuadType::EquidiagonalOrthodiagonalTrapezoid:
            return std::max(check_type(v, QuadType::EquidiagonalOrthodiagonal),
                            check_type(v, QuadType::Trapezoid));
        case QuadType::Harmonic:
            return std::max(check_type(v, QuadType::Cyclic), check_type(v, QuadType::EqualProdOpp));
        case QuadType::OrthodiagonalTrapezoid:
            return std::max(check_type(v, QuadType::Orthodiagonal),
                            check_type(v, QuadType::Trapezoid));
        case QuadType::TangentialTrapezoid:
            return std::max(check_type(v, QuadType::Tangential),
                            check_type(v, QuadType::Trapezoid));
        case QuadType::Square:
            return std::max(check_type(v, QuadType::Rhombus), check_type(v, QuadType::Rectangle));
        case QuadType::RightKite:
            return std::max(check_type(v, QuadType::Kite), check_type(v, QuadType::Cyclic));
    }
    return 1.0;
}

// ---------------------------------------------------------------------------
// ancestor graph (curated, mirrors the paper's specialization figure) and the
// full implication closure

namespace {

using TypeSet = std::set<QuadType>;

std::map<QuadType, TypeSet> build_fig_edges() {
    using Q = QuadType;
    std::map<QuadType, TypeSet> e;
    e[Q::General] = {Q::Cyclic, Q::Tangential, Q::Extangential, Q::Orthodiagonal,
                     Q::Equidiagonal, Q::EqualProdOpp, Q::EqualProdAdj, Q::Pythagorean,
                     Q::Trapezoid, Q::APquad};
    e[Q::Cyclic] = {Q::Bicentric, Q::Exbicentric, Q::Harmonic, Q::CyclicOrthodiagonal,
                    Q::IsoscelesTrapezoid, Q::Hjelmslev};
    e[Q::Tangential] = {Q::Bicentric, Q::TangentialTrapezoid, Q::Rhombus, Q::Kite};
    e[Q::Extangential] = {Q::Exbicentric};
    e[Q::Orthodiagonal] = {Q::Kite, Q::CyclicOrthodiagonal, Q::EquidiagonalOrthodiagonal,
                           Q::OrthodiagonalTrapezoid};
    e[Q::Equidiagonal] = {Q::Rectangle, Q::IsoscelesTrapezoid, Q::EquidiagonalKite,
                          Q::EquidiagonalOrthodiagonal};
    e[Q::EqualProdOpp] = {Q::Harmonic};
    e[Q::Trapezoid] = {Q::Parallelogram, Q::IsoscelesTrapezoid, Q::OrthodiagonalTrapezoid,
                       Q::TangentialTrapezoid};
    e[Q::Parallelogram] = {Q::Rectangle, Q::Rhombus};
    e[Q::Kite] = {Q::Rhombus, Q::EquidiagonalKite, Q::RightKite};
    e[Q::Rhombus] = {Q::Square};
    e[Q::Rectangle] = {Q::Square};
    e[Q::IsoscelesTrapezoid] = {Q::BicentricTrapezoid, Q::EquidiagonalOrthodiagonalTrapezoid,
                                Q::Rectangle};
    e[Q::Bicentric] = {Q::BicentricTrapezoid};
    e[Q::CyclicOrthodiagonal] = {Q::EquidiagonalOrthodiagonalTrapezoid};
    e[Q::OrthodiagonalTrapezoid] = {Q::EquidiagonalOrthodiagonalTrapezoid};
    e[Q::TangentialTrapezoid] = {Q::BicentricTrapezoid};
    e[Q::Hjelmslev] = {Q::RightKite};
    e[Q::RightKite] = {Q::Square};
    return e;
}

std::map<QuadType, TypeSet> transitive_ancestors(const std::map<QuadType, TypeSet>& edges) {
    std::map<QuadType, TypeSet> anc;
    for (QuadType t : kAllTypes) anc[t] = {};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [parent, kids] : edges) {
            for (QuadType k : kids) {
                auto& a = anc[k];
                if (a.insert(parent).second) changed = true;
                for (QuadType g : anc[parent])
                    if (a.insert(g).second) changed = true;
            }
        }
    }
    return anc;
}

// types whose residuals a generic sample of t satisfies identically
std::map<QuadType, TypeSet> build_implied() {
    using Q = QuadType;
    std::map<QuadType, TypeSet> m;
    for (QuadType t : kAllTypes) m[t] = {Q::General, t};
    auto add = [&m](Q t, std::initializer_list<Q> more) {
        for (Q x : more) m[t].insert(x);
    };
    add(Q::Parallelogram, {Q::Trapezoid, Q::Extangential, Q::EqualProdAdj, Q::Pythagorean});
    add(Q::Kite, {Q::Orthodiagonal, Q::Tangential, Q::Extangential, Q::EqualProdAdj,
                  Q::Pythagorean});
    add(Q::Rhombus, {Q::Parallelogram, Q::Kite, Q::Orthodiagonal, Q::Tangential, Q::Extangential,
                     Q::EqualProdOpp, Q::EqualProdAdj, Q::Pythagorean, Q::APquad, Q::Trapezoid});
    add(Q::Rectangle, {Q::Parallelogram, Q::Cyclic, Q::Equidiagonal, Q::Trapezoid,
                       Q::Extangential, Q::EqualProdAdj, Q::Pythagorean, Q::IsoscelesTrapezoid});
    add(Q::Hjelmslev, {Q::Cyclic});
    add(Q::IsoscelesTrapezoid, {Q::Trapezoid, Q::Cyclic, Q::Equidiagonal});
    add(Q::APquad, {Q::Extangential});
    add(Q::Bicentric, {Q::Cyclic, Q::Tangential});
    add(Q::Exbicentric, {Q::Cyclic, Q::Extangential});
    add(Q::BicentricTrapezoid, {Q::Cyclic, Q::Tangential, Q::Bicentric, Q::Trapezoid,
                                Q::IsoscelesTrapezoid, Q::Equidiagonal, Q::TangentialTrapezoid});
    add(Q::CyclicOrthodiagonal, {Q::Cyclic, Q::Orthodiagonal});
    add(Q::EquidiagonalKite, {Q::Kite, Q::Equidiagonal, Q::Orthodiagonal, Q::Tangential,
                              Q::Extangential, Q::EqualProdAdj, Q::Pythagorean,
                              Q::EquidiagonalOrthodiagonal});
    add(Q::EquidiagonalOrthodiagonal, {Q::Equidiagonal, Q::Orthodiagonal});
    add(Q::EquidiagonalOrthodiagonalTrapezoid,
        {Q::Equidiagonal, Q::Orthodiagonal, Q::EquidiagonalOrthodiagonal, Q::Trapezoid,
         Q::IsoscelesTrapezoid, Q::Cyclic, Q::CyclicOrthodiagonal, Q::OrthodiagonalTrapezoid});
    add(Q::Harmonic, {Q::Cyclic, Q::EqualProdOpp});
    add(Q::OrthodiagonalTrapezoid, {Q::Orthodiagonal, Q::Trapezoid});
    add(Q::TangentialTrapezoid, {Q::Tangential, Q::Trapezoid});
    add(Q::RightKite, {Q::Kite, Q::Cyclic, Q::Orthodiagonal, Q::Tangential, Q::Extangential,
                       Q::EqualProdAdj, Q::Pythagorean, Q::Hjelmslev, Q::Bicentric,
                       Q::Exbicentric, Q::CyclicOrthodiagonal});
    for (QuadType t : kAllTypes) m[Q::Square].insert(t);
    return m;
}

const std::map<QuadType, TypeSet>& ancestors_map() {
    static const auto m = transitive_ancestors(build_fig_edges());
    return m;
}
const std::map<QuadType, TypeSet>& implied_map() {
    static const auto m = build_implied();
    return m;
}

}  // namespace

const std::set<QuadType>& ancestors(QuadType t) { return ancestors_map().at(t); }
const std::set<QuadType>& implied_types(QuadType t) { return implied_map().at(t); }

// ---------------------------------------------------------------------------
// generators

namespace {

Quadrilateral normalize(Quadrilateral v) {
    Point g{0, 0};
    for (const Point& p : v.V) g += p;
    g = g / 4.0;
    for (Point& p : v.V) p = p - g;
    const double sc = v.scale();
    for (Point& p : v.V) p = p / sc;
    return v;
}

Quadrilateral rotated(Quadrilateral v, double th) {
    const double c = std::cos(th), s = std::sin(th);
    for (Point& p : v.V) p = {c * p.x - s * p.y, s * p.x + c * p.y};
    return v;
}

bool sorted_angles(SeededRng& rng, double gap_min, double gap_max, std::array<double, 4>& ang) {
    for (double& a : ang) a = rng.uniform(0, 2 * M_PI);
    std::sort(ang.begin(), ang.end());
    for (int i = 0; i < 4; ++i) {
        const double gap = (i < 3 ? ang[i + 1] - ang[i] : ang[0] + 2 * M_PI - ang[3]);
        if (gap < gap_min || gap > gap_max) return false;
    }
    return true;
}

Quadrilateral raw_general(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        std::array<double, 4> ang;
        if (!sorted_angles(rng, 0.35, 2 * M_PI, ang)) continue;
        Quadrilateral v;
        for (int i = 0; i < 4; ++i) {
            const double r = rng.uniform(0.55, 1.5);
            v.V[i] = {r * std::cos(ang[i]), r * std::sin(ang[i])};
        }
        if (v.convex_ccw(1e-3)) return v;
    }
    throw GenerationFailed("general");
}

// cyclic with every arc gap < pi: the circumcenter lies strictly inside, which
// keeps the Steiner-point configurations of Sections 7-8 nondegenerate
Quadrilateral raw_cyclic(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        std::array<double, 4> ang;
        if (!sorted_angles(rng, 0.35, M_PI - 0.15, ang)) continue;
        Quadrilateral v;
        for (int i = 0; i < 4; ++i) v.V[i] = {std::cos(ang[i]), std::sin(ang[i])};
        if (v.convex_ccw(1e-3)) return v;
    }
    throw GenerationFailed("cyclic");
}

Quadrilateral raw_tangential(SeededRng& rng) {
    // tangent lines at 4 sorted points of the unit circle; consecutive tangents meet
    for (int k = 0; k < 1000; ++k) {
        std::array<double, 4> ang;
        if (!sorted_angles(rng, 0.4, M_PI - 0.25, ang)) continue;
        Quadrilateral v;
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            const double t1 = ang[i], t2 = ang[(i + 1) % 4];
            const Point p1{std::cos(t1), std::sin(t1)}, p2{std::cos(t2), std::sin(t2)};
            try {
                v.V[(i + 1) % 4] = line_intersection(p1, p1 + perp(p1), p2, p2 + perp(p2));
            } catch (const ParallelLines&) {
                ok = false;
                break;
            }
        }
        if (ok && v.convex_ccw(1e-3)) return v;
    }
    throw GenerationFailed("tangential");
}

Quadrilateral raw_orthodiagonal(SeededRng& rng) {
    const double x1 = rng.uniform(0.3, 1.2), x2 = rng.uniform(0.3, 1.2);
    const double y1 = rng.uniform(0.3, 1.2), y2 = rng.uniform(0.3, 1.2);
    Quadrilateral v;
    v.V = {Point{-x1, 0}, Point{0, -y1}, Point{x2, 0}, Point{0, y2}};
    return rotated(v, rng.uniform(0, 2 * M_PI));
}

Quadrilateral raw_eqortho(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        const double x1 = rng.uniform(0.3, 1.2), x2 = rng.uniform(0.3, 1.2);
        const double y1 = rng.uniform(0.25, x1 + x2 - 0.25);
        const double y2 = x1 + x2 - y1;
        if (y2 < 0.2) continue;
        Quadrilateral v;
        v.V = {Point{-x1, 0}, Point{0, -y1}, Point{x2, 0}, Point{0, y2}};
        return rotated(v, rng.uniform(0, 2 * M_PI));
    }
    throw GenerationFailed("equidiagonalOrthodiagonal");
}

Quadrilateral raw_trapezoid(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        const double p = rng.uniform(0.6, 1.4), q = rng.uniform(0.6, 1.4);
        const double r = rng.uniform(0.25, 1.0), s = rng.uniform(0.25, 1.0);
        const double h = rng.uniform(0.5, 1.4);
        Quadrilateral v;
        v.V = {Point{-r, h}, Point{-p, 0}, Point{q, 0}, Point{s, h}};
        if (!v.convex_ccw(1e-3)) continue;
        return rotated(v, rng.uniform(0, 2 * M_PI));
    }
    throw GenerationFailed("trapezoid");
}

Quadrilateral raw_isoT(SeededRng& rng, double height = -1.0) {
    const double p = rng.uniform(0.6, 1.3);
    const double q = rng.uniform(0.2, p - 0.15);
    const double h = height > 0 ? height : rng.uniform(0.5, 1.4);
    Quadrilateral v;
    v.V = {Point{-q, h}, Point{-p, 0}, Point{p, 0}, Point{q, h}};
    return rotated(v, rng.uniform(0, 2 * M_PI));
}

Quadrilateral raw_isoT_pq(SeededRng& rng, double* pp, double* qq) {
    const double p = rng.uniform(0.6, 1.3);
    const double q = rng.uniform(0.2, p - 0.15);
    *pp = p;
    *qq = q;
    Quadrilateral v;
    v.V = {Point{-q, 1.0}, Point{-p, 0}, Point{p, 0}, Point{q, 1.0}};
    return v;
}

Quadrilateral raw_kite(SeededRng& rng, bool equidiagonal, bool right) {
    // AB = AD labeling: axis is the diagonal AC
    for (int k = 0; k < 1000; ++k) {
        double cx, bx, by;
        if (right) {
            cx = rng.uniform(1.0, 2.0);
            bx = rng.uniform(0.18, cx - 0.18);
            by = std::sqrt(bx * (cx - bx));
        } else if (equidiagonal) {
            by = rng.uniform(0.4, 1.0);
            cx = 2 * by;
            bx = rng.uniform(0.15, cx - 0.15);
        } else {
            cx = rng.uniform(1.0, 2.0);
            bx = rng.uniform(0.2, cx - 0.2);
            by = rng.uniform(0.3, 1.0);
        }
        Quadrilateral v;
        v.V = {Point{0, 0}, Point{bx, -by}, Point{cx, 0}, Point{bx, by}};
        if (equidiagonal && std::abs(check_type(v, QuadType::EquidiagonalKite)) > 1e-12) continue;
        if (!v.convex_ccw(1e-3)) continue;
        return rotated(v, rng.uniform(0, 2 * M_PI));
    }
    throw GenerationFailed("kite");
}

Quadrilateral raw_parallelogram(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        const Point u{rng.uniform(0.7, 1.5), 0};
        const Point w{rng.uniform(-0.6, 0.6), rng.uniform(0.5, 1.3)};
        Quadrilateral v;
        v.V = {Point{0, 0}, u, u + w, w};
        if (!v.convex_ccw(1e-3)) continue;
        return rotated(v, rng.uniform(0, 2 * M_PI));
    }
    throw GenerationFailed("parallelogram");
}

Quadrilateral raw_rectangle(SeededRng& rng) {
    const double w = rng.uniform(0.6, 1.6), h = rng.uniform(0.6, 1.6);
    Quadrilateral v;
    v.V = {Point{0, 0}, Point{w, 0}, Point{w, h}, Point{0, h}};
    return rotated(v, rng.uniform(0, 2 * M_PI));
}

Quadrilateral raw_rhombus(SeededRng& rng) {
    const double th = rng.uniform(0.45, M_PI / 2 - 0.3);
    const Point u{std::cos(th), std::sin(th)}, w{std::cos(th), -std::sin(th)};
    Quadrilateral v;
    v.V = {Point{0, 0}, u, u + w, w};
    // order ccw
    if (!v.convex_ccw(1e-6)) std::swap(v.V[1], v.V[3]);
    return rotated(v, rng.uniform(0, 2 * M_PI));
}

Quadrilateral raw_square(SeededRng& rng) {
    Quadrilateral v;
    v.V = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
    return rotated(v, rng.uniform(0, 2 * M_PI));
}

Quadrilateral raw_hjelmslev(SeededRng& rng) {
    // right angles at B and D: both on the circle with diameter AC
    for (int k = 0; k < 1000; ++k) {
        const double tb = rng.uniform(0.25, M_PI - 0.25);
        const double td = rng.uniform(0.25, M_PI - 0.25);
        Quadrilateral v;
        v.V = {Point{-1, 0}, Point{std::cos(-tb), std::sin(-tb)}, Point{1, 0},
               Point{std::cos(td), std::sin(td)}};
        if (!v.convex_ccw(1e-3)) continue;
        if (check_type(v, QuadType::Kite) < 1e-6) continue;  // avoid the symmetric subfamily
        return rotated(v, rng.uniform(0, 2 * M_PI));
    }
    throw GenerationFailed("Hjelmslev");
}

Quadrilateral raw_cyclic_ortho(SeededRng& rng) {
    // two perpendicular chords of the unit circle
    for (int k = 0; k < 1000; ++k) {
        const Point P{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
        const double th = rng.uniform(0, M_PI);
        const Point d1{std::cos(th), std::sin(th)};
        const Point d2 = perp(d1);
        auto chord = [&P](const Point& d) {
            const double b = 2 * dot(P, d), c0 = dot(P, P) - 1.0;
            const double disc = b * b - 4 * c0;
            const double t1 = (-b - std::sqrt(disc)) / 2, t2 = (-b + std::sqrt(disc)) / 2;
            return std::pair<Point, Point>{P + d * t1, P + d * t2};
        };
        auto [A, C] = chord(d1);
        auto [B, D] = chord(d2);
        Quadrilateral v;
        v.V = {A, B, C, D};
        if (!v.convex_ccw(1e-3)) {
            std::swap(v.V[1], v.V[3]);
            if (!v.convex_ccw(1e-3)) continue;
        }
        // keep the circumcenter strictly inside (common-point selection stability)
        bool inside = true;
        for (int i = 0; i < 4; ++i)
            if (signed_area(v.V[i], v.V[(i + 1) % 4], Point{0, 0}) < 0.02) inside = false;
        if (!inside) continue;
        return v;
    }
    throw GenerationFailed("cyclicOrthodiagonal");
}

// slide D along the ray B->D so that |BD| = |AC|
Quadrilateral raw_equidiagonal(SeededRng& rng) {
    for (int k = 0; k < 1000; ++k) {
        Quadrilateral v = raw_general(rng);
        const double p = v.diag_p(), q = v.diag_q();
        v.V[3] = v.V[1] + (v.V[3] - v.V[1]) * (p / q);
        if (v.convex_ccw(1e-3)) return v;
    }
    throw GenerationFailed("equidiagonal");
}

// 1-D root find: move D along the ray C->D (parameter t scales |CD|)
template <typename Resid>
bool solve_on_ray(Quadrilateral& v, int vertex, const Point& from, Resid resid) {
    const Point dir = v.V[vertex] - from;
    auto value = [&](double t) {
        Quadrilateral w = v;
        w.V[vertex] = from + dir * t;
        return resid(w);
    };
    double lo = 0.35, hi = 2.6;
    const int grid = 60;
    double prev_t = lo, prev_v = value(lo);
    double blo = 0, bhi = 0;
    bool found = false;
    for (int i = 1; i <= grid; ++i) {
        const double t = lo + (hi - lo) * i / grid;
        const double val = value(t);
        if (std::isfinite(prev_v) && std::isfinite(val) && ((prev_v < 0) != (val < 0))) {
            blo = prev_t;
            bhi = t;
            found = true;
            break;
        }
        prev_t = t;
        prev_v = val;
    }
    if (!found) return false;
    double flo = value(blo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (blo + bhi);
        const double fm = value(mid);
        if ((flo < 0) != (fm < 0)) {
            bhi = mid;
        } else {
            blo = mid;
            flo = fm;
        }
    }
    v.V[vertex] = from + dir * (0.5 * (blo + bhi));
    return true;
}

Quadrilateral raw_residual_from_general(SeededRng& rng, QuadType t, const char* what) {
    auto resid_signed = [t](const Quadrilateral& w) -> double {
        const Sides s(w);
        switch (t) {
            case QuadType::Extangential: return s.a + s.b - s.c - s.d;
            case QuadType::EqualProdOpp: return s.a * s.c - s.b * s.d;
            case QuadType::EqualProdAdj: return s.a * s.b - s.c * s.d;
            case QuadType::Pythagorean:
                return s.a * s.a + s.b * s.b - s.c * s.c - s.d * s.d;
            default: return 0;
        }
    };
    for (int k = 0; k < 1000; ++k) {
        Quadrilateral v = raw_general(rng);
        if (!solve_on_ray(v, 3, v.V[2], resid_signed)) continue;
        if (!v.convex_ccw(1e-3)) continue;
        if (check_type(v, t) < 1e-12) return v;
    }
    throw GenerationFailed(what);
}

Quadrilateral raw_apquad(SeededRng& rng) {
    // alternate 1-D solves: C fixes (c-b)-(b-a), D fixes (d-c)-(c-b)
    for (int k = 0; k < 1000; ++k) {
        Quadrilateral v = raw_general(rng);
        bool ok = true;
        for (int round = 0; round < 60 && ok; ++round) {
            auto r1 = [](const Quadrilateral& w) {
                const Sides s(w);
                return (s.c - s.b) - (s.b - s.a);
            };
            auto r2 = [](const Quadrilateral& w) {
                const Sides s(w);
                return (s.d - s.c) - (s.c - s.b);
            };
            if (!solve_on_ray(v, 2, v.V[1], r1)) { ok = false; break; }
            if (!solve_on_ray(v, 3, v.V[0], r2)) { ok = false; break; }
            if (check_type(v, QuadType::APquad) < 1e-13) break;
        }
        if (ok && v.convex_ccw(1e-3) && check_type(v, QuadType::APquad) < 1e-12) return v;
    }
    throw GenerationFailed("APquad");
}

// slide D along the circumcircle (cyclic stays cyclic) until resid crosses zero
template <typename Resid>
Quadrilateral cyclic_with(SeededRng& rng, Resid resid, const char* what) {
    for (int k = 0; k < 1000; ++k) {
        std::array<double, 4> ang;
        if (!sorted_angles(rng, 0.35, M_PI - 0.15, ang)) continue;
        auto build = [&ang](double t) {
            Quadrilateral v;
            for (int i = 0; i < 3; ++i) v.V[i] = {std::cos(ang[i]), std::sin(ang[i])};
            v.V[3] = {std::cos(t), std::sin(t)};
            return v;
        };
        const double lo = ang[2] + 0.12, hi = ang[0] + 2 * M_PI - 0.12;
        if (hi <= lo) continue;
        const int grid = 80;
        double prev_t = lo, prev_v = resid(build(lo));
        double blo = 0, bhi = 0;
        bool found = false;
        for (int i = 1; i <= grid; ++i) {
            const double t = lo + (hi - lo) * i / grid;
            const double val = resid(build(t));
            if (std::isfinite(prev_v) && std::isfinite(val) && ((prev_v < 0) != (val < 0))) {
                blo = prev_t;
                bhi = t;
                found = true;
                break;
            }
            prev_t = t;
            prev_v = val;
        }
        if (!found) continue;
        double flo = resid(build(blo));
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (blo + bhi);
            const double fm = resid(build(mid));
            if ((flo < 0) != (fm < 0)) {
                bhi = mid;
            } else {
                blo = mid;
                flo = fm;
            }
        }
        Quadrilateral v = build(0.5 * (blo + bhi));
        // keep center inside for the Steiner-point sections
        bool inside = true;
        for (int i = 0; i < 4; ++i)
            if (signed_area(v.V[i], v.V[(i + 1) % 4], Point{0, 0}) < 0.02) inside = false;
        if (inside && v.convex_ccw(1e-3)) return v;
    }
    throw GenerationFailed(what);
}

}  // namespace

Quadrilateral generate(QuadType t, SeededRng& rng) {
    using Q = QuadType;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Quadrilateral v;
        switch (t) {
            case Q::General: v = raw_general(rng); break;
            case Q::Cyclic: v = raw_cyclic(rng); break;
            case Q::Tangential: v = raw_tangential(rng); break;
            case Q::Orthodiagonal: v = raw_orthodiagonal(rng); break;
            case Q::Equidiagonal: v = raw_equidiagonal(rng); break;
            case Q::Parallelogram: v = raw_parallelogram(rng); break;
            case Q::Rectangle: v = raw_rectangle(rng); break;
            case Q::Rhombus: v = raw_rhombus(rng); break;
            case Q::Square: v = raw_square(rng); break;
            case Q::Trapezoid: v = raw_trapezoid(rng); break;
            case Q::IsoscelesTrapezoid: v = raw_isoT(rng); break;
            case Q::Kite: v = raw_kite(rng, false, false); break;
            case Q::EquidiagonalKite: v = raw_kite(rng, true, false); break;
            case Q::RightKite: v = raw_kite(rng, false, true); break;
            case Q::Hjelmslev: v = raw_hjelmslev(rng); break;
            case Q::CyclicOrthodiagonal: v = raw_cyclic_ortho(rng); break;
            case Q::EquidiagonalOrthodiagonal: v = raw_eqortho(rng); break;
            case Q::Extangential:
                v = raw_residual_from_general(rng, Q::Extangential, "extangential");
                break;
            case Q::EqualProdOpp:
                v = raw_residual_from_general(rng, Q::EqualProdOpp, "equalProdOpp");
                break;
            case Q::EqualProdAdj:
                v = raw_residual_from_general(rng, Q::EqualProdAdj, "equalProdAdj");
                break;
            case Q::Pythagorean:
                v = raw_residual_from_general(rng, Q::Pythagorean, "Pythagorean");
                break;
            case Q::APquad: v = raw_apquad(rng); break;
            case Q::Bicentric:
                v = cyclic_with(rng, [](const Quadrilateral& w) {
                    const Sides s(w);
                    return s.a + s.c - s.b - s.d;
                }, "bicentric");
                break;
            case Q::Exbicentric:
                v = cyclic_with(rng, [](const Quadrilateral& w) {
                    const Sides s(w);
                    return s.a + s.b - s.c - s.d;
                }, "exbicentric");
                break;
            case Q::Harmonic:
                v = cyclic_with(rng, [](const Quadrilateral& w) {
                    const Sides s(w);
                    return s.a * s.c - s.b * s.d;
                }, "harmonic");
                break;
            case Q::BicentricTrapezoid: {
                double p = 0, q = 0;
                raw_isoT_pq(rng, &p, &q);
                Quadrilateral w;
                const double h = 2.0 * std::sqrt(p * q);  // Pitot holds exactly
                w.V = {Point{-q, h}, Point{-p, 0}, Point{p, 0}, Point{q, h}};
                v = rotated(w, rng.uniform(0, 2 * M_PI));
                break;
            }
            case Q::EquidiagonalOrthodiagonalTrapezoid: {
                double p = 0, q = 0;
                raw_isoT_pq(rng, &p, &q);
                Quadrilateral w;
                const double h = p + q;  // diagonals perpendicular exactly
                w.V = {Point{-q, h}, Point{-p, 0}, Point{p, 0}, Point{q, h}};
                v = rotated(w, rng.uniform(0, 2 * M_PI));
                break;
            }
            case Q::OrthodiagonalTrapezoid: {
                const double p = rng.uniform(0.6, 1.4), q = rng.uniform(0.6, 1.4);
                const double r = rng.uniform(0.25, 1.0), s = rng.uniform(0.25, 1.0);
                const double h = std::sqrt((q + r) * (s + p));
                Quadrilateral w;
                w.V = {Point{-r, h}, Point{-p, 0}, Point{q, 0}, Point{s, h}};
                if (!w.convex_ccw(1e-3)) continue;
                v = rotated(w, rng.uniform(0, 2 * M_PI));
                break;
            }
            case Q::TangentialTrapezoid: {
                // tangent lines at antipodal circle points are parallel, so tangent
                // points alpha, beta, alpha+pi, delta give a tangential trapezoid
                const double alpha = rng.uniform(0, 2 * M_PI);
                const double u = rng.uniform(0.35, M_PI - 0.35);
                const double w2 = rng.uniform(0.35, M_PI - 0.35);
                if (std::abs(u - w2) < 0.1) continue;  // near-isosceles is rejected later anyway
                std::array<double, 4> ang = {alpha, alpha + u, alpha + M_PI, alpha + M_PI + w2};
                Quadrilateral w;
                bool ok = true;
                for (int i = 0; i < 4 && ok; ++i) {
                    const double t1 = ang[i], t2 = ang[(i + 1) % 4];
                    const Point p1{std::cos(t1), std::sin(t1)}, p2{std::cos(t2), std::sin(t2)};
                    try {
                        w.V[(i + 1) % 4] = line_intersection(p1, p1 + perp(p1), p2, p2 + perp(p2));
                    } catch (const ParallelLines&) {
                        ok = false;
                    }
                }
                if (!ok) continue;
                if (!w.convex_ccw(1e-3)) {
                    std::swap(w.V[1], w.V[3]);
                    if (!w.convex_ccw(1e-3)) continue;
                }
                if (check_type(w, Q::TangentialTrapezoid) > 1e-11) continue;
                v = w;
                break;
            }
        }

        v = normalize(v);
        if (check_type(v, t) > 1e-11) continue;

        // genericity: reject samples accidentally close to a non-implied type
        const auto& impl = implied_types(t);
        bool generic = true;
        for (QuadType other : kAllTypes) {
            if (impl.count(other)) continue;
            if (check_type(v, other) < 1e-8) {
                generic = false;
                break;
            }
        }
        if (!generic) continue;
        return v;
    }
    throw GenerationFailed(quad_type_name(t));
}

}  // namespace cq
