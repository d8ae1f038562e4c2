#include "cq/radiators.hpp"

#include <algorithm>
#include <map>

namespace cq {

namespace {
const std::map<RadiatorKind, std::string> kRadNames = {
    {RadiatorKind::Arbitrary, "arbitrary"},
    {RadiatorKind::DiagonalPoint, "diagonal-point"},
    {RadiatorKind::PonceletPoint, "poncelet"},
    {RadiatorKind::SteinerPoint, "steiner"},
    {RadiatorKind::VertexCentroid, "vertex-centroid"},
    {RadiatorKind::AreaCentroid, "area-centroid"},
    {RadiatorKind::OnAxis, "on-axis"},
    {RadiatorKind::OnPerpBisector, "on-perp-bisector"},
    {RadiatorKind::OnDiagonalBD, "on-diagonal-bd"},
};
}

const std::string& radiator_name(RadiatorKind k) { return kRadNames.at(k); }

RadiatorKind radiator_from_name(const std::string& name) {
    for (const auto& [k, n] : kRadNames)
        if (n == name) return k;
    throw CqError("unknown radiator '" + name + "'");
}

Point diagonal_point(const Quadrilateral& q) {
    return line_intersection(q.V[0], q.V[2], q.V[1], q.V[3]);
}

Point vertex_centroid(const Quadrilateral& q) {
    return (q.V[0] + q.V[1] + q.V[2] + q.V[3]) / 4.0;
}

Point area_centroid(const Quadrilateral& q) {
    // intersection of the diagonals of the centroid quadrilateral G_A G_B G_C G_D
    const Point GA = (q.V[1] + q.V[2] + q.V[3]) / 3.0;
    const Point GB = (q.V[0] + q.V[2] + q.V[3]) / 3.0;
    const Point GC = (q.V[0] + q.V[1] + q.V[3]) / 3.0;
    const Point GD = (q.V[0] + q.V[1] + q.V[2]) / 3.0;
    return line_intersection(GA, GC, GB, GD);
}

namespace {

Circle midray_circle_pts(const std::array<Point, 4>& pts, int vertex, const Tolerance& tol) {
    const Point& P = pts[vertex];
    std::array<Point, 3> mids;
    int k = 0;
    for (int j = 0; j < 4; ++j)
        if (j != vertex) mids[k++] = midpoint(P, pts[j]);
    return circumcircle(mids[0], mids[1], mids[2], tol);
}

// choose the intersection of the first two circles whose worst distance to the
// remaining circles is least; ties broken toward `prefer` when supplied
Point common_point(const std::array<Circle, 4>& circ, const Tolerance& tol,
                   const Point* prefer) {
    auto [X1, X2] = circle_intersection(circ[0], circ[1], tol);
    auto resid = [&circ](const Point& X) {
        double r = 0.0;
        for (int i = 2; i < 4; ++i)
            r = std::max(r, std::abs(dist(X, circ[i].center) - circ[i].radius));
        return r;
    };
    const double r1 = resid(X1), r2 = resid(X2);
    double scale = 0.0;
    for (const Circle& c : circ) scale = std::max(scale, c.radius);
    Point best = X1;
    double rb = r1;
    if (r2 < r1) {
        best = X2;
        rb = r2;
    }
    if (prefer && std::abs(r1 - r2) <= 1e-6 * scale) {
        best = dist(X1, *prefer) <= dist(X2, *prefer) ? X1 : X2;
        rb = std::min(r1, r2);
    }
    if (rb > 1e-7 * scale) throw NoCommonPoint(rb);
    return best;
}

}  // namespace

Circle midray_circle(const Quadrilateral& q, int vertex, const Tolerance& tol) {
    return midray_circle_pts(q.V, vertex, tol);
}

Circle ninepoint_circle(const Point& A, const Point& B, const Point& C, const Tolerance& tol) {
    return circumcircle(midpoint(A, B), midpoint(B, C), midpoint(C, A), tol);
}

Point steiner_point(const std::array<Point, 4>& pts, const Tolerance& tol) {
    std::array<Circle, 4> circ;
    for (int i = 0; i < 4; ++i) circ[i] = midray_circle_pts(pts, i, tol);
    Point inner{0, 0};
    for (const Point& p : pts) inner += p;
    inner = inner / 4.0;
    return common_point(circ, tol, &inner);
}

Point steiner_point(const Quadrilateral& q, const Tolerance& tol) {
    return steiner_point(q.V, tol);
}

Point poncelet_point(const std::array<Point, 4>& pts, const Tolerance& tol) {
    std::array<Circle, 4> circ;
    for (int i = 0; i < 4; ++i) {
        std::array<Point, 3> tri;
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) tri[k++] = pts[j];
        circ[i] = ninepoint_circle(tri[0], tri[1], tri[2], tol);
    }
    Point inner{0, 0};
    for (const Point& p : pts) inner += p;
    inner = inner / 4.0;
    return common_point(circ, tol, &inner);
}

Point poncelet_point(const Quadrilateral& q, const Tolerance& tol) {
    return poncelet_point(q.V, tol);
}

Point arbitrary_radiator(const Quadrilateral& q, SeededRng& rng) {
    double lox = q.V[0].x, hix = q.V[0].x, loy = q.V[0].y, hiy = q.V[0].y;
    for (const Point& p : q.V) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    const double sc = q.scale();
    for (int k = 0; k < 4000; ++k) {
        const Point E{rng.uniform(lox, hix), rng.uniform(loy, hiy)};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            // strictly inside, clear of each side line and each vertex
            if (signed_area(q.V[i], q.V[(i + 1) % 4], E) < 1e-3 * sc * sc) ok = false;
            if (dist(E, q.V[i]) < 1e-2 * sc) ok = false;
        }
        if (ok) return E;
    }
    throw CqError("could not sample an interior radiator");
}

Point radiator_point(const Quadrilateral& q, RadiatorKind k, SeededRng& rng,
                     const Tolerance& tol) {
    switch (k) {
        case RadiatorKind::Arbitrary: return arbitrary_radiator(q, rng);
        case RadiatorKind::DiagonalPoint: return diagonal_point(q);
        case RadiatorKind::PonceletPoint: return poncelet_point(q, tol);
        case RadiatorKind::SteinerPoint: return steiner_point(q, tol);
        case RadiatorKind::VertexCentroid: return vertex_centroid(q);
        case RadiatorKind::AreaCentroid: return area_centroid(q);
        case RadiatorKind::OnAxis: {
            const double t = rng.uniform(0.15, 0.85);
            return q.V[0] + (q.V[2] - q.V[0]) * t;
        }
        case RadiatorKind::OnPerpBisector: {
            // segment of the axis between the midpoints of BC and AD
            const Point m1 = midpoint(q.V[1], q.V[2]);
            const Point m2 = midpoint(q.V[0], q.V[3]);
            const double t = rng.uniform(0.15, 0.85);
            return m1 + (m2 - m1) * t;
        }
        case RadiatorKind::OnDiagonalBD: {
            const double t = rng.uniform(0.2, 0.8);
            return q.V[1] + (q.V[3] - q.V[1]) * t;
        }
    }
    throw CqError("bad radiator kind");
}

std::array<Point, 4> sub_quadrilateral_centers(const Quadrilateral& q, const Point& E,
                                               SubQuadCenterKind kind, const Tolerance& tol) {
    auto one = [&](int omit) -> Point {
        std::array<Point, 4> pts;
        int k = 0;
        pts[k++] = E;
        for (int j = 0; j < 4; ++j)
            if (j != omit) pts[k++] = q.V[j];
        switch (kind) {
            case SubQuadCenterKind::VertexCentroid:
                return (pts[0] + pts[1] + pts[2] + pts[3]) / 4.0;
            case SubQuadCenterKind::SteinerPoint: return steiner_point(pts, tol);
            case SubQuadCenterKind::PonceletPoint: return poncelet_point(pts, tol);
        }
        throw CqError("bad sub-quad center kind");
    };
    return {one(0), one(1), one(2), one(3)};
}

}  // namespace cq
