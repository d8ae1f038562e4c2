#include "cq/geometry.hpp"

#include <algorithm>

namespace cq {

double signed_area(const Point& P, const Point& Q, const Point& R) {
    return 0.5 * cross(Q - P, R - P);
}

double Triangle::signed_area() const { return cq::signed_area(A, B, C); }

double Triangle::scale() const { return std::max({dist(A, B), dist(B, C), dist(C, A)}); }

double scale_of(const std::array<Point, 4>& pts) { return scale_of(pts.begin(), pts.end()); }
double scale_of(const std::array<Point, 3>& pts) { return scale_of(pts.begin(), pts.end()); }

Point line_intersection(const Point& P1, const Point& P2, const Point& Q1, const Point& Q2,
                        const Tolerance& tol) {
    const Point d1 = P2 - P1, d2 = Q2 - Q1;
    const double den = cross(d1, d2);
    const double scale = std::max({norm(d1), norm(d2), dist(P1, Q1)});
    if (std::abs(den) <= tol.rel * scale * scale) throw ParallelLines{};
    const double t = cross(Q1 - P1, d2) / den;
    return P1 + d1 * t;
}

Circle circumcircle(const Point& P, const Point& Q, const Point& R, const Tolerance& tol) {
    const double d = 2.0 * (P.x * (Q.y - R.y) + Q.x * (R.y - P.y) + R.x * (P.y - Q.y));
    const double scale = std::max({dist(P, Q), dist(Q, R), dist(R, P)});
    if (std::abs(d) <= 2.0 * tol.rel * scale * scale) throw Collinear{};
    const double p2 = dot(P, P), q2 = dot(Q, Q), r2 = dot(R, R);
    Circle c;
    c.center.x = (p2 * (Q.y - R.y) + q2 * (R.y - P.y) + r2 * (P.y - Q.y)) / d;
    c.center.y = (p2 * (R.x - Q.x) + q2 * (P.x - R.x) + r2 * (Q.x - P.x)) / d;
    c.radius = dist(c.center, P);
    return c;
}

std::pair<Point, Point> circle_intersection(const Circle& c1, const Circle& c2,
                                            const Tolerance& tol) {
    const double d = dist(c1.center, c2.center);
    const double scale = std::max({d, c1.radius, c2.radius});
    const double slack = tol.rel * scale;
    if (d > c1.radius + c2.radius + slack || d < std::abs(c1.radius - c2.radius) - slack ||
        d <= slack)
        throw Disjoint{};
    const double a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - a * a;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Point ex = (c2.center - c1.center) / d;
    const Point ey = perp(ex);
    const Point base = c1.center + ex * a;
    return {base + ey * h, base - ey * h};
}

Line perpendicular_bisector(const Point& P, const Point& Q) {
    return {midpoint(P, Q), perp(Q - P)};
}

Point foot_on_line(const Point& P, const Line& L) {
    const double t = dot(P - L.p, L.dir) / dot(L.dir, L.dir);
    return L.p + L.dir * t;
}

Point reflect_about_line(const Point& P, const Line& L) {
    const Point f = foot_on_line(P, L);
    return f * 2.0 - P;
}

double point_line_distance(const Point& P, const Line& L) {
    return std::abs(cross(L.dir, P - L.p)) / norm(L.dir);
}

bool parallel(const Point& u, const Point& v, double scale, const Tolerance& tol) {
    (void)scale;
    return std::abs(cross(u, v)) <= tol.rel * norm(u) * norm(v);
}

bool perpendicular(const Point& u, const Point& v, double scale, const Tolerance& tol) {
    (void)scale;
    return std::abs(dot(u, v)) <= tol.rel * norm(u) * norm(v);
}

bool point_on_circle(const Point& P, const Circle& c, const Tolerance& tol) {
    return tol.zero(dist(P, c.center) - c.radius, c.radius, 1);
}

Homothety detect_homothety(const std::array<Point, 4>& src, const std::array<Point, 4>& dst,
                           const Tolerance& tol) {
    Point sbar{0, 0}, dbar{0, 0};
    for (int i = 0; i < 4; ++i) {
        sbar += src[i];
        dbar += dst[i];
    }
    sbar = sbar / 4.0;
    dbar = dbar / 4.0;

    const double scale = std::max(scale_of(src), scale_of(dst));
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 4; ++i) {
        num += dot(dst[i] - dbar, src[i] - sbar);
        den += dot(src[i] - sbar, src[i] - sbar);
    }
    if (den <= tol.rel * scale * scale) throw NotHomothetic{};
    const double k = num / den;
    if (std::abs(k) <= tol.rel) throw NotHomothetic{};

    // residual of the similarity part (rotation would show up here)
    for (int i = 0; i < 4; ++i) {
        const Point r = (dst[i] - dbar) - (src[i] - sbar) * k;
        if (norm(r) > tol.rel * scale * std::max(1.0, std::abs(k))) throw NotHomothetic{};
    }

    if (std::abs(k - 1.0) <= tol.rel) {
        // only src == dst pointwise has a well-defined report; translations do not
        for (int i = 0; i < 4; ++i)
            if (dist(src[i], dst[i]) > tol.rel * scale) throw NotHomothetic{};
        return {sbar, 1.0};
    }
    const Point center = (dbar - sbar * k) / (1.0 - k);
    return {center, k};
}

}  // namespace cq
