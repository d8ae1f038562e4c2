#pragma once
// Plane geometry primitives and predicates shared by every other module.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace cq {

struct CqError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParallelLines : CqError { ParallelLines() : CqError("lines are parallel") {} };
struct Collinear : CqError { Collinear() : CqError("points are collinear") {} };
struct Disjoint : CqError { Disjoint() : CqError("circles do not intersect") {} };
struct NotHomothetic : CqError { NotHomothetic() : CqError("no homothety maps src to dst") {} };
struct DegenerateTriangle : CqError { DegenerateTriangle() : CqError("degenerate triangle") {} };

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double x_, double y_) : x(x_), y(y_) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    Point operator/(double s) const { return {x / s, y / s}; }
    Point& operator+=(const Point& o) { x += o.x; y += o.y; return *this; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point operator*(double s, const Point& p) { return p * s; }

inline double dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline double cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline double norm(const Point& u) { return std::hypot(u.x, u.y); }
inline double dist(const Point& p, const Point& q) { return norm(p - q); }
inline Point midpoint(const Point& p, const Point& q) { return (p + q) * 0.5; }
inline Point perp(const Point& u) { return {-u.y, u.x}; }

struct Circle {
    Point center;
    double radius = 0.0;
};

struct Line {
    Point p;    // a point on the line
    Point dir;  // direction, not necessarily unit
};

// Comparison policy: a residual of polynomial degree k in the coordinates is
// compared against rel * scale^k, where scale is the characteristic length of
// the configuration (max pairwise distance of its defining points).
struct Tolerance {
    double rel = 1e-9;

    bool zero(double residual, double scale, int degree = 1) const {
        return std::abs(residual) <= rel * std::pow(scale, degree);
    }
};

struct Triangle {
    Point A, B, C;

    double a() const { return dist(B, C); }
    double b() const { return dist(C, A); }
    double c() const { return dist(A, B); }
    double signed_area() const;
    double scale() const;
};

double signed_area(const Point& P, const Point& Q, const Point& R);

// scale of a point set = max pairwise distance
template <typename It>
double scale_of(It first, It last) {
    double s = 0.0;
    for (It i = first; i != last; ++i)
        for (It j = std::next(i); j != last; ++j) s = std::max(s, dist(*i, *j));
    return s;
}

double scale_of(const std::array<Point, 4>& pts);
double scale_of(const std::array<Point, 3>& pts);

Point line_intersection(const Point& P1, const Point& P2, const Point& Q1, const Point& Q2,
                        const Tolerance& tol = {});
Circle circumcircle(const Point& P, const Point& Q, const Point& R, const Tolerance& tol = {});
std::pair<Point, Point> circle_intersection(const Circle& c1, const Circle& c2,
                                            const Tolerance& tol = {});

Line perpendicular_bisector(const Point& P, const Point& Q);
Point reflect_about_line(const Point& P, const Line& L);
Point foot_on_line(const Point& P, const Line& L);
double point_line_distance(const Point& P, const Line& L);

bool parallel(const Point& u, const Point& v, double scale, const Tolerance& tol = {});
bool perpendicular(const Point& u, const Point& v, double scale, const Tolerance& tol = {});
bool point_on_circle(const Point& P, const Circle& c, const Tolerance& tol = {});

struct Homothety {
    Point center;
    double ratio = 1.0;
};

// Fits dst_i = P + k (src_i - P). Pure translations (k = 1, src != dst) have no
// finite center and are reported as NotHomothetic; src == dst pointwise gives k = 1
// with the common centroid as center.
Homothety detect_homothety(const std::array<Point, 4>& src, const std::array<Point, 4>& dst,
                           const Tolerance& tol = {});

}  // namespace cq
