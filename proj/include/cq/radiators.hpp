#pragma once
// Radiator points of a quadrilateral (the paper's Table 2) and the
// sub-quadrilateral center constructions of Section 9.6.

#include <array>
#include <string>

#include "cq/geometry.hpp"
#include "cq/quad.hpp"

namespace cq {

struct NoCommonPoint : CqError {
    explicit NoCommonPoint(double res)
        : CqError("circles admit no common point (residual " + std::to_string(res) + ")") {}
};

enum class RadiatorKind {
    Arbitrary,       // uniform in the interior, away from boundary and vertices
    DiagonalPoint,
    PonceletPoint,
    SteinerPoint,
    VertexCentroid,
    AreaCentroid,
    OnAxis,          // on diagonal AC of a kite (its symmetry axis)
    OnPerpBisector,  // on the perpendicular bisector of BC of an isosceles trapezoid
    OnDiagonalBD,    // on diagonal BD (Section 8 lemma configurations)
};

const std::string& radiator_name(RadiatorKind k);
RadiatorKind radiator_from_name(const std::string& name);

Point diagonal_point(const Quadrilateral& q);
Point vertex_centroid(const Quadrilateral& q);
Point area_centroid(const Quadrilateral& q);

Circle midray_circle(const Quadrilateral& q, int vertex, const Tolerance& tol = {});
Circle ninepoint_circle(const Point& A, const Point& B, const Point& C, const Tolerance& tol = {});

Point steiner_point(const Quadrilateral& q, const Tolerance& tol = {});
Point poncelet_point(const Quadrilateral& q, const Tolerance& tol = {});
// the same two constructions for an unordered quadrangle {P0..P3}
Point steiner_point(const std::array<Point, 4>& pts, const Tolerance& tol = {});
Point poncelet_point(const std::array<Point, 4>& pts, const Tolerance& tol = {});

// arbitrary interior point, rejected near the boundary or a vertex
Point arbitrary_radiator(const Quadrilateral& q, SeededRng& rng);

// radiator for the given kind; rng consumed only by the randomized kinds
Point radiator_point(const Quadrilateral& q, RadiatorKind k, SeededRng& rng,
                     const Tolerance& tol = {});

enum class SubQuadCenterKind { VertexCentroid, SteinerPoint, PonceletPoint };

// F,G,H,I = the requested quadrangle center of EBCD, EACD, EABD, EABC
std::array<Point, 4> sub_quadrilateral_centers(const Quadrilateral& q, const Point& E,
                                               SubQuadCenterKind kind, const Tolerance& tol = {});

}  // namespace cq
