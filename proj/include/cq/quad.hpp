#pragma once
// Reference-quadrilateral types: constraint residuals, the curated ancestor
// graph used for table suppression, the full implication closure used for
// genericity rejection, and seeded random generators for all 29 types.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cq/geometry.hpp"

namespace cq {

struct GenerationFailed : CqError {
    explicit GenerationFailed(const std::string& what) : CqError("generation failed: " + what) {}
};

enum class QuadType {
    General,
    Cyclic,
    Tangential,
    Extangential,
    Parallelogram,
    EqualProdOpp,
    EqualProdAdj,
    Orthodiagonal,
    Equidiagonal,
    Pythagorean,
    Kite,
    Trapezoid,
    Rhombus,
    Rectangle,
    Hjelmslev,
    IsoscelesTrapezoid,
    APquad,
    Bicentric,
    Exbicentric,
    BicentricTrapezoid,
    CyclicOrthodiagonal,
    EquidiagonalKite,
    EquidiagonalOrthodiagonal,
    EquidiagonalOrthodiagonalTrapezoid,
    Harmonic,
    OrthodiagonalTrapezoid,
    TangentialTrapezoid,
    Square,
    RightKite,
};

constexpr int kNumQuadTypes = 29;
const std::vector<QuadType>& all_quad_types();
const std::string& quad_type_name(QuadType t);
QuadType quad_type_from_name(const std::string& name);  // throws CqError

struct Quadrilateral {
    std::array<Point, 4> V;  // A, B, C, D in counterclockwise convex order

    const Point& A() const { return V[0]; }
    const Point& B() const { return V[1]; }
    const Point& C() const { return V[2]; }
    const Point& D() const { return V[3]; }

    double side(int i) const { return dist(V[i], V[(i + 1) % 4]); }  // a,b,c,d = side(0..3)
    double diag_p() const { return dist(V[0], V[2]); }
    double diag_q() const { return dist(V[1], V[3]); }
    double scale() const { return scale_of(V); }
    double area() const;
    bool convex_ccw(double margin = 1e-9) const;
};

// 64-bit deterministic generator; identical seed => identical stream on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    // derive an independent stream (used for per-cell seeding)
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

private:
    std::uint64_t state_;
};

// max of the normalized constraint residuals; ~0 iff q is of the type
double check_type(const Quadrilateral& q, QuadType t);

// curated specialization graph (the paper's figure): transitive closure
const std::set<QuadType>& ancestors(QuadType t);
// full mathematical implication closure (every type whose constraints a
// generic instance of t satisfies identically); superset of ancestors()
const std::set<QuadType>& implied_types(QuadType t);

// convex quadrilateral with all residuals of the type below 1e-12 (normalized),
// vertices normalized to centroid 0 and scale ~1, deterministic in (type, seed)
Quadrilateral generate(QuadType t, SeededRng& rng);

}  // namespace cq
