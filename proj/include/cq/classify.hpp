#pragma once
// Shape predicates for a 4-point central quadrilateral, evaluated for the three
// vertex pairings, with relational extras against the reference configuration.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cq/geometry.hpp"
#include "cq/quad.hpp"

namespace cq {

enum class Shape {
    Parallelogram,
    Rhombus,
    Rectangle,
    Square,
    Kite,
    RightKite,
    Trapezoid,          // exclusive: exactly one parallel pair
    IsoscelesTrapezoid,
    Cyclic,
    Tangential,
    Extangential,
    Bicentric,
    TangentialTrapezoid,
    Orthodiagonal,
    Equidiagonal,
    EqualProdOpp,
    EqualProdAdj,
    Pythagorean,
    Hjelmslev,
    APquad,
    Harmonic,
};
constexpr int kNumShapes = 21;
const std::vector<Shape>& all_shapes();
const std::string& shape_name(Shape s);  // snake_case
Shape shape_from_name(const std::string& name);

enum class Ordering { FGHI, FGIH, FHGI };
constexpr int kNumOrderings = 3;
const std::string& ordering_name(Ordering o);
std::array<Point, 4> reorder(const std::array<Point, 4>& pts, Ordering o);

enum class Degeneracy { Nondegenerate, Collinear, CoincidentPoints };

enum class Extra {
    IncenterIsE,
    IncircleEqualsRefCircumcircle,
    InradiusHalfRefCircumradius,
    CircleThroughE,
    DiagonalsMeetAtE,
    DiagonalsParallelToRefSides,
    SidesParallelToRefDiagonals,
    SameDiagonalPointAsRef,
    ContactPointsOnRefDiagonal,
};
const std::string& extra_name(Extra e);

struct PredicateResult {
    bool holds = false;
    double residual = 0.0;
};

struct ShapeReport {
    Degeneracy degeneracy = Degeneracy::Nondegenerate;
    // predicate results per ordering; empty when degenerate
    std::array<std::map<Shape, PredicateResult>, kNumOrderings> per_ordering;
    // extras are evaluated on the FGHI ordering (and trapezoid-dependent ones on
    // the ordering where the prerequisite holds)
    std::map<Extra, PredicateResult> extras;

    bool holds(Shape s, Ordering o = Ordering::FGHI) const;
    double residual(Shape s, Ordering o = Ordering::FGHI) const;
    std::string to_json() const;
};

struct RefConfig {
    Quadrilateral quad;
    Point E;
};

ShapeReport classify(const std::array<Point, 4>& pts, const std::optional<RefConfig>& ref,
                     const Tolerance& tol = {});

// shape implication lattice: implied_shapes(s) = everything s implies
const std::set<Shape>& implied_shapes(Shape s);
// predicates that hold with no holding strictly-stronger predicate
std::set<Shape> most_specific(const std::map<Shape, PredicateResult>& results);
std::set<Shape> most_specific(const std::set<Shape>& holding);

// incircle of a tangential polygon ordering: center, mean radius, radius spread
struct Incircle {
    Point center;
    double radius = 0.0;
    double spread = 0.0;
};
Incircle incircle_of(const std::array<Point, 4>& pts);

}  // namespace cq
