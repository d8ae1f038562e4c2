#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cq/radiators.hpp"

using namespace cq;

namespace {
Quadrilateral make(std::initializer_list<Point> pts) {
    Quadrilateral q;
    int i = 0;
    for (const Point& p : pts) q.V[i++] = p;
    return q;
}
}  // namespace

TEST_CASE("diagonal point") {
    CHECK(dist(diagonal_point(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), {0.5, 0.5}) < 1e-14);
    CHECK(dist(diagonal_point(make({{0, 0}, {2, 0}, {2, 1}, {0, 1}})), {1, 0.5}) < 1e-14);
    // kite with axis through the origin
    CHECK(dist(diagonal_point(make({{0, -1}, {1, 0}, {0, 2}, {-1, 0}})), {0, 0}) < 1e-14);
}

TEST_CASE("vertex centroid and bimedians") {
    const auto q = make({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
    CHECK(dist(vertex_centroid(q), {2, 1}) < 1e-14);

    SeededRng rng(5);
    for (int k = 0; k < 50; ++k) {
        const Quadrilateral w = generate(QuadType::General, rng);
        const Point g = vertex_centroid(w);
        const Point m1 = midpoint(midpoint(w.V[0], w.V[1]), midpoint(w.V[2], w.V[3]));
        const Point m2 = midpoint(midpoint(w.V[1], w.V[2]), midpoint(w.V[3], w.V[0]));
        CHECK(dist(g, m1) < 1e-14 * w.scale());
        CHECK(dist(g, m2) < 1e-14 * w.scale());
    }
}

TEST_CASE("area centroid") {
    CHECK(dist(area_centroid(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), {0.5, 0.5}) < 1e-14);

    // oracle: area-weighted average of the two triangle centroids split by AC
    SeededRng rng(8);
    for (int k = 0; k < 50; ++k) {
        const Quadrilateral q = generate(QuadType::General, rng);
        const double a1 = signed_area(q.V[0], q.V[1], q.V[2]);
        const double a2 = signed_area(q.V[0], q.V[2], q.V[3]);
        const Point g1 = (q.V[0] + q.V[1] + q.V[2]) / 3.0;
        const Point g2 = (q.V[0] + q.V[2] + q.V[3]) / 3.0;
        const Point expect = (g1 * a1 + g2 * a2) / (a1 + a2);
        CHECK(dist(area_centroid(q), expect) < 1e-12 * q.scale());
    }

    // kite: the area centroid lies on the axis AC
    SeededRng rng2(11);
    for (int k = 0; k < 30; ++k) {
        const Quadrilateral q = generate(QuadType::Kite, rng2);
        const Point g = area_centroid(q);
        CHECK(point_line_distance(g, Line{q.V[0], q.V[2] - q.V[0]}) < 1e-9 * q.scale());
    }
}

TEST_CASE("steiner point lies on all four midray circles") {
    SeededRng rng(21);
    for (int k = 0; k < 100; ++k) {
        const Quadrilateral q = generate(QuadType::General, rng);
        const Point S = steiner_point(q);
        for (int i = 0; i < 4; ++i) {
            const Circle c = midray_circle(q, i);
            CHECK(std::abs(dist(S, c.center) - c.radius) < 1e-8 * q.scale());
        }
    }
}

TEST_CASE("steiner point of a cyclic quadrilateral is the circumcenter") {
    SeededRng rng(22);
    for (int k = 0; k < 30; ++k) {
        const Quadrilateral q = generate(QuadType::Cyclic, rng);
        const Circle c = circumcircle(q.V[0], q.V[1], q.V[2]);
        CHECK(dist(steiner_point(q), c.center) < 1e-9 * q.scale());
    }
}

TEST_CASE("steiner point of an orthodiagonal quadrilateral") {
    // the intersection of the perpendicular bisectors of the diagonals
    SeededRng rng(23);
    for (int k = 0; k < 30; ++k) {
        const Quadrilateral q = generate(QuadType::Orthodiagonal, rng);
        const Line b1 = perpendicular_bisector(q.V[0], q.V[2]);
        const Line b2 = perpendicular_bisector(q.V[1], q.V[3]);
        const Point X = line_intersection(b1.p, b1.p + b1.dir, b2.p, b2.p + b2.dir);
        CHECK(dist(steiner_point(q), X) < 1e-9 * q.scale());
    }
}

TEST_CASE("unit square steiner point") {
    CHECK(dist(steiner_point(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), {0.5, 0.5}) < 1e-9);
}

TEST_CASE("poncelet point lies on all four nine-point circles") {
    SeededRng rng(31);
    for (int k = 0; k < 100; ++k) {
        const Quadrilateral q = generate(QuadType::General, rng);
        Point P;
        try {
            P = poncelet_point(q);
        } catch (const NoCommonPoint&) {
            continue;
        }
        for (int i = 0; i < 4; ++i) {
            std::array<Point, 3> tri;
            int m = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) tri[m++] = q.V[j];
            const Circle c = ninepoint_circle(tri[0], tri[1], tri[2]);
            CHECK(std::abs(dist(P, c.center) - c.radius) < 1e-8 * q.scale());
        }
    }
}

TEST_CASE("poncelet point coincidences") {
    SeededRng rng(32);
    for (int k = 0; k < 20; ++k) {
        const Quadrilateral q = generate(QuadType::Orthodiagonal, rng);
        CHECK(dist(poncelet_point(q), diagonal_point(q)) < 1e-9 * q.scale());
    }
    for (int k = 0; k < 20; ++k) {
        const Quadrilateral q = generate(QuadType::Parallelogram, rng);
        CHECK(dist(poncelet_point(q), diagonal_point(q)) < 1e-9 * q.scale());
    }
    // Hjelmslev (right angles at B and D): the poncelet point is the midpoint of BD
    for (int k = 0; k < 20; ++k) {
        const Quadrilateral q = generate(QuadType::Hjelmslev, rng);
        CHECK(dist(poncelet_point(q), midpoint(q.V[1], q.V[3])) < 1e-9 * q.scale());
    }
}

TEST_CASE("radiators commute with similarity transforms") {
    SeededRng rng(41);
    SeededRng rng_xf(42);
    for (int k = 0; k < 20; ++k) {
        const Quadrilateral q = generate(QuadType::General, rng);
        const double th = rng_xf.uniform(0, 2 * M_PI), s = rng_xf.uniform(0.5, 2.0);
        const Point t{rng_xf.uniform(-1, 1), rng_xf.uniform(-1, 1)};
        auto xf = [&](const Point& p) {
            return Point{s * (std::cos(th) * p.x - std::sin(th) * p.y) + t.x,
                         s * (std::sin(th) * p.x + std::cos(th) * p.y) + t.y};
        };
        Quadrilateral q2;
        for (int i = 0; i < 4; ++i) q2.V[i] = xf(q.V[i]);
        CHECK(dist(xf(vertex_centroid(q)), vertex_centroid(q2)) < 1e-12 * q2.scale());
        CHECK(dist(xf(area_centroid(q)), area_centroid(q2)) < 1e-10 * q2.scale());
        CHECK(dist(xf(steiner_point(q)), steiner_point(q2)) < 1e-8 * q2.scale());
        CHECK(dist(xf(diagonal_point(q)), diagonal_point(q2)) < 1e-10 * q2.scale());
    }
}

TEST_CASE("sub-quadrilateral centroids give the -1/4 homothety") {
    SeededRng rng(51);
    for (int k = 0; k < 30; ++k) {
        const Quadrilateral q = generate(QuadType::General, rng);
        const Point E = arbitrary_radiator(q, rng);
        const auto fghi = sub_quadrilateral_centers(q, E, SubQuadCenterKind::VertexCentroid);
        for (int i = 0; i < 4; ++i) {
            Point expect{0, 0};
            expect += E;
            for (int j = 0; j < 4; ++j)
                if (j != i) expect += q.V[j];
            CHECK(dist(fghi[i], expect / 4.0) < 1e-13);
        }
    }
}
