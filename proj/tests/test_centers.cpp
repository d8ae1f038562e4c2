#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/centers.hpp"

using namespace cq;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(20250809);
    return r;
}

Triangle random_triangle(bool isosceles = false) {
    std::uniform_real_distribution<double> U(-1, 1);
    for (;;) {
        Point A{U(rng()), U(rng())}, B{U(rng()), U(rng())}, C{U(rng()), U(rng())};
        if (isosceles) {
            const Point M = midpoint(B, C);
            const Point d = (C - B) / dist(B, C);
            std::uniform_real_distribution<double> H(0.4, 1.5);
            A = M + perp(d) * H(rng());
        }
        Triangle T{A, B, C};
        if (std::abs(T.signed_area()) > 0.08) return T;
    }
}

}  // namespace

TEST_CASE("registry loads and contains the mandatory set") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    for (int n : CenterRegistry::required_registry()) CHECK(reg.contains(n));
    CHECK_NOTHROW(reg.validate_required());
}

TEST_CASE("missing centers are reported") {
    CenterRegistry reg = CenterRegistry::from_text("1;a;\n2;1;\n");
    CHECK(reg.contains(1));
    CHECK_THROWS_AS(reg.validate_required(), MissingCenters);
    CHECK_THROWS_AS(reg.center_point(591, Triangle{{0, 0}, {1, 0}, {0, 1}}), UnknownCenter);
}

TEST_CASE("classic anchor points") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    // X1 of the 3-4-5 right triangle: inradius 1
    CHECK(dist(reg.center_point(1, {{0, 0}, {4, 0}, {0, 3}}), {1, 1}) < 1e-12);
    CHECK(dist(reg.center_point(2, {{0, 0}, {1, 0}, {0, 1}}), {1.0 / 3, 1.0 / 3}) < 1e-12);
    CHECK(dist(reg.center_point(3, {{0, 0}, {1, 0}, {0, 1}}), {0.5, 0.5}) < 1e-12);
}

TEST_CASE("euler_line_point anchors") {
    for (int k = 0; k < 20; ++k) {
        const Triangle T = random_triangle();
        const CenterRegistry& reg = CenterRegistry::builtin_default();
        const Point O = reg.center_point(3, T);
        const Point H = reg.center_point(4, T);
        CHECK(dist(euler_line_point(T, 0.0), O) < 1e-10 * T.scale());
        // t=1/3 reproduces the direct (1:1:1) centroid
        CHECK(dist(euler_line_point(T, 1.0 / 3), reg.center_point(2, T)) < 1e-12 * T.scale());
        CHECK(dist(euler_line_point(T, 0.5), reg.center_point(5, T)) < 1e-10 * T.scale());
        // t=-1 is the reflection of H in O
        CHECK(dist(euler_line_point(T, -1.0), O * 2.0 - H) < 1e-10 * T.scale());
    }
}

TEST_CASE("every Shinagawa-flagged center matches its euler parameter") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    for (int n : reg.euler_family()) {
        const double t = *reg.def(n).euler_t;
        for (int k = 0; k < 10; ++k) {
            const Triangle T = random_triangle();
            CHECK(dist(reg.center_point(n, T), euler_line_point(T, t)) < 1e-12 * T.scale());
        }
    }
}

TEST_CASE("euler cross-validation rejects a wrong t") {
    CHECK_THROWS_AS(CenterRegistry::from_text("2;1;euler:t=1/2\n"), RegistryError);
}

TEST_CASE("setA centers coincide with the apex on isosceles triangles") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    const auto members = reg.with_flag(&CenterDefinition::set_a);
    CHECK(members.size() >= 6);
    for (int n : members) {
        for (int k = 0; k < 50; ++k) {
            const Triangle T = random_triangle(true);
            const Point P = reg.center_point(n, T);
            CHECK(dist(P, T.A) < 1e-9 * T.scale());
        }
    }
}

TEST_CASE("setM centers coincide with the base midpoint on isosceles triangles") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    const auto members = reg.with_flag(&CenterDefinition::set_m);
    CHECK(members.size() == 24);
    for (int n : members) {
        for (int k = 0; k < 50; ++k) {
            const Triangle T = random_triangle(true);
            const Point P = reg.center_point(n, T);
            CHECK(dist(P, midpoint(T.B, T.C)) < 1e-9 * T.scale());
        }
    }
}

TEST_CASE("setT centers coincide with the apex antipode on isosceles triangles") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    const auto members = reg.with_flag(&CenterDefinition::set_t);
    CHECK(members.size() >= 2);
    for (int n : members) {
        for (int k = 0; k < 50; ++k) {
            const Triangle T = random_triangle(true);
            const Point P = reg.center_point(n, T);
            const Circle c = circumcircle(T.A, T.B, T.C);
            CHECK(dist(P, c.center * 2.0 - T.A) < 1e-9 * T.scale());
        }
    }
}

TEST_CASE("circumcircle-flagged centers lie on the circumcircle") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    for (int n : reg.with_flag(&CenterDefinition::on_circumcircle)) {
        for (int k = 0; k < 50; ++k) {
            const Triangle T = random_triangle();
            const Point P = reg.center_point(n, T);
            const Circle c = circumcircle(T.A, T.B, T.C);
            CHECK(std::abs(dist(P, c.center) - c.radius) < 1e-8 * c.radius);
        }
    }
}

TEST_CASE("X214 is the midpoint of X1 and X100") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    for (int k = 0; k < 30; ++k) {
        const Triangle T = random_triangle();
        const Point mid = midpoint(reg.center_point(1, T), reg.center_point(100, T));
        CHECK(dist(reg.center_point(214, T), mid) < 1e-10 * T.scale());
    }
}

TEST_CASE("X165 lies on line X1X3 with X1X3 = 3 X3X165") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    for (int k = 0; k < 30; ++k) {
        const Triangle T = random_triangle();
        const Point X1 = reg.center_point(1, T);
        const Point X3 = reg.center_point(3, T);
        const Point P = reg.center_point(165, T);
        CHECK(point_line_distance(P, Line{X1, X3 - X1}) < 1e-9 * T.scale());
        CHECK(std::abs(dist(X1, X3) / dist(X3, P) - 3.0) < 1e-7);
    }
}

TEST_CASE("center_point commutes with similarity transforms") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    std::uniform_real_distribution<double> U(-1, 1), Uth(0, 2 * M_PI), Us(0.5, 2.0);
    for (int n : reg.indices()) {
        for (int k = 0; k < 3; ++k) {
            const Triangle T = random_triangle();
            Point P;
            try {
                P = reg.center_point(n, T);
            } catch (const CqError&) {
                continue;  // pole of a rational formula; try another triangle
            }
            const double th = Uth(rng()), s = Us(rng());
            const Point t{U(rng()), U(rng())};
            auto xf = [&](const Point& p) {
                return Point{s * (std::cos(th) * p.x - std::sin(th) * p.y) + t.x,
                             s * (std::sin(th) * p.x + std::cos(th) * p.y) + t.y};
            };
            const Triangle T2{xf(T.A), xf(T.B), xf(T.C)};
            Point P2;
            try {
                P2 = reg.center_point(n, T2);
            } catch (const CqError&) {
                continue;
            }
            CHECK(dist(xf(P), P2) < 1e-8 * T2.scale() * std::max(1.0, dist(P, T.A) / T.scale()));
        }
    }
}

TEST_CASE("at-infinity detection") {
    // the registry text accepts an explicit infinite-direction formula
    CenterRegistry reg = CenterRegistry::from_text("523;b^2-c^2;\n");
    const CenterPoint cp = reg.center(523, Triangle{{0, 0}, {1.3, 0.1}, {0.4, 1.1}});
    CHECK(cp.at_infinity);
}

TEST_CASE("degenerate triangles are rejected") {
    const CenterRegistry& reg = CenterRegistry::builtin_default();
    CHECK_THROWS_AS(reg.center_point(2, Triangle{{0, 0}, {1, 0}, {2, 0}}), DegenerateTriangle);
}
