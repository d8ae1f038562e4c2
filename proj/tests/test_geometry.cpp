#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/geometry.hpp"

using namespace cq;

TEST_CASE("signed_area basics") {
    CHECK(signed_area({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(0.5));
    CHECK(signed_area({0, 0}, {1, 0}, {2, 0}) == doctest::Approx(0.0));
    CHECK(signed_area({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-0.5));
}

TEST_CASE("line_intersection") {
    const Point p = line_intersection({0, 0}, {1, 1}, {0, 1}, {1, 0});
    CHECK(dist(p, {0.5, 0.5}) < 1e-14);
    CHECK_THROWS_AS(line_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}), ParallelLines);
    const Point q = line_intersection({0, 0}, {2, 2}, {2, 0}, {0, 2});
    CHECK(dist(q, {1, 1}) < 1e-14);
}

TEST_CASE("circumcircle") {
    const Circle c = circumcircle({0, 0}, {1, 0}, {0, 1});
    CHECK(dist(c.center, {0.5, 0.5}) < 1e-14);
    CHECK(c.radius == doctest::Approx(std::sqrt(2.0) / 2));
    const Circle u = circumcircle({1, 0}, {0, 1}, {-1, 0});
    CHECK(dist(u.center, {0, 0}) < 1e-14);
    CHECK(u.radius == doctest::Approx(1.0));
    CHECK_THROWS_AS(circumcircle({0, 0}, {1, 0}, {2, 0}), Collinear);
}

TEST_CASE("circumcircle permutation invariant") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 50; ++k) {
        const Point P{U(rng), U(rng)}, Q{U(rng), U(rng)}, R{U(rng), U(rng)};
        if (std::abs(signed_area(P, Q, R)) < 0.05) continue;
        const Circle c1 = circumcircle(P, Q, R);
        const Circle c2 = circumcircle(R, P, Q);
        const Circle c3 = circumcircle(Q, P, R);
        CHECK(dist(c1.center, c2.center) < 1e-12);
        CHECK(dist(c1.center, c3.center) < 1e-12);
        CHECK(c1.radius == doctest::Approx(c3.radius).epsilon(1e-12));
    }
}

TEST_CASE("circle_intersection") {
    auto [p1, p2] = circle_intersection({{0, 0}, 1.0}, {{1, 0}, 1.0});
    if (p1.y < p2.y) std::swap(p1, p2);
    CHECK(dist(p1, {0.5, std::sqrt(3.0) / 2}) < 1e-14);
    CHECK(dist(p2, {0.5, -std::sqrt(3.0) / 2}) < 1e-14);

    auto [t1, t2] = circle_intersection({{0, 0}, 1.0}, {{2, 0}, 1.0});
    CHECK(dist(t1, {1, 0}) < 1e-7);
    CHECK(dist(t2, {1, 0}) < 1e-7);

    CHECK_THROWS_AS(circle_intersection({{0, 0}, 1.0}, {{3, 0}, 1.0}), Disjoint);
}

TEST_CASE("line_intersection lies on both lines") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int k = 0; k < 100; ++k) {
        const Point P1{U(rng), U(rng)}, P2{U(rng), U(rng)};
        const Point Q1{U(rng), U(rng)}, Q2{U(rng), U(rng)};
        if (norm(P2 - P1) < 0.2 || norm(Q2 - Q1) < 0.2) continue;
        if (std::abs(cross(P2 - P1, Q2 - Q1)) < 0.05) continue;
        const Point X = line_intersection(P1, P2, Q1, Q2);
        const double scale = std::max(dist(P1, P2), dist(Q1, Q2));
        CHECK(point_line_distance(X, Line{P1, P2 - P1}) < 1e-9 * scale);
        CHECK(point_line_distance(X, Line{Q1, Q2 - Q1}) < 1e-9 * scale);
    }
}

TEST_CASE("detect_homothety") {
    const std::array<Point, 4> sq{Point{1, 1}, Point{-1, 1}, Point{-1, -1}, Point{1, -1}};
    std::array<Point, 4> dst;
    for (int i = 0; i < 4; ++i) dst[i] = sq[i] * 2.0;
    const Homothety h = detect_homothety(sq, dst);
    CHECK(h.ratio == doctest::Approx(2.0));
    CHECK(dist(h.center, {0, 0}) < 1e-12);

    // rotated square is not homothetic
    std::array<Point, 4> rot;
    const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
    for (int i = 0; i < 4; ++i) rot[i] = {c * sq[i].x - s * sq[i].y, s * sq[i].x + c * sq[i].y};
    CHECK_THROWS_AS(detect_homothety(sq, rot), NotHomothetic);

    // pure translation has no finite center
    std::array<Point, 4> tr;
    for (int i = 0; i < 4; ++i) tr[i] = sq[i] + Point{3, 1};
    CHECK_THROWS_AS(detect_homothety(sq, tr), NotHomothetic);
}

TEST_CASE("detect_homothety recovers random instances") {
    // derived oracle: F = (E+B+C+D)/4 = M + (E-A)/4 gives ratio -1/4, center (E+4M)/5
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 100; ++k) {
        std::array<Point, 4> src;
        for (auto& p : src) p = {U(rng), U(rng)};
        if (scale_of(src) < 0.5) continue;
        const Point E{U(rng), U(rng)};
        Point M{0, 0};
        for (const auto& p : src) M += p;
        M = M / 4.0;
        std::array<Point, 4> dst;
        for (int i = 0; i < 4; ++i) dst[i] = (E + src[(i + 1) % 4] + src[(i + 2) % 4] +
                                              src[(i + 3) % 4]) / 4.0;
        Homothety h;
        try {
            h = detect_homothety(src, dst);
        } catch (const NotHomothetic&) {
            continue;  // E too close to M makes the center ill-conditioned
        }
        CHECK(std::abs(h.ratio + 0.25) < 1e-9);
        const Point expect = (E + M * 4.0) / 5.0;
        CHECK(dist(h.center, expect) < 1e-9);
    }
}

TEST_CASE("predicates are scale equivariant") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    for (double s : {1e-3, 1.0, 1e3}) {
        for (int k = 0; k < 30; ++k) {
            const Point u{U(rng), U(rng)}, v{U(rng), U(rng)};
            if (norm(u) < 0.1 || norm(v) < 0.1) continue;
            CHECK(parallel(u, v, 1.0) == parallel(u * s, v * s, s));
            CHECK(perpendicular(u, v, 1.0) == perpendicular(u * s, v * s, s));
        }
    }
}

TEST_CASE("reflect about line") {
    const Line axis{{0, 0}, {1, 0}};
    CHECK(dist(reflect_about_line({2, 3}, axis), {2, -3}) < 1e-14);
    const Line diag{{0, 0}, {1, 1}};
    CHECK(dist(reflect_about_line({1, 0}, diag), {0, 1}) < 1e-14);
}
