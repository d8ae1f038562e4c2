#include "cq/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cq/scan.hpp"

namespace cq {

namespace {

std::vector<TheoremCase> build_catalog() {
    using S = Shape;
    using Q = QuadType;
    using R = RadiatorKind;
    std::vector<TheoremCase> v;
    auto add = [&v](TheoremCase tc) { v.push_back(std::move(tc)); };

    // Section 4: arbitrary radiator
    add({.id = "genArbX2", .type = Q::General, .radiator = R::Arbitrary, .centers = {2},
         .expect = {S::Parallelogram}, .extras = {Extra::SidesParallelToRefDiagonals}});
    add({.id = "equiArbX2", .type = Q::Equidiagonal, .radiator = R::Arbitrary, .centers = {2},
         .expect = {S::Rhombus}});
    add({.id = "orthoArbX2", .type = Q::Orthodiagonal, .radiator = R::Arbitrary, .centers = {2},
         .expect = {S::Rectangle}});
    add({.id = "equiOrthoArbX2", .type = Q::EquidiagonalOrthodiagonal, .radiator = R::Arbitrary,
         .centers = {2}, .expect = {S::Square}});
    add({.id = "rectArbXShinagawa", .type = Q::Rectangle, .radiator = R::Arbitrary,
         .family = CenterFamily::None, .expect = {S::Orthodiagonal},
         .extras = {Extra::DiagonalsParallelToRefSides}});
    v.back().centers = {};  // filled from the euler family at run time
    v.back().family = CenterFamily::None;
    // the euler family is resolved in verify_theorem via euler_t flags
    add({.id = "sqArbX2", .type = Q::Square, .radiator = R::Arbitrary, .centers = {2},
         .expect = {S::Square}});
    add({.id = "sqArbX99", .type = Q::Square, .radiator = R::Arbitrary, .centers = {99, 925},
         .expect = {S::Cyclic}, .extras = {Extra::CircleThroughE}});
    add({.id = "sqArbX372", .type = Q::Square, .radiator = R::Arbitrary, .centers = {372, 640},
         .expect = {S::Equidiagonal, S::Orthodiagonal},
         .extras = {Extra::DiagonalsParallelToRefSides}});
    add({.id = "sqArbX373", .type = Q::Square, .radiator = R::Arbitrary, .centers = {373},
         .expect = {S::Equidiagonal, S::Orthodiagonal}});

    // Section 5: E on a line
    add({.id = "kiCen", .type = Q::Kite, .radiator = R::OnAxis, .centers = {},
         .family = CenterFamily::AllRegistered, .expect = {S::IsoscelesTrapezoid}});
    add({.id = "itCen", .type = Q::IsoscelesTrapezoid, .radiator = R::OnPerpBisector,
         .centers = {}, .family = CenterFamily::AllRegistered, .expect = {S::Kite}});

    // Section 6: vertex centroid
    add({.id = "equiCenX591", .type = Q::Equidiagonal, .radiator = R::VertexCentroid,
         .centers = {591}, .expect = {S::Orthodiagonal}});
    add({.id = "eoCenX491", .type = Q::EquidiagonalOrthodiagonal, .radiator = R::VertexCentroid,
         .centers = {491, 615}, .expect = {S::Parallelogram}});

    // Section 7: Steiner point
    add({.id = "cqSteinX3", .type = Q::Cyclic, .radiator = R::SteinerPoint, .centers = {3, 399},
         .expect = {S::Tangential},
         .extras = {Extra::IncenterIsE, Extra::InradiusHalfRefCircumradius}});
    add({.id = "cqSteinT", .type = Q::Cyclic, .radiator = R::SteinerPoint, .centers = {},
         .family = CenterFamily::SetT, .expect = {S::Tangential},
         .extras = {Extra::IncenterIsE, Extra::IncircleEqualsRefCircumcircle}});
    add({.id = "cqStein", .type = Q::Cyclic, .radiator = R::SteinerPoint,
         .centers = {148, 149, 150, 290, 402, 620, 671, 903}, .family = CenterFamily::SetM,
         .expect = {S::Parallelogram}});
    add({.id = "odSteinX3", .type = Q::Orthodiagonal, .radiator = R::SteinerPoint,
         .centers = {3}, .expect = {S::Cyclic}});
    add({.id = "odSteinX4", .type = Q::Orthodiagonal, .radiator = R::SteinerPoint,
         .centers = {4}, .expect = {S::Trapezoid}, .ordering = Ordering::FGIH});
    add({.id = "eoSteinX486", .type = Q::EquidiagonalOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {486}, .expect = {S::Orthodiagonal}, .extras = {Extra::DiagonalsMeetAtE}});
    add({.id = "eoSteinX642", .type = Q::EquidiagonalOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {487, 642}, .expect = {S::Orthodiagonal}});
    add({.id = "biSteinX1", .type = Q::Bicentric, .radiator = R::SteinerPoint, .centers = {1},
         .expect = {S::Cyclic}});
    add({.id = "biSteinX214", .type = Q::Bicentric, .radiator = R::SteinerPoint, .centers = {214},
         .expect = {S::Cyclic}});
    add({.id = "biSteinX165", .type = Q::Bicentric, .radiator = R::SteinerPoint, .centers = {165},
         .expect = {S::Cyclic}});
    add({.id = "coStein", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {2, 290, 402, 620, 671, 903}, .family = CenterFamily::SetM,
         .expect = {S::Rectangle}});
    add({.id = "coSteinDiag", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {148, 149, 150}, .expect = {S::Rectangle},
         .extras = {Extra::SameDiagonalPointAsRef}});
    add({.id = "coStein-154", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {154}, .expect = {S::IsoscelesTrapezoid}, .ordering = Ordering::FHGI});
    add({.id = "coStein-trapezoid", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {26, 155, 156, 157}, .expect = {S::Trapezoid}, .ordering = Ordering::FHGI});
    add({.id = "coSteinX3", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {3}, .expect = {S::Bicentric}, .extras = {Extra::IncenterIsE}});
    add({.id = "coSteinX14", .type = Q::CyclicOrthodiagonal, .radiator = R::SteinerPoint,
         .centers = {13, 14, 616, 617, 618, 619}, .expect = {S::Equidiagonal}});
    add({.id = "eotStein-square", .type = Q::EquidiagonalOrthodiagonalTrapezoid,
         .radiator = R::SteinerPoint, .centers = {2, 148, 149, 150, 290, 402, 620, 671, 903},
         .family = CenterFamily::SetM, .expect = {S::Square}});
    add({.id = "eotStein-eqKite", .type = Q::EquidiagonalOrthodiagonalTrapezoid,
         .radiator = R::SteinerPoint, .centers = {13, 14, 616, 617, 618},
         .expect = {S::Kite, S::Equidiagonal}});
    add({.id = "eotStein-rightKite", .type = Q::EquidiagonalOrthodiagonalTrapezoid,
         .radiator = R::SteinerPoint, .centers = {3, 399}, .family = CenterFamily::SetT,
         .expect = {S::RightKite}});
    add({.id = "ekSteinX486", .type = Q::EquidiagonalKite, .radiator = R::SteinerPoint,
         .centers = {486, 642}, .expect = {S::Square}});
    add({.id = "ekSteinX586", .type = Q::EquidiagonalKite, .radiator = R::SteinerPoint,
         .centers = {586}, .expect = {S::Rectangle}});

    // Section 8: Poncelet point / E on a diagonal
    add({.id = "gqDiagX3", .type = Q::General, .radiator = R::OnDiagonalBD, .centers = {3},
         .expect = {S::Trapezoid}});
    add({.id = "gqDiagX4", .type = Q::General, .radiator = R::OnDiagonalBD, .centers = {4},
         .expect = {S::Trapezoid}, .ordering = Ordering::FHGI});
    add({.id = "hjPonX3", .type = Q::Hjelmslev, .radiator = R::PonceletPoint, .centers = {3},
         .expect = {S::Trapezoid}});
    add({.id = "hjPonX69", .type = Q::Hjelmslev, .radiator = R::PonceletPoint, .centers = {69},
         .expect = {S::Trapezoid}});
    add({.id = "hjPonX4", .type = Q::Hjelmslev, .radiator = R::PonceletPoint, .centers = {4},
         .expect = {S::TangentialTrapezoid},
         .extras = {Extra::IncenterIsE, Extra::ContactPointsOnRefDiagonal}});

    // Section 9.2: area centroid of a right kite
    add({.id = "rkQuasiX68", .type = Q::RightKite, .radiator = R::AreaCentroid,
         .centers = {68, 317, 577}, .expect = {S::Rectangle},
         .extras = {Extra::SidesParallelToRefDiagonals}});

    // Section 9.6: sub-quadrilateral centers
    add({.id = "QgqArbCen", .type = Q::General, .radiator = R::Arbitrary,
         .special = SpecialCheck::SubQuadCentroid});
    add({.id = "QcqArbStein", .type = Q::Cyclic, .radiator = R::Arbitrary,
         .special = SpecialCheck::SubQuadSteiner});
    add({.id = "QcqArbPonce", .type = Q::Cyclic, .radiator = R::Arbitrary,
         .special = SpecialCheck::SubQuadPoncelet});

    return v;
}

std::vector<int> resolve_centers(const CenterRegistry& reg, const TheoremCase& tc) {
    std::vector<int> out = tc.centers;
    switch (tc.family) {
        case CenterFamily::None: break;
        case CenterFamily::SetM: {
            for (int n : reg.with_flag(&CenterDefinition::set_m)) out.push_back(n);
            break;
        }
        case CenterFamily::SetT: {
            for (int n : reg.with_flag(&CenterDefinition::set_t)) out.push_back(n);
            break;
        }
        case CenterFamily::AllRegistered: {
            out = reg.indices();
            break;
        }
    }
    if (tc.id == "rectArbXShinagawa") out = reg.euler_family();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Section 9.6 checks: the three sub-quadrilateral constructions
bool special_check(const CenterRegistry&, const TheoremCase& tc, const Quadrilateral& q,
                   const Point& E, const Tolerance& tol, double& residual, std::string& why) {
    switch (tc.special) {
        case SpecialCheck::SubQuadCentroid: {
            const auto fghi =
                sub_quadrilateral_centers(q, E, SubQuadCenterKind::VertexCentroid, tol);
            Homothety h;
            try {
                h = detect_homothety(q.V, fghi, tol);
            } catch (const NotHomothetic&) {
                why = "not homothetic";
                return false;
            }
            const Point M = vertex_centroid(q);
            const double sc = q.scale();
            const double r1 = std::abs(h.ratio + 0.25);
            const double r2 = point_line_distance(h.center, Line{E, M - E}) / sc;
            const double r3 = std::abs(dist(h.center, E) / dist(h.center, M) - 4.0);
            residual = std::max({r1, r2, r3});
            if (residual > 1e-8) {
                why = "homothety ratio/center off by " + std::to_string(residual);
                return false;
            }
            return true;
        }
        case SpecialCheck::SubQuadSteiner: {
            const auto fghi = sub_quadrilateral_centers(q, E, SubQuadCenterKind::SteinerPoint, tol);
            const ShapeReport rep = classify(fghi, std::nullopt, tol);
            if (!rep.holds(Shape::Cyclic)) {
                why = "not cyclic";
                residual = rep.residual(Shape::Cyclic);
                return false;
            }
            const Circle cc = circumcircle(fghi[0], fghi[1], fghi[2], tol);
            const Circle refc = circumcircle(q.V[0], q.V[1], q.V[2], tol);
            residual = dist(cc.center, midpoint(E, refc.center)) / q.scale();
            if (residual > 1e-8) {
                why = "circumcenter is not the midpoint of EO";
                return false;
            }
            return true;
        }
        case SpecialCheck::SubQuadPoncelet: {
            const auto fghi =
                sub_quadrilateral_centers(q, E, SubQuadCenterKind::PonceletPoint, tol);
            const ShapeReport rep = classify(fghi, std::nullopt, tol);
            residual = rep.residual(Shape::Cyclic);
            if (!rep.holds(Shape::Cyclic)) {
                why = "not cyclic";
                return false;
            }
            return true;
        }
        default: return false;
    }
}

}  // namespace

const std::vector<TheoremCase>& theorem_catalog() {
    static const std::vector<TheoremCase> cat = build_catalog();
    return cat;
}

TheoremResult verify_theorem(const CenterRegistry& reg, const TheoremCase& tc, int samples,
                             std::uint64_t seed, const Tolerance& tol) {
    TheoremResult res;
    res.id = tc.id;
    res.pass = true;

    SeededRng rng(SeededRng::mix(seed, std::hash<std::string>{}(tc.id)));

    if (tc.special != SpecialCheck::None) {
        for (int s = 0; s < samples; ++s) {
            Quadrilateral q;
            Point E;
            try {
                q = generate(tc.type, rng);
                E = radiator_point(q, tc.radiator, rng, tol);
            } catch (const CqError&) {
                ++res.degenerate;
                continue;
            }
            double r = 0.0;
            std::string why;
            bool ok;
            try {
                ok = special_check(reg, tc, q, E, tol, r, why);
            } catch (const CqError& e) {
                ok = false;
                why = e.what();
            }
            ++res.samples;
            res.max_residual = std::max(res.max_residual, r);
            if (!ok && res.pass) {
                res.pass = false;
                res.detail = why;
            }
        }
        if (res.samples == 0) {
            res.pass = false;
            res.detail = "no usable samples";
        }
        return res;
    }

    const std::vector<int> centers = resolve_centers(reg, tc);
    for (int n : centers) {
        for (int s = 0; s < samples; ++s) {
            Quadrilateral q;
            Point E;
            try {
                q = generate(tc.type, rng);
                E = radiator_point(q, tc.radiator, rng, tol);
            } catch (const CqError&) {
                ++res.degenerate;
                continue;
            }
            const auto pts = run_pipeline(reg, q, E, n, tol);
            if (!pts) {
                ++res.degenerate;
                continue;
            }
            const ShapeReport rep = classify(*pts, RefConfig{q, E}, tol);
            if (rep.degeneracy != Degeneracy::Nondegenerate) {
                ++res.degenerate;
                continue;
            }
            ++res.samples;
            for (Shape sh : tc.expect) {
                res.max_residual = std::max(res.max_residual, rep.residual(sh, tc.ordering));
                if (!rep.holds(sh, tc.ordering) && res.pass) {
                    res.pass = false;
                    res.detail = "X" + std::to_string(n) + ": " + shape_name(sh) +
                                 " fails (residual " +
                                 std::to_string(rep.residual(sh, tc.ordering)) + ")";
                }
            }
            for (Extra e : tc.extras) {
                auto it = rep.extras.find(e);
                const bool ok = it != rep.extras.end() && it->second.holds;
                if (it != rep.extras.end())
                    res.max_residual = std::max(res.max_residual, it->second.residual / q.scale());
                if (!ok && res.pass) {
                    res.pass = false;
                    res.detail = "X" + std::to_string(n) + ": extra " + extra_name(e) + " fails";
                }
            }
        }
    }
    if (res.samples == 0) {
        res.pass = false;
        res.detail = "no usable samples";
    }
    return res;
}

std::vector<TheoremResult> verify_theorems(const CenterRegistry& reg,
                                           const std::vector<std::string>& ids, int samples,
                                           std::uint64_t seed, const Tolerance& tol) {
    std::vector<TheoremResult> out;
    for (const TheoremCase& tc : theorem_catalog()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), tc.id) == ids.end()) continue;
        out.push_back(verify_theorem(reg, tc, samples, seed, tol));
    }
    if (!ids.empty() && out.empty()) throw CqError("no such theorem id");
    return out;
}

}  // namespace cq
