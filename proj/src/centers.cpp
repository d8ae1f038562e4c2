#include "cq/centers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace cq {

MissingCenters::MissingCenters(std::vector<int> m)
    : CqError([&m] {
          std::ostringstream os;
          os << "registry is missing mandatory centers:";
          for (int n : m) os << " " << n;
          return os.str();
      }()),
      missing(std::move(m)) {}

namespace {

Point barycentric_point(const Triangle& T, double u, double v, double w) {
    const double s = u + v + w;
    return (T.A * u + T.B * v + T.C * w) / s;
}

// Gossard perspector: on the Euler line at parameter t(x,y,z) = N/D with
// x=a^2, y=b^2, z=c^2 and N, D the symmetric sextics fitted exactly from the
// defining construction (Euler lines of the three corner triangles cut off by
// the Euler line form a triangle perspective to ABC; it is the point
// reflection of ABC in the perspector).
double gossard_t(double x, double y, double z) {
    auto m600 = x*x*x*x*x*x + y*y*y*y*y*y + z*z*z*z*z*z;
    auto m510 = x*x*x*x*x*(y + z) + y*y*y*y*y*(z + x) + z*z*z*z*z*(x + y);
    auto m420 = x*x*x*x*(y*y + z*z) + y*y*y*y*(z*z + x*x) + z*z*z*z*(x*x + y*y);
    auto m411 = x*x*x*x*y*z + y*y*y*y*z*x + z*z*z*z*x*y;
    auto m330 = x*x*x*y*y*y + y*y*y*z*z*z + z*z*z*x*x*x;
    auto m321 = x*x*x*y*y*z + x*x*x*y*z*z + y*y*y*z*z*x + y*y*y*z*x*x + z*z*z*x*x*y + z*z*z*x*y*y;
    auto m222 = x*x*y*y*z*z;
    const double N = m600 - m510 - 5.0*m420 + 11.0*m411 + 10.0*m330 - 10.0*m321 + 30.0*m222;
    const double D = 4.0*m600 - 6.0*m510 - 12.0*m420 + 36.0*m411 + 28.0*m330 - 30.0*m321 + 84.0*m222;
    return N / D;
}

}  // namespace

Point euler_line_point(const Triangle& T, double t, const Tolerance& tol) {
    const double ar = std::abs(T.signed_area());
    if (ar <= tol.rel * T.scale() * T.scale()) throw DegenerateTriangle{};
    const double x = T.a() * T.a(), y = T.b() * T.b(), z = T.c() * T.c();
    // O = (x(y+z-x) : ...), H = ((z+x-y)(x+y-z) : ...); both coordinate sums are 4S^2
    const double uO = x * (y + z - x), vO = y * (z + x - y), wO = z * (x + y - z);
    const double uH = (z + x - y) * (x + y - z), vH = (x + y - z) * (y + z - x),
                 wH = (y + z - x) * (z + x - y);
    const double u = (1.0 - t) * uO + t * uH;
    const double v = (1.0 - t) * vO + t * vH;
    const double w = (1.0 - t) * wO + t * wH;
    return barycentric_point(T, u, v, w);
}

CenterRegistry CenterRegistry::from_text(const std::string& text) {
    CenterRegistry reg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto p1 = line.find(';');
        const auto p2 = line.find(';', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw RegistryError("registry line " + std::to_string(lineno) + ": expected n;formula;flags");
        CenterDefinition d;
        d.index = std::atoi(line.substr(0, p1).c_str());
        if (d.index <= 0)
            throw RegistryError("registry line " + std::to_string(lineno) + ": bad index");
        const std::string formula = line.substr(p1 + 1, p2 - p1 - 1);
        if (formula.rfind("builtin:", 0) == 0) {
            d.builtin = formula.substr(8);
        } else {
            d.formula = parse_formula(formula);
        }
        std::string flags = line.substr(p2 + 1);
        std::istringstream fs(flags);
        std::string flag;
        while (std::getline(fs, flag, ',')) {
            if (flag.empty()) continue;
            if (flag == "circumcircle") d.on_circumcircle = true;
            else if (flag == "setA") d.set_a = true;
            else if (flag == "setM") d.set_m = true;
            else if (flag == "setT") d.set_t = true;
            else if (flag.rfind("euler:t=", 0) == 0) {
                const std::string v = flag.substr(8);
                const auto slash = v.find('/');
                d.euler_t = slash == std::string::npos
                                ? std::atof(v.c_str())
                                : std::atof(v.substr(0, slash).c_str()) /
                                      std::atof(v.substr(slash + 1).c_str());
            } else {
                throw RegistryError("registry line " + std::to_string(lineno) + ": bad flag '" + flag + "'");
            }
        }
        if (reg.defs_.count(d.index))
            throw RegistryError("duplicate registry index " + std::to_string(d.index));
        reg.defs_.emplace(d.index, std::move(d));
    }

    // cross-validate euler:t against the independent formula where both exist
    std::mt19937_64 rng(0x5eedu);
    auto uni = [&rng](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    for (const auto& [n, d] : reg.defs_) {
        if (!d.euler_t || !d.formula) continue;
        for (int k = 0; k < 8; ++k) {
            Triangle T{{uni(-1, 1), uni(-1, 1)}, {uni(-1, 1), uni(-1, 1)}, {uni(-1, 1), uni(-1, 1)}};
            if (std::abs(T.signed_area()) < 0.08) { --k; continue; }
            const Point expect = euler_line_point(T, *d.euler_t);
            const auto [u, v, w] = barycentric_triple(*d.formula, T);
            const Point got = barycentric_point(T, u, v, w);
            if (dist(expect, got) > 1e-10 * T.scale())
                throw RegistryError("center " + std::to_string(n) +
                                    ": euler:t disagrees with formula by " +
                                    std::to_string(dist(expect, got)));
        }
    }
    return reg;
}

const CenterRegistry& CenterRegistry::builtin_default() {
    static const CenterRegistry reg = [] {
        CenterRegistry r = from_text(kDefaultRegistryText);
        r.validate_required();
        return r;
    }();
    return reg;
}

const CenterDefinition& CenterRegistry::def(int n) const {
    auto it = defs_.find(n);
    if (it == defs_.end()) throw UnknownCenter(n);
    return it->second;
}

std::vector<int> CenterRegistry::indices() const {
    std::vector<int> out;
    out.reserve(defs_.size());
    for (const auto& [n, d] : defs_) out.push_back(n);
    return out;
}

std::vector<int> CenterRegistry::with_flag(bool CenterDefinition::*flag) const {
    std::vector<int> out;
    for (const auto& [n, d] : defs_)
        if (d.*flag) out.push_back(n);
    return out;
}

std::vector<int> CenterRegistry::euler_family() const {
    std::vector<int> out;
    for (const auto& [n, d] : defs_)
        if (d.euler_t) out.push_back(n);
    return out;
}

CenterPoint CenterRegistry::center(int n, const Triangle& T, const Tolerance& tol) const {
    const CenterDefinition& d = def(n);
    const double ar = std::abs(T.signed_area());
    const double sc = T.scale();
    if (ar <= tol.rel * sc * sc) throw DegenerateTriangle{};

    if (!d.builtin.empty()) {
        CenterPoint cp;
        if (d.builtin == "gossard") {
            const double x = T.a() * T.a(), y = T.b() * T.b(), z = T.c() * T.c();
            cp.p = euler_line_point(T, gossard_t(x, y, z), tol);
        } else if (d.builtin == "tixier") {
            const Point O = center_point(3, T, tol);
            const Point H = center_point(4, T, tol);
            const Point X110 = center_point(110, T, tol);
            if (dist(O, H) <= tol.rel * sc) throw DegenerateTriangle{};  // equilateral
            cp.p = reflect_about_line(X110, Line{O, H - O});
        } else if (d.builtin == "tixier-antipode") {
            const Point O = center_point(3, T, tol);
            cp.p = O * 2.0 - center_point(476, T, tol);
        } else {
            throw RegistryError("unknown builtin '" + d.builtin + "'");
        }
        return cp;
    }

    const auto [u, v, w] = barycentric_triple(*d.formula, T);
    const double m = std::max({std::abs(u), std::abs(v), std::abs(w)});
    CenterPoint cp;
    if (std::abs(u + v + w) <= tol.rel * m) {
        cp.at_infinity = true;
        cp.direction = T.A * u + T.B * v + T.C * w;
        return cp;
    }
    cp.p = barycentric_point(T, u, v, w);
    return cp;
}

Point CenterRegistry::center_point(int n, const Triangle& T, const Tolerance& tol) const {
    const CenterPoint cp = center(n, T, tol);
    if (cp.at_infinity) throw CqError("center X" + std::to_string(n) + " is at infinity");
    return cp.p;
}

const std::set<int>& CenterRegistry::required_registry() {
    static const std::set<int> req = [] {
        std::set<int> s{1, 2, 3, 4, 5, 11, 13, 14, 20, 26, 68, 69, 74, 99, 100, 115, 116,
                        127, 130, 139, 140, 154, 155, 156, 157, 165, 214, 290, 317, 338, 339,
                        372, 373, 376, 381, 382, 399, 402, 476, 477, 486, 487, 491, 577, 586,
                        591, 631, 632, 640, 642, 671, 903, 925};
        for (int n = 122; n <= 125; ++n) s.insert(n);
        for (int n = 134; n <= 137; ++n) s.insert(n);
        for (int n = 148; n <= 150; ++n) s.insert(n);
        for (int n = 244; n <= 247; ++n) s.insert(n);
        for (int n = 546; n <= 550; ++n) s.insert(n);
        for (int n = 615; n <= 620; ++n) s.insert(n);
        for (int n = 865; n <= 868; ++n) s.insert(n);
        return s;
    }();
    return req;
}

void CenterRegistry::validate_required() const {
    std::vector<int> missing;
    for (int n : required_registry())
        if (!defs_.count(n)) missing.push_back(n);
    if (!missing.empty()) throw MissingCenters(std::move(missing));
}

}  // namespace cq
