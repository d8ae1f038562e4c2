// Command-line front end: gen | centers | classify | scan | verify | diff
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cq/centers.hpp"
#include "cq/classify.hpp"
#include "cq/golden.hpp"
#include "cq/quad.hpp"
#include "cq/radiators.hpp"
#include "cq/scan.hpp"
#include "cq/theorems.hpp"

using namespace cq;

namespace {

std::vector<int> parse_center_spec(const std::string& spec, const CenterRegistry& reg) {
    // "all" | comma list of indices and ranges: "1,2,99..110"
    std::vector<int> out;
    if (spec == "all" || spec == "registry") return reg.indices();
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const int lo = std::atoi(item.substr(0, dots).c_str());
            const int hi = std::atoi(item.substr(dots + 2).c_str());
            for (int n = lo; n <= hi; ++n)
                if (reg.contains(n)) out.push_back(n);
        } else if (!item.empty()) {
            out.push_back(std::atoi(item.c_str()));
        }
    }
    return out;
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::atof(item.c_str()));
    return out;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-quadrilateral explorer"};
    app.require_subcommand(1);

    // --- gen
    auto* gen_cmd = app.add_subcommand("gen", "generate seeded quadrilaterals as JSON");
    std::string gen_type = "general", gen_out;
    int gen_count = 1;
    std::uint64_t gen_seed = 1;
    gen_cmd->add_option("--type", gen_type, "quadrilateral type");
    gen_cmd->add_option("--count", gen_count, "number of samples");
    gen_cmd->add_option("--seed", gen_seed, "rng seed");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

    // --- centers
    auto* cen_cmd = app.add_subcommand("centers", "list registry or evaluate a center");
    bool cen_list = false;
    int cen_eval = 0;
    std::string cen_tri;
    cen_cmd->add_flag("--list", cen_list, "list registered centers");
    cen_cmd->add_option("--eval", cen_eval, "Kimberling index to evaluate");
    cen_cmd->add_option("--triangle", cen_tri, "x1,y1,x2,y2,x3,y3");

    // --- classify
    auto* cls_cmd = app.add_subcommand("classify", "classify a 4-point central quadrilateral");
    std::string cls_pts, cls_ref;
    cls_cmd->add_option("--points", cls_pts, "8 reals: F,G,H,I coordinates")->required();
    cls_cmd->add_option("--ref", cls_ref, "10 reals: reference quad + radiator E");

    // --- scan
    auto* scan_cmd = app.add_subcommand("scan", "sweep (type x radiator x center)");
    std::string sc_types = "general", sc_rads = "arbitrary", sc_centers = "all", sc_out, sc_tol;
    int sc_samples = 10, sc_jobs = 0;
    std::uint64_t sc_seed = 1;
    scan_cmd->add_option("--types", sc_types, "comma list of types or 'all'");
    scan_cmd->add_option("--radiators", sc_rads, "comma list of radiators");
    scan_cmd->add_option("--centers", sc_centers, "center spec: 'all', '1,2,3', '1..100'");
    scan_cmd->add_option("--samples", sc_samples, "samples per cell (>=3)");
    scan_cmd->add_option("--seed", sc_seed, "master seed");
    scan_cmd->add_option("--tol", sc_tol, "relative tolerance (default 1e-9)");
    scan_cmd->add_option("--jobs", sc_jobs, "parallel cells (1 = serial, 0 = all cores)");
    scan_cmd->add_option("--out", sc_out, "output .csv or .json (default csv to stdout)");

    // --- verify
    auto* ver_cmd = app.add_subcommand("verify", "run the theorem regression catalog");
    std::string ver_theorem = "all";
    int ver_samples = 10;
    std::uint64_t ver_seed = 1;
    ver_cmd->add_option("--theorem", ver_theorem, "theorem id or 'all'");
    ver_cmd->add_option("--samples", ver_samples, "instances per theorem");
    ver_cmd->add_option("--seed", ver_seed, "seed");

    // --- diff
    auto* diff_cmd = app.add_subcommand("diff", "compare a scan against the built-in tables");
    std::string diff_scan, diff_golden = "builtin";
    diff_cmd->add_option("--scan", diff_scan, "scan output (.json)")->required();
    diff_cmd->add_option("--golden", diff_golden, "golden source (only 'builtin')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const CenterRegistry& reg = CenterRegistry::builtin_default();

        if (*gen_cmd) {
            const QuadType t = quad_type_from_name(gen_type);
            nlohmann::json arr = nlohmann::json::array();
            SeededRng rng(gen_seed);
            for (int i = 0; i < gen_count; ++i) {
                const Quadrilateral q = generate(t, rng);
                nlohmann::json j;
                j["type"] = gen_type;
                j["seed"] = gen_seed;
                j["vertices"] = {{q.V[0].x, q.V[0].y},
                                 {q.V[1].x, q.V[1].y},
                                 {q.V[2].x, q.V[2].y},
                                 {q.V[3].x, q.V[3].y}};
                arr.push_back(std::move(j));
            }
            write_or_print(gen_out, arr.dump(1) + "\n");
            return 0;
        }

        if (*cen_cmd) {
            if (cen_list) {
                for (int n : reg.indices()) {
                    const auto& d = reg.def(n);
                    std::printf("X%d%s%s%s%s%s\n", n,
                                d.on_circumcircle ? " circumcircle" : "",
                                d.set_a ? " setA" : "", d.set_m ? " setM" : "",
                                d.set_t ? " setT" : "", d.euler_t ? " euler" : "");
                }
                return 0;
            }
            if (cen_eval <= 0 || cen_tri.empty()) {
                std::fprintf(stderr, "centers: need --eval n --triangle x1,y1,x2,y2,x3,y3\n");
                return 2;
            }
            const auto r = parse_reals(cen_tri);
            if (r.size() != 6) {
                std::fprintf(stderr, "centers: --triangle wants 6 reals\n");
                return 2;
            }
            const Triangle T{{r[0], r[1]}, {r[2], r[3]}, {r[4], r[5]}};
            const CenterPoint cp = reg.center(cen_eval, T);
            if (cp.at_infinity)
                std::printf("X%d: at infinity (direction %.15g, %.15g)\n", cen_eval,
                            cp.direction.x, cp.direction.y);
            else
                std::printf("(%.15g, %.15g)\n", cp.p.x, cp.p.y);
            return 0;
        }

        if (*cls_cmd) {
            const auto r = parse_reals(cls_pts);
            if (r.size() != 8) {
                std::fprintf(stderr, "classify: --points wants 8 reals\n");
                return 2;
            }
            std::array<Point, 4> pts{Point{r[0], r[1]}, Point{r[2], r[3]}, Point{r[4], r[5]},
                                     Point{r[6], r[7]}};
            std::optional<RefConfig> ref;
            if (!cls_ref.empty()) {
                const auto q = parse_reals(cls_ref);
                if (q.size() != 10) {
                    std::fprintf(stderr, "classify: --ref wants 10 reals\n");
                    return 2;
                }
                RefConfig rc;
                rc.quad.V = {Point{q[0], q[1]}, Point{q[2], q[3]}, Point{q[4], q[5]},
                             Point{q[6], q[7]}};
                rc.E = {q[8], q[9]};
                ref = rc;
            }
            std::cout << classify(pts, ref).to_json() << "\n";
            return 0;
        }

        if (*scan_cmd) {
            ScanConfig cfg;
            if (sc_types == "all")
                cfg.types = all_quad_types();
            else {
                std::istringstream ss(sc_types);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.types.push_back(quad_type_from_name(item));
            }
            {
                std::istringstream ss(sc_rads);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.radiators.push_back(radiator_from_name(item));
            }
            cfg.centers = parse_center_spec(sc_centers, reg);
            cfg.samples = sc_samples;
            cfg.seed = sc_seed;
            cfg.jobs = sc_jobs;
            if (!sc_tol.empty()) cfg.tol.rel = std::atof(sc_tol.c_str());
            const auto records = scan(reg, cfg);
            const bool json = sc_out.size() > 5 && sc_out.substr(sc_out.size() - 5) == ".json";
            write_or_print(sc_out, json ? scan_to_json(records) : scan_to_csv(records));
            return 0;
        }

        if (*ver_cmd) {
            std::vector<std::string> ids;
            if (ver_theorem != "all") {
                std::string id = ver_theorem;
                if (id.rfind("thm:", 0) == 0) id = id.substr(4);
                ids.push_back(id);
            }
            const auto results = verify_theorems(reg, ids, ver_samples, ver_seed);
            int failures = 0;
            for (const auto& r : results) {
                std::printf("%-20s %s  max residual %.3g  (%d samples, %d degenerate)%s%s\n",
                            r.id.c_str(), r.pass ? "PASS" : "FAIL", r.max_residual, r.samples,
                            r.degenerate, r.detail.empty() ? "" : "  -- ",
                            r.detail.c_str());
                if (!r.pass) ++failures;
            }
            std::printf("%zu theorems, %d failures\n", results.size(), failures);
            return failures == 0 ? 0 : 1;
        }

        if (*diff_cmd) {
            if (diff_golden != "builtin") {
                std::fprintf(stderr, "diff: only --golden builtin is available\n");
                return 2;
            }
            std::ifstream f(diff_scan);
            if (!f) {
                std::fprintf(stderr, "diff: cannot read %s\n", diff_scan.c_str());
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            const auto records = scan_from_json(buf.str());
            const DiffReport rep = golden_table_diff(reg, records);
            std::cout << diff_to_text(rep);
            return rep.missing == 0 ? 0 : 1;
        }
    } catch (const MissingCenters& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const CqError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
