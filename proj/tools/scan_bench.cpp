// Times the serial reference scan against the OpenMP path and checks that the
// two produce identical output.
#include <chrono>
#include <cstdio>

#include "cq/centers.hpp"
#include "cq/scan.hpp"

using namespace cq;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 10;
    const CenterRegistry& reg = CenterRegistry::builtin_default();

    ScanConfig cfg;
    cfg.types = {QuadType::General, QuadType::Cyclic, QuadType::Orthodiagonal,
                 QuadType::Equidiagonal, QuadType::Rectangle, QuadType::Square,
                 QuadType::CyclicOrthodiagonal, QuadType::Bicentric};
    cfg.radiators = {RadiatorKind::Arbitrary, RadiatorKind::SteinerPoint,
                     RadiatorKind::VertexCentroid};
    cfg.centers = reg.indices();
    cfg.samples = samples;
    cfg.seed = 20250809;

    cfg.jobs = 1;
    const auto t0 = Clock::now();
    const auto serial = scan(reg, cfg);
    const auto t1 = Clock::now();

    cfg.jobs = 0;  // all hardware threads
    const auto t2 = Clock::now();
    const auto parallel = scan(reg, cfg);
    const auto t3 = Clock::now();

    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t3 - t2).count();
    const bool same = scan_to_csv(serial) == scan_to_csv(parallel);

    std::printf("cells: %zu   samples/cell: %d\n", serial.size(), samples);
    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s   speedup %.2fx\n", tp, ts / tp);
    std::printf("outputs identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
