// Compare the serial reference sweep against the OpenMP path on one grid.
// Usage: bench_sweep [family] [rank] [p] [jobs]

#include <chrono>
#include <iostream>

#include "excepta/sweep.hpp"

using namespace excepta;

namespace {

double timed(const RootSystem& rs, long long p, const SweepOptions& opts, SweepReport* out) {
    auto t0 = std::chrono::steady_clock::now();
    *out = sweep_restricted(rs, p, {}, opts);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string family = argc > 1 ? argv[1] : "F";
    int rank = argc > 2 ? std::atoi(argv[2]) : 4;
    long long p = argc > 3 ? std::atoll(argv[3]) : 7;
    int jobs = argc > 4 ? std::atoi(argv[4]) : 4;

    RootSystem rs = build({parse_family(family), rank});
    SweepOptions serial, parallel;
    serial.jobs = 1;
    parallel.jobs = jobs;

    SweepReport a, b;
    double ts = timed(rs, p, serial, &a);
    double tp = timed(rs, p, parallel, &b);

    bool same = emit(a, EmitFormat::Json) == emit(b, EmitFormat::Json);
    std::cout << type_name(rs.dtype) << " p=" << p << " weights=" << a.weights.size() << "\n"
              << "serial:   " << ts << " s\n"
              << "parallel: " << tp << " s (jobs=" << jobs << ")\n"
              << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "\n"
              << "outputs identical: " << (same ? "yes" : "NO") << "\n";
    return same ? 0 : 1;
}
