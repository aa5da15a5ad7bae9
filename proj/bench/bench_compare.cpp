// Compares the serial reference kernels against the OpenMP ones on a few
// verification workloads and checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "springer/verifier.hpp"

using springer::ExecMode;
using springer::Int;
using springer::Options;

namespace {

struct Workload {
    std::string name;
    std::function<std::string(const Options&)> run;  // serialized reports
};

double run_timed(const Workload& w, const Options& opts, std::string& out) {
    const auto start = std::chrono::steady_clock::now();
    out = w.run(opts);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::vector<Workload> workloads;
    workloads.push_back({"bijection n=30..40", [](const Options& opts) {
                             std::string acc;
                             for (Int n = 30; n <= 40; ++n)
                                 acc += springer::verify_bijection(n, opts).to_json().dump();
                             return acc;
                         }});
    workloads.push_back({"theorem m=12 t=18 (closed form)", [](const Options& opts) {
                             return springer::verify_theorem(12, 18, opts).to_json().dump();
                         }});
    workloads.push_back({"theorem m=13 t=20 (closed form)", [](const Options& opts) {
                             return springer::verify_theorem(13, 20, opts).to_json().dump();
                         }});
    workloads.push_back({"theorem m=14 t=21 (closed form)", [](const Options& opts) {
                             return springer::verify_theorem(14, 21, opts).to_json().dump();
                         }});
    workloads.push_back({"theorem m=5 t=4 (brute fiber, n=48)", [](const Options& opts) {
                             return springer::verify_theorem(5, 4, opts).to_json().dump();
                         }});

    std::printf("%-36s %12s %12s %9s %10s\n", "workload", "serial ms", "parallel ms", "speedup",
                "identical");
    for (const Workload& w : workloads) {
        Options serial;
        serial.mode = ExecMode::Serial;
        Options parallel;
        parallel.mode = ExecMode::Parallel;
        std::string serial_out;
        std::string parallel_out;
        const double serial_ms = run_timed(w, serial, serial_out);
        const double parallel_ms = run_timed(w, parallel, parallel_out);
        std::printf("%-36s %12.1f %12.1f %8.2fx %10s\n", w.name.c_str(), serial_ms, parallel_ms,
                    serial_ms / parallel_ms, serial_out == parallel_out ? "yes" : "NO");
    }
    return 0;
}
