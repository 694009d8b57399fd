// Serial vs OpenMP timings for the two hot loops: phase sampling along the
// scan grid and the randomised theorem trials.

#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "orthotime/phase_kernels.hpp"
#include "orthotime/theorem.hpp"

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4f s   omp %9.4f s   speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    using namespace orthotime;
    std::printf("threads: %d\n", omp_get_max_threads());

    for (const Eigen::Index dim : {4, 16, 32}) {
        const HermitianOperator ha = random_hermitian(dim, 11, 1.0, true);
        const HermitianOperator hb = random_hermitian(dim, 12, 1.0, true);
        const ProductPropagator prop(ha, hb);
        std::vector<double> times(512);
        for (std::size_t k = 0; k < times.size(); ++k) times[k] = 0.01 * static_cast<double>(k);

        const double s = best_of(3, [&] { (void)sample_phases_serial(prop, times); });
        const double p = best_of(3, [&] { (void)sample_phases_omp(prop, times); });
        char name[64];
        std::snprintf(name, sizeof name, "sample_phases d=%ld", static_cast<long>(dim));
        report(name, s, p);
    }

    const double s = best_of(3, [] { (void)theorem_trials_serial(1000, 6, 7, kDefaultTolerances); });
    const double p = best_of(3, [] { (void)theorem_trials_omp(1000, 6, 7, kDefaultTolerances); });
    report("theorem_trials n=1000 d<=6", s, p);
    return 0;
}
