#include <cstddef>
#include <exception>

#include "orthotime/theorem.hpp"

namespace orthotime {

namespace {

TheoremTrial run_trial(std::size_t index, Eigen::Index dim_max, std::uint64_t seed,
                       const Tolerances& tol) {
    const std::uint64_t s = mix_seed(seed, index);
    const auto dim = static_cast<Eigen::Index>(1 + s % static_cast<std::uint64_t>(dim_max));
    TheoremTrial trial =
        check_theorem1(random_unitary(dim, mix_seed(s, 1)), random_unitary(dim, mix_seed(s, 2)), tol);
    trial.seed = s;
    return trial;
}

}  // namespace

std::vector<TheoremTrial> theorem_trials_serial(std::size_t trials, Eigen::Index dim_max,
                                                std::uint64_t seed, const Tolerances& tol) {
    std::vector<TheoremTrial> out(trials);
    for (std::size_t i = 0; i < trials; ++i) out[i] = run_trial(i, dim_max, seed, tol);
    return out;
}

std::vector<TheoremTrial> theorem_trials_omp(std::size_t trials, Eigen::Index dim_max,
                                             std::uint64_t seed, const Tolerances& tol) {
    std::vector<TheoremTrial> out(trials);
    const auto n = static_cast<std::ptrdiff_t>(trials);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run_trial(static_cast<std::size_t>(i), dim_max, seed, tol);
        } catch (...) {
#pragma omp critical(orthotime_trial_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace orthotime
