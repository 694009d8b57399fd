#pragma once

namespace orthotime {

// Numerical thresholds shared by the linear-algebra layer and its callers.
struct Tolerances {
    double hermiticity = 1e-12;  // relative: |H - H^dag|_F <= tol * |H|_F
    double unitarity = 1e-10;    // |U^dag U - 1|_F
    double cut_guard = 1e-9;     // minimum eigenphase distance from pi
    double coincident = 1e-12;   // divided differences fall back to the limit
    double normalization = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

// Selects the serial reference kernels or their OpenMP counterparts.
enum class Exec { serial, parallel };

}  // namespace orthotime
