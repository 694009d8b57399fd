#pragma once

// Eigenphase sampling of exp(i Hb t) exp(-i Ha t) over a batch of times.
// The OpenMP kernel and the serial reference evaluate identical arithmetic
// per sample, so their outputs agree bit for bit.

#include <span>
#include <vector>

#include "orthotime/config.hpp"
#include "orthotime/linalg.hpp"

namespace orthotime {

/// Caches the spectral decompositions of both generators so that evaluating
/// the product at a new time costs two diagonal scalings and two products.
class ProductPropagator {
public:
    ProductPropagator(const HermitianOperator& ha, const HermitianOperator& hb);

    Eigen::Index dim() const noexcept { return dim_; }

    /// exp(i Hb t) exp(-i Ha t)
    UnitaryMatrix at(double t) const;

    /// Ascending eigenphases of at(t).
    RealVector sorted_phases(double t) const;

private:
    Eigen::Index dim_;
    ComplexMatrix wa_, wb_;
    RealVector la_, lb_;
};

std::vector<RealVector> sample_phases_serial(const ProductPropagator& prop,
                                             std::span<const double> times);
std::vector<RealVector> sample_phases_omp(const ProductPropagator& prop,
                                          std::span<const double> times);

inline std::vector<RealVector> sample_phases(const ProductPropagator& prop,
                                             std::span<const double> times, Exec exec) {
    return exec == Exec::parallel ? sample_phases_omp(prop, times)
                                  : sample_phases_serial(prop, times);
}

}  // namespace orthotime
