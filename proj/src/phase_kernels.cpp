#include "orthotime/phase_kernels.hpp"

#include <cstddef>
#include <exception>

namespace orthotime {

ProductPropagator::ProductPropagator(const HermitianOperator& ha, const HermitianOperator& hb)
    : dim_(ha.dim()) {
    if (ha.dim() != hb.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "Hamiltonians must share a dimension");
    }
    EigenSystem ea = herm_eig(ha);
    EigenSystem eb = herm_eig(hb);
    wa_ = ea.vectors.matrix();
    wb_ = eb.vectors.matrix();
    la_ = std::move(ea.values);
    lb_ = std::move(eb.values);
}

UnitaryMatrix ProductPropagator::at(double t) const {
    ComplexVector pa(dim_), pb(dim_);
    for (Eigen::Index k = 0; k < dim_; ++k) {
        pa(k) = std::polar(1.0, -la_(k) * t);
        pb(k) = std::polar(1.0, lb_(k) * t);
    }
    // Wb Db Wb^dag Wa Da Wa^dag
    ComplexMatrix inner = wb_.adjoint() * wa_;
    inner = pb.asDiagonal() * inner * pa.asDiagonal();
    return UnitaryMatrix::unchecked(wb_ * inner * wa_.adjoint());
}

RealVector ProductPropagator::sorted_phases(double t) const {
    return unitary_eig(at(t)).values;
}

std::vector<RealVector> sample_phases_serial(const ProductPropagator& prop,
                                             std::span<const double> times) {
    std::vector<RealVector> out(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        out[k] = prop.sorted_phases(times[k]);
    }
    return out;
}

std::vector<RealVector> sample_phases_omp(const ProductPropagator& prop,
                                          std::span<const double> times) {
    std::vector<RealVector> out(times.size());
    const auto n = static_cast<std::ptrdiff_t>(times.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            out[static_cast<std::size_t>(k)] =
                prop.sorted_phases(times[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical(orthotime_phase_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace orthotime
