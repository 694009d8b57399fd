#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "orthotime/errors.hpp"
#include "orthotime/linalg.hpp"
#include "orthotime/qubit.hpp"

namespace orthotime::cli {

/// Malformed problem file; `field` names the offending JSON path.
class InputError : public Error {
public:
    InputError(std::string field, const std::string& what)
        : Error(ErrorCode::InvalidArgument, "field '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct QubitShorthand {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double gamma = 0.0;
    Vec3 axis_a = Vec3::UnitZ();
    Vec3 axis_b = Vec3::UnitZ();
    double r0_a = 0.0;
    double r0_b = 0.0;

    QubitPair pair() const;
};

/// Input for discriminate/bounds. Exactly one of the matrix form
/// {"dim", "H_a", "H_b"} or {"qubit": {...}} is accepted; complex entries are
/// [re, im] pairs.
struct ProblemSpec {
    Eigen::Index dim = 0;
    HermitianOperator ha{ComplexMatrix::Zero(1, 1)};
    HermitianOperator hb{ComplexMatrix::Zero(1, 1)};
    std::optional<double> t_max;
    std::optional<double> scan_step;
    std::optional<double> refine_tol;
    double alpha = 0.0;
    std::optional<QubitShorthand> qubit;
    std::optional<ComplexVector> psi;  // optional probe state for `bounds`
};

ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec load_problem(const std::filesystem::path& path);

nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const ComplexVector& v);

}  // namespace orthotime::cli
