#include "orthotime/cli/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace orthotime::cli {

namespace {

using nlohmann::json;

double read_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw InputError(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(field, "must be finite");
    return v;
}

std::optional<double> read_optional_number(const json& doc, const char* key) {
    if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
    return read_number(doc.at(key), key);
}

Complex read_complex(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) throw InputError(field, "expected an [re, im] pair");
    return {read_number(j[0], field + "[0]"), read_number(j[1], field + "[1]")};
}

ComplexMatrix read_matrix(const json& j, Eigen::Index dim, const std::string& field) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        throw InputError(field, "expected " + std::to_string(dim) + " rows");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw InputError(row_field, "expected " + std::to_string(dim) + " entries");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = read_complex(row[static_cast<std::size_t>(c)],
                                   row_field + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

HermitianOperator read_hermitian(const json& j, Eigen::Index dim, const std::string& field) {
    const ComplexMatrix m = read_matrix(j, dim, field);
    try {
        return HermitianOperator(m);
    } catch (const Error& e) {
        throw InputError(field, e.what());
    }
}

Vec3 read_axis(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) throw InputError(field, "expected a 3-vector");
    Vec3 v(read_number(j[0], field + "[0]"), read_number(j[1], field + "[1]"),
           read_number(j[2], field + "[2]"));
    if (!(v.norm() > 0.0)) throw InputError(field, "axis must be non-zero");
    return v.normalized();
}

QubitShorthand read_qubit(const json& q) {
    if (!q.is_object()) throw InputError("qubit", "expected an object");
    QubitShorthand s;
    if (!q.contains("omega_a")) throw InputError("qubit.omega_a", "missing");
    if (!q.contains("omega_b")) throw InputError("qubit.omega_b", "missing");
    s.omega_a = read_number(q.at("omega_a"), "qubit.omega_a");
    s.omega_b = read_number(q.at("omega_b"), "qubit.omega_b");
    if (s.omega_a < 0.0) throw InputError("qubit.omega_a", "must be non-negative");
    if (s.omega_b < 0.0) throw InputError("qubit.omega_b", "must be non-negative");
    if (s.omega_a + s.omega_b == 0.0) throw InputError("qubit.omega_a", "both frequencies are zero");
    if (q.contains("r0_a")) s.r0_a = read_number(q.at("r0_a"), "qubit.r0_a");
    if (q.contains("r0_b")) s.r0_b = read_number(q.at("r0_b"), "qubit.r0_b");

    const bool has_axes = q.contains("axis_a") || q.contains("axis_b");
    if (has_axes) {
        if (!q.contains("axis_a")) throw InputError("qubit.axis_a", "missing (axis_b was given)");
        if (!q.contains("axis_b")) throw InputError("qubit.axis_b", "missing (axis_a was given)");
        s.axis_a = read_axis(q.at("axis_a"), "qubit.axis_a");
        s.axis_b = read_axis(q.at("axis_b"), "qubit.axis_b");
        const double from_axes = std::acos(std::clamp(s.axis_a.dot(s.axis_b), -1.0, 1.0));
        if (q.contains("gamma")) {
            const double g = read_number(q.at("gamma"), "qubit.gamma");
            if (std::abs(g - from_axes) > 1e-9) {
                throw InputError("qubit.gamma", "inconsistent with the angle between the axes");
            }
        }
        s.gamma = from_axes;
    } else {
        if (!q.contains("gamma")) throw InputError("qubit.gamma", "missing");
        s.gamma = read_number(q.at("gamma"), "qubit.gamma");
        const QubitPair p = aligned_pair(s.omega_a, s.omega_b, s.gamma);
        s.axis_a = p.a.axis;
        s.axis_b = p.b.axis;
    }
    return s;
}

}  // namespace

QubitPair QubitShorthand::pair() const {
    QubitPair p;
    p.a = {omega_a, axis_a, r0_a};
    p.b = {omega_b, axis_b, r0_b};
    return p;
}

ProblemSpec parse_problem(const json& doc) {
    if (!doc.is_object()) throw InputError("<root>", "expected a JSON object");
    const bool matrix_form = doc.contains("H_a") || doc.contains("H_b") || doc.contains("dim");
    const bool qubit_form = doc.contains("qubit");
    if (matrix_form && qubit_form) {
        throw InputError("qubit", "give either the matrix form or the qubit shorthand, not both");
    }
    if (!matrix_form && !qubit_form) {
        throw InputError("<root>", "expected {\"dim\", \"H_a\", \"H_b\"} or {\"qubit\": {...}}");
    }

    ProblemSpec spec;
    if (qubit_form) {
        spec.qubit = read_qubit(doc.at("qubit"));
        const QubitPair p = spec.qubit->pair();
        spec.dim = 2;
        spec.ha = p.ha();
        spec.hb = p.hb();
    } else {
        if (!doc.contains("dim")) throw InputError("dim", "missing");
        if (!doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() < 1) {
            throw InputError("dim", "expected a positive integer");
        }
        spec.dim = static_cast<Eigen::Index>(doc.at("dim").get<long long>());
        if (!doc.contains("H_a")) throw InputError("H_a", "missing");
        if (!doc.contains("H_b")) throw InputError("H_b", "missing");
        spec.ha = read_hermitian(doc.at("H_a"), spec.dim, "H_a");
        spec.hb = read_hermitian(doc.at("H_b"), spec.dim, "H_b");
    }

    spec.t_max = read_optional_number(doc, "t_max");
    spec.scan_step = read_optional_number(doc, "scan_step");
    spec.refine_tol = read_optional_number(doc, "refine_tol");
    if (spec.t_max && *spec.t_max <= 0.0) throw InputError("t_max", "must be positive");
    if (spec.scan_step && *spec.scan_step <= 0.0) throw InputError("scan_step", "must be positive");
    if (spec.refine_tol && *spec.refine_tol <= 0.0) throw InputError("refine_tol", "must be positive");
    if (auto a = read_optional_number(doc, "alpha")) spec.alpha = *a;

    if (doc.contains("psi")) {
        const json& p = doc.at("psi");
        if (!p.is_array() || static_cast<Eigen::Index>(p.size()) != spec.dim) {
            throw InputError("psi", "expected " + std::to_string(spec.dim) + " [re, im] entries");
        }
        ComplexVector v(spec.dim);
        for (Eigen::Index k = 0; k < spec.dim; ++k) {
            v(k) = read_complex(p[static_cast<std::size_t>(k)], "psi[" + std::to_string(k) + "]");
        }
        if (std::abs(v.norm() - 1.0) > 1e-10) throw InputError("psi", "state must be normalised");
        spec.psi = std::move(v);
    }
    return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("--input", "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("<root>", std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
    return out;
}

}  // namespace orthotime::cli
