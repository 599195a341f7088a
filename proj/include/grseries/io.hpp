#pragma once

#include <string>

#include <json.hpp>

#include "grseries/builders.hpp"

namespace grseries {

struct ProblemInput {
    ModelPtr model;
    CurveTable table;
};

/// Parses and validates the input schema:
/// { "model": {"rank", "form", "kappa", "grading"},
///   "table": {"generic": [{"class", "counts": {"d": count}}],
///             "exceptional": [{"class", "count"}],
///             "tori": [{"class", "sign", "type"}] } }
/// Throws std::domain_error naming the failing field or invariant.
ProblemInput problem_from_json(const nlohmann::json& j);
ProblemInput load_problem(const std::string& path);

/// Canonical serialization: fixed key order, two-space indent, trailing
/// newline. parse -> serialize is byte-identical on canonical files.
nlohmann::ordered_json problem_to_json(const ManifoldModel& model, const CurveTable& table);
std::string canonical_problem_text(const ManifoldModel& model, const CurveTable& table);

nlohmann::ordered_json series_to_json(const Series& series);
nlohmann::ordered_json expansion_to_json(const InvariantExpansion& expansion);
std::string expansion_text(const InvariantExpansion& expansion);

}  // namespace grseries
