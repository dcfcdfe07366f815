#pragma once

// JSON views of the report and verdict types. Kept out of the core headers
// so only the CLI and report-focused tests pay for the json dependency.

#include <cmath>

#include <json.hpp>

#include "isoprofile/comparison.hpp"
#include "isoprofile/inequalities.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/tube_bounds.hpp"
#include "isoprofile/weak_d2.hpp"

namespace isoprofile {

inline nlohmann::json to_json(const weak_ineq_report& r) {
    return {{"sense", to_string(r.sense)},
            {"verdict", to_string(r.v)},
            {"worst_residual", r.worst_residual},
            {"worst_location", r.worst_location},
            {"tolerance", r.tolerance},
            {"h_schedule", r.h_schedule},
            {"interpolated", r.interpolated},
            {"note", r.note}};
}

inline nlohmann::json to_json(const comparison_verdict& v) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : v.derivative_matches)
        matches.push_back({{"point", m.point},
                           {"f1_left", m.f1_left},
                           {"f1_right", m.f1_right},
                           {"f2_left", m.f2_left},
                           {"f2_right", m.f2_right}});
    return {{"ordering", to_string(v.ordering)},
            {"touch_points", v.touch_points},
            {"touch_count", v.touch_count},
            {"derivative_matches", matches},
            {"derivatives_matched", v.derivatives_matched},
            {"certificates_ok", v.certificates_ok},
            {"max_f1_minus_f2", v.max_f1_minus_f2},
            {"propagation_from", v.propagation_from},
            {"direction", v.direction}};
}

inline nlohmann::json to_json(const certificate_report& r) {
    return {{"pass", r.pass},
            {"min_slack", r.min_slack},
            {"argmin_volume", r.argmin_volume},
            {"rigidity_flag", r.rigidity_flag},
            {"declared_class", r.declared_class},
            {"tolerance", r.tolerance},
            {"note", r.note}};
}

inline nlohmann::json to_json(const monotonicity_report& r) {
    return {{"pass", r.pass},
            {"worst_increase", r.worst_increase},
            {"failing_pair", {r.failing_i, r.failing_j}},
            {"note", r.note}};
}

inline nlohmann::json to_json(const diameter_report& r) {
    return {{"pass", r.pass},
            {"rigidity_flag", r.rigidity_flag},
            {"diameter", r.diameter},
            {"slack", r.slack}};
}

inline nlohmann::json profile_to_json(const sampled_profile& p) {
    nlohmann::json samples = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        samples.push_back({p.volumes()[i], p.values()[i]});
    nlohmann::json j{{"dimension", p.dimension()}, {"samples", samples}};
    if (p.finite_volume())
        j["total_volume"] = p.total_volume();
    else
        j["total_volume"] = nullptr;
    return j;
}

inline sampled_profile profile_from_json(const nlohmann::json& j) {
    const int dimension = j.at("dimension").get<int>();
    double total = infinity;
    if (j.contains("total_volume") && !j.at("total_volume").is_null())
        total = j.at("total_volume").get<double>();
    std::vector<double> volumes, values;
    for (const auto& s : j.at("samples")) {
        volumes.push_back(s.at(0).get<double>());
        values.push_back(s.at(1).get<double>());
    }
    return sampled_profile(std::move(volumes), std::move(values), total, dimension);
}

} // namespace isoprofile
