#include "spectral_perturb/report.hpp"

namespace spectral_perturb::report {

namespace {

void put(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

std::optional<double> get(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const bounds::BoundReport& r) {
    json j = json::object();
    j["method"] = r.method;
    put(j, "lower", r.lower);
    put(j, "upper", r.upper);
    put(j, "exact", r.exact);
    put(j, "slack_lower", r.slack_lower);
    put(j, "slack_upper", r.slack_upper);
    return j;
}

bounds::BoundReport bound_report_from_json(const json& j) {
    bounds::BoundReport r;
    r.method = j.at("method").get<std::string>();
    r.lower = get(j, "lower");
    r.upper = get(j, "upper");
    r.exact = get(j, "exact");
    r.slack_lower = get(j, "slack_lower");
    r.slack_upper = get(j, "slack_upper");
    return r;
}

json to_json(const bounds::SpecAnalysis& a) {
    json reports = json::array();
    for (const auto& r : a.reports) reports.push_back(to_json(r));
    return {{"lambda_max_secular", a.lambda_max_secular},
            {"lambda_max_oracle", a.lambda_max_oracle},
            {"lambda_min_secular", a.lambda_min_secular},
            {"lambda_min_oracle", a.lambda_min_oracle},
            {"norm_oracle", a.norm_oracle},
            {"bounds", reports}};
}

json to_json(const cs::TailReport& r) {
    return {{"n", r.n},
            {"p", r.p},
            {"s", r.s},
            {"trials", r.trials},
            {"seed", r.seed},
            {"t", r.t},
            {"rho", r.rho},
            {"C", r.c_const},
            {"coherence", r.coherence},
            {"spectral_norm_sq", r.spectral_norm_sq},
            {"max_subset_size", r.max_subset_size},
            {"freq_cp36", r.freq_cp36},
            {"threshold_cp36", r.threshold_cp36},
            {"success_prob_cp36", r.success_prob_cp36},
            {"freq_tail", r.freq_tail},
            {"threshold_tail", r.threshold_tail},
            {"tail_bound", r.tail_bound},
            {"tail_exponent_sign_flipped", r.tail_exponent_sign_flipped},
            {"freq_ric", r.freq_ric},
            {"mean_cross_gram_sq", r.mean_cross_gram_sq},
            {"bound_violations", r.bound_violations}};
}

json to_json(const cs::AppendColumnReport& r) {
    json arr = json::array({to_json(r.weyl)});
    if (r.mathias) arr.push_back(to_json(*r.mathias));
    arr.push_back(to_json(r.lili));
    return arr;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

json to_json(const BorderedSpec& spec) {
    return {{"M", {{"dim", spec.dim()}, {"entries", matrix_to_json(spec.m.as_matrix())}}},
            {"a", spec.a},
            {"c", spec.c}};
}

BorderedSpec spec_from_json(const json& j) {
    std::vector<Vector> rows;
    for (const auto& r : j.at("M").at("entries")) rows.push_back(r.get<Vector>());
    BorderedSpec spec{SymmetricMatrix::from_matrix(Matrix::from_rows(rows)), j.at("a").get<Vector>(),
                      j.at("c").get<double>()};
    spec.validate();
    return spec;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace spectral_perturb::report
