#include "entrobound/report_io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace entrobound {

using nlohmann::json;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

json opt_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

} // namespace

json amplitudes_json(const AmplitudeVector& v) {
    json re = json::array(), im = json::array();
    for (const auto& z : v.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

std::string bound_csv_row(const BoundReport& r) {
    std::string row;
    row += std::to_string(r.dim) + ",";
    row += format_number(r.s) + ",";
    row += format_number(r.mu_bound) + ",";
    row += format_number(r.gamma_s) + ",";
    row += format_number(r.eigenstate_baseline) + ",";
    row += opt_number(r.montecarlo_min) + ",";
    row += std::string(r.certified ? "true" : "false") + ",";
    row += std::to_string(r.config.n_seeds) + ",";
    row += std::to_string(r.config.rng_seed);
    return row;
}

json bound_json(const BoundReport& r) {
    json j = {
        {"d", r.dim},
        {"s", r.s},
        {"mu_bound", r.mu_bound},
        {"gamma_s", r.gamma_s},
        {"eigenstate_baseline", r.eigenstate_baseline},
        {"montecarlo_min", opt_json(r.montecarlo_min)},
        {"certified", r.certified},
        {"n_seeds", r.config.n_seeds},
        {"rng_seed", r.config.rng_seed},
        {"epsilon", r.config.epsilon},
        {"max_iterations", r.config.max_iterations},
        {"error_amplification_bits", r.error_amplification},
        {"norm",
         {{"value", r.estimate.value},
          {"bracket_lower", r.estimate.bracket_lower},
          {"bracket_upper", r.estimate.bracket_upper},
          {"argmax_seed", r.estimate.argmax_seed},
          {"argmax_state", amplitudes_json(r.estimate.argmax_state)},
          {"note", r.certified ? "norm pinched by bracket; gamma_s certified"
                               : "NPIM lower-estimates the norm; gamma_s may overestimate the true bound"}}},
    };
    if (r.unitary_seed) j["unitary_seed"] = *r.unitary_seed;
    if (r.montecarlo) {
        j["montecarlo"] = {{"states", r.montecarlo_states},
                           {"rng_seed", r.montecarlo_seed},
                           {"best_index", r.montecarlo->best_index},
                           {"best_state", amplitudes_json(r.montecarlo->best_state)}};
    }
    return j;
}

std::string sweep_s_csv_row(const SweepSRow& r) {
    return format_number(r.s) + "," + format_number(r.gamma_npim) + "," + opt_number(r.gamma_montecarlo) + "," +
           format_number(r.mu_bound) + "," + opt_number(r.montecarlo_min_entropy);
}

json sweep_s_json(const SweepSRow& r) {
    return {{"s", r.s},
            {"gamma_s_npim", r.gamma_npim},
            {"gamma_s_montecarlo", opt_json(r.gamma_montecarlo)},
            {"mu_bound", r.mu_bound},
            {"montecarlo_min_entropy", opt_json(r.montecarlo_min_entropy)},
            {"certified", r.certified}};
}

std::string qubit_csv_row(const QubitCurveRow& r) {
    return format_number(r.bound.phi) + "," + format_number(r.bound.value) + "," + qubit::to_string(r.bound.branch) +
           "," + format_number(r.bound.closed_form) + "," + opt_number(r.montecarlo_min);
}

json qubit_json(const QubitCurveRow& r) {
    return {{"phi", r.bound.phi},
            {"bound_value", r.bound.value},
            {"branch", qubit::to_string(r.bound.branch)},
            {"closed_form_value", r.bound.closed_form},
            {"numeric_min", r.bound.numeric_min},
            {"alpha_star", r.bound.alpha_star},
            {"montecarlo_min", opt_json(r.montecarlo_min)}};
}

} // namespace entrobound
