#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entrobound/bounds.hpp"
#include "entrobound/qubit.hpp"

namespace entrobound {

// Column orders below are part of the file format; tests lock them.
inline constexpr std::string_view kBoundCsvHeader =
    "d,s,mu_bound,gamma_s,eigenstate_baseline,montecarlo_min,certified,n_seeds,rng_seed";
inline constexpr std::string_view kSweepSCsvHeader =
    "s,gamma_s_npim,gamma_s_montecarlo,mu_bound,montecarlo_min_entropy";
inline constexpr std::string_view kQubitCsvHeader = "phi,bound_value,branch,closed_form_value,montecarlo_min";

/// Shortest decimal form that round-trips the double exactly.
std::string format_number(double x);

std::string bound_csv_row(const BoundReport& r);
nlohmann::json bound_json(const BoundReport& r);

struct SweepSRow {
    double s = 0.0;
    double gamma_npim = 0.0;
    std::optional<double> gamma_montecarlo;
    double mu_bound = 0.0;
    std::optional<double> montecarlo_min_entropy;
    bool certified = false;
};
std::string sweep_s_csv_row(const SweepSRow& r);
nlohmann::json sweep_s_json(const SweepSRow& r);

struct QubitCurveRow {
    qubit::QubitBoundResult bound;
    std::optional<double> montecarlo_min;
};
std::string qubit_csv_row(const QubitCurveRow& r);
nlohmann::json qubit_json(const QubitCurveRow& r);

nlohmann::json amplitudes_json(const AmplitudeVector& v);

} // namespace entrobound
