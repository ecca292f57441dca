#pragma once

#include <string>

#include <json.hpp>

#include "qsep/bloch.hpp"
#include "qsep/eb.hpp"
#include "qsep/graph.hpp"
#include "qsep/report.hpp"
#include "qsep/reduction.hpp"

namespace qsep {

inline constexpr int kSchemaVersion = 1;

// File conventions: every document carries "schema_version"; doubles are
// decimal strings with 17 significant digits; rationals are {"num","den"};
// complex matrices are row-major arrays of [re, im] pairs.

std::string format_real(double v);
double parse_real(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);

nlohmann::json bloch_to_json(const BlochVector& v);
BlochVector bloch_from_json(const nlohmann::json& j);

nlohmann::json rsdf_to_json(const RsdfInstance& inst);
RsdfInstance rsdf_from_json(const nlohmann::json& j);

nlohmann::json wopt_to_json(const WoptInstance& w);
WoptInstance wopt_from_json(const nlohmann::json& j);

nlohmann::json wmem_params_to_json(const WmemParams& p);
WmemParams wmem_params_from_json(const nlohmann::json& j);

nlohmann::json kraus_to_json(const KrausSet& k);

// Channel file: {"kraus": [...], "M":, "N":} or {"choi": matrix, "M":, "N":}.
ChoiOperator choi_from_channel_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qsep
