#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "intgeo/checks.hpp"
#include "intgeo/formula_table.hpp"
#include "intgeo/mc_verify.hpp"

namespace intgeo {

enum class Format { json, csv, latex };

Format parse_format(std::string_view s);
std::string to_string(Format f);

// {"terms":[{"den":"1","num":"2","pi_pow":-1}]}
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const FormulaTable& t);
FormulaTable table_from_json(const nlohmann::json& j);

// Deterministic bytes; JSON objects have sorted keys.
std::string emit_tables(const std::vector<FormulaTable>& tables, Format f);
std::vector<FormulaTable> parse_tables_json(std::string_view text);

std::string emit_report(const std::vector<CheckResult>& results, Format f);
std::string emit_mc(const std::vector<mc::MCEstimate>& runs, Format f);

// Generic named-value documents (matrices, series) used by the CLI.
std::string emit_json(const nlohmann::json& doc);

}  // namespace intgeo
