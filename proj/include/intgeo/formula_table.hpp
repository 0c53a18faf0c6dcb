#pragma once

#include <string>
#include <vector>

#include "intgeo/scalar.hpp"

namespace intgeo {

struct FormulaTerm {
  int left_index = 0;
  int right_index = 0;
  int left_degree = 0;
  int right_degree = 0;
  int lambda_pow = 0;
  std::string left_label;   // LaTeX label of the left basis element
  std::string right_label;
  Scalar coefficient;

  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

// A kinematic or additive operator applied to one input element, expanded on
// a display basis. Always carries its normalization tag.
struct FormulaTable {
  std::string group;          // e.g. "SO(3)", "U(2)", "V^3_lambda"
  int dimension = 0;
  std::string normalization;  // "standard" or "unit"
  std::string basis;          // display basis tag
  std::string operator_name;  // "kinematic" or "additive"
  std::string input_label;    // LaTeX label of the input element
  int input_degree = 0;
  int input_index = 0;
  std::vector<FormulaTerm> terms;

  friend bool operator==(const FormulaTable&, const FormulaTable&) = default;
};

}  // namespace intgeo
