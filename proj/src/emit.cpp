#include "intgeo/emit.hpp"

#include <cstdio>
#include <sstream>

#include "intgeo/errors.hpp"

namespace intgeo {

using nlohmann::json;

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "latex") return Format::latex;
  throw DomainError("unknown format '" + std::string(s) + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::latex: return "latex";
  }
  return "json";
}

json scalar_to_json(const Scalar& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    terms.push_back({{"pi_pow", m}, {"num", c.num().get_str()}, {"den", c.den().get_str()}});
  }
  return {{"terms", terms}};
}

Scalar scalar_from_json(const json& j) {
  Scalar s;
  for (const auto& term : j.at("terms")) {
    Rational c(mpz_class(term.at("num").get<std::string>()), mpz_class(term.at("den").get<std::string>()));
    s += Scalar::pi_power(term.at("pi_pow").get<int>(), c);
  }
  return s;
}

json table_to_json(const FormulaTable& t) {
  json terms = json::array();
  for (const auto& term : t.terms) {
    terms.push_back({{"left_index", term.left_index},
                     {"right_index", term.right_index},
                     {"left_degree", term.left_degree},
                     {"right_degree", term.right_degree},
                     {"lambda_pow", term.lambda_pow},
                     {"left_label", term.left_label},
                     {"right_label", term.right_label},
                     {"coefficient", scalar_to_json(term.coefficient)}});
  }
  return {{"group", t.group},
          {"dimension", t.dimension},
          {"normalization", t.normalization},
          {"basis", t.basis},
          {"operator", t.operator_name},
          {"input", {{"label", t.input_label}, {"degree", t.input_degree}, {"index", t.input_index}}},
          {"terms", terms}};
}

FormulaTable table_from_json(const json& j) {
  FormulaTable t;
  t.group = j.at("group").get<std::string>();
  t.dimension = j.at("dimension").get<int>();
  t.normalization = j.at("normalization").get<std::string>();
  if (t.normalization.empty()) throw DomainError("table without normalization tag");
  t.basis = j.at("basis").get<std::string>();
  t.operator_name = j.at("operator").get<std::string>();
  t.input_label = j.at("input").at("label").get<std::string>();
  t.input_degree = j.at("input").at("degree").get<int>();
  t.input_index = j.at("input").at("index").get<int>();
  for (const auto& term : j.at("terms")) {
    FormulaTerm f;
    f.left_index = term.at("left_index").get<int>();
    f.right_index = term.at("right_index").get<int>();
    f.left_degree = term.at("left_degree").get<int>();
    f.right_degree = term.at("right_degree").get<int>();
    f.lambda_pow = term.at("lambda_pow").get<int>();
    f.left_label = term.at("left_label").get<std::string>();
    f.right_label = term.at("right_label").get<std::string>();
    f.coefficient = scalar_from_json(term.at("coefficient"));
    t.terms.push_back(std::move(f));
  }
  return t;
}

std::string emit_json(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string op_symbol(const std::string& op) { return op == "additive" ? "a" : "k"; }

std::string latex_coefficient(const FormulaTerm& term) {
  std::string c = term.coefficient.to_latex();
  if (term.lambda_pow == 0) return c;
  std::string l = term.lambda_pow == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(term.lambda_pow) + "}";
  return "\\left(" + c + "\\right)" + l;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_tables(const std::vector<FormulaTable>& tables, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      json arr = json::array();
      for (const auto& t : tables) arr.push_back(table_to_json(t));
      return emit_json({{"tables", arr}});
    }
    case Format::csv:
      os << "group,dimension,normalization,basis,operator,input,input_degree,left_index,right_index,left_degree,"
            "right_degree,lambda_pow,left_label,right_label,coefficient\n";
      for (const auto& t : tables) {
        for (const auto& term : t.terms) {
          os << csv_field(t.group) << ',' << t.dimension << ',' << t.normalization << ',' << t.basis << ','
             << t.operator_name << ',' << csv_field(t.input_label) << ',' << t.input_degree << ',' << term.left_index
             << ',' << term.right_index << ',' << term.left_degree << ',' << term.right_degree << ','
             << term.lambda_pow << ',' << csv_field(term.left_label) << ',' << csv_field(term.right_label) << ','
             << csv_field(term.coefficient.to_string()) << '\n';
        }
      }
      return os.str();
    case Format::latex:
      for (const auto& t : tables) {
        os << "% " << t.group << ", " << t.operator_name << ", basis " << t.basis << ", normalization "
           << t.normalization << "\n";
        os << "\\begin{tabular}{lll}\n";
        os << "\\multicolumn{3}{l}{$" << op_symbol(t.operator_name) << "(" << t.input_label
           << ")$ (" << t.normalization << ")} \\\\\n";
        os << "left & right & coefficient \\\\\n\\hline\n";
        for (const auto& term : t.terms) {
          os << "$" << term.left_label << "$ & $" << term.right_label << "$ & $" << latex_coefficient(term)
             << "$ \\\\\n";
        }
        os << "\\end{tabular}\n\n";
      }
      return os.str();
  }
  return {};
}

std::vector<FormulaTable> parse_tables_json(std::string_view text) {
  json doc = json::parse(text);
  std::vector<FormulaTable> out;
  for (const auto& t : doc.at("tables")) out.push_back(table_from_json(t));
  return out;
}

std::string emit_report(const std::vector<CheckResult>& results, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      json arr = json::array();
      bool ok = true;
      for (const auto& r : results) {
        arr.push_back({{"suite", r.suite}, {"name", r.name}, {"status", r.passed ? "PASS" : "FAIL"},
                       {"detail", r.detail}});
        ok = ok && r.passed;
      }
      return emit_json({{"checks", arr}, {"status", ok ? "PASS" : "FAIL"}});
    }
    case Format::csv:
      os << "suite,name,status,detail\n";
      for (const auto& r : results) {
        os << r.suite << ',' << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << csv_field(r.detail) << '\n';
      }
      return os.str();
    case Format::latex:
      os << "\\begin{tabular}{lll}\nsuite & check & status \\\\\n\\hline\n";
      for (const auto& r : results) {
        os << latex_escape(r.suite) << " & " << latex_escape(r.name) << " & " << (r.passed ? "PASS" : "FAIL")
           << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      return os.str();
  }
  return {};
}

std::string emit_mc(const std::vector<mc::MCEstimate>& runs, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      json arr = json::array();
      for (const auto& e : runs) {
        json row = {{"test", e.test},         {"seed", e.seed}, {"samples", e.samples},
                    {"estimate", e.mean},     {"stderr", e.stderr_}, {"z", e.z},
                    {"note", e.note}};
        if (e.prediction) {
          row["prediction"] = e.prediction_value;
          row["prediction_exact"] = scalar_to_json(*e.prediction);
        }
        arr.push_back(row);
      }
      return emit_json({{"runs", arr}});
    }
    case Format::csv:
      os << "test,seed,samples,estimate,stderr,prediction,z\n";
      for (const auto& e : runs) {
        os << csv_field(e.test) << ',' << e.seed << ',' << e.samples << ',' << fmt_double(e.mean) << ','
           << fmt_double(e.stderr_) << ',' << (e.prediction ? fmt_double(e.prediction_value) : "") << ','
           << (e.prediction ? fmt_double(e.z) : "") << '\n';
      }
      return os.str();
    case Format::latex:
      os << "\\begin{tabular}{lrrrr}\ntest & estimate & stderr & prediction & $z$ \\\\\n\\hline\n";
      for (const auto& e : runs) {
        os << latex_escape(e.test) << " & " << fmt_double(e.mean) << " & " << fmt_double(e.stderr_) << " & $"
           << (e.prediction ? e.prediction->to_latex() : "-") << "$ & " << fmt_double(e.z) << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      return os.str();
  }
  return {};
}

}  // namespace intgeo
