#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parakov/dspace.hpp"
#include "parakov/errors.hpp"
#include "parakov/expr.hpp"
#include "parakov/rational_solve.hpp"
#include "parakov/report.hpp"

namespace {

using namespace parakov;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error:
    case ErrorCode::division_by_zero:
      return 2;
    case ErrorCode::unsupported_feature:
    case ErrorCode::unsupported_denominator:
    case ErrorCode::unsupported_radicand:
    case ErrorCode::deep_radical:
      return 3;
    default:
      return 4;
  }
}

std::vector<std::string> split_list(const std::string& csv, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, sep)) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

FieldPtr make_field(const std::string& params_csv) {
  std::vector<std::string> names = split_list(params_csv, ',');
  for (size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n == "z") fail(ErrorCode::parse_error, "parameter name 'z' is reserved");
    if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
      fail(ErrorCode::parse_error, "invalid parameter name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        fail(ErrorCode::parse_error, "invalid parameter name '" + n + "'");
    for (size_t j = 0; j < i; ++j)
      if (names[j] == n)
        fail(ErrorCode::parse_error, "duplicate parameter name '" + n + "'");
  }
  return std::make_shared<Field>(names);
}

// Input expressions live in Q(t...)(z); emitted forms may carry radicals but
// inputs may not.
RatFunc parse_input(const std::string& text, const FieldPtr& fld) {
  RatFunc r = parse_expr(text, fld);
  if (fld->ngens() > 0)
    fail(ErrorCode::unsupported_radicand,
         "radicals are not allowed in input expressions");
  return r;
}

void emit(const Report& rep, bool json) {
  std::cout << (json ? report_to_json(rep) : report_to_text(rep));
}

int run_verify(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open system file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("r") || !doc.contains("pairs"))
    fail(ErrorCode::parse_error, "system file needs fields 'r' and 'pairs'");
  std::string params = doc.value("params", std::string());
  FieldPtr fld = make_field(params);
  RatFunc r = parse_input(doc["r"].get<std::string>(), fld);

  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  size_t idx = 0;
  bool all_ok = true;
  for (const auto& pair : doc["pairs"]) {
    if (!pair.contains("a") || !pair.contains("B"))
      fail(ErrorCode::parse_error, "each pair needs fields 'a' and 'B'");
    std::vector<ParamElem> a;
    for (const auto& s : pair["a"]) {
      RatFunc av = parse_expr(s.get<std::string>(), fld);
      if (!av.is_constant())
        fail(ErrorCode::parse_error, "derivation coefficients must be z-free");
      a.push_back(av.constant_value());
    }
    if (a.size() != static_cast<size_t>(fld->nparams()))
      fail(ErrorCode::parse_error,
           "derivation needs one coefficient per parameter");
    Connection B;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        B[i][j] = parse_expr(pair["B"][i][j].get<std::string>(), fld);
    bool ok = verify_zero_curvature(r, a, B);
    all_ok = all_ok && ok;
    if (json) {
      nlohmann::ordered_json rec;
      rec["pair"] = idx;
      rec["zero_curvature"] = ok;
      results.push_back(rec);
    } else {
      std::cout << "pair " << idx << ": zero_curvature = "
                << (ok ? "true" : "false") << "\n";
    }
    ++idx;
  }
  if (json) {
    nlohmann::ordered_json out;
    out["pairs"] = results;
    out["all"] = all_ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "all pairs: " << (all_ok ? "true" : "false") << "\n";
  }
  return 0;
}

void emit_solutions(const RationalSolutions& sol, bool json) {
  if (json) {
    nlohmann::ordered_json out;
    out["found"] = sol.found_particular;
    if (sol.found_particular) out["particular"] = sol.particular.to_string();
    nlohmann::ordered_json ker = nlohmann::ordered_json::array();
    for (const auto& k : sol.kernel) ker.push_back(k.to_string());
    out["kernel"] = ker;
    out["diagnostics"] = sol.diagnostics;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "found: " << (sol.found_particular ? "true" : "false") << "\n";
    if (sol.found_particular)
      std::cout << "particular: " << sol.particular.to_string() << "\n";
    for (const auto& k : sol.kernel)
      std::cout << "kernel: " << k.to_string() << "\n";
    for (const auto& d : sol.diagnostics) std::cout << "note: " << d << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "parakov: exact Liouvillian solutions, parameterized differential Galois "
      "groups, and integrability spaces for d^2Y/dz^2 = r(z,t) Y"};
  app.require_subcommand(1);

  std::string r_text, params_csv, op_list, rhs_text, system_path;
  bool as_json = false;
  int oracle_bound = 6;

  auto add_common = [&](CLI::App* cmd, bool needs_r) {
    if (needs_r)
      cmd->add_option("--r", r_text, "rational expression for r(z,t)")
          ->required();
    cmd->add_option("--params", params_csv,
                    "comma-separated parameter names (ordered)");
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify, solve, group description, integrability space");
  add_common(analyze, true);
  CLI::App* liouv = app.add_subcommand(
      "liouvillian", "classify and report closed-form solution certificates");
  add_common(liouv, true);
  CLI::App* dsp = app.add_subcommand(
      "dspace", "integrability space with connection certificates");
  add_common(dsp, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "check zero-curvature for derivation/matrix pairs");
  verify->add_option("--system", system_path, "JSON system file")->required();
  verify->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* solve = app.add_subcommand(
      "solve", "rational solutions of sum_i c_i y^(i) = rhs");
  solve->add_option("--op", op_list,
                    "operator coefficients c0;c1;... (lowest order first)")
      ->required();
  solve->add_option("--rhs", rhs_text, "right-hand side expression")->required();
  add_common(solve, false);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "rational solutions via a uniform brute-force ansatz");
  oracle->add_option("--op", op_list,
                     "operator coefficients c0;c1;... (lowest order first)")
      ->required();
  oracle->add_option("--rhs", rhs_text, "right-hand side expression")->required();
  oracle->add_option("--bound", oracle_bound, "uniform pole/degree bound");
  add_common(oracle, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      FieldPtr fld = make_field(params_csv);
      emit(run_pipeline(parse_input(r_text, fld), true, true), as_json);
    } else if (app.got_subcommand(liouv)) {
      FieldPtr fld = make_field(params_csv);
      emit(run_pipeline(parse_input(r_text, fld), false, false), as_json);
    } else if (app.got_subcommand(dsp)) {
      FieldPtr fld = make_field(params_csv);
      emit(run_pipeline(parse_input(r_text, fld), false, true), as_json);
    } else if (app.got_subcommand(verify)) {
      return run_verify(system_path, as_json);
    } else if (app.got_subcommand(solve) || app.got_subcommand(oracle)) {
      FieldPtr fld = make_field(params_csv);
      std::vector<RatFunc> coeffs;
      for (const auto& c : split_list(op_list, ';'))
        coeffs.push_back(parse_input(c, fld));
      LinDiffOp L(coeffs);
      RatFunc rhs = parse_input(rhs_text, fld);
      RationalSolutions sol = app.got_subcommand(solve)
                                  ? rational_solutions(L, rhs)
                                  : oracle_rational_solutions(L, rhs, oracle_bound);
      emit_solutions(sol, as_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
