#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "secantlab/commands.hpp"

namespace {

using namespace secantlab;

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "qq" || text == "QQ") return FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0 || text.rfind("Fp:", 0) == 0) {
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(text.substr(3))));
  }
  throw StructuralError("bad --field (expected qq or fp:<p>): " + text);
}

MonomialOrder parse_order_flag(const std::string& text) {
  if (text == "grevlex") return MonomialOrder::grevlex();
  if (text == "lex") return MonomialOrder::lex();
  if (text.rfind("elim:", 0) == 0) {
    return MonomialOrder::block_elim(static_cast<std::uint32_t>(std::stoul(text.substr(5))));
  }
  throw StructuralError("bad --order (expected grevlex, lex or elim:<k>): " + text);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_report(const Report& r, const RunConfig& config) {
  std::cout << (config.json_output ? report_to_json(r) + "\n" : report_to_text(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secantlab: secant varieties of embedded varieties, by exact computation"};
  app.require_subcommand(1);

  std::string field_flag = "fp:32003";
  std::string order_flag = "grevlex";
  std::uint32_t degree_cap = 0;
  double timeout = 0;
  bool json_out = false;
  app.add_option("--field", field_flag, "coefficient field: qq or fp:<p>");
  app.add_option("--order", order_flag, "monomial order: grevlex, lex or elim:<k>");
  app.add_option("--degree-cap", degree_cap, "truncate Groebner runs above this degree");
  app.add_option("--timeout", timeout, "budget in seconds for engine stages");
  app.add_flag("--json", json_out, "emit JSON instead of text");

  auto* construct = app.add_subcommand("construct", "write a variety fixture");
  std::string family;
  std::vector<std::string> params;
  std::string out_dir = ".";
  construct->add_option("family", family, "rnc | veronese | plane-curve-embed | from-file")
      ->required();
  construct->add_option("params", params, "family parameters");
  construct->add_option("--out-dir", out_dir, "fixture directory");

  auto* analyze = app.add_subcommand("analyze", "run pipeline stages over a fixture");
  std::string fixture;
  std::string tasks_flag = "dim,degree";
  std::string point_flag;
  analyze->add_option("fixture", fixture, "path to a .ideal fixture")->required();
  analyze->add_option("--tasks", tasks_flag, "comma list: secant,dim,degree,singlocus,betti,depth,mult");
  analyze->add_option("--point", point_flag, "homogeneous rational coordinates a,b,c,...");

  auto* predict = app.add_subcommand("predict", "evaluate the criteria oracle on a descriptor");
  std::string descriptor_path;
  predict->add_option("descriptor", descriptor_path, "descriptor JSON file")->required();

  auto* verify = app.add_subcommand("verify", "predicted vs computed, side by side");
  std::string v_descriptor, v_fixture, v_point;
  verify->add_option("descriptor", v_descriptor, "descriptor JSON file")->required();
  verify->add_option("fixture", v_fixture, "path to a .ideal fixture")->required();
  verify->add_option("--point", v_point, "point of X, homogeneous coordinates")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config;
    config.field = parse_field_flag(field_flag);
    config.order = parse_order_flag(order_flag);
    if (degree_cap > 0) config.degree_cap = degree_cap;
    if (timeout > 0) {
      config.timeout_seconds = timeout;
    } else {
      config.timeout_seconds = env_timeout();
    }
    config.json_output = json_out;
    config.fixture_dir = out_dir;

    if (construct->parsed()) {
      ConstructResult r = cmd_construct(family, params, config);
      print_report(r.report, config);
      return static_cast<int>(ExitCode::Ok);
    }
    if (analyze->parsed()) {
      std::vector<std::string> tasks;
      std::stringstream ts(tasks_flag);
      std::string tok;
      while (std::getline(ts, tok, ',')) {
        if (!tok.empty()) tasks.push_back(tok);
      }
      std::optional<PointOnVariety> pt;
      if (!point_flag.empty()) pt = parse_point(point_flag);
      Report r = cmd_analyze(fixture, tasks, config, pt);
      print_report(r, config);
      if (r.any_fail()) return static_cast<int>(ExitCode::VerifyFail);
      if (r.any_skipped()) return static_cast<int>(ExitCode::Budget);
      return static_cast<int>(ExitCode::Ok);
    }
    if (predict->parsed()) {
      PredictResult r = cmd_predict(slurp(descriptor_path), config);
      std::cout << r.json << "\n";
      return static_cast<int>(ExitCode::Ok);
    }
    if (verify->parsed()) {
      VerifyResult r = cmd_verify(slurp(v_descriptor), v_fixture, parse_point(v_point), config);
      print_report(r.report, config);
      return static_cast<int>(r.exit_code);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  }
  return static_cast<int>(ExitCode::InputError);
}
