#include "secantlab/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secantlab/hilbert.hpp"

namespace secantlab {

namespace {

const MonomialOrder kOrd = MonomialOrder::grevlex();

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

ConstructResult write_fixture(const std::string& name, const EmbeddedVariety& X,
                              const RunConfig& config) {
  FixtureMeta meta{X.intrinsic_dim, X.line_bundle_power, X.genus};
  ConstructResult out;
  out.ideal_path = join_path(config.fixture_dir, name + ".ideal");
  out.meta_path = join_path(config.fixture_dir, name + ".meta.json");
  write_ideal_file(out.ideal_path, X.ideal.ring(), X.ideal.generators(), meta);
  std::ofstream mj(out.meta_path);
  if (!mj) throw StructuralError("cannot write " + out.meta_path);
  mj << meta_json(meta);

  out.report.command = "construct " + name;
  out.report.inputs_digest = digest_inputs({ideal_fingerprint(X.ideal)});
  out.report.stats.field = X.ideal.ring()->field;
  out.report.items.push_back(make_item("fixture", "", out.ideal_path));
  out.report.items.push_back(
      make_item("generators", "", std::to_string(X.ideal.generators().size())));
  return out;
}

int parse_int_param(const std::vector<std::string>& params, std::size_t idx,
                    const std::string& what) {
  if (idx >= params.size()) throw StructuralError("missing parameter: " + what);
  try {
    return std::stoi(params[idx]);
  } catch (const std::exception&) {
    throw StructuralError("bad integer for " + what + ": " + params[idx]);
  }
}

}  // namespace

ConstructResult cmd_construct(const std::string& family, const std::vector<std::string>& params,
                              const RunConfig& config) {
  GBOptions opts = config.gb_options();
  if (family == "rnc") {
    int d = parse_int_param(params, 0, "degree");
    EmbeddedVariety X = implicitize(rational_normal_curve(d), opts);
    return write_fixture("rnc" + std::to_string(d), X, config);
  }
  if (family == "veronese") {
    int k = parse_int_param(params, 0, "power");
    EmbeddedVariety X = implicitize(veronese(k), opts);
    return write_fixture("veronese" + std::to_string(k), X, config);
  }
  if (family == "plane-curve-embed") {
    if (params.empty()) throw StructuralError("plane-curve-embed needs a plane curve fixture");
    IdealFile file = read_ideal_file(params[0], kOrd);
    if (file.ring->nvars() != 2 || file.generators.size() != 1) {
      throw StructuralError("plane curve fixture must have two variables and one generator");
    }
    EmbeddedVariety X = implicitize(plane_curve_embed(file.generators[0]), opts);
    return write_fixture(stem_of(params[0]) + "-embedded", X, config);
  }
  if (family == "from-file") {
    if (params.empty()) throw StructuralError("from-file needs a fixture path");
    EmbeddedVariety X = load_fixture(params[0]);
    return write_fixture(stem_of(params[0]), X, config);
  }
  throw StructuralError("unknown family: " + family +
                        " (expected rnc, veronese, plane-curve-embed, from-file)");
}

EmbeddedVariety load_fixture(const std::string& path) {
  IdealFile file = read_ideal_file(path, kOrd);
  std::optional<FixtureMeta> meta = file.meta;
  if (!meta) {
    std::filesystem::path mp = std::filesystem::path(path);
    mp.replace_extension(".meta.json");
    std::ifstream in(mp);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      meta = meta_from_json(buf.str());
    }
  }
  if (!meta) throw StructuralError("fixture lacks metadata (meta line or .meta.json): " + path);

  Ideal I(file.ring, file.generators);
  if (!is_homogeneous_ideal(I)) throw StructuralError("fixture ideal is not homogeneous: " + path);
  EmbeddedVariety X{std::move(I), std::nullopt, meta->n, meta->Ln, meta->genus};
  return X;
}

PointOnVariety parse_point(const std::string& comma_separated) {
  PointOnVariety pt;
  std::istringstream in(comma_separated);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw StructuralError("empty point coordinate");
    mpq_class q;
    if (q.set_str(tok, 10) != 0) throw StructuralError("bad point coordinate: " + tok);
    q.canonicalize();
    pt.coords.push_back(q);
  }
  if (pt.coords.empty()) throw StructuralError("empty point");
  auto nz = std::find_if(pt.coords.begin(), pt.coords.end(),
                         [](const mpq_class& q) { return q != 0; });
  if (nz == pt.coords.end()) throw StructuralError("point has no nonzero coordinate");
  pt.chart = static_cast<std::size_t>(nz - pt.coords.begin());
  return pt;
}

Report cmd_analyze(const std::string& fixture_path, const std::vector<std::string>& tasks,
                   const RunConfig& config, const std::optional<PointOnVariety>& point) {
  static const std::vector<std::string> kOrdered = {"secant",   "dim",   "degree", "singlocus",
                                                    "betti",    "depth", "mult"};
  for (const std::string& t : tasks) {
    if (std::find(kOrdered.begin(), kOrdered.end(), t) == kOrdered.end()) {
      throw StructuralError("unknown task: " + t);
    }
  }
  auto wants = [&](const std::string& t) {
    return std::find(tasks.begin(), tasks.end(), t) != tasks.end();
  };

  EmbeddedVariety X = load_fixture(fixture_path);
  const GBOptions opts = config.gb_options();

  Report report;
  report.command = "analyze " + stem_of(fixture_path);
  report.inputs_digest = digest_inputs({ideal_fingerprint(X.ideal)});
  report.stats.field = config.field;

  EmbeddedVariety current = change_field_variety(X, config.field);
  bool have_current = true;

  if (wants("secant")) {
    try {
      SecantOutcome sec = secant_join(current, opts);
      report.absorb(sec.stats);
      if (sec.truncated) {
        report.items.push_back(skipped_item("secant", "", "degree cap truncated the join"));
        have_current = false;
      } else {
        report.items.push_back(make_item(
            "secant", "", std::to_string(sec.variety.ideal.generators().size()) + " generators"));
        current = std::move(sec.variety);
      }
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(skipped_item("secant", "", "budget exhausted during the join"));
      have_current = false;
    }
  }

  auto run_stage = [&](const std::string& name, auto&& fn) {
    if (!wants(name)) return;
    if (!have_current) {
      report.items.push_back(skipped_item(name, "", "secant unavailable"));
      return;
    }
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(skipped_item(name, "", "budget exhausted"));
    }
  };

  std::optional<HilbertData> hd;
  auto need_hilbert = [&]() {
    if (!hd) hd = dim_degree(current.ideal, opts);
    return *hd;
  };

  run_stage("dim", [&] {
    report.items.push_back(make_item("dim", "", std::to_string(need_hilbert().projective_dim),
                                     hilbert_json(need_hilbert())));
  });
  run_stage("degree", [&] {
    report.items.push_back(make_item("degree", "", need_hilbert().degree.get_str()));
  });
  run_stage("singlocus", [&] {
    Ideal jac = singular_locus(current, opts);
    if (wants("secant")) {
      bool matches = same_zero_set(jac, change_field_ideal(X.ideal, config.field), opts);
      report.items.push_back(
          make_item("singlocus", "", matches ? "V(jacobian) = input variety" : "differs"));
    } else {
      bool empty = projectively_empty(jac, opts);
      report.items.push_back(make_item("singlocus", "", empty ? "smooth" : "singular"));
    }
  });
  run_stage("betti", [&] {
    ResolutionData res = free_resolution(current.ideal, true, opts);
    GradedDepthInfo gd = graded_depth(current.ideal, opts);
    report.items.push_back(
        make_item("betti", "", "pd " + std::to_string(res.pd()), betti_json(res, gd.depth)));
  });
  run_stage("depth", [&] {
    GradedDepthInfo gd = graded_depth(current.ideal, opts);
    report.items.push_back(make_item("depth", "", std::to_string(gd.depth)));
    report.items.push_back(make_item(
        "acm", "", gd.acm ? "yes" : "no",
        "dim cone " + std::to_string(gd.krull_dim) + ", pd " + std::to_string(gd.pd)));
  });
  run_stage("mult", [&] {
    if (!point) throw StructuralError("task mult needs --point");
    mpz_class m = multiplicity_at(current, *point, opts);
    report.items.push_back(make_item("multiplicity", "", m.get_str()));
  });

  return report;
}

PredictResult cmd_predict(const std::string& descriptor_json, const RunConfig&) {
  VarietyDescriptor D = descriptor_from_json(descriptor_json);
  PredictResult out{predict(D), ""};
  out.json = verdict_json(out.verdict);
  return out;
}

VerifyResult cmd_verify(const std::string& descriptor_json, const std::string& fixture_path,
                        const PointOnVariety& point, const RunConfig& config) {
  VarietyDescriptor D = descriptor_from_json(descriptor_json);
  EmbeddedVariety X = load_fixture(fixture_path);
  VerifyResult out{verify(D, X, point, config), ExitCode::Ok};
  if (out.report.any_fail()) {
    out.exit_code = ExitCode::VerifyFail;
  } else if (out.report.any_skipped()) {
    out.exit_code = ExitCode::Budget;
  }
  return out;
}

}  // namespace secantlab
