#pragma once

#include "secantlab/io.hpp"
#include "secantlab/oracle.hpp"

namespace secantlab {

/// Exit-code contract: 0 pass, 1 verification failure, 2 budget exhaustion,
/// 3 input error.
enum class ExitCode : int { Ok = 0, VerifyFail = 1, Budget = 2, InputError = 3 };

struct ConstructResult {
  std::string ideal_path;
  std::string meta_path;
  Report report;
};

/// Writes a variety fixture (`<name>.ideal` + `<name>.meta.json`) for one of
/// the families rnc, veronese, plane-curve-embed, from-file.
ConstructResult cmd_construct(const std::string& family, const std::vector<std::string>& params,
                              const RunConfig& config);

/// Loads a fixture as an embedded variety (metadata required).
EmbeddedVariety load_fixture(const std::string& path);

/// Pipeline stages over a fixture: secant, dim, degree, singlocus, betti,
/// depth, mult (needs a point). Stages run in dependency order; `secant`
/// makes later stages act on the secant variety.
Report cmd_analyze(const std::string& fixture_path, const std::vector<std::string>& tasks,
                   const RunConfig& config, const std::optional<PointOnVariety>& point);

struct PredictResult {
  Verdict verdict;
  std::string json;
};

PredictResult cmd_predict(const std::string& descriptor_json, const RunConfig& config);

struct VerifyResult {
  Report report;
  ExitCode exit_code = ExitCode::Ok;
};

VerifyResult cmd_verify(const std::string& descriptor_json, const std::string& fixture_path,
                        const PointOnVariety& point, const RunConfig& config);

PointOnVariety parse_point(const std::string& comma_separated);

}  // namespace secantlab
