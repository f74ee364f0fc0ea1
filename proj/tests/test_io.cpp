#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secantlab/commands.hpp"

using namespace secantlab;

namespace {

const MonomialOrder grev = MonomialOrder::grevlex();

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("secantlab_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("ideal text format round-trips") {
  std::string text =
      "# a comment\n"
      "ring QQ x0 x1 x2\n"
      "meta n=1 Ln=2 genus=0\n"
      "x0*x2 - x1^2\n";
  std::istringstream in(text);
  IdealFile file = parse_ideal_text(in, grev);
  CHECK(file.ring->nvars() == 3);
  CHECK(file.ring->field.is_rational());
  REQUIRE(file.generators.size() == 1);
  REQUIRE(file.meta.has_value());
  CHECK(file.meta->n == 1);
  CHECK(file.meta->Ln == 2);
  CHECK(file.meta->genus == 0);

  std::string emitted = ideal_text(file.ring, file.generators, file.meta);
  std::istringstream in2(emitted);
  IdealFile file2 = parse_ideal_text(in2, grev);
  CHECK(ideal_text(file2.ring, file2.generators, file2.meta) == emitted);

  std::istringstream fp_in("ring Fp 32003 a b\na^2 + 31*b\n");
  IdealFile fp_file = parse_ideal_text(fp_in, grev);
  CHECK(fp_file.ring->field.p == 32003);
  CHECK(!fp_file.meta.has_value());
}

TEST_CASE("meta JSON round-trips") {
  FixtureMeta meta{2, mpz_class(4), std::nullopt};
  CHECK(meta_from_json(meta_json(meta)) == meta);
  FixtureMeta curve{1, mpz_class(6), 1};
  CHECK(meta_from_json(meta_json(curve)) == curve);
}

TEST_CASE("report JSON round-trips") {
  Report r;
  r.command = "analyze rnc4";
  r.inputs_digest = "0011aabbccddeeff";
  r.items.push_back(make_item("dim", "3", "3"));
  r.items.push_back(make_item("degree", "", "3"));
  r.items.push_back(skipped_item("depth", "4", "budget"));
  r.items.push_back(make_item("mult", "2", "5"));
  r.stats.spairs = 42;
  r.stats.max_degree = 9;
  r.stats.field = FieldSpec::prime(32003);
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK(r.any_fail());      // mult 2 vs 5
  CHECK(r.any_skipped());

  // fail only when both sides are present and differ
  CHECK(make_item("a", "", "7").status == ItemStatus::Pass);
  CHECK(make_item("a", "7", "").status == ItemStatus::Pass);
  CHECK(make_item("a", "7", "7").status == ItemStatus::Pass);
  CHECK(make_item("a", "7", "8").status == ItemStatus::Fail);
}

TEST_CASE("construct writes deterministic fixtures") {
  TempDir tmp;
  RunConfig config;
  config.fixture_dir = tmp.path.string();

  ConstructResult first = cmd_construct("rnc", {"4"}, config);
  std::ifstream in1(first.ideal_path);
  std::stringstream buf1;
  buf1 << in1.rdbuf();

  ConstructResult second = cmd_construct("rnc", {"4"}, config);
  std::ifstream in2(second.ideal_path);
  std::stringstream buf2;
  buf2 << in2.rdbuf();
  CHECK(buf1.str() == buf2.str());
  CHECK(buf1.str().find("ring QQ x0 x1 x2 x3 x4") == 0);
  CHECK(buf1.str().find("meta n=1 Ln=4 genus=0") != std::string::npos);

  EmbeddedVariety X = load_fixture(first.ideal_path);
  CHECK(X.intrinsic_dim == 1);
  CHECK(X.line_bundle_power == 4);
  CHECK(X.ideal.generators().size() == 6);

  // from-file pass-through validates and re-emits
  ConstructResult copy = cmd_construct("from-file", {first.ideal_path}, config);
  CHECK(copy.ideal_path == first.ideal_path);

  CHECK_THROWS_AS(cmd_construct("moebius", {}, config), StructuralError);
}

TEST_CASE("analyze on the conic: dim and degree without secant") {
  TempDir tmp;
  RunConfig config;
  config.fixture_dir = tmp.path.string();
  ConstructResult conic = cmd_construct("rnc", {"2"}, config);

  Report r = cmd_analyze(conic.ideal_path, {"dim", "degree", "singlocus"}, config, std::nullopt);
  REQUIRE(r.items.size() == 3);
  CHECK(r.items[0].name == "dim");
  CHECK(r.items[0].computed == "1");
  CHECK(r.items[1].computed == "2");
  CHECK(r.items[2].computed == "smooth");
  CHECK(!r.any_fail());

  CHECK_THROWS_AS(cmd_analyze(conic.ideal_path, {"frobnicate"}, config, std::nullopt),
                  StructuralError);
}

TEST_CASE("predict command emits verdict JSON") {
  RunConfig config;
  PredictResult p = cmd_predict("{\"kind\": \"curve\", \"g\": 0, \"degL\": 5}", config);
  CHECK(p.verdict.rational.value == TriState::Yes);
  CHECK(p.json.find("\"multiplicity\"") != std::string::npos);
}

TEST_CASE("analyze the quintic curve: secant betti, depth, multiplicity") {
  TempDir tmp;
  RunConfig config;
  config.fixture_dir = tmp.path.string();
  ConstructResult c5 = cmd_construct("rnc", {"5"}, config);

  Report r = cmd_analyze(c5.ideal_path, {"secant", "betti", "depth", "mult"}, config,
                         parse_point("1,0,0,0,0,0"));
  REQUIRE(!r.items.empty());
  bool saw_pd = false, saw_acm = false, saw_mult = false;
  for (const ReportItem& item : r.items) {
    if (item.name == "betti" && item.computed == "pd 2") saw_pd = true;
    if (item.name == "acm" && item.computed == "yes") saw_acm = true;
    if (item.name == "multiplicity" && item.computed == "3") saw_mult = true;
  }
  CHECK(saw_pd);
  CHECK(saw_acm);
  CHECK(saw_mult);
}

TEST_CASE("verify command: full pass on C4 and a corrupted fixture fails") {
  TempDir tmp;
  RunConfig config;
  config.fixture_dir = tmp.path.string();
  ConstructResult c4 = cmd_construct("rnc", {"4"}, config);

  std::string descriptor = "{\"kind\": \"curve\", \"g\": 0, \"degL\": 4}";
  VerifyResult good = cmd_verify(descriptor, c4.ideal_path, parse_point("1,0,0,0,0"), config);
  CHECK(!good.report.any_fail());
  CHECK(good.exit_code == ExitCode::Ok);
  bool saw_depth = false, saw_mult = false, saw_sing = false;
  for (const ReportItem& item : good.report.items) {
    if (item.name == "depth_at_point") {
      saw_depth = true;
      CHECK(item.predicted == "3");
      CHECK(item.computed == "3");
    }
    if (item.name == "multiplicity") {
      saw_mult = true;
      CHECK(item.computed == "2");
    }
    if (item.name == "singular_locus") saw_sing = true;
  }
  CHECK(saw_depth);
  CHECK(saw_mult);
  CHECK(saw_sing);

  // perturb one generator (drop the cross term of the first quadric); the
  // base point stays on the perturbed scheme, which collapses to two points
  std::ifstream in(c4.ideal_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto pos = text.find("x1^2 - x0*x2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "x1^2");
  std::string bad_path = (tmp.path / "rnc4_bad.ideal").string();
  std::ofstream out(bad_path);
  out << text;
  out.close();

  VerifyResult bad = cmd_verify(descriptor, bad_path, parse_point("1,0,0,0,0"), config);
  CHECK(bad.report.any_fail());
  CHECK(bad.exit_code == ExitCode::VerifyFail);
}

TEST_CASE("identical invocations agree except timing") {
  TempDir tmp;
  RunConfig config;
  config.fixture_dir = tmp.path.string();
  ConstructResult c4 = cmd_construct("rnc", {"4"}, config);

  Report a = cmd_analyze(c4.ideal_path, {"secant", "dim", "degree"}, config, std::nullopt);
  Report b = cmd_analyze(c4.ideal_path, {"secant", "dim", "degree"}, config, std::nullopt);
  a.stats.wall_seconds = 0;
  b.stats.wall_seconds = 0;
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("point parsing") {
  PointOnVariety pt = parse_point("0,1/2,-3");
  CHECK(pt.coords.size() == 3);
  CHECK(pt.chart == 1);
  CHECK(pt.coords[1] == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_point("0,0"), StructuralError);
  CHECK_THROWS_AS(parse_point(""), StructuralError);
}

TEST_CASE("digest is order-sensitive and stable") {
  std::string a = digest_inputs({"alpha", "beta"});
  CHECK(a == digest_inputs({"alpha", "beta"}));
  CHECK(a != digest_inputs({"beta", "alpha"}));
  CHECK(a.size() == 16);
}
