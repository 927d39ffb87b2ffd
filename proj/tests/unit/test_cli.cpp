#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dieudonne/gallery.hpp"
#include "dmtool/commands.hpp"

using namespace dieudonne;
using namespace dmtool;

namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation dm(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dmtool_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string gallery(const std::string& name, std::vector<std::string> args) {
    args.insert(args.begin(), "gallery");
    args.push_back("--out");
    args.push_back(path(name));
    const Invocation r = dm(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_F(Cli, ModuleRoundTrip) {
  const Ring r = gallery_ring(5);
  for (const UnitaryModule& m : {build_odd(2, 3, r), build_deformed(2, 3, 1, r), build_parallel(2, r)}) {
    const UnitaryModule back = module_from_json(parse_json(dump(module_to_json(m))));
    EXPECT_EQ(back.a(), m.a());
    EXPECT_EQ(back.b(), m.b());
    EXPECT_EQ(back.frobenius_matrix(), m.frobenius_matrix());
    EXPECT_EQ(back.pairing_matrix(), m.pairing_matrix());
    EXPECT_EQ(back.labels0(), m.labels0());
    EXPECT_EQ(back.meta().family, m.meta().family);
    EXPECT_EQ(back.meta().k, m.meta().k);
    EXPECT_EQ(back.ctx().modulus(), m.ctx().modulus());
  }
}

TEST_F(Cli, GalleryAndReportAreDeterministic) {
  const std::string a = gallery("a.json", {"--family", "odd", "--a", "1", "--b", "2", "--p", "3"});
  const std::string b = gallery("b.json", {"--family", "odd", "--a", "1", "--b", "2", "--p", "3"});
  EXPECT_EQ(slurp(a), slurp(b));
  const Invocation r1 = dm({"report", a});
  const Invocation r2 = dm({"report", b});
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
}

TEST_F(Cli, ReportFields) {
  const std::string f = gallery("m.json", {"--family", "odd", "--a", "2", "--b", "3"});
  const Invocation r = dm({"report", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_TRUE(j["valid"].get<bool>());
  EXPECT_TRUE(j["chain_conditions"].get<bool>());
  EXPECT_EQ(j["supersingular"], "yes");
  EXPECT_EQ(j["height"], 2);
  EXPECT_TRUE(j["within_bound"].get<bool>());
  EXPECT_TRUE(j["certificate"].is_null());

  const std::string d = gallery("d.json", {"--family", "deformed", "--a", "2", "--b", "3", "--k", "1"});
  const Json jd = parse_json(dm({"report", d}).out);
  EXPECT_EQ(jd["supersingular"], "no");
  EXPECT_FALSE(jd["certificate"].is_null());
  EXPECT_TRUE(jd["height"].is_null());
}

TEST_F(Cli, SubcommandsSucceedOnGalleryModules) {
  const std::string f = gallery("m.json", {"--family", "realization", "--a", "2", "--b", "4", "--q", "1"});
  EXPECT_EQ(dm({"validate", f}).code, 0);
  EXPECT_EQ(dm({"chain", f}).code, 0);
  EXPECT_EQ(dm({"chain", f, "--side", "1"}).code, 0);
  const Invocation h = dm({"minheight", f});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(parse_json(h.out)["height"], 1);
  EXPECT_EQ(dm({"slope", f, "--n-max", "8"}).code, 0);
  const std::string out = path("v.json");
  EXPECT_EQ(dm({"validate", f, "--out", out}).code, 0);
  EXPECT_TRUE(parse_json(slurp(out))["valid"].get<bool>());
}

TEST_F(Cli, CompareTruncation) {
  const std::string m = gallery("m.json", {"--family", "odd", "--a", "2", "--b", "3"});
  const std::string d = gallery("d.json", {"--family", "deformed", "--a", "2", "--b", "3", "--k", "1"});
  EXPECT_EQ(dm({"compare-truncation", m, d, "--k", "1"}).code, 0);
  EXPECT_EQ(dm({"compare-truncation", m, d, "--k", "2"}).code, 1);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(dm({"validate", path("missing.json")}).code, 2);
  {
    std::ofstream bad(path("bad.json"));
    bad << "{ not json";
  }
  EXPECT_EQ(dm({"validate", path("bad.json")}).code, 2);
  const Invocation odd = dm({"gallery", "--family", "odd", "--a", "1", "--b", "1"});
  EXPECT_EQ(odd.code, 2);
  EXPECT_NE(odd.err.find("\"input\""), std::string::npos);
  EXPECT_EQ(dm({}).code, 2);
  EXPECT_EQ(dm({"frobnicate"}).code, 2);

  // Invalid module: validate reports failure.
  Json j = parse_json(slurp(gallery("m.json", {"--family", "odd", "--a", "1", "--b", "2"})));
  j["signature"]["a"] = 0;
  j["signature"]["b"] = 3;
  {
    std::ofstream out(path("wrong.json"));
    out << dump(j);
  }
  EXPECT_EQ(dm({"validate", path("wrong.json")}).code, 1);

  // Precision too low for chain analysis.
  const std::string low =
      gallery("low.json", {"--family", "odd", "--a", "1", "--b", "2", "--precision", "4"});
  const Invocation r = dm({"minheight", low});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("recommended_precision"), std::string::npos);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(dm({"--help"}).code, 0); }

TEST_F(Cli, CutoffWitnessEmbedsBothModules) {
  const Invocation r = dm({"cutoff-witness", "--a", "2", "--b", "3", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["level"], 1);
  EXPECT_EQ(j["bound"], 2);
  const UnitaryModule s = module_from_json(j["supersingular_module"]);
  const UnitaryModule d = module_from_json(j["deformed_module"]);
  EXPECT_TRUE(truncation_congruent(s, d, 1));
  EXPECT_FALSE(truncation_congruent(s, d, 2));
  const Json none = parse_json(dm({"cutoff-witness", "--a", "0", "--b", "2"}).out);
  EXPECT_FALSE(none["required"].get<bool>());
  EXPECT_TRUE(none["level"].is_null());
}

TEST_F(Cli, SignatureSweep) {
  for (const char* p : {"3", "5"}) {
    const Invocation r = dm({"verify-paper", "--p", p, "--bound", "5"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = parse_json(r.out);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_GT(j["cells"].get<int>(), 20);
  }
  const Json one = parse_json(dm({"verify-paper", "--bound", "1"}).out);
  EXPECT_EQ(one["failed"], 0);
  EXPECT_EQ(dm({"verify-paper", "--bound", "0"}).code, 2);
}
