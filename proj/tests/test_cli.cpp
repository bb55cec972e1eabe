#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cremona/atlas.hpp"
#include "cremona/document.hpp"

using namespace cremona;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in args.
Run lab(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(CREMONA_LAB_BIN) + " " + args;
  if (args.find("2>&1") == std::string::npos) cmd += " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = ::pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("cremona_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  fs::path dir;
};

const char* kCubes = R"({"schema":1,"field":"q","components":[[["1",[3,0,0,0]]],[["1",[0,3,0,0]]],[["1",[0,0,3,0]]],[["1",[0,0,0,3]]]]})";

}  // namespace

TEST(Document, RoundTripOverBothFields) {
  for (auto label : {"E2", "E13", "ruled_3_5"}) {
    auto c = construct(label, 3, Qq{});
    auto text = render(document_json(c.map, provenance_json(c.spec)));
    auto doc = parse_document(text);
    EXPECT_EQ(std::get<RationalMap<Qq>>(doc.map).components(), c.map.components()) << label;
    EXPECT_EQ(render(document_json(std::get<RationalMap<Qq>>(doc.map), doc.provenance)), text) << label;
    auto z = construct(label, 3, Zp(1000003));
    auto zd = parse_document(render(document_json(z.map)));
    EXPECT_EQ(zd.field(), "gf:1000003");
    EXPECT_EQ(std::get<RationalMap<Zp>>(zd.map).components(), z.map.components()) << label;
  }
}

TEST(Document, ErrorsCarryPositions) {
  auto where = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const DocumentError& e) {
      return e.where;
    }
    return std::string("no error");
  };
  EXPECT_EQ(where(R"({"schema":1, "field":)"), "byte 22");  // one past the end of the 21 bytes
  EXPECT_EQ(where(R"({"schema":2,"field":"q","components":[]})"), "/schema");
  EXPECT_EQ(where(R"({"schema":1,"field":"gf:1001","components":[]})"), "/field");
  EXPECT_EQ(where(R"({"schema":1,"field":"gf:7","components":[]})"), "/field");
  EXPECT_EQ(where(R"({"schema":1,"field":"q","components":[[],[],[]]})"), "/components");
  std::string bad_exp = kCubes;
  bad_exp.replace(bad_exp.find("[0,3,0,0]"), 9, "[0,2,0,0]");
  EXPECT_EQ(where(bad_exp), "/components/1/0/1");
  std::string bad_coeff = kCubes;
  bad_coeff.replace(bad_coeff.find("\"1\""), 3, "\"x\"");
  EXPECT_EQ(where(bad_coeff), "/components/0/0/0");
  EXPECT_EQ(where(kCubes), "no error");
}

TEST_F(Cli, AtlasRepairsTornLine) {
  auto p = path("a.jsonl");
  write("a.jsonl", R"({"family":"E2","seed":1,"prime":1000003})" "\n" R"({"family":"E2","se)");
  {
    Atlas a(p);
    EXPECT_TRUE(a.repaired());
    EXPECT_EQ(a.records(), 1u);
    EXPECT_TRUE(a.contains(Atlas::key("E2", 1, 1000003)));
    EXPECT_FALSE(a.append(Json{{"family", "E2"}, {"seed", 1}, {"prime", 1000003}}));
    EXPECT_TRUE(a.append(Json{{"family", "E2"}, {"seed", 2}, {"prime", 1000003}}));
  }
  Atlas b(p);
  EXPECT_FALSE(b.repaired());
  EXPECT_EQ(b.records(), 2u);
  write("bad.jsonl", "not json\n");
  EXPECT_THROW(Atlas(path("bad.jsonl")), AtlasError);
}

TEST_F(Cli, ConstructAndAnalyzeAreReproducible) {
  EXPECT_EQ(lab("construct --family E7 --seed 4 -o " + path("m.json")).code, 0);
  auto a = lab("analyze " + path("m.json") + " --seed 2");
  auto b = lab("analyze " + path("m.json") + " --seed 2");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto r = Json::parse(a.out);
  EXPECT_EQ(r["classification"]["label"], "E7");
  // Documents can be piped through stdin.
  auto c = lab("analyze - --seed 2 < " + path("m.json"));
  EXPECT_EQ(c.out, a.out);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(lab("").code, 1);
  EXPECT_EQ(lab("frobnicate").code, 1);
  EXPECT_EQ(lab("analyze " + path("missing.json")).code, 1);
  EXPECT_EQ(lab("construct --family E99").code, 1);
  EXPECT_EQ(lab("construct --family ruled --d 2 --degenerate").code, 2);

  write("cubes.json", kCubes);
  EXPECT_EQ(lab("analyze " + path("cubes.json")).code, 3);
  EXPECT_EQ(lab("analyze " + path("cubes.json") + " --max-pairs 3").code, 4);

  write("torn.json", std::string(kCubes).substr(0, 40));
  auto torn = lab("analyze " + path("torn.json") + " 2>&1");
  EXPECT_EQ(torn.code, 5);
  EXPECT_NE(torn.out.find("byte"), std::string::npos);

  EXPECT_EQ(lab("deform --path E6_to_E7 --samples 0,1").code, 0);
  EXPECT_EQ(lab("deform --path E6_to_E7 --samples 0,1 --expect E3,E7").code, 6);
  EXPECT_EQ(lab("deform --path nowhere").code, 1);

  EXPECT_EQ(lab("scan --families E2 --count 2 --atlas " + path("ok.jsonl")).code, 0);
  EXPECT_EQ(lab("scan --families E2 --count 2 --atlas " + path("slow.jsonl"), "CREMONA_MAX_PAIRS=3").code, 7);

  EXPECT_EQ(lab("table").code, 0);
  auto table = read_file(default_table_path());
  auto at = table.find("\n5\t");
  ASSERT_NE(at, std::string::npos);
  auto cell = table.find('\t', at + 3) + 1;
  table[cell] = table[cell] == '1' ? '2' : '1';
  write("bad.tsv", table);
  EXPECT_EQ(lab("table --path " + path("bad.tsv")).code, 1);
  EXPECT_EQ(lab("verify --only 6 --table " + path("bad.tsv")).code, 8);
  EXPECT_EQ(lab("verify --only 9 --prime 7").code, 0);
}

TEST_F(Cli, ScanIsIdempotent) {
  auto atlas = path("s.jsonl");
  ASSERT_EQ(lab("scan --families 3-4 --count 6 --jobs 2 --atlas " + atlas).code, 0);
  auto first = read_file(atlas);
  ASSERT_EQ(lab("scan --families 3-4 --count 6 --jobs 2 --atlas " + atlas).code, 0);
  EXPECT_EQ(read_file(atlas), first);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 6);
}
