#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

using namespace charzero;
using Kind = GroupSpecAst::Kind;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::string command, std::vector<std::string> args, Format format = Format::text,
        std::uint64_t max_order = kEnumerationCap, std::string catalog = {}) {
  CommandOptions options;
  options.command = std::move(command);
  options.args = std::move(args);
  options.format = format;
  options.max_order = max_order;
  options.catalog = std::move(catalog);
  std::ostringstream out, err;
  const int status = run_command(options, out, err);
  return {status, out.str(), err.str()};
}

std::string without_timing(const std::string& s) {
  const auto json = std::regex_replace(s, std::regex("\"timing_ms\": [0-9.e+-]+"), "\"timing_ms\": 0");
  return std::regex_replace(json, std::regex("timing_ms +[0-9.e+-]+"), "timing_ms 0");
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("charzero_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

GroupSpecAst atom(Kind kind, std::vector<std::uint64_t> args, std::string text = {}) {
  GroupSpecAst a;
  a.kind = kind;
  a.args = std::move(args);
  a.text = std::move(text);
  return a;
}

GroupSpecAst random_atom(std::mt19937_64& rng) {
  static const std::vector<std::uint64_t> prime_powers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121};
  const auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  switch (rng() % 11) {
    case 0: return atom(Kind::psl2, {prime_powers[rng() % prime_powers.size()]});
    case 1: return atom(Kind::sl2, {prime_powers[rng() % prime_powers.size()]});
    case 2: return atom(Kind::alt, {pick(1, 12)});
    case 3: return atom(Kind::sym, {pick(1, 12)});
    case 4: return atom(Kind::cyclic, {pick(1, 200)});
    case 5: return atom(Kind::dihedral, {2 * pick(1, 50)});
    case 6: return atom(Kind::dicyclic, {4 * pick(1, 20)});
    case 7: {
      std::vector<std::uint64_t> inv(pick(1, 4));
      for (auto& v : inv) v = 2 * pick(1, 10) + 1;
      return atom(Kind::frob, inv);
    }
    case 8: return atom(Kind::named, {}, "Q8");
    case 9: return atom(Kind::named, {}, "SD16");
    default: return atom(Kind::perm_file, {}, "dir/gens" + std::to_string(pick(0, 99)) + ".txt");
  }
}

GroupSpecAst random_spec(std::mt19937_64& rng) {
  GroupSpecAst ast = random_atom(rng);
  const auto factors = rng() % 4;
  for (std::uint64_t i = 0; i < factors; ++i) {
    GroupSpecAst product;
    product.kind = Kind::product;
    product.children = {std::move(ast), random_atom(rng)};
    ast = std::move(product);
  }
  return ast;
}

// Random case changes and whitespace between tokens, keeping perm paths intact.
std::string scramble(const std::string& text, std::mt19937_64& rng) {
  std::string out;
  bool in_path = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_path) {
      out += c;
      if (c == ')') in_path = false;
      continue;
    }
    if (text.compare(i, 5, "perm(") == 0) {
      out += rng() % 2 ? "PERM(" : "perm(";
      i += 4;
      in_path = true;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && rng() % 2) {
      out += static_cast<char>(std::islower(static_cast<unsigned char>(c)) ? std::toupper(c) : std::tolower(c));
    } else {
      out += c;
    }
    if ((c == '(' || c == ',' || c == ')') && rng() % 3 == 0) out += " ";
  }
  return out;
}

}  // namespace

TEST(Grammar, Examples) {
  EXPECT_EQ(parse_group_spec("PSL(2,8)"), atom(Kind::psl2, {8}));
  const auto product = parse_group_spec("PSL(2,4) x C(2)");
  ASSERT_EQ(product.kind, Kind::product);
  EXPECT_EQ(product.children.at(0), atom(Kind::psl2, {4}));
  EXPECT_EQ(product.children.at(1), atom(Kind::cyclic, {2}));
  EXPECT_EQ(parse_group_spec("Frob(3,3)"), atom(Kind::frob, {3, 3}));
  EXPECT_EQ(parse_group_spec("  psl ( 2 , 16 ) "), atom(Kind::psl2, {16}));
  EXPECT_EQ(parse_group_spec("q8"), atom(Kind::named, {}, "Q8"));
  EXPECT_EQ(parse_group_spec("D(8)"), atom(Kind::dihedral, {8}));
  EXPECT_EQ(parse_group_spec("a(5)xc(2)"), parse_group_spec("A(5) x C(2)"));
  EXPECT_EQ(render(parse_group_spec("a(5)xc(2)xS(3)")), "A(5) x C(2) x S(3)");
}

TEST(Grammar, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto ast = random_spec(rng);
    const auto text = render(ast);
    ASSERT_EQ(parse_group_spec(text), ast) << text;
    const auto noisy = scramble(text, rng);
    ASSERT_EQ(render(parse_group_spec(noisy)), text) << noisy;
  }
}

TEST(Grammar, ErrorsCarryPositions) {
  const auto position_of = [](const std::string& text) -> std::string {
    try {
      parse_group_spec(text);
    } catch (const InputError& e) {
      return e.what();
    }
    return "no error";
  };
  EXPECT_NE(position_of("PSL(2,6)").find("position 7"), std::string::npos);
  EXPECT_NE(position_of("A(5) x").find("position 7"), std::string::npos);
  EXPECT_NE(position_of("B(5)").find("position 1"), std::string::npos);
  EXPECT_NE(position_of("C(5").find("position 4"), std::string::npos);
  EXPECT_NE(position_of("PSL(3,4)").find("position 5"), std::string::npos);
  EXPECT_NE(position_of("").find("position 1"), std::string::npos);
  EXPECT_THROW(parse_group_spec("C(5))"), InputError);
  EXPECT_THROW(parse_group_spec("Frob()"), InputError);
}

TEST(PermFiles, LoadAndBuild) {
  TempDir dir;
  dir.write("s3.txt", "# S3\n3\n(1,2)\n\n(1,2,3)\n");
  const auto g = build_group("perm(s3.txt)", dir.path());
  EXPECT_EQ(g.group.order(), 6u);
  EXPECT_EQ(g.label, "perm(s3.txt)");
  const auto product = build_group("perm(s3.txt) x C(2)", dir.path());
  EXPECT_EQ(product.group.order(), 12u);

  const auto bundled = build_group("perm(perm/gl32.txt)", bundled_catalog_path().parent_path());
  EXPECT_EQ(bundled.group.order(), 168u);
  EXPECT_EQ(fingerprint(character_table(bundled.group)), fingerprint(character_table(build_psl2(7).group)));

  dir.write("bad_degree.txt", "x\n(1,2)\n");
  dir.write("bad_point.txt", "3\n(1,4)\n");
  dir.write("empty.txt", "# nothing\n");
  EXPECT_THROW(build_group("perm(bad_degree.txt)", dir.path()), InputError);
  EXPECT_THROW(build_group("perm(bad_point.txt)", dir.path()), InputError);
  EXPECT_THROW(build_group("perm(empty.txt)", dir.path()), InputError);
  EXPECT_THROW(build_group("perm(missing.txt)", dir.path()), InputError);
}

TEST(Catalog, BundledLoads) {
  const auto entries = load_catalog(bundled_catalog_path());
  EXPECT_GE(entries.size(), 40u);
  std::set<std::string> names;
  for (const auto& e : entries) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.provenance.empty()) << e.name;
    EXPECT_FALSE(e.iso.empty()) << e.name;
  }
}

TEST(Catalog, MalformedDocumentsNameTheEntry) {
  TempDir dir;
  const auto expect_message = [&](const std::string& content, const std::string& fragment) {
    const auto path = dir.write("c.json", content);
    try {
      load_catalog(path);
      ADD_FAILURE() << "accepted: " << content;
    } catch (const InputError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_message("{", "");
  expect_message("[]", "");
  expect_message(R"j({"entries": [{"name": "x1"}]})j", "x1");
  expect_message(R"j({"entries": [{"name": "x2", "spec": 5}]})j", "x2");
  expect_message(R"j({"entries": [{"name": "x3", "degree": 3, "generators": [[0, 0, 1]]}]})j", "x3");
  expect_message(R"j({"entries": [{"name": "x4", "degree": 3, "generators": [[0, 1]]}]})j", "x4");
  expect_message(R"j({"entries": [{"name": "x5", "spec": "C(2)", "expected": {"star": "yes"}}]})j", "x5");
  EXPECT_THROW(load_catalog(dir.path() / "missing.json"), InputError);
}

TEST(Catalog, ExplicitGeneratorsAndMismatches) {
  TempDir dir;
  const auto path = dir.write("c.json", R"j({"entries": [
    {"name": "klein", "degree": 4, "generators": [[1, 0, 3, 2], [2, 3, 0, 1]],
     "expected": {"order": 4, "star": true, "theorem_b_case": "normal-abelian-sylow2"}},
    {"name": "wrong", "spec": "Q8", "expected": {"star": true, "classes": 5}}
  ]})j");
  const auto entries = load_catalog(path);
  ASSERT_EQ(entries.size(), 2u);
  const auto klein = build_entry(entries[0]);
  EXPECT_EQ(klein.group.order(), 4u);
  const auto report = verdict_report(klein, character_table(klein.group));
  EXPECT_TRUE(mismatches(entries[0].expected, report).empty());
  const auto q8 = build_entry(entries[1]);
  EXPECT_EQ(mismatches(entries[1].expected, verdict_report(q8, character_table(q8.group))),
            (std::vector<std::string>{"star"}));

  const auto r = run("verify-catalog", {}, Format::json, kEnumerationCap, path.string());
  EXPECT_EQ(r.status, 1);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["passed"], 1);
  EXPECT_EQ(doc["failed"], 1);
  EXPECT_EQ(doc["entries"][1]["mismatches"], nlohmann::json::array({"star"}));
}

TEST(Commands, CheckStar) {
  const auto r = run("check-star", {"PSL(2,16)"}, Format::json);
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["group"], "PSL(2,16)");
  EXPECT_EQ(doc["order"], 4080);
  EXPECT_EQ(doc["star"], true);
  const std::vector<std::string> keys = {"group", "order", "classes", "degrees", "characters", "star"};
  auto it = doc.begin();
  for (const auto& k : keys) {
    ASSERT_EQ(it.key(), k);
    ++it;
  }
  std::string last;
  for (auto i = doc.begin(); i != doc.end(); ++i) last = i.key();
  EXPECT_EQ(last, "timing_ms");
}

TEST(Commands, CheckStarStarWitness) {
  const auto r = run("check-starstar", {"A(6)"}, Format::json);
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["star_star"], false);
  ASSERT_TRUE(doc["star_star_witness"].is_number());
  const auto row = doc["star_star_witness"].get<std::size_t>();
  EXPECT_GT(doc["characters"][row]["zero_class_count"].get<int>(), 2);
}

TEST(Commands, TextOutput) {
  const auto r = run("table", {"C(3)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("C(3)"), std::string::npos);
  EXPECT_NE(r.out.find("[-1,-1]@3 ~-0.5000-0.8660i"), std::string::npos);
  const auto c = run("classify", {"SL(2,3)"});
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("sl23"), std::string::npos);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run("check-star", {"PSL(2,6)"}).status, 2);
  EXPECT_EQ(run("check-star", {"D(5)"}).status, 2);
  EXPECT_EQ(run("frobnicate", {}).status, 2);
  EXPECT_EQ(run("verify-catalog", {}, Format::text, kEnumerationCap, "/nonexistent/catalog.json").status, 2);
  const auto big = run("table", {"A(11)"});
  EXPECT_EQ(big.status, 2);
  EXPECT_NE(big.err.find("19958400"), std::string::npos);
  EXPECT_NE(big.err.find("2000000"), std::string::npos);
}

TEST(Commands, MaxOrderOnlyLowersTheCap) {
  const auto low = run("table", {"A(7)"}, Format::text, 1000);
  EXPECT_EQ(low.status, 2);
  EXPECT_NE(low.err.find("2520"), std::string::npos);
  EXPECT_EQ(run("table", {"A(7)"}, Format::text, 5000).status, 0);
  EXPECT_EQ(run("table", {"A(11)"}, Format::text, 100000000).status, 2);
}

TEST(Commands, VerificationCommands) {
  EXPECT_EQ(run("verify-theorem-b", {}).status, 0);
  EXPECT_EQ(run("verify-theorem-c", {}).status, 0);
  EXPECT_EQ(run("verify-lemma-2-3", {}).status, 0);
  EXPECT_EQ(run("verify-step1", {"8"}).status, 0);
  const auto torus = run("torus-count", {"7"}, Format::json);
  EXPECT_EQ(torus.status, 0);
  const auto doc = nlohmann::ordered_json::parse(torus.out);
  EXPECT_EQ(doc["class_count"], 2);
  EXPECT_TRUE(doc["quarter"].is_null());
}

TEST(Commands, DeterministicOutput) {
  for (const auto& [cmd, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"table", {"PSL(2,7)"}}, {"check-star", {"SL(2,3)"}}, {"classify", {"Frob(3,5)"}}, {"verify-step1", {"9"}}}) {
    for (auto format : {Format::text, Format::json}) {
      const auto a = run(cmd, args, format);
      const auto b = run(cmd, args, format);
      EXPECT_EQ(without_timing(a.out), without_timing(b.out)) << cmd;
    }
  }
}

TEST(Commands, TrivialGroupReport) {
  const auto r = run("check-star", {"C(1)"}, Format::json);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["order"], 1);
  EXPECT_EQ(doc["degrees"], nlohmann::json::array({1}));
  EXPECT_EQ(doc["star"], true);
}
