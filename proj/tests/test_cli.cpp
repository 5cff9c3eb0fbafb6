#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "grpdlim/constructions.hpp"
#include "runner.hpp"

using namespace grpdlim;
using namespace grpdlim::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(GRPDLIM_CORPUS_DIR))
    if (e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

ExitCode code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const CliError& e) {
    return e.code();
  }
  return ExitCode::Ok;
}

Workspace corpus(const std::string& file) {
  return parse(slurp(std::filesystem::path(GRPDLIM_CORPUS_DIR) / file));
}

}  // namespace

TEST_CASE("trivial group and its delooping") {
  auto ws = parse("group one { trivial }\ngroupoid B_one { delooping one }\n");
  REQUIRE(ws.declarations().size() == 2);
  CHECK(ws.groupoid("B_one").groupoid->morphism_count() == 1);
}

TEST_CASE("explicit tables keep their indices") {
  Workspace ws;
  declare_category(ws, "chain3", chain_category(3));
  declare_groupoid(ws, "cod", codiscrete(3));
  CHECK(ws.category("chain3").category == chain_category(3));
  CHECK(*ws.groupoid("cod").groupoid == codiscrete(3));
  auto again = parse(print(ws));
  CHECK(again == ws);
}

TEST_CASE("associativity violations name the triple") {
  const char* text =
      "category bad {\n"
      "  objects 1\n"
      "  morphism a : 0 -> 0\n"
      "  morphism b : 0 -> 0\n"
      "  a;a=a\n  a;b=b\n  b;a=a\n  b;b=a\n"
      "}\n";
  try {
    parse(text);
    FAIL("expected a validation failure");
  } catch (const CliError& e) {
    CHECK(e.code() == ExitCode::Validation);
    CHECK(e.where().line == 1);
    CHECK(std::string(e.what()).find("associativity at (b, a, b)") != std::string::npos);
  }
}

TEST_CASE("error classes") {
  CHECK(code_of("group G { cyclic 2 }\n") == ExitCode::Ok);
  CHECK(code_of("group G { cyclic two }\n") == ExitCode::Syntax);
  CHECK(code_of("widget G { }\n") == ExitCode::Syntax);
  CHECK(code_of("group G {\n  cyclic 2\n") == ExitCode::Syntax);
  CHECK(code_of("groupoid X { delooping H }\n") == ExitCode::Unresolved);
  CHECK(code_of("group G { cyclic 2 }\ngroupoid X { translation G }\ngroupoid Y { delooping X }\n") ==
        ExitCode::KindMismatch);
  CHECK(code_of("group G { cyclic 2 }\ngroup G { cyclic 3 }\n") == ExitCode::Validation);
  CHECK(code_of("groupoid X { chain 2 }\n") == ExitCode::Validation);
  CHECK(code_of("group G { symmetric 5 }\n") == ExitCode::Validation);
  // A functor sending 0 -> 2 to a morphism 0 -> 1.
  CHECK(code_of("category A { chain 3 }\ncategory B { codiscrete 3 }\n"
                "functor F : A -> B {\n  object 0 -> 0\n  object 1 -> 1\n  object 2 -> 2\n"
                "  morphism 0_1 -> 0_1\n  morphism 1_2 -> 1_2\n  morphism 0_2 -> 0_1\n}\n") ==
        ExitCode::Validation);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("group G { cyclic 2 }\n\ngroup H {\n  row x ; y\n}\n");
    FAIL("expected a syntax error");
  } catch (const CliError& e) {
    CHECK(e.code() == ExitCode::Syntax);
    CHECK(e.where().line == 4);
    CHECK(e.where().column == 3);
  }
}

TEST_CASE("table-declared groups") {
  auto ws = parse(
      "group C3 {\n  elements e r s\n  row e : e r s\n  row r : r s e\n  row s : s e r\n}\n");
  const auto& g = ws.group("C3");
  CHECK(g.group.order() == 3);
  CHECK(g.group.multiply(1, 1) == 2);
  CHECK(code_of("group T {\n  elements e r\n  row e : e r\n  row r : e e\n}\n") == ExitCode::Validation);
}

TEST_CASE("parse of print is the identity on the corpus") {
  const auto files = corpus_files();
  REQUIRE(files.size() >= 8);
  for (const auto& f : files) {
    auto ws = parse(slurp(f));
    auto text = print(ws);
    auto again = parse(text);
    CHECK_MESSAGE(again == ws, f.string());
    CHECK_MESSAGE(print(again) == text, f.string());
  }
}

TEST_CASE("documented command results") {
  auto loop = run(corpus("loop_bs3.grp"), "loop", {"B_S3"});
  CHECK(loop.json["objects"] == 6);
  CHECK(loop.json["classes"] == 3);
  CHECK(loop.json["automorphism_orders"] == Json::array({6, 2, 3}));

  auto h = run(corpus("galois_demo.grp"), "h1", {"demo"});
  CHECK(h.json["classes"] == 1);
  CHECK(h.json["stabilizer_orders"] == Json::array({1}));

  auto c = run(corpus("collapse.grp"), "check-equiv", {"collapse"});
  CHECK(c.json["equivalence"] == false);
  CHECK(c.json["violation"].get<std::string>().rfind("not faithful", 0) == 0);

  auto fib = run(corpus("collapse.grp"), "check-fib", {"points"});
  CHECK(fib.json["fibration"] == false);
  CHECK(run(corpus("collapse.grp"), "check-fib", {"contract"}).json["fibration"] == true);

  auto sep = run(corpus("separation.grp"), "check-lwe", {"f"});
  CHECK(sep.json["local_weak_equivalence"] == true);
  CHECK(sep.json["sectionwise_weak_equivalence"] == false);

  auto free = run(corpus("lim_vs_holim.grp"), "holim", {"free_diagram"});
  CHECK(free.json["holim"]["classes"] == 1);
  CHECK(free.json["holim"]["automorphism_orders"] == Json::array({1}));

  auto fub = run(corpus("fubini.grp"), "compare-fubini", {"D"});
  CHECK(fub.json["first_is_isomorphism"] == true);
  CHECK(fub.json["second_is_isomorphism"] == true);

  CHECK(run(corpus("key_lemma.grp"), "compare-key-lemma", {"K", "X_idem"}).json["is_isomorphism"] == true);
  CHECK(run(corpus("lim_vs_holim.grp"), "hfp", {"free"}).json["isomorphic"] == true);
}

TEST_CASE("command argument checks") {
  auto ws = corpus("collapse.grp");
  auto code = [&](const std::string& cmd, const std::vector<std::string>& args) {
    try {
      run(ws, cmd, args);
    } catch (const CliError& e) {
      return e.code();
    }
    return ExitCode::Ok;
  };
  CHECK(code("check-equiv", {"B_Z2"}) == ExitCode::KindMismatch);
  CHECK(code("check-equiv", {"nothing"}) == ExitCode::Unresolved);
  CHECK(code("check-equiv", {}) == ExitCode::Usage);
  CHECK(code("frobnicate", {}) == ExitCode::Usage);
  CHECK_THROWS_AS(run(corpus("loop_bs3.grp"), "loop", {"B_S3"}, RunOptions{Budget{5}, 1}), BudgetExceeded);
}

TEST_CASE("JSON output is deterministic") {
  for (const auto& f : corpus_files()) {
    auto a = render_json(run(parse(slurp(f)), "validate", {}).json);
    auto b = render_json(run(parse(slurp(f)), "validate", {}).json);
    CHECK(a == b);
  }
  auto a = render_json(run(corpus("loop_bs3.grp"), "loop", {"B_S3"}).json);
  auto b = render_json(run(corpus("loop_bs3.grp"), "loop", {"B_S3"}).json);
  CHECK(a == b);
  CHECK(a.rfind("{\n  \"schema\": 1,", 0) == 0);
}

TEST_CASE("DOT output") {
  auto count = [](const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
  };
  auto point = emit_dot(terminal_groupoid());
  CHECK(count(point, "[label=") == 1);
  CHECK(count(point, "->") == 0);
  auto two = emit_dot(discrete(2));
  CHECK(count(two, "[label=") == 2);
  CHECK(count(two, "->") == 0);
  auto ez2 = emit_dot(translation_groupoid(FiniteGroup::cyclic(2)));
  CHECK(count(ez2, "->") == 1);
  CHECK(count(ez2, "dir=both") == 1);
  // BS3: five non-identity elements, two of them inverse to each other.
  CHECK(count(emit_dot(delooping(FiniteGroup::symmetric(3))), "->") == 4);
}

TEST_CASE("generated corpora round-trip and depend only on the seed") {
  auto a = generate_corpus(7, 5);
  auto b = generate_corpus(7, 5);
  CHECK(print(a) == print(b));
  CHECK(parse(print(a)) == a);
  CHECK(print(generate_corpus(8, 5)) != print(a));
  for (const auto& d : a.declarations())
    if (d.kind == Kind::Diagram) CHECK(run(a, "holim", {d.name}).json["holim"]["objects"] >= 0);
}
