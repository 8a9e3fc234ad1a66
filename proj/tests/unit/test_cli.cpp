#include "doctest.h"

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "document.hpp"
#include "instances.hpp"
#include "render.hpp"
#include "twoouter/gen.hpp"

using namespace twoouter;
using namespace twoouter::cli;

namespace {

std::string data(const std::string& name) { return std::string(TWOOUTER_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "twoouter");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::TooLarge;  // sentinel
}

}  // namespace

TEST_CASE("committed fixtures are bit-identical to the generators") {
  const std::vector<std::pair<std::string, EmbeddedGraph>> fixtures{
      {"octahedron.json", gen::octahedron()},
      {"k4.json", gen::k4()},
      {"hexagon.json", gen::hexagon_fixture()},
      {"nested_octahedra.json", gen::nested_octahedra()},
      {"linked_octahedra_2.json", gen::linked_octahedra(2)},
  };
  for (const auto& [file, g] : fixtures) {
    std::string text = read_input(data(file));
    CHECK(parse_document(text).graph == g);
    CHECK(serialize_document(g) == text);
  }
}

TEST_CASE("document round trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = testing_support::random_two(seed, 40);
    std::string text = serialize_document(g);
    auto back = parse_document(text);
    CHECK(back.graph == g);
    CHECK(serialize_document(back.graph) == text);
  }
  auto isolated = EmbeddedGraph::from_rotations({{0, {1}}, {1, {0}}, {5, {}}}, {{1, 0}});
  std::string text = serialize_document(isolated, {{5, "lonely \"one\""}});
  CHECK(text.find("[[0, 1], [5]]") != std::string::npos);
  auto back = parse_document(text);
  CHECK(back.graph == isolated);
  CHECK(back.labels.at(5) == "lonely \"one\"");
}

TEST_CASE("document errors") {
  const std::string ok = R"({"format_version": 1, "vertices": [0, 1], "rotations": {"0": [1], "1": [0]}, "outer_face": [[0, 1]]})";
  CHECK(parse_kind(ok) == ErrorKind::TooLarge);
  CHECK(parse_kind(R"({"format_version": 1, "vertices": [0, 1], "rotations": {"0": [1], "1": [0]}, "outer_face": [[0, 1]], "colour": 3})") ==
        ErrorKind::ParseError);
  CHECK(parse_kind(R"({"vertices": [0], "rotations": {"0": []}, "outer_face": [[0]]})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"format_version": 2, "vertices": [0], "rotations": {"0": []}, "outer_face": [[0]]})") ==
        ErrorKind::ParseError);
  CHECK(parse_kind(R"({"format_version": 1, "vertices": [-1], "rotations": {}, "outer_face": []})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"format_version": 1, "vertices": [0], "rotations": {"x": []}, "outer_face": []})") ==
        ErrorKind::ParseError);
  CHECK(parse_kind(R"({"format_version": 1, "vertices": [0, 1], "rotations": {"0": [1], "1": [0]}, "outer_face": [[0]]})") ==
        ErrorKind::InvalidEmbedding);
  CHECK(parse_kind(R"({"format_version": 1, "vertices": [0, 1], "rotations": {"0": [1], "1": []}, "outer_face": [[0, 1]]})") ==
        ErrorKind::InvalidEmbedding);
  try {
    parse_document("{\"format_version\": 1,");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
}

TEST_CASE("layers command") {
  auto r = invoke({"layers", data("octahedron.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "k=2; L1: 0 1 2; L2: 3 4 5\n");
  CHECK(invoke({"layers", data("tree.json")}).out.rfind("k=1", 0) == 0);
  CHECK(invoke({"layers", data("corrupt_rotations.json")}).code == 3);
  CHECK(invoke({"layers", data("missing.json")}).code == 2);
}

TEST_CASE("forests command") {
  auto r = invoke({"forests", data("octahedron.json"), "--validate"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sizes: 3/3") != std::string::npos);
  CHECK(r.out.find("replay=ok") != std::string::npos);
  CHECK(r.out.find("valid=true") != std::string::npos);
  CHECK(invoke({"forests", data("k4.json")}).out.find("sizes: 2/2") != std::string::npos);
  CHECK(invoke({"forests", data("three_outerplanar.json")}).code == 4);
}

TEST_CASE("outerplane and oracle commands") {
  auto r = invoke({"outerplane", data("octahedron.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("|kept|=4 bound=4 n=6") != std::string::npos);
  CHECK(invoke({"outerplane", data("nested_octahedra.json")}).code == 4);
  CHECK(invoke({"outerplane", data("nested_octahedra.json"), "--k-pairwise"}).code == 0);
  auto o = invoke({"oracle", data("octahedron.json"), "--outerplane", "--forest", "--compare"});
  CHECK(o.code == 0);
  CHECK(o.out.find("outerplane: optimum=4") != std::string::npos);
  CHECK(o.out.find("forest: optimum=3") != std::string::npos);
  CHECK(count(o.out, " ok") == 2);
  CHECK(invoke({"oracle", data("octahedron.json"), "--arboricity"}).out.rfind("arboricity: 2", 0) == 0);
  CHECK(invoke({"oracle", data("octahedron.json"), "--outerplane", "--cap", "5"}).code == 6);
  CHECK(invoke({"oracle", data("octahedron.json")}).code == 2);
}

TEST_CASE("gen, render and scan commands") {
  std::string path = "gen_octahedron_test.json";
  CHECK(invoke({"gen", "octahedron", "-o", path}).code == 0);
  CHECK(read_input(path) == read_input(data("octahedron.json")));
  CHECK(invoke({"gen", "cube"}).code == 2);
  CHECK(invoke({"gen", "random:n=4,k=3,seed=1"}).code == 2);

  auto svg = to_svg(gen::octahedron());
  CHECK(count(svg, "<polygon") == 8);
  auto dot = to_dot(gen::octahedron());
  CHECK(count(dot, " -- ") == 12);
  auto ov = to_svg(gen::octahedron(), {{0, "kept"}, {1, "deleted"}});
  CHECK(count(ov, "class=\"vertex kept\"") == 1);
  CHECK(invoke({"render", data("octahedron.json"), "--svg", "--overlay", "outerplane", "-o", "oct_test.svg"}).code == 0);
  CHECK(count(read_input("oct_test.svg"), "class=\"vertex deleted\"") == 2);
  CHECK(invoke({"render", data("octahedron.json")}).code == 2);
  CHECK(invoke({"render", data("octahedron.json"), "--dot", "--svg"}).code == 2);

  auto s = invoke({"scan", "octahedron"});
  CHECK(s.code == 0);
  CHECK(s.out.find("(4/6)") != std::string::npos);
  CHECK(s.out.find("violation=false") != std::string::npos);
  CHECK(invoke({"scan", "octahedron", "--bound", "two thirds"}).code == 2);
  CHECK(invoke({"scan", "octahedron", "--bound", "1/1"}).out.find("violation=true") != std::string::npos);
  CHECK(invoke({}).code == 2);
}
