#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kantor/catalog.hpp"
#include "kantor/errors.hpp"
#include "kantor/io.hpp"

using namespace kantor;

TEST_CASE("catalog items round-trip byte-identically") {
  for (const auto& entry : catalog()) {
    const SystemFile item = catalog_item(entry.id);
    const std::string text = save_system_file(item);
    const SystemFile loaded = load_system_file(text);
    CHECK(save_system_file(loaded) == text);
    CHECK(std::string(loaded.kind()) == entry.kind);
    CHECK(loaded.dim() == entry.dim);
  }
}

TEST_CASE("catalog contents") {
  const auto& entries = catalog();
  auto has = [&](const std::string& id, const std::string& kind, size_t dim) {
    for (const auto& e : entries)
      if (e.id == id) return e.kind == kind && e.dim == dim;
    return false;
  };
  CHECK(has("unit-field", "involutive-algebra", 1));
  CHECK(has("split-pair", "involutive-algebra", 2));
  CHECK(has("quat", "involutive-algebra", 4));
  CHECK(has("mat2-transpose", "involutive-algebra", 4));
  CHECK(has("scalar-fkts", "triple-system", 1));
  CHECK(has("swap-fkts", "triple-system", 2));
  CHECK(has("osp12", "graded-superalgebra", 5));
  CHECK(has("chevalley-A2", "graded-superalgebra", 8));
  CHECK(has("chevalley-A3", "graded-superalgebra", 15));
  CHECK(has("chevalley-C2", "graded-superalgebra", 10));
}

TEST_CASE("every catalog item passes its declared suites") {
  for (const auto& entry : catalog()) {
    const SystemFile item = catalog_item(entry.id);
    for (const auto& suite : entry.suites) {
      const Report rep = run_suite(item, suite);
      INFO(entry.id, " ", suite, "\n", rep.str());
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("strict parsing") {
  const std::string good = save_system_file(catalog_item("scalar-fkts"));
  CHECK_NOTHROW(load_system_file(good));

  CHECK_THROWS_AS(load_system_file("not json"), ParseError);
  CHECK_THROWS_AS(load_system_file("{}"), ParseError);
  {
    std::string bad = good;
    bad.replace(bad.find("kantor-sc/1"), 11, "kantor-sc/9");
    CHECK_THROWS_AS(load_system_file(bad), ParseError);
  }
  {
    // Unknown fields are rejected.
    std::string bad = good;
    bad.replace(bad.find("\"label\""), 7, "\"labelx\"");
    CHECK_THROWS_AS(load_system_file(bad), ParseError);
  }
  {
    // Zero entries must be omitted.
    std::string bad = good;
    bad.replace(bad.find("\"1\""), 3, "\"0\"");
    CHECK_THROWS_AS(load_system_file(bad), ParseError);
  }
  {
    // Out-of-range index.
    std::string bad = good;
    bad.replace(bad.find("[0, 0, 0, 0,"), 12, "[0, 0, 0, 7,");
    CHECK_THROWS_AS(load_system_file(bad), ParseError);
  }
}

TEST_CASE("loading an algebra re-validates its axioms") {
  std::string text = save_system_file(catalog_item("quat"));
  // Corrupt the involution: drop the sign on the i-column.
  const size_t pos = text.find("\"-1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "\"1\"");
  CHECK_THROWS_AS(load_system_file(text), HypothesisError);
}

TEST_CASE("vector and sign parsing") {
  const Vec v = parse_vector("1,0,-1/2");
  CHECK(v.dim() == 3);
  CHECK(v[2] == Scalar(-1, 2));
  CHECK_THROWS_AS(parse_vector("1,,2"), ParseError);

  const SignPair s = parse_signs("-1,1");
  CHECK(s.epsilon == -1);
  CHECK(s.delta == 1);
  CHECK_THROWS_AS(parse_signs("0,1"), ParseError);
  CHECK_THROWS_AS(parse_signs("-1"), ParseError);
}

TEST_CASE("osp12 golden file") {
  const char* dir = std::getenv("KANTOR_GOLDEN_DIR");
  std::string path;
  for (const std::string candidate :
       {dir ? std::string(dir) : std::string(), std::string("data/golden/v1"),
        std::string("../data/golden/v1")}) {
    if (candidate.empty()) continue;
    std::ifstream probe(candidate + "/osp12.json");
    if (probe) {
      path = candidate + "/osp12.json";
      break;
    }
  }
  REQUIRE_FALSE(path.empty());
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const SystemFile golden = load_system_file(buf.str());
  const SystemFile built = catalog_item("osp12");
  CHECK(save_system_file(built) == buf.str());
  CHECK(std::get<GradedSuperalgebra>(golden.payload) ==
        std::get<GradedSuperalgebra>(built.payload));
}
