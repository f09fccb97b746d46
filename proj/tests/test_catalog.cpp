#include "doctest.h"

#include <fstream>
#include <set>

#include "gammalab/catalog.hpp"
#include "gammalab/data.hpp"
#include "gammalab/search.hpp"
#include "test_support.hpp"

using namespace gammalab;
using namespace gammalab::testing;

namespace {

const Catalog& cat() { return default_catalog(); }

std::size_t find_in(const std::vector<ExactMatrix>& v, const ExactMatrix& m) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), m) - v.begin());
}

// Definition-level scans over explicit matrices.
std::size_t brute_center(const std::vector<ExactMatrix>& els) {
  std::size_t n = 0;
  for (const auto& z : els)
    if (std::all_of(els.begin(), els.end(), [&](const ExactMatrix& g) { return z * g == g * z; })) ++n;
  return n;
}

std::size_t brute_classes(const std::vector<ExactMatrix>& els) {
  std::vector<bool> seen(els.size(), false);
  std::size_t classes = 0;
  for (std::size_t a = 0; a < els.size(); ++a) {
    if (seen[a]) continue;
    ++classes;
    for (const auto& g : els) seen[find_in(els, g * els[a] * mat_inverse(g))] = true;
  }
  return classes;
}

// Index-2 subgroups contain every square, so they are the hyperplanes of G/S
// with S generated by the squares (elementary abelian for a 2-group).
std::size_t brute_index2_count(const std::vector<ExactMatrix>& els) {
  std::vector<ExactMatrix> squares;
  for (const auto& g : els)
    if (find_in(squares, g * g) == squares.size()) squares.push_back(g * g);
  const std::size_t s = naive_closure(squares).size();
  return els.size() / s - 1;
}

GaussianRational brute_indicator(const std::vector<ExactMatrix>& els) {
  GaussianRational sum;
  for (const auto& g : els) sum += mat_trace(g * g);
  return sum / GaussianRational(static_cast<long>(els.size()));
}

}  // namespace

TEST_CASE("catalog lookup") {
  auto names = cat().names();
  CHECK(names.size() == 14);
  CHECK(cat().entry("d_gamma").name == "pauli");
  CHECK(cat().group("d_gamma") == cat().group("pauli"));
  CHECK_THROWS_AS(cat().entry("D_VI"), UnknownEntry);
  CHECK_FALSE(cat().contains("nonexistent"));
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
}

TEST_CASE("every entry validates") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    auto report = cat().validate(name);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.lhs);
      CAPTURE(c.rhs);
      CHECK(c.pass);
    }
    CHECK(report.checks.size() > 1);
  }
}

TEST_CASE("expected profiles against definition-level oracles") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    const auto& x = cat().entry(name).expected;
    auto closed = naive_closure(cat().generators(name));
    CHECK(closed.size() == g.order());
    if (x.order) CHECK(*x.order == closed.size());
    if (x.center) CHECK(*x.center == brute_center(closed));
    if (x.classes) CHECK(*x.classes == brute_classes(closed));
    if (x.index2_count) CHECK(*x.index2_count == brute_index2_count(closed));
    if (x.census) {
      const auto& census = *cat().profile(name).census;
      std::size_t sum = 0;
      for (auto d : census.dims) sum += d * d;
      CHECK(sum == g.order());
      CHECK(census.dims.size() == brute_classes(closed));
    }
  }
}

TEST_CASE("irreducible entries: invariant against the brute-force indicator") {
  for (const auto& name : cat().names()) {
    const auto& g = *cat().group(name);
    if (irreducibility_norm(g) != 1) continue;
    CAPTURE(name);
    const auto& x = cat().entry(name).expected;
    REQUIRE(x.invariant);
    CHECK(brute_indicator(naive_closure(cat().generators(name))) == GaussianRational(*x.invariant));
  }
}

TEST_CASE("order-64 entries: each 4-dimensional block against the brute-force indicator") {
  // the five-fold product is +-1 on a block for the first two, +-i for the third
  struct Case {
    const char* name;
    std::size_t image;
  };
  for (auto [name, image] : {Case{"Delta1", 32}, Case{"Delta2", 32}, Case{"Delta3", 64}}) {
    CAPTURE(name);
    auto gens = cat().generators(name);
    for (std::size_t offset : {0, 4}) {
      std::vector<ExactMatrix> block;
      for (const auto& m : gens) {
        std::vector<GaussianRational> e;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) e.push_back(m(offset + i, offset + j));
        block.emplace_back(4, std::move(e));
      }
      auto els = naive_closure(block);
      CHECK(els.size() == image);
      CHECK(brute_indicator(els) == GaussianRational(*cat().entry(name).expected.invariant));
    }
  }
}

TEST_CASE("extracted components") {
  auto b = cat().assignment("b_gamma");
  CHECK(verify_bracket_table(b, load_table(default_data_dir(), "b")).pass());
  auto parent = cat().group("D_II");
  for (const auto& m : cat().generators("b_gamma")) CHECK(parent->find(m).has_value());
  auto c = cat().assignment("c_gamma");
  CHECK(verify_bracket_table(c, load_table(default_data_dir(), "c")).pass());
  for (const auto& m : cat().generators("c_gamma")) CHECK(cat().group("D_I")->find(m).has_value());
  // neither is isomorphic to the Pauli group
  CHECK_FALSE(is_isomorphic(*cat().group("b_gamma"), *cat().group("pauli")));
  CHECK_FALSE(is_isomorphic(*cat().group("c_gamma"), *cat().group("pauli")));
  CHECK_FALSE(is_isomorphic(*cat().group("b_gamma"), *cat().group("c_gamma")));
}

TEST_CASE("order-64 entries: the product of the five generators") {
  struct Case {
    const char* name;
    int square;
  };
  for (auto [name, square] : {Case{"Delta1", 1}, Case{"Delta2", 1}, Case{"Delta3", -1}}) {
    CAPTURE(name);
    auto g = cat().generators(name);
    ExactMatrix six = g[0] * g[1] * g[2] * g[3] * g[4];
    for (const auto& x : g) CHECK(six * x == x * six);
    CHECK(six * six == ExactMatrix::scalar(8, square));
  }
}

TEST_CASE("the order-32 entries are pairwise distinct") {
  std::vector<std::string> five{"D_I", "D_II", "D_III", "D_IV", "D_V"};
  for (std::size_t a = 0; a < five.size(); ++a)
    for (std::size_t b = a + 1; b < five.size(); ++b) {
      CAPTURE(five[a]);
      CAPTURE(five[b]);
      const auto& pa = cat().profile(five[a]);
      const auto& pb = cat().profile(five[b]);
      const bool same_iso = is_isomorphic(*cat().group(five[a]), *cat().group(five[b])).has_value();
      CHECK((same_iso && pa.invariant == pb.invariant && pa.components == pb.components) == false);
    }
}

TEST_CASE("the three order-64 entries differ in composition alone") {
  std::set<std::vector<std::string>> decompositions;
  for (const char* name : {"Delta1", "Delta2", "Delta3"}) decompositions.insert(cat().profile(name).decomposition);
  CHECK(decompositions.size() == 3);
}

TEST_CASE("generator files") {
  auto dir = std::filesystem::temp_directory_path() / "gammalab_test_gen";
  std::filesystem::create_directories(dir);
  auto write = [&](const char* file, const char* text) {
    std::ofstream(dir / file) << text;
    return dir / file;
  };
  auto ok = load_generator_file(write("ok.json", R"({"name": "pair", "dimension": 2, "generators": ["[[0,1],[1,0]]", [["1","0"],["0","-1"]]]})"));
  CHECK(ok.name == "pair");
  CHECK(ok.generators.size() == 2);
  CHECK(ok.generators[1] == sigma_z());
  CHECK_THROWS_AS(load_generator_file(write("bad_dim.json", R"({"dimension": 3, "generators": ["[[0,1],[1,0]]"]})")),
                  DimensionError);
  CHECK_THROWS_AS(load_generator_file(write("bad_json.json", "{")), std::runtime_error);
  CHECK_THROWS_AS(load_generator_file(write("empty.json", R"({"dimension": 2, "generators": []})")),
                  std::runtime_error);
  CHECK_THROWS_AS(load_generator_file(dir / "missing.json"), std::runtime_error);
}
