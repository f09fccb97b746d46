#include "doctest.h"

#include <set>

#include "gammalab/catalog.hpp"
#include "test_support.hpp"

using namespace gammalab;
using namespace gammalab::testing;

namespace {

const Catalog& cat() { return default_catalog(); }

ExactMatrix random_invertible(std::mt19937_64& rng, std::size_t dim) {
  for (;;) {
    auto p = random_matrix(rng, dim, 1);
    if (is_invertible(p)) return p;
  }
}

FormKind kind_of(int invariant) {
  return invariant == 1 ? FormKind::symmetric : invariant == -1 ? FormKind::antisymmetric : FormKind::none;
}

}  // namespace

TEST_CASE("group axioms on every catalog group") {
  std::mt19937_64 rng(seed());
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    const auto n = static_cast<Index>(g.order());
    CHECK(g.element(0).is_identity());
    for (Index a = 0; a < n; ++a) {
      std::set<Index> row, col;
      for (Index b = 0; b < n; ++b) {
        row.insert(g.product(a, b));
        col.insert(g.product(b, a));
      }
      CHECK(row.size() == n);
      CHECK(col.size() == n);
      CHECK(g.product(a, g.inverse(a)) == 0);
      CHECK(g.product(g.inverse(a), a) == 0);
    }
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Index a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
      // the table agrees with matrix products
      CHECK(g.element(g.product(a, b)) == g.element(a) * g.element(b));
    }
  }
}

TEST_CASE("class equation and census identities") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    std::size_t total = 0, singletons = 0;
    auto classes = conjugacy_classes(g);
    for (const auto& c : classes) {
      total += c.size();
      singletons += c.size() == 1;
      CHECK(g.order() % c.size() == 0);
    }
    CHECK(total == g.order());
    CHECK(singletons == center(g).order());

    auto census = irrep_census(g);
    std::size_t squares = 0;
    for (auto d : census.dims) {
      squares += d * d;
      CHECK(g.order() % d == 0);
    }
    CHECK(squares == g.order());
    CHECK(census.dims.size() == classes.size());
    CHECK(census.one_dim_count * derived_subgroup(g).order() == g.order());
  }
}

TEST_CASE("Lagrange and closure on index-2 and order-2 subgroups") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    for (std::size_t n : {std::size_t{2}, g.order() / 2}) {
      for (const auto& h : subgroups_of_order(g, n)) {
        CHECK(h.order() == n);
        CHECK(is_subgroup(g, h.members));
        CHECK(close_in(g, h.indices()) == h.members);
      }
    }
    // order-2 subgroups are the involutions
    std::size_t involutions = 0;
    for (Index a = 1; a < g.order(); ++a) involutions += element_order(g, a) == 2;
    CHECK(subgroups_of_order(g, 2).size() == involutions);
  }
}

TEST_CASE("indicator and invariant form agree") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    if (irreducibility_norm(g) == 1) {
      auto inv = structural_invariant(g);
      auto form = invariant_bilinear_form(g);
      CHECK(form.kind == kind_of(inv.value));
      if (form.kind != FormKind::none) {
        REQUIRE(form.witness);
        const ExactMatrix& b = *form.witness;
        CHECK(is_invertible(b));
        CHECK(mat_transpose(b) == GaussianRational(form.kind == FormKind::symmetric ? 1 : -1) * b);
        for (const auto& x : cat().generators(name)) CHECK(mat_transpose(x) * b * x == b);
      }
    }
    auto blocks = rep_blocks(g);
    auto traced = trace_block_invariants(g);
    REQUIRE(blocks.size() == traced.blocks.size());
    std::size_t dims = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      CHECK(blocks[k].invariant == traced.blocks[k].invariant);
      CHECK(blocks[k].dim == traced.blocks[k].dim);
      if (blocks[k].form) CHECK(*blocks[k].form == kind_of(blocks[k].invariant));
      dims += blocks[k].dim;
    }
    CHECK(dims == g.dim());
  }
}

TEST_CASE("profiles survive a random change of basis") {
  std::mt19937_64 rng(seed());
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    const auto& g = *cat().group(name);
    const auto p = random_invertible(rng, g.dim());
    const auto pinv = mat_inverse(p);
    std::vector<ExactMatrix> conj;
    for (const auto& x : cat().generators(name)) conj.push_back(p * x * pinv);
    auto h = MatrixGroup::generate(conj);
    CHECK(h.order() == g.order());
    CHECK(conjugacy_classes(h).size() == conjugacy_classes(g).size());
    CHECK(irrep_census(h) == irrep_census(g));
    CHECK(trace_block_invariants(h).value == trace_block_invariants(g).value);
    auto cert = is_isomorphic(g, h);
    REQUIRE(cert);
    CHECK(verify_certificate(g, h, *cert));
  }
}

TEST_CASE("text format round-trips every catalog element") {
  for (const auto& name : cat().names()) {
    CAPTURE(name);
    for (const auto& x : cat().group(name)->elements()) CHECK(parse_matrix(format_matrix(x)) == x);
  }
}

TEST_CASE("profile classification is deterministic") {
  // the same group rebuilt from shuffled generators has the same profile numbers
  std::mt19937_64 rng(seed());
  for (const char* name : {"pauli", "D_I", "D_III"}) {
    CAPTURE(name);
    auto gens = cat().generators(name);
    std::shuffle(gens.begin(), gens.end(), rng);
    auto g = MatrixGroup::generate(gens);
    auto p = compute_profile(g, {cat().component_tables(), {}});
    const auto& q = cat().profile(name);
    CHECK(p.order == q.order);
    CHECK(p.classes == q.classes);
    CHECK(p.invariant == q.invariant);
    CHECK(p.components == q.components);
    CHECK(p.index2_count == q.index2_count);
    std::multiset<std::string> a, b;
    for (const auto& c : p.index2) a.insert(component_label(c.components));
    for (const auto& c : q.index2) b.insert(component_label(c.components));
    CHECK(a == b);
  }
}
