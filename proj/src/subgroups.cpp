#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "gammalab/group.hpp"

namespace gammalab {

namespace {

// Index-2 subgroups are kernels of surjections onto Z/2, i.e. hyperplanes of
// the elementary abelian quotient G / <g^2>.
std::vector<ElementSet> index_two_subgroups(const MatrixGroup& g) {
  std::vector<Index> squares;
  for (Index x = 0; x < g.order(); ++x) squares.push_back(g.product(x, x));
  ElementSet s = close_in(g, squares);
  const auto s_members = s.members<Index>();

  std::vector<Index> basis;
  ElementSet span = s;
  for (Index x = 0; x < g.order() && span.count() < g.order(); ++x) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    std::vector<Index> seeds = s_members;
    seeds.insert(seeds.end(), basis.begin(), basis.end());
    span = close_in(g, seeds);
  }
  const std::size_t r = basis.size();

  // coordinate of every element in G / S
  std::vector<std::uint32_t> coord(g.order(), 0);
  for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
    Index rep = 0;
    for (std::size_t b = 0; b < r; ++b)
      if (mask & (1U << b)) rep = g.product(rep, basis[b]);
    for (auto y : s_members) coord[g.product(rep, y)] = mask;
  }

  std::vector<ElementSet> out;
  for (std::uint32_t f = 1; f < (1U << r); ++f) {
    ElementSet k(g.order());
    for (Index x = 0; x < g.order(); ++x)
      if (std::popcount(coord[x] & f) % 2 == 0) k.insert(x);
    out.push_back(std::move(k));
  }
  return out;
}

// Every subgroup K of order n is reached by a chain <g1> < <g1,g2> < ... = K
// whose members all have order dividing n, so a search over such chains,
// deduplicated by member set, is complete.
std::vector<ElementSet> subgroups_by_extension(const MatrixGroup& g, std::size_t n) {
  std::vector<int> orders(g.order());
  for (Index x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);

  struct Node {
    ElementSet members;
    std::vector<Index> gens;
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<Node> queue;
  ElementSet triv(g.order());
  triv.insert(0);
  seen.insert(triv);
  queue.push_back({triv, {}});

  std::vector<ElementSet> found;
  if (n == 1) found.push_back(triv);
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.members.count() == n) continue;
    for (Index x = 1; x < g.order(); ++x) {
      if (node.members.contains(x) || n % static_cast<std::size_t>(orders[x]) != 0) continue;
      std::vector<Index> gens = node.gens;
      gens.push_back(x);
      ElementSet k = close_in(g, gens);
      std::size_t ord = k.count();
      if (n % ord != 0) continue;
      if (!seen.insert(k).second) continue;
      if (ord == n) found.push_back(k);
      queue.push_back({std::move(k), std::move(gens)});
    }
  }
  return found;
}

}  // namespace

namespace {

void check_divides(const MatrixGroup& g, std::size_t n) {
  if (n == 0 || g.order() % n != 0)
    throw std::invalid_argument("subgroup order " + std::to_string(n) + " does not divide group order " +
                                std::to_string(g.order()));
}

std::vector<Subgroup> wrap(const MatrixGroup& g, std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end());
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back({&g, std::move(s)});
  return out;
}

}  // namespace

std::vector<Subgroup> subgroups_of_order(const MatrixGroup& g, std::size_t n) {
  check_divides(g, n);
  if (n == g.order()) return wrap(g, {whole(g).members});
  if (2 * n == g.order()) return wrap(g, index_two_subgroups(g));
  return wrap(g, subgroups_by_extension(g, n));
}

std::vector<Subgroup> subgroups_of_order_by_extension(const MatrixGroup& g, std::size_t n) {
  check_divides(g, n);
  return wrap(g, subgroups_by_extension(g, n));
}

}  // namespace gammalab
