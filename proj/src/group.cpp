#include "gammalab/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace gammalab {

MatrixGroup MatrixGroup::generate(const std::vector<ExactMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw DimensionError("closure needs at least one generator");
  const std::size_t dim = generators.front().dim();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].dim() != dim)
      throw DimensionError("generator " + std::to_string(k) + " has dimension " +
                           std::to_string(generators[k].dim()) + ", expected " + std::to_string(dim));
    if (!is_invertible(generators[k])) throw SingularGenerator("generator " + std::to_string(k) + " is singular");
  }

  MatrixGroup g;
  g.dim_ = dim;
  g.elements_.push_back(ExactMatrix::identity(dim));
  g.index_.emplace(g.elements_[0].key(), 0);

  const std::size_t ngen = generators.size();
  std::vector<Index> parent{0};
  std::vector<Index> via{0};
  std::vector<Index> right;  // right[x * ngen + j] = x * generator j

  for (std::size_t x = 0; x < g.elements_.size(); ++x) {
    for (std::size_t j = 0; j < ngen; ++j) {
      ExactMatrix p = g.elements_[x] * generators[j];
      std::string key = p.key();
      auto it = g.index_.find(key);
      Index idx;
      if (it == g.index_.end()) {
        if (g.elements_.size() >= cap)
          throw CapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
        idx = static_cast<Index>(g.elements_.size());
        g.index_.emplace(std::move(key), idx);
        g.elements_.push_back(std::move(p));
        parent.push_back(static_cast<Index>(x));
        via.push_back(static_cast<Index>(j));
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }

  // Every element b > 0 was discovered as parent[b] * generator via[b], so
  // a * b = (a * parent[b]) * generator via[b] fills the table without
  // further matrix products.
  const std::size_t n = g.elements_.size();
  g.cayley_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Index* row = &g.cayley_[a * n];
    row[0] = static_cast<Index>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[static_cast<std::size_t>(row[parent[b]]) * ngen + via[b]];
  }
  g.fill_inverses();
  for (const auto& m : generators) g.generators_.push_back(g.index_.at(m.key()));
  return g;
}

MatrixGroup generate_closure(const std::vector<ExactMatrix>& generators, std::size_t cap) {
  return MatrixGroup::generate(generators, cap);
}

MatrixGroup MatrixGroup::from_subgroup(const MatrixGroup& parent, const ElementSet& members) {
  auto idx = members.members<Index>();
  if (idx.empty() || idx.front() != 0) throw std::invalid_argument("subgroup must contain the identity");
  std::vector<Index> local(parent.order(), static_cast<Index>(-1));
  for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<Index>(k);

  MatrixGroup g;
  g.dim_ = parent.dim_;
  const std::size_t n = idx.size();
  g.elements_.reserve(n);
  for (auto i : idx) g.elements_.push_back(parent.elements_[i]);
  g.cayley_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Index p = local[parent.product(idx[a], idx[b])];
      if (p == static_cast<Index>(-1)) throw std::invalid_argument("member set is not closed");
      g.cayley_[a * n + b] = p;
    }
  g.build_index();
  g.fill_inverses();
  g.generators_ = small_generating_set(g);
  return g;
}

void MatrixGroup::build_index() {
  index_.clear();
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].key(), static_cast<Index>(k));
}

void MatrixGroup::fill_inverses() {
  const std::size_t n = elements_.size();
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cayley_[a * n + b] == 0) {
        inverse_[a] = static_cast<Index>(b);
        break;
      }
}

Index MatrixGroup::power(Index a, long n) const {
  if (n < 0) {
    a = inverse(a);
    n = -n;
  }
  Index r = 0;
  for (long k = 0; k < n; ++k) r = product(r, a);
  return r;
}

std::optional<Index> MatrixGroup::find(const ExactMatrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> MatrixGroup::minus_identity() const { return find(-ExactMatrix::identity(dim_)); }

std::vector<Index> Subgroup::indices() const { return members.members<Index>(); }

ElementSet close_in(const MatrixGroup& g, const std::vector<Index>& seeds) {
  ElementSet s(g.order());
  std::vector<Index> list{0};
  s.insert(0);
  std::vector<Index> gens;
  for (auto x : seeds)
    if (x != 0) gens.push_back(x);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto y : gens) {
      Index p = g.product(list[k], y);
      if (!s.contains(p)) {
        s.insert(p);
        list.push_back(p);
      }
    }
  return s;
}

bool is_subgroup(const MatrixGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  auto m = s.members<Index>();
  for (auto a : m) {
    if (!s.contains(g.inverse(a))) return false;
    for (auto b : m)
      if (!s.contains(g.product(a, b))) return false;
  }
  return true;
}

int element_order(const MatrixGroup& g, Index idx) {
  int n = 1;
  for (Index x = idx; x != 0; x = g.product(x, idx)) ++n;
  return n;
}

int exponent(const MatrixGroup& g) {
  long e = 1;
  for (Index x = 0; x < g.order(); ++x) e = std::lcm(e, static_cast<long>(element_order(g, x)));
  return static_cast<int>(e);
}

Subgroup whole(const MatrixGroup& g) {
  ElementSet s(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) s.insert(k);
  return {&g, s};
}

Subgroup trivial_subgroup(const MatrixGroup& g) {
  ElementSet s(g.order());
  s.insert(0);
  return {&g, s};
}

Subgroup center(const MatrixGroup& g) {
  ElementSet s(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index y = 0; y < g.order() && central; ++y) central = g.product(x, y) == g.product(y, x);
    if (central) s.insert(x);
  }
  return {&g, s};
}

std::vector<std::vector<Index>> conjugacy_classes(const MatrixGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ElementSet orbit(n);
    for (Index y = 0; y < n; ++y) orbit.insert(g.conjugate(x, y));
    auto members = orbit.members<Index>();
    for (auto m : members) seen[m] = true;
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

std::vector<std::size_t> class_sizes_by_element(const MatrixGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (const auto& c : conjugacy_classes(g))
    for (auto x : c) out[x] = c.size();
  return out;
}

Subgroup derived_subgroup(const MatrixGroup& g) {
  ElementSet comm(g.order());
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) comm.insert(g.commutator(a, b));
  return {&g, close_in(g, comm.members<Index>())};
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int log_base(long value, long p) {
  int k = 0;
  while (value > 1) {
    value /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::vector<long> abelianization_invariants(const MatrixGroup& g) {
  Subgroup d = derived_subgroup(g);
  const long dsize = static_cast<long>(d.order());
  const long quotient = static_cast<long>(g.order()) / dsize;
  std::vector<long> out;
  for (long p : prime_factors(quotient)) {
    // rank_at[k] = log_p #{cosets of order dividing p^k} = sum_i min(k, e_i)
    std::vector<int> rank_at{0};
    long pk = 1;
    for (int k = 1;; ++k) {
      pk *= p;
      long count = 0;
      for (Index x = 0; x < g.order(); ++x)
        if (d.members.contains(g.power(x, pk))) ++count;
      rank_at.push_back(log_base(count / dsize, p));
      if (rank_at[k] == rank_at[k - 1]) break;
    }
    // #invariants with exponent >= k is rank_at[k] - rank_at[k-1]
    for (std::size_t k = 1; k < rank_at.size(); ++k) {
      int at_least_k = rank_at[k] - rank_at[k - 1];
      int at_least_next = k + 1 < rank_at.size() ? rank_at[k + 1] - rank_at[k] : 0;
      long q = 1;
      for (std::size_t e = 0; e < k; ++e) q *= p;
      for (int c = 0; c < at_least_k - at_least_next; ++c) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_group(const MatrixGroup& g) { return std::has_single_bit(g.order()); }

Subgroup frattini_subgroup(const MatrixGroup& g) {
  if (!is_two_group(g)) throw std::invalid_argument("Frattini quotient rank is only implemented for 2-groups");
  ElementSet seeds(g.order());
  for (Index a = 0; a < g.order(); ++a) {
    seeds.insert(g.product(a, a));
    for (Index b = 0; b < g.order(); ++b) seeds.insert(g.commutator(a, b));
  }
  return {&g, close_in(g, seeds.members<Index>())};
}

int minimal_generator_count(const MatrixGroup& g) {
  Subgroup phi = frattini_subgroup(g);
  return std::countr_zero(g.order() / phi.order());
}

std::vector<Index> small_generating_set(const MatrixGroup& g) {
  if (g.order() == 1) return {};
  // Rare element types first keeps the isomorphism search narrow.
  auto sizes = class_sizes_by_element(g);
  std::vector<std::pair<int, std::size_t>> sig(g.order());
  std::map<std::pair<int, std::size_t>, std::size_t> freq;
  for (Index x = 0; x < g.order(); ++x) {
    sig[x] = {element_order(g, x), sizes[x]};
    ++freq[sig[x]];
  }
  std::vector<Index> order(g.order());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    auto fa = freq[sig[a]], fb = freq[sig[b]];
    if (fa != fb) return fa < fb;
    return sig[a].first > sig[b].first;
  });

  std::vector<Index> base;
  if (is_two_group(g)) base = frattini_subgroup(g).indices();
  std::vector<Index> gens;
  ElementSet span = close_in(g, base);
  for (auto x : order) {
    if (span.count() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    std::vector<Index> seeds = base;
    seeds.insert(seeds.end(), gens.begin(), gens.end());
    span = close_in(g, seeds);
  }
  return gens;
}

}  // namespace gammalab
