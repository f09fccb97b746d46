#include "gammalab/search.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "gammalab/profile.hpp"
#include "gammalab/rep.hpp"

namespace gammalab {

std::string SignatureSpec::str() const {
  std::string s;
  for (int q : squares) s += q > 0 ? '+' : '-';
  if (last_commutes) s += ":c";
  return s;
}

SignatureSpec parse_signature(std::string_view text) {
  SignatureSpec spec;
  std::string_view body = text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    if (text.substr(colon + 1) != "c") throw std::invalid_argument("signature suffix must be ':c'");
    spec.last_commutes = true;
    body = text.substr(0, colon);
  }
  for (char c : body) {
    if (c == '+')
      spec.squares.push_back(1);
    else if (c == '-')
      spec.squares.push_back(-1);
    else
      throw std::invalid_argument("signature must consist of '+' and '-', got '" + std::string(text) + "'");
  }
  if (spec.squares.size() < 2) throw std::invalid_argument("signature needs at least two generators");
  return spec;
}

std::vector<SignatureSpec> all_signatures(std::size_t generators) {
  std::vector<SignatureSpec> out;
  for (int commute = 0; commute < 2; ++commute)
    for (std::size_t mask = 0; mask < (std::size_t{1} << generators); ++mask) {
      SignatureSpec s;
      for (std::size_t k = 0; k < generators; ++k) s.squares.push_back((mask >> (generators - 1 - k)) & 1 ? -1 : 1);
      s.last_commutes = commute == 1;
      out.push_back(s);
    }
  return out;
}

namespace {

ExactMatrix pauli(int k) {
  switch (k) {
    case 1: return parse_matrix("[[0,1],[1,0]]");
    case 2: return parse_matrix("[[0,-i],[i,0]]");
    case 3: return parse_matrix("[[1,0],[0,-1]]");
  }
  return ExactMatrix::identity(2);
}

std::vector<ExactMatrix> tensor_pool(const std::vector<ExactMatrix>& left) {
  std::vector<ExactMatrix> out;
  for (const auto& n : left)
    for (const auto& m : gamma_monomial_pool()) out.push_back(kronecker(n, m));
  return out;
}

}  // namespace

std::vector<ExactMatrix> dirac_generators() {
  return {kronecker(pauli(2), pauli(1)), kronecker(pauli(2), pauli(2)), kronecker(pauli(2), pauli(3)),
          kronecker(pauli(3), ExactMatrix::identity(2))};
}

std::vector<ExactMatrix> gamma_monomial_pool() {
  const auto g = dirac_generators();
  std::vector<ExactMatrix> monomials;
  for (unsigned mask = 0; mask < 16; ++mask) {
    ExactMatrix m = ExactMatrix::identity(4);
    for (unsigned k = 0; k < 4; ++k)
      if (mask & (1U << k)) m = m * g[k];
    monomials.push_back(m);
  }
  std::vector<ExactMatrix> out;
  for (const GaussianRational& phase : {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                        GaussianRational(0, -1)})
    for (const auto& m : monomials) out.push_back(phase * m);
  return out;
}

std::vector<ExactMatrix> doubled_pool() { return tensor_pool({ExactMatrix::identity(2), pauli(3)}); }

std::vector<ExactMatrix> extension_pool() {
  return tensor_pool({ExactMatrix::identity(2), pauli(3), pauli(1), GaussianRational::i() * pauli(2)});
}

RelationSet signature_relations(const std::string& name, const std::vector<std::string>& labels,
                                const SignatureSpec& spec) {
  RelationSet r;
  r.name = name;
  r.anchor = "generator squares and (anti)commutation for signature " + spec.str();
  r.labels = labels;
  const std::size_t n = labels.size();
  for (std::size_t k = 0; k < n; ++k)
    r.relations.push_back(parse_relation(labels[k] + "^2 = " + (spec.squares[k] > 0 ? "1" : "-1")));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool commute = spec.last_commutes && b == n - 1;
      r.relations.push_back(
          parse_relation(labels[a] + " " + labels[b] + " = " + (commute ? "" : "-") + labels[b] + " " + labels[a]));
    }
  return r;
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += jobs) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// The pool closed to a group so that every product is a table lookup.
struct PoolIndex {
  MatrixGroup group;
  std::vector<Index> members;  // distinct pool elements, in pool order
  std::optional<Index> minus;
  std::vector<int> square;  // +1 / -1 when x^2 = +-I, else 0
  std::vector<bool> scalar;

  PoolIndex(const std::vector<ExactMatrix>& pool, std::size_t cap) : group(MatrixGroup::generate(pool, cap)) {
    std::vector<bool> seen(group.order(), false);
    for (const auto& m : pool) {
      Index x = *group.find(m);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
    minus = group.minus_identity();
    square.assign(group.order(), 0);
    scalar.assign(group.order(), false);
    for (Index x = 0; x < group.order(); ++x) {
      scalar[x] = group.element(x).is_scalar();
      Index s = group.product(x, x);
      if (s == 0)
        square[x] = 1;
      else if (minus && s == *minus)
        square[x] = -1;
    }
  }

  bool commute(Index x, Index y) const { return group.product(x, y) == group.product(y, x); }
  bool anticommute(Index x, Index y) const {
    return minus && group.product(y, x) == group.product(*minus, group.product(x, y));
  }
};

struct Found {
  std::vector<Index> tuple;
  ElementSet members;
};

class TupleSearch {
 public:
  TupleSearch(const PoolIndex& pool, const SignatureSpec& spec) : p_(pool), spec_(spec) {}

  void run_from(Index first, std::vector<Found>& out) {
    out_ = &out;
    chosen_.clear();
    span_ = {0};
    if (accept(first, 0)) descend(first);
  }

 private:
  bool accept(Index y, std::size_t pos) const {
    if (p_.square[y] != spec_.squares[pos]) return false;
    const bool last = pos + 1 == spec_.squares.size();
    for (auto x : chosen_) {
      bool need_commute = spec_.last_commutes && last;
      if (need_commute ? !p_.commute(x, y) : !p_.anticommute(x, y)) return false;
    }
    for (auto s : span_)
      if (p_.scalar[p_.group.product(s, y)]) return false;
    return true;
  }

  void descend(Index y) {
    chosen_.push_back(y);
    const std::size_t old = span_.size();
    for (std::size_t k = 0; k < old; ++k) span_.push_back(p_.group.product(span_[k], y));
    if (chosen_.size() == spec_.squares.size()) {
      ElementSet set(p_.group.order());
      for (auto s : span_) {
        set.insert(s);
        if (p_.minus) set.insert(p_.group.product(*p_.minus, s));
      }
      out_->push_back({chosen_, std::move(set)});
    } else {
      for (auto z : p_.members)
        if (accept(z, chosen_.size())) descend(z);
    }
    span_.resize(old);
    chosen_.pop_back();
  }

  const PoolIndex& p_;
  const SignatureSpec& spec_;
  std::vector<Index> chosen_;
  std::vector<Index> span_;
  std::vector<Found>* out_ = nullptr;
};

std::vector<ExactMatrix> matrices(const MatrixGroup& g, const std::vector<Index>& idx) {
  std::vector<ExactMatrix> out;
  for (auto i : idx) out.push_back(g.element(i));
  return out;
}

struct Candidate {
  std::vector<Index> tuple;
  ElementSet members;
  std::size_t tuples = 0;
};

// First occurrence of each distinct element set, in enumeration order.
std::vector<Candidate> distinct_sets(std::vector<std::vector<Found>>& per_root) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  std::vector<Candidate> out;
  for (auto& list : per_root)
    for (auto& f : list) {
      auto [it, fresh] = where.emplace(f.members, out.size());
      if (fresh) out.push_back({std::move(f.tuple), std::move(f.members), 0});
      ++out[it->second].tuples;
    }
  return out;
}

struct Classified {
  std::shared_ptr<const MatrixGroup> group;
  GroupFingerprint fp;
  std::optional<int> invariant;
};

std::vector<ModelClass> find_in_pool(const SignatureSpec& spec, const PoolIndex& p,
                                     const std::vector<BracketTable>& component_tables, const SearchOptions& opts) {
  std::vector<std::vector<Found>> per_root(p.members.size());
  parallel_for(p.members.size(), opts.jobs, [&](std::size_t i) {
    TupleSearch search(p, spec);
    search.run_from(p.members[i], per_root[i]);
  });
  auto cands = distinct_sets(per_root);

  std::vector<Classified> info(cands.size());
  parallel_for(cands.size(), opts.jobs, [&](std::size_t i) {
    auto g = std::make_shared<const MatrixGroup>(MatrixGroup::from_subgroup(p.group, cands[i].members));
    info[i].fp = fingerprint(*g);
    try {
      info[i].invariant = trace_block_invariants(*g).value;
    } catch (const std::domain_error&) {
    }
    info[i].group = std::move(g);
  });

  std::vector<ModelClass> classes;
  std::vector<GroupFingerprint> fps;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::size_t k = 0;
    for (; k < classes.size(); ++k)
      if (fps[k] == info[i].fp && classes[k].invariant == info[i].invariant &&
          find_isomorphism(*classes[k].group, *info[i].group))
        break;
    if (k == classes.size()) {
      ModelClass c;
      c.generators = matrices(p.group, cands[i].tuple);
      c.signatures = {spec.str()};
      c.group = info[i].group;
      c.invariant = info[i].invariant;
      classes.push_back(std::move(c));
      fps.push_back(info[i].fp);
    }
    classes[k].tuples += cands[i].tuples;
    ++classes[k].groups;
  }
  parallel_for(classes.size(), opts.jobs,
               [&](std::size_t k) { classes[k].composition = component_composition(*classes[k].group, component_tables); });
  return classes;
}

}  // namespace

std::vector<ModelClass> find_gamma_models(const SignatureSpec& spec, const std::vector<ExactMatrix>& pool,
                                          const std::vector<BracketTable>& component_tables,
                                          const SearchOptions& opts) {
  if (pool.empty()) throw std::invalid_argument("empty candidate pool");
  return find_in_pool(spec, PoolIndex(pool, opts.cap), component_tables, opts);
}

std::vector<ModelClass> sweep_gamma_models(const std::vector<SignatureSpec>& specs,
                                           const std::vector<ExactMatrix>& pool,
                                           const std::vector<BracketTable>& component_tables,
                                           const SearchOptions& opts) {
  if (pool.empty()) throw std::invalid_argument("empty candidate pool");
  const PoolIndex p(pool, opts.cap);
  std::vector<ModelClass> merged;
  for (const auto& spec : specs) {
    for (auto& c : find_in_pool(spec, p, component_tables, opts)) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const ModelClass& m) {
        return m.invariant == c.invariant && m.composition == c.composition && is_isomorphic(*m.group, *c.group);
      });
      if (it == merged.end()) {
        merged.push_back(std::move(c));
      } else {
        it->signatures.push_back(spec.str());
        it->tuples += c.tuples;
        it->groups += c.groups;
      }
    }
  }
  return merged;
}

std::vector<ExtensionClass> enumerate_extensions(const std::vector<ExactMatrix>& base, int square,
                                                 const std::vector<ExactMatrix>& pool, const SearchOptions& opts) {
  if (base.empty() || pool.empty()) throw std::invalid_argument("empty base or pool");
  std::vector<ExactMatrix> lifted;
  for (const auto& g : base) {
    if (g.dim() * 2 == pool.front().dim())
      lifted.push_back(kronecker(ExactMatrix::identity(2), g));
    else if (g.dim() == pool.front().dim())
      lifted.push_back(g);
    else
      throw DimensionError("base generators do not fit the extension pool dimension");
  }
  std::vector<ExactMatrix> all = pool;
  all.insert(all.end(), lifted.begin(), lifted.end());
  PoolIndex p(all, opts.cap);
  std::vector<Index> base_idx;
  for (const auto& g : lifted) base_idx.push_back(*p.group.find(g));
  const std::size_t base_order = close_in(p.group, base_idx).count();

  std::vector<Index> admissible;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    Index x = *p.group.find(pool[k]);
    if (p.square[x] != square) continue;
    if (!std::all_of(base_idx.begin(), base_idx.end(), [&](Index b) { return p.anticommute(b, x); })) continue;
    if (std::find(admissible.begin(), admissible.end(), x) != admissible.end()) continue;
    admissible.push_back(x);
  }

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  std::vector<std::pair<Index, std::size_t>> firsts;  // fifth generator, candidate count
  for (auto x : admissible) {
    auto seeds = base_idx;
    seeds.push_back(x);
    ElementSet set = close_in(p.group, seeds);
    if (set.count() != 2 * base_order) continue;
    auto [it, fresh] = where.emplace(std::move(set), firsts.size());
    if (fresh) firsts.push_back({x, 0});
    ++firsts[it->second].second;
  }

  std::vector<std::shared_ptr<const MatrixGroup>> groups(firsts.size());
  std::vector<GroupFingerprint> fps(firsts.size());
  parallel_for(firsts.size(), opts.jobs, [&](std::size_t i) {
    auto seeds = base_idx;
    seeds.push_back(firsts[i].first);
    groups[i] = std::make_shared<const MatrixGroup>(MatrixGroup::from_subgroup(p.group, close_in(p.group, seeds)));
    fps[i] = fingerprint(*groups[i]);
  });

  std::vector<ExtensionClass> out;
  std::vector<std::size_t> rep_of;
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    std::size_t k = 0;
    for (; k < out.size(); ++k)
      if (fps[rep_of[k]] == fps[i] && find_isomorphism(*out[k].group, *groups[i])) break;
    if (k == out.size()) {
      ExtensionClass c;
      c.generators = lifted;
      c.generators.push_back(p.group.element(firsts[i].first));
      c.group = groups[i];
      out.push_back(std::move(c));
      rep_of.push_back(i);
    }
    out[k].candidates += firsts[i].second;
    ++out[k].groups;
  }
  return out;
}

}  // namespace gammalab
