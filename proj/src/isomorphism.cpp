#include <algorithm>
#include <map>
#include <tuple>

#include "gammalab/group.hpp"

namespace gammalab {

GroupFingerprint fingerprint(const MatrixGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.order_histogram.assign(g.order() + 1, 0);
  for (Index x = 0; x < g.order(); ++x) ++fp.order_histogram[static_cast<std::size_t>(element_order(g, x))];
  for (const auto& c : conjugacy_classes(g)) fp.class_sizes.push_back(c.size());
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  fp.center_order = center(g).order();
  fp.derived_order = derived_subgroup(g).order();
  fp.abelian_invariants = abelianization_invariants(g);
  fp.exponent = exponent(g);
  return fp;
}

namespace {

// (element order, class size, number of square roots)
using ElementSignature = std::tuple<int, std::size_t, std::size_t>;

std::vector<ElementSignature> signatures(const MatrixGroup& g) {
  auto sizes = class_sizes_by_element(g);
  std::vector<std::size_t> roots(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) ++roots[g.product(x, x)];
  std::vector<ElementSignature> out(g.order());
  for (Index x = 0; x < g.order(); ++x) out[x] = {element_order(g, x), sizes[x], roots[x]};
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const MatrixGroup& g, const MatrixGroup& h) : g_(g), h_(h) {}

  std::optional<IsoCertificate> run() {
    auto gsig = signatures(g_);
    auto hsig = signatures(h_);
    gens_ = small_generating_set(g_);
    for (auto s : gens_) {
      std::vector<Index> cands;
      if (s < h_.order() && hsig[s] == gsig[s]) cands.push_back(s);  // try the same index first
      for (Index t = 0; t < h_.order(); ++t)
        if (t != s && hsig[t] == gsig[s]) cands.push_back(t);
      if (cands.empty()) return std::nullopt;
      candidates_.push_back(std::move(cands));
    }
    images_.assign(gens_.size(), 0);
    extend(0);
    if (!assign(0)) return std::nullopt;
    IsoCertificate cert{gens_, images_, map_, false};
    cert.verified = verify_certificate(g_, h_, cert);
    if (!cert.verified) return std::nullopt;
    return cert;
  }

 private:
  bool assign(std::size_t k) {
    if (k == gens_.size()) return map_count_ == g_.order();
    for (auto t : candidates_[k]) {
      images_[k] = t;
      if (extend(k + 1) && assign(k + 1)) return true;
    }
    return false;
  }

  // Builds the map on <gens_[0..k)> by walking the Cayley graph; fails on any
  // inconsistency or collision.
  bool extend(std::size_t k) {
    map_.assign(g_.order(), kUnset);
    std::vector<bool> used(h_.order(), false);
    map_[0] = 0;
    used[0] = true;
    std::vector<Index> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Index x = queue[q];
      for (std::size_t j = 0; j < k; ++j) {
        Index y = g_.product(x, gens_[j]);
        Index ty = h_.product(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used[ty]) return false;
          map_[y] = ty;
          used[ty] = true;
          queue.push_back(y);
        } else if (map_[y] != ty) {
          return false;
        }
      }
    }
    map_count_ = queue.size();
    return true;
  }

  static constexpr Index kUnset = static_cast<Index>(-1);
  const MatrixGroup& g_;
  const MatrixGroup& h_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> images_;
  std::vector<Index> map_;
  std::size_t map_count_ = 0;
};

}  // namespace

std::optional<IsoCertificate> is_isomorphic(const MatrixGroup& g, const MatrixGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;
  return IsoSearch(g, h).run();
}

std::optional<IsoCertificate> find_isomorphism(const MatrixGroup& g, const MatrixGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  return IsoSearch(g, h).run();
}

bool verify_certificate(const MatrixGroup& g, const MatrixGroup& h, const IsoCertificate& cert) {
  if (g.order() != h.order() || cert.map.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (auto t : cert.map) {
    if (t >= h.order() || hit[t]) return false;
    hit[t] = true;
  }
  for (std::size_t k = 0; k < cert.source_generators.size(); ++k)
    if (cert.map[cert.source_generators[k]] != cert.target_images[k]) return false;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (cert.map[g.product(a, b)] != h.product(cert.map[a], cert.map[b])) return false;
  return true;
}

}  // namespace gammalab
