#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gammalab/element_set.hpp"
#include "gammalab/exact.hpp"

namespace gammalab {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 4096;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite group of invertible matrices, closed under product and inverse.
/// Element 0 is the identity; element order is the breadth-first discovery
/// order from the generators, so indices are reproducible.
class MatrixGroup {
 public:
  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return dim_; }

  const ExactMatrix& element(Index i) const { return elements_[i]; }
  const std::vector<ExactMatrix>& elements() const { return elements_; }
  const std::vector<Index>& generators() const { return generators_; }

  Index product(Index a, Index b) const { return cayley_[static_cast<std::size_t>(a) * order() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index power(Index a, long n) const;
  Index conjugate(Index g, Index by) const { return product(product(by, g), inverse(by)); }
  Index commutator(Index g, Index h) const { return product(product(g, h), product(inverse(g), inverse(h))); }

  std::optional<Index> find(const ExactMatrix& m) const;
  /// Index of -I, if present.
  std::optional<Index> minus_identity() const;

  /// Builds the group generated by `generators`. Throws CapExceeded when more
  /// than `cap` elements are produced, SingularGenerator for a non-invertible
  /// generator, DimensionError for mixed dimensions.
  static MatrixGroup generate(const std::vector<ExactMatrix>& generators, std::size_t cap = kDefaultCap);

  /// Re-indexes a closed subset of `parent` as a group of its own. `members`
  /// must be a subgroup; the identity is placed first and the remaining
  /// members keep their relative order.
  static MatrixGroup from_subgroup(const MatrixGroup& parent, const ElementSet& members);

 private:
  std::size_t dim_ = 0;
  std::vector<ExactMatrix> elements_;
  std::vector<Index> generators_;
  std::vector<Index> cayley_;
  std::vector<Index> inverse_;
  std::unordered_map<std::string, Index> index_;

  void build_index();
  void fill_inverses();
};

MatrixGroup generate_closure(const std::vector<ExactMatrix>& generators, std::size_t cap = kDefaultCap);

/// Member index set of a subgroup of `parent` (sorted, contains 0).
struct Subgroup {
  const MatrixGroup* parent = nullptr;
  ElementSet members;

  std::size_t order() const { return members.count(); }
  std::vector<Index> indices() const;
  MatrixGroup as_group() const { return MatrixGroup::from_subgroup(*parent, members); }
};

/// Closure of `seeds` inside G under the group product.
ElementSet close_in(const MatrixGroup& g, const std::vector<Index>& seeds);
bool is_subgroup(const MatrixGroup& g, const ElementSet& s);

int element_order(const MatrixGroup& g, Index idx);
int exponent(const MatrixGroup& g);

Subgroup whole(const MatrixGroup& g);
Subgroup trivial_subgroup(const MatrixGroup& g);
Subgroup center(const MatrixGroup& g);

/// Conjugacy classes sorted by (size, least member index); members ascending.
std::vector<std::vector<Index>> conjugacy_classes(const MatrixGroup& g);
/// Per-element conjugacy-class size.
std::vector<std::size_t> class_sizes_by_element(const MatrixGroup& g);

Subgroup derived_subgroup(const MatrixGroup& g);
/// Elementary divisors (prime powers, ascending) of G/G'.
std::vector<long> abelianization_invariants(const MatrixGroup& g);

bool is_two_group(const MatrixGroup& g);
/// Subgroup generated by squares and commutators; throws std::invalid_argument
/// unless G is a 2-group.
Subgroup frattini_subgroup(const MatrixGroup& g);
/// Rank of G/Phi(G) for a 2-group.
int minimal_generator_count(const MatrixGroup& g);

/// Every subgroup of order n, duplicate-free, sorted by member list. Throws
/// std::invalid_argument when n does not divide |G|.
std::vector<Subgroup> subgroups_of_order(const MatrixGroup& g, std::size_t n);
/// Same result computed only by the generic extension search (no index-2
/// shortcut); kept public so the two routes can be cross-checked.
std::vector<Subgroup> subgroups_of_order_by_extension(const MatrixGroup& g, std::size_t n);

/// Cheap isomorphism invariants compared before any backtracking.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> order_histogram;  // entry k = #elements of order k
  std::vector<std::size_t> class_sizes;      // sorted
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<long> abelian_invariants;
  int exponent = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const MatrixGroup& g);

/// Isomorphism G -> H given by images of a generating set of G. `map` is the
/// full induced element map, kept so the certificate can be re-verified.
struct IsoCertificate {
  std::vector<Index> source_generators;
  std::vector<Index> target_images;
  std::vector<Index> map;
  bool verified = false;
};

std::optional<IsoCertificate> is_isomorphic(const MatrixGroup& g, const MatrixGroup& h);
/// Backtracking search only, for callers that already compared fingerprints.
std::optional<IsoCertificate> find_isomorphism(const MatrixGroup& g, const MatrixGroup& h);
/// Checks that `cert.map` is a bijective homomorphism against both tables.
bool verify_certificate(const MatrixGroup& g, const MatrixGroup& h, const IsoCertificate& cert);

/// A small generating set; for 2-groups it has exactly minimal_generator_count
/// elements.
std::vector<Index> small_generating_set(const MatrixGroup& g);

}  // namespace gammalab
