#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammalab/brackets.hpp"
#include "gammalab/group.hpp"
#include "gammalab/rep.hpp"

namespace gammalab {

/// A named reference group used to identify subgroups: isomorphism first,
/// then the invariant and component composition when those are given.
struct ReferenceGroup {
  std::string name;
  const MatrixGroup* group = nullptr;
  std::optional<int> invariant;
  std::optional<std::vector<std::string>> composition;
};

/// Union of the component tables realized by the order-16 subgroups (or by G
/// itself when |G| = 16), in the order of `tables`.
std::vector<std::string> component_composition(const MatrixGroup& g, const std::vector<BracketTable>& tables);

struct SubgroupClass {
  std::vector<Index> representative;  // member indices
  std::size_t count = 0;
  std::optional<std::string> identified;  // reference name
  /// Union of the tables admitted by the members (only when tables are given).
  std::vector<std::string> components;
  /// Every member admits the same tables.
  bool uniform = true;
  /// Trace invariant of the representative, when its blocks agree.
  std::optional<int> invariant;
};

/// First admitted table name, or "unclassified".
std::string component_label(const std::vector<std::string>& components);

/// Isomorphism classes among the subgroups of order n (in order of first
/// appearance), each matched against the references. For n = 16 the
/// component tables of every member are recorded; references with a
/// composition are compared through the same tables.
std::vector<SubgroupClass> subgroup_classes(const MatrixGroup& g, std::size_t n,
                                            const std::vector<ReferenceGroup>& refs = {},
                                            const std::vector<BracketTable>& tables = {});

struct GroupProfile {
  std::size_t order = 0;
  std::size_t classes = 0;
  std::size_t center = 0;
  std::vector<long> abelian_invariants;
  std::optional<int> rank;
  std::optional<IrrepCensus> census;
  std::optional<int> invariant;
  std::vector<RepBlock> blocks;
  std::size_t index2_count = 0;
  /// Isomorphism classes of index-2 subgroups; for order 32 each carries its
  /// component tables, for order 64 its identification.
  std::vector<SubgroupClass> index2;
  /// d/f/b/c admitted by G itself (order 16) or by its order-16 subgroups (order 32).
  std::vector<std::string> components;
  /// Identified order-32 subgroup classes for order 64, in reference order,
  /// then "unidentified" for each class that matched no reference.
  std::vector<std::string> decomposition;
};

struct ProfileContext {
  std::vector<BracketTable> component_tables;
  std::vector<ReferenceGroup> order32_references;
};

GroupProfile compute_profile(const MatrixGroup& g, const ProfileContext& ctx);

}  // namespace gammalab
