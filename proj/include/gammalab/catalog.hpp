#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/brackets.hpp"
#include "gammalab/profile.hpp"

namespace gammalab {

class UnknownEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Profile fields an entry commits to; absent fields are not checked.
struct ExpectedProfile {
  std::optional<std::size_t> order;
  std::optional<std::size_t> classes;
  std::optional<std::size_t> center;
  std::optional<std::vector<long>> abelian_invariants;
  std::optional<int> rank;
  std::optional<std::string> census;
  std::optional<int> invariant;
  std::optional<std::vector<int>> block_invariants;
  std::optional<std::size_t> index2_count;
  /// component_label of each index-2 class, in enumeration order
  std::optional<std::vector<std::string>> index2_labels;
  std::optional<std::vector<std::string>> components;
  std::optional<std::vector<std::string>> decomposition;
};

/// Generators taken from the first order-16 subgroup of `from` that admits
/// `component`, labelled by that table's basis.
struct ExtractRecipe {
  std::string from;
  std::string component;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string anchor;
  std::size_t dimension = 0;
  std::vector<std::string> labels;
  std::vector<ExactMatrix> generators;      // empty when extracted
  std::optional<ExtractRecipe> extract;
  std::map<std::string, ExactMatrix> named;  // extra labelled elements used by relations
  std::vector<std::string> relation_sets;    // names under <data>/relations
  std::optional<std::string> signature;      // generator signature checked as relations
  std::vector<std::string> tables;           // bracket tables checked on the labels
  ExpectedProfile expected;
  std::vector<std::string> notes;
};

CatalogEntry load_catalog_entry(const std::filesystem::path& file);

/// The named groups under <data>/catalog. Groups and profiles are built on
/// first use and cached; all methods are safe to call concurrently.
class Catalog {
 public:
  explicit Catalog(std::filesystem::path data_dir);

  const std::filesystem::path& data_dir() const { return dir_; }
  /// Canonical names in catalog order.
  std::vector<std::string> names() const;
  /// Resolves aliases; throws UnknownEntry.
  const CatalogEntry& entry(const std::string& name) const;
  bool contains(const std::string& name) const;

  /// Generators in label order, after extraction.
  std::vector<ExactMatrix> generators(const std::string& name) const;
  Assignment assignment(const std::string& name) const;
  std::shared_ptr<const MatrixGroup> group(const std::string& name) const;
  const GroupProfile& profile(const std::string& name) const;

  const std::vector<BracketTable>& component_tables() const { return tables_; }
  /// Component tables plus the five order-32 entries as references.
  ProfileContext context() const;

  /// Relations, tables, signature and every expected profile field.
  VerificationReport validate(const std::string& name) const;

  /// Entries matching g by order, trace invariant, isomorphism and, for order
  /// 32, component composition; catalog order.
  std::vector<std::string> identify(const MatrixGroup& g) const;

 private:
  struct Built {
    std::once_flag group_once, profile_once;
    std::vector<ExactMatrix> generators;
    std::shared_ptr<const MatrixGroup> group;
    GroupProfile profile;
  };
  Built& built(const std::string& name) const;
  std::size_t position(const std::string& name) const;

  std::filesystem::path dir_;
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::vector<BracketTable> tables_;
  std::vector<std::unique_ptr<Built>> built_;
};

/// The loaded catalog for default_data_dir().
const Catalog& default_catalog();

}  // namespace gammalab
