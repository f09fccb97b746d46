#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gammalab/brackets.hpp"
#include "gammalab/group.hpp"

namespace gammalab {

/// Squares (+1/-1) of each generator; all pairs anticommute except that the
/// last generator commutes with the others when `last_commutes` is set.
struct SignatureSpec {
  std::vector<int> squares;
  bool last_commutes = false;

  /// "+++-" or "+++-:c"
  std::string str() const;
};

SignatureSpec parse_signature(std::string_view text);
/// Every square pattern, each with and without a commuting last generator.
std::vector<SignatureSpec> all_signatures(std::size_t generators = 4);

/// {1, -1, i, -i} times the 16 products of the standard 4x4 gamma matrices.
std::vector<ExactMatrix> gamma_monomial_pool();
/// {I2, sigma_z} (x) gamma_monomial_pool(): 128 matrices of size 8.
std::vector<ExactMatrix> doubled_pool();
/// {I2, sigma_z, sigma_x, i sigma_y} (x) gamma_monomial_pool(): 256 matrices of size 8.
std::vector<ExactMatrix> extension_pool();
/// The standard gamma matrices sigma_y (x) sigma_k (k = 1..3) and sigma_z (x) I2.
std::vector<ExactMatrix> dirac_generators();

struct SearchOptions {
  unsigned jobs = 1;
  std::size_t cap = kDefaultCap;
};

/// One class of models: groups with the same isomorphism type, invariant and
/// component composition.
struct ModelClass {
  std::vector<ExactMatrix> generators;  // first tuple found
  std::vector<std::string> signatures;  // specs that produced the class
  std::size_t tuples = 0;
  std::size_t groups = 0;  // distinct element sets
  std::shared_ptr<const MatrixGroup> group;
  std::optional<int> invariant;
  std::vector<std::string> composition;
};

/// All faithful generator tuples from the pool matching the spec, classified.
/// Output is independent of `jobs`.
std::vector<ModelClass> find_gamma_models(const SignatureSpec& spec, const std::vector<ExactMatrix>& pool,
                                          const std::vector<BracketTable>& component_tables,
                                          const SearchOptions& opts = {});

/// Runs every spec and merges classes across specs.
std::vector<ModelClass> sweep_gamma_models(const std::vector<SignatureSpec>& specs,
                                           const std::vector<ExactMatrix>& pool,
                                           const std::vector<BracketTable>& component_tables,
                                           const SearchOptions& opts = {});

struct ExtensionClass {
  std::vector<ExactMatrix> generators;  // lifted base generators, then the fifth
  std::size_t candidates = 0;           // admissible fifth generators
  std::size_t groups = 0;               // distinct element sets
  std::shared_ptr<const MatrixGroup> group;
};

/// Extensions of a 4- or 8-dimensional base by a fifth generator from the pool
/// that anticommutes with every base generator and squares to `square` * I,
/// keeping only order-64 results. 4-dimensional bases are lifted as I2 (x) g.
std::vector<ExtensionClass> enumerate_extensions(const std::vector<ExactMatrix>& base, int square,
                                                 const std::vector<ExactMatrix>& pool,
                                                 const SearchOptions& opts = {});

/// Relations stating the squares and (anti)commutation of labelled generators.
RelationSet signature_relations(const std::string& name, const std::vector<std::string>& labels,
                                const SignatureSpec& spec);

}  // namespace gammalab
