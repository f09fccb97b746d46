#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammalab/catalog.hpp"
#include "gammalab/search.hpp"

namespace gammalab {

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClaimResult {
  std::string id;
  std::string description;
  std::string anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0;
};

/// Shared state for a claim run; expensive sweeps are computed once.
class ClaimContext {
 public:
  explicit ClaimContext(const Catalog& catalog, SearchOptions opts = {});
  ~ClaimContext();

  const Catalog& catalog() const { return catalog_; }
  const SearchOptions& options() const { return opts_; }

  /// Signature sweep over the doubled pool.
  const std::vector<ModelClass>& sweep() const;

  struct Extension {
    std::string base;
    int square = 1;
    ExtensionClass result;
  };
  /// Every order-32 catalog entry extended with both squares.
  const std::vector<Extension>& extensions() const;

 private:
  struct Cache;
  const Catalog& catalog_;
  SearchOptions opts_;
  std::unique_ptr<Cache> cache_;
};

struct Claim {
  std::string id;
  std::string description;
  std::string anchor;
  std::string expected;
  std::function<std::string(const ClaimContext&)> compute;
};

/// All registered claims, sorted by id.
const std::vector<Claim>& claim_registry();

/// Shell-style glob over the whole id.
bool glob_match(const std::string& pattern, const std::string& text);

/// Claims whose id matches `filter`, in id order. Throws UnknownClaim when
/// nothing matches. A claim that throws is reported as a failure with the
/// message as computed value. Results do not depend on `jobs`.
std::vector<ClaimResult> run_claims(const ClaimContext& ctx, const std::string& filter = "*", unsigned jobs = 1);

}  // namespace gammalab
