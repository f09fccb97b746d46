#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammalab/catalog.hpp"
#include "gammalab/claims.hpp"
#include "gammalab/search.hpp"

namespace gammalab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Top-level document: {tool_version, input, profile, claims, result?, timings?}.
/// `profile` is null when the command has none; `result` carries the
/// command-specific payload; timings appear only when requested.
struct Report {
  Json input = Json::object();
  Json profile = nullptr;
  Json claims = Json::array();
  Json result = nullptr;
  Json timings = nullptr;

  Json to_json() const;
};

Json profile_json(const MatrixGroup& g, const GroupProfile& p, const Catalog& catalog);
Json claim_json(const ClaimResult& r, bool timings);
Json verification_json(const VerificationReport& r);

/// Resolves a catalog name, or else reads a generator file.
struct GroupInput {
  Json input;
  std::shared_ptr<const MatrixGroup> group;
  std::optional<std::string> entry;  // canonical catalog name
};
GroupInput resolve_input(const Catalog& catalog, const std::string& name_or_file, std::size_t cap = kDefaultCap);

Report catalog_list_report(const Catalog& catalog);
/// Profile of the input; catalog entries also carry their validation checks as claims.
Report analyze_report(const Catalog& catalog, const std::string& name_or_file, std::size_t cap = kDefaultCap);
Report claims_report(const std::string& filter, const std::vector<ClaimResult>& results, bool timings);
Report subgroups_report(const Catalog& catalog, const std::string& name, std::size_t order, bool classify,
                        std::size_t cap = kDefaultCap);
/// Checks the entry's own labels against the table; when they do not cover
/// the table basis, searches the group (or its order-16 subgroups) for a
/// realization instead.
Report brackets_report(const Catalog& catalog, const std::string& name, const std::string& table);
Report search_report(const Catalog& catalog, const std::vector<SignatureSpec>& specs, const std::string& pool_name,
                     const std::vector<ExactMatrix>& pool, const SearchOptions& opts);
Report extensions_report(const Catalog& catalog, const std::string& base, int square, const std::string& pool_name,
                         const std::vector<ExactMatrix>& pool, const SearchOptions& opts);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const Json& doc);
/// The same document as markdown; every scalar of the JSON appears verbatim.
std::string render_markdown(const Json& doc);

}  // namespace gammalab
