#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "gammalab/claims.hpp"
#include "gammalab/data.hpp"
#include "gammalab/report.hpp"

using namespace gammalab;

namespace {

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  std::size_t cap = kDefaultCap;
  std::string pool;
  std::string data;
  bool timings = false;
};

std::vector<ExactMatrix> pick_pool(const std::string& name, const char* fallback, std::string& label) {
  label = name.empty() ? fallback : name;
  if (label == "gamma4") return gamma_monomial_pool();
  if (label == "doubled") return doubled_pool();
  if (label == "extension") return extension_pool();
  return load_pool(label);
}

int emit(const Globals& g, Report report, double ms, bool pass) {
  if (g.timings) report.timings = {{"total_ms", std::round(ms * 1000) / 1000}};
  const Json doc = report.to_json();
  std::cout << (g.format == "markdown" ? render_markdown(doc) : render_json(doc));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of finite gamma-matrix groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", g.cap, "largest group built by closure")->check(CLI::PositiveNumber);
  app.add_option("--pool", g.pool, "candidate pool: gamma4, doubled, extension or a JSON file");
  app.add_option("--data", g.data, "data directory (default: GAMMALAB_DATA or the source tree)");
  app.add_flag("--timings", g.timings, "add wall-clock timings to the report");

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog entries");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  catalog_cmd->require_subcommand(1);

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "profile of a catalog entry or generator file");
  analyze_cmd->add_option("input", input, "catalog name or generator file")->required();

  std::string filter = "*";
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the claim registry");
  verify_cmd->add_option("--filter", filter, "claim id glob");

  std::string name;
  std::size_t order = 0;
  bool classify = false;
  auto* subgroups_cmd = app.add_subcommand("subgroups", "subgroup isomorphism classes of one order");
  subgroups_cmd->add_option("name", name, "catalog name or generator file")->required();
  subgroups_cmd->add_option("--order", order, "subgroup order")->required();
  subgroups_cmd->add_flag("--classify", classify, "component tables of order-16 subgroups");

  std::string table;
  auto* brackets_cmd = app.add_subcommand("brackets", "check a bracket table on an entry");
  brackets_cmd->add_option("name", name, "catalog name")->required();
  brackets_cmd->add_option("--table", table, "table name")->required()->check(
      CLI::IsMember({"d", "q2", "f", "b", "c"}));

  std::string signature;
  auto* search_cmd = app.add_subcommand("search", "generator tuples of a signature, or all signatures");
  search_cmd->add_option("--signature", signature, "e.g. ++++, +++-:c, or 'all'")->required();

  std::string base, square;
  auto* ext_cmd = app.add_subcommand("extensions", "order-64 extensions by a fifth anticommuting generator");
  ext_cmd->add_option("--base", base, "catalog name or generator file")->required();
  ext_cmd->add_option("--square", square, "square of the fifth generator")->required()->check(
      CLI::IsMember({"plus", "minus"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    const Catalog owned(g.data.empty() ? default_data_dir() : std::filesystem::path(g.data));
    const Catalog& catalog = owned;
    SearchOptions opts{g.jobs, g.cap};

    if (list_cmd->parsed()) return emit(g, catalog_list_report(catalog), elapsed(), true);
    if (analyze_cmd->parsed()) {
      auto r = analyze_report(catalog, input, g.cap);
      const bool pass = std::all_of(r.claims.begin(), r.claims.end(), [](const Json& c) { return c["status"] == "PASS"; });
      return emit(g, std::move(r), elapsed(), pass);
    }
    if (verify_cmd->parsed()) {
      ClaimContext ctx(catalog, opts);
      auto results = run_claims(ctx, filter, g.jobs);
      const bool pass = std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
      return emit(g, claims_report(filter, results, g.timings), elapsed(), pass);
    }
    if (subgroups_cmd->parsed()) return emit(g, subgroups_report(catalog, name, order, classify, g.cap), elapsed(), true);
    if (brackets_cmd->parsed()) {
      auto r = brackets_report(catalog, name, table);
      const bool pass = r.result["pass"].get<bool>();
      return emit(g, std::move(r), elapsed(), pass);
    }
    if (search_cmd->parsed()) {
      std::string label;
      auto pool = pick_pool(g.pool, "doubled", label);
      auto specs = signature == "all" ? all_signatures(4) : std::vector<SignatureSpec>{parse_signature(signature)};
      return emit(g, search_report(catalog, specs, label, pool, opts), elapsed(), true);
    }
    if (ext_cmd->parsed()) {
      std::string label;
      auto pool = pick_pool(g.pool, "extension", label);
      return emit(g, extensions_report(catalog, base, square == "plus" ? 1 : -1, label, pool, opts), elapsed(), true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
