#include "gammalab/report.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "gammalab/data.hpp"

namespace gammalab {

namespace {

Json matrices(const std::vector<ExactMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(format_matrix(m));
  return out;
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json weights_json(const MatrixGroup& g) {
  Json out = Json::array();
  for (auto k : g.generators()) {
    const int order = element_order(g, k);
    Json w{{"generator", format_matrix(g.element(k))}, {"order", order}};
    if (order == 1 || order == 2 || order == 4 || order == 8) {
      auto r = spin_weight(g.element(k));
      Json eig = Json::array();
      for (const auto& e : r.eigenvalues) eig.push_back({{"value", e.value.str()}, {"multiplicity", e.multiplicity}});
      w["eigenvalues"] = eig;
      w["class"] = to_string(r.classification);
      w["l0"] = r.l0 ? Json(r.l0->get_str()) : Json(nullptr);
    }
    out.push_back(w);
  }
  return out;
}

std::vector<ExactMatrix> subgroup_generators(const MatrixGroup& g, const std::vector<Index>& members) {
  ElementSet set(g.order());
  for (auto m : members) set.insert(m);
  auto h = MatrixGroup::from_subgroup(g, set);
  std::vector<ExactMatrix> out;
  for (auto k : small_generating_set(h)) out.push_back(h.element(k));
  return out;
}

Json matches(const Catalog& catalog, const MatrixGroup& g) {
  Json out = Json::array();
  for (const auto& n : catalog.identify(g)) out.push_back(n);
  return out;
}

std::string cell(const Json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_null()) s = "null";
  else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + cell(v[k]);
    if (v.empty()) s = "(none)";
  } else s = v.dump();
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

void markdown(std::ostringstream& os, const std::string& key, const Json& v, int level) {
  const bool table = v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
  if (v.is_object()) {
    os << "\n" << std::string(static_cast<std::size_t>(level), '#') << " " << key << "\n";
    bool first = true;
    for (const auto& [k, x] : v.items())
      if (!x.is_object() && !(x.is_array() && !x.empty() && x.front().is_object())) {
        if (std::exchange(first, false)) os << "\n";
        markdown(os, k, x, level + 1);
      }
    for (const auto& [k, x] : v.items())
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_object())) markdown(os, k, x, level + 1);
  } else if (table) {
    std::vector<std::string> columns;
    for (const auto& row : v)
      for (const auto& [k, x] : row.items())
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    os << "\n" << std::string(static_cast<std::size_t>(level), '#') << " " << key << "\n\n|";
    for (const auto& c : columns) os << " " << c << " |";
    os << "\n|";
    for (std::size_t k = 0; k < columns.size(); ++k) os << "---|";
    os << "\n";
    for (const auto& row : v) {
      os << "|";
      for (const auto& c : columns) os << " " << (row.contains(c) ? cell(row[c]) : "") << " |";
      os << "\n";
    }
  } else {
    os << "- " << key << ": " << cell(v) << "\n";
  }
}

}  // namespace

Json Report::to_json() const {
  Json j{{"tool_version", kToolVersion}, {"input", input}, {"profile", profile}, {"claims", claims}};
  if (!result.is_null()) j["result"] = result;
  if (!timings.is_null()) j["timings"] = timings;
  return j;
}

Json profile_json(const MatrixGroup& g, const GroupProfile& p, const Catalog& catalog) {
  Json j;
  j["dimension"] = g.dim();
  j["order"] = p.order;
  j["classes"] = p.classes;
  j["center"] = p.center;
  j["abelian_invariants"] = p.abelian_invariants;
  j["rank"] = opt(p.rank);
  j["census"] = p.census ? Json(p.census->str()) : Json(nullptr);
  j["invariant"] = opt(p.invariant);
  j["form"] = irreducibility_norm(g) == 1 ? Json(to_string(invariant_bilinear_form(g).kind)) : Json(nullptr);
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json chi = Json::array();
    for (const auto& x : b.central_character) chi.push_back(x.str());
    blocks.push_back({{"dim", b.dim},
                      {"multiplicity", b.multiplicity},
                      {"image_order", b.image_order},
                      {"invariant", b.invariant},
                      {"form", b.form ? Json(to_string(*b.form)) : Json(nullptr)},
                      {"central_character", chi}});
  }
  j["blocks"] = blocks;
  j["index2_count"] = p.index2_count;
  Json classes = Json::array();
  for (const auto& c : p.index2) {
    Json x{{"count", c.count}, {"invariant", opt(c.invariant)}};
    if (p.order == 32) {
      x["label"] = component_label(c.components);
      x["components"] = c.components;
      x["uniform"] = c.uniform;
    }
    if (p.order == 64) x["identified"] = c.identified ? Json(*c.identified) : Json(nullptr);
    classes.push_back(x);
  }
  j["index2_classes"] = classes;
  j["components"] = p.components;
  j["decomposition"] = p.decomposition;
  j["catalog_matches"] = matches(catalog, g);
  j["generator_weights"] = weights_json(g);
  return j;
}

Json claim_json(const ClaimResult& r, bool timings) {
  Json j{{"id", r.id},
         {"status", r.pass ? "PASS" : "FAIL"},
         {"expected", r.expected},
         {"computed", r.computed},
         {"description", r.description},
         {"anchor", r.anchor}};
  if (timings) j["ms"] = std::round(r.ms * 1000) / 1000;
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return checks;
}

GroupInput resolve_input(const Catalog& catalog, const std::string& name_or_file, std::size_t cap) {
  GroupInput in;
  if (catalog.contains(name_or_file)) {
    const auto& e = catalog.entry(name_or_file);
    in.entry = e.name;
    in.group = catalog.group(e.name);
    in.input = {{"kind", "catalog"},
                {"name", e.name},
                {"anchor", e.anchor},
                {"dimension", e.dimension},
                {"generators", matrices(catalog.generators(e.name))}};
    if (in.group->order() > cap) throw CapExceeded(e.name + " has more than " + std::to_string(cap) + " elements");
    return in;
  }
  if (!std::filesystem::exists(name_or_file))
    throw UnknownEntry("'" + name_or_file + "' is neither a catalog entry nor a file");
  auto file = load_generator_file(name_or_file);
  in.group = std::make_shared<const MatrixGroup>(MatrixGroup::generate(file.generators, cap));
  in.input = {{"kind", "file"},
              {"path", name_or_file},
              {"name", file.name},
              {"dimension", file.dimension},
              {"generators", matrices(file.generators)}};
  return in;
}

Report catalog_list_report(const Catalog& catalog) {
  Report r;
  r.input = {{"kind", "catalog"}, {"data", "catalog"}};
  Json entries = Json::array();
  for (const auto& n : catalog.names()) {
    const auto& e = catalog.entry(n);
    entries.push_back({{"name", n},
                       {"aliases", e.aliases},
                       {"dimension", e.dimension},
                       {"order", catalog.group(n)->order()},
                       {"source", e.extract ? "extracted from " + e.extract->from : std::string("generators")},
                       {"anchor", e.anchor}});
  }
  r.result = {{"entries", entries}};
  return r;
}

Report analyze_report(const Catalog& catalog, const std::string& name_or_file, std::size_t cap) {
  auto in = resolve_input(catalog, name_or_file, cap);
  Report r;
  r.input = in.input;
  if (in.entry) {
    r.profile = profile_json(*in.group, catalog.profile(*in.entry), catalog);
    const auto& e = catalog.entry(*in.entry);
    for (const auto& c : catalog.validate(*in.entry).checks)
      r.claims.push_back({{"id", "catalog." + e.name + "." + c.name},
                          {"status", c.pass ? "PASS" : "FAIL"},
                          {"expected", c.rhs},
                          {"computed", c.lhs},
                          {"description", "catalog validation"},
                          {"anchor", e.anchor}});
  } else {
    ProfileContext ctx = in.group->order() == 64 ? catalog.context() : ProfileContext{catalog.component_tables(), {}};
    r.profile = profile_json(*in.group, compute_profile(*in.group, ctx), catalog);
  }
  return r;
}

Report claims_report(const std::string& filter, const std::vector<ClaimResult>& results, bool timings) {
  Report r;
  r.input = {{"kind", "claims"}, {"filter", filter}};
  std::size_t passed = 0;
  for (const auto& c : results) {
    r.claims.push_back(claim_json(c, timings));
    passed += c.pass;
  }
  r.result = {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}};
  return r;
}

Report subgroups_report(const Catalog& catalog, const std::string& name, std::size_t order, bool classify,
                        std::size_t cap) {
  auto in = resolve_input(catalog, name, cap);
  const MatrixGroup& g = *in.group;
  if (order == 0 || g.order() % order != 0)
    throw std::invalid_argument("order " + std::to_string(order) + " does not divide " + std::to_string(g.order()));
  std::vector<ReferenceGroup> refs;
  for (const auto& n : catalog.names()) {
    auto h = catalog.group(n);
    if (h->order() != order) continue;
    const auto& p = catalog.profile(n);
    refs.push_back({n, h.get(), p.invariant,
                    order == 32 ? std::optional<std::vector<std::string>>(p.components) : std::nullopt});
  }
  auto classes = subgroup_classes(g, order, refs, classify ? catalog.component_tables() : std::vector<BracketTable>{});
  Report r;
  r.input = in.input;
  std::size_t total = 0;
  Json out = Json::array();
  for (const auto& c : classes) {
    total += c.count;
    Json x{{"count", c.count},
           {"identified", c.identified ? Json(*c.identified) : Json(nullptr)},
           {"invariant", opt(c.invariant)}};
    if (classify && order == 16) {
      x["label"] = component_label(c.components);
      x["components"] = c.components;
      x["uniform"] = c.uniform;
    }
    x["generators"] = matrices(subgroup_generators(g, c.representative));
    out.push_back(x);
  }
  r.result = {{"order", order}, {"count", total}, {"classes", out}};
  return r;
}

Report brackets_report(const Catalog& catalog, const std::string& name, const std::string& table_name) {
  const auto& e = catalog.entry(name);
  const BracketTable table = load_table(catalog.data_dir(), table_name);
  Report r;
  r.input = {{"kind", "catalog"}, {"name", e.name}, {"table", table.name}, {"table_anchor", table.anchor}};
  const Assignment own = catalog.assignment(e.name);
  const bool covered =
      std::all_of(table.basis.begin(), table.basis.end(), [&](const std::string& l) { return own.count(l) > 0; });
  std::optional<Assignment> used;
  std::string realization = "labels";
  if (covered) {
    used = own;
  } else {
    realization = "searched";
    auto g = catalog.group(e.name);
    std::vector<Subgroup> candidates;
    if (g->order() == 16) candidates.push_back(whole(*g));
    else if (g->order() == 32) candidates = subgroups_of_order(*g, 16);
    for (const auto& h : candidates)
      if (auto m = find_table_assignment(h, table)) {
        used = m->assignment;
        break;
      }
  }
  Json result{{"realization", used ? realization : std::string("none")}};
  if (used) {
    auto report = verify_bracket_table(*used, table);
    Json assignment = Json::object();
    for (const auto& l : table.basis) assignment[l] = format_matrix(used->at(l));
    result["assignment"] = assignment;
    result["checks"] = verification_json(report);
    result["pass"] = report.pass();
  } else {
    result["pass"] = false;
  }
  r.result = result;
  return r;
}

Report search_report(const Catalog& catalog, const std::vector<SignatureSpec>& specs, const std::string& pool_name,
                     const std::vector<ExactMatrix>& pool, const SearchOptions& opts) {
  auto classes = specs.size() == 1 ? find_gamma_models(specs[0], pool, catalog.component_tables(), opts)
                                   : sweep_gamma_models(specs, pool, catalog.component_tables(), opts);
  Report r;
  Json sigs = Json::array();
  for (const auto& s : specs) sigs.push_back(s.str());
  r.input = {{"kind", "search"}, {"signatures", sigs}, {"pool", pool_name}, {"pool_size", pool.size()}};
  Json out = Json::array();
  for (const auto& c : classes)
    out.push_back({{"signatures", c.signatures},
                   {"tuples", c.tuples},
                   {"groups", c.groups},
                   {"order", c.group->order()},
                   {"invariant", opt(c.invariant)},
                   {"composition", c.composition},
                   {"catalog_matches", matches(catalog, *c.group)},
                   {"generators", matrices(c.generators)}});
  r.result = {{"classes", out}};
  return r;
}

Report extensions_report(const Catalog& catalog, const std::string& base, int square, const std::string& pool_name,
                         const std::vector<ExactMatrix>& pool, const SearchOptions& opts) {
  auto in = resolve_input(catalog, base, opts.cap);
  std::vector<ExactMatrix> gens;
  for (const auto& m : in.input["generators"]) gens.push_back(parse_matrix(m.get<std::string>()));
  auto classes = enumerate_extensions(gens, square, pool, opts);
  Report r;
  r.input = {{"kind", "extensions"}, {"base", in.input}, {"square", square}, {"pool", pool_name}, {"pool_size", pool.size()}};
  const ProfileContext ctx = catalog.context();
  Json out = Json::array();
  for (const auto& c : classes) {
    auto p = compute_profile(*c.group, ctx);
    Json blocks = Json::array();
    for (const auto& b : p.blocks) blocks.push_back(b.invariant);
    out.push_back({{"candidates", c.candidates},
                   {"groups", c.groups},
                   {"order", c.group->order()},
                   {"census", p.census ? Json(p.census->str()) : Json(nullptr)},
                   {"invariant", opt(p.invariant)},
                   {"block_invariants", blocks},
                   {"decomposition", p.decomposition},
                   {"catalog_matches", matches(catalog, *c.group)},
                   {"generators", matrices(c.generators)}});
  }
  r.result = {{"classes", out}};
  return r;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_markdown(const Json& doc) {
  std::ostringstream os;
  os << "# gammalab report\n";
  for (const auto& [k, v] : doc.items()) {
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) markdown(os, k, v, 2);
    else os << "\n## " << k << "\n\n" << cell(v) << "\n";
  }
  return os.str();
}

}  // namespace gammalab
