#include "gammalab/catalog.hpp"

#include <json.hpp>

#include "gammalab/data.hpp"
#include "gammalab/search.hpp"

namespace gammalab {

using json = nlohmann::ordered_json;

namespace {

template <class T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

ExactMatrix matrix_of(const json& m) { return parse_matrix(m.is_string() ? m.get<std::string>() : m.dump()); }

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    if constexpr (std::is_same_v<T, std::string>)
      out += v[k];
    else
      out += std::to_string(v[k]);
  }
  return out + "}";
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

CatalogEntry load_catalog_entry(const std::filesystem::path& file) {
  json j;
  try {
    j = json::parse(read_text(file));
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  CatalogEntry e;
  try {
    e.name = j.at("name").get<std::string>();
    e.aliases = j.value("aliases", std::vector<std::string>{});
    e.anchor = j.value("anchor", "");
    e.dimension = j.at("dimension").get<std::size_t>();
    e.labels = j.value("labels", std::vector<std::string>{});
    if (j.contains("generators"))
      for (const auto& m : j["generators"]) e.generators.push_back(matrix_of(m));
    if (j.contains("extract")) e.extract = ExtractRecipe{j["extract"].at("from"), j["extract"].at("component")};
    if (j.contains("named"))
      for (const auto& [label, m] : j["named"].items()) e.named.emplace(label, matrix_of(m));
    e.relation_sets = j.value("relations", std::vector<std::string>{});
    e.signature = opt<std::string>(j, "signature");
    e.tables = j.value("tables", std::vector<std::string>{});
    e.notes = j.value("notes", std::vector<std::string>{});
    const json x = j.value("expected", json::object());
    auto& p = e.expected;
    p.order = opt<std::size_t>(x, "order");
    p.classes = opt<std::size_t>(x, "classes");
    p.center = opt<std::size_t>(x, "center");
    p.abelian_invariants = opt<std::vector<long>>(x, "abelian_invariants");
    p.rank = opt<int>(x, "rank");
    p.census = opt<std::string>(x, "census");
    p.invariant = opt<int>(x, "invariant");
    p.block_invariants = opt<std::vector<int>>(x, "block_invariants");
    p.index2_count = opt<std::size_t>(x, "index2_count");
    p.index2_labels = opt<std::vector<std::string>>(x, "index2_labels");
    p.components = opt<std::vector<std::string>>(x, "components");
    p.decomposition = opt<std::vector<std::string>>(x, "decomposition");
  } catch (const json::exception& ex) {
    throw std::runtime_error(file.string() + ": " + ex.what());
  }
  if (e.generators.empty() == !e.extract)
    throw std::runtime_error(file.string() + ": exactly one of generators and extract is required");
  if (!e.generators.empty() && e.labels.size() != e.generators.size())
    throw std::runtime_error(file.string() + ": one label per generator is required");
  for (const auto& m : e.generators)
    if (m.dim() != e.dimension) throw DimensionError(file.string() + ": generator size differs from dimension");
  return e;
}

Catalog::Catalog(std::filesystem::path data_dir) : dir_(std::move(data_dir)) {
  const auto order = json::parse(read_text(dir_ / "catalog" / "index.json")).get<std::vector<std::string>>();
  for (const auto& name : order) {
    entries_.push_back(load_catalog_entry(dir_ / "catalog" / (name + ".json")));
    const auto& e = entries_.back();
    if (e.name != name) throw std::runtime_error("catalog file " + name + ".json names entry " + e.name);
    for (const auto& key : [&] {
           auto keys = e.aliases;
           keys.push_back(e.name);
           return keys;
         }())
      if (!index_.emplace(key, entries_.size() - 1).second) throw std::runtime_error("duplicate catalog name " + key);
    built_.push_back(std::make_unique<Built>());
  }
  tables_ = load_component_tables(dir_);
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

std::size_t Catalog::position(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownEntry("unknown catalog entry '" + name + "'");
  return it->second;
}

bool Catalog::contains(const std::string& name) const { return index_.count(name) > 0; }

const CatalogEntry& Catalog::entry(const std::string& name) const { return entries_[position(name)]; }

Catalog::Built& Catalog::built(const std::string& name) const {
  const std::size_t k = position(name);
  Built& b = *built_[k];
  std::call_once(b.group_once, [&] {
    const CatalogEntry& e = entries_[k];
    if (e.extract) {
      auto parent = group(e.extract->from);
      const BracketTable* table = nullptr;
      for (const auto& t : tables_)
        if (t.name == e.extract->component) table = &t;
      BracketTable loaded;
      if (!table) {
        loaded = load_table(dir_, e.extract->component);
        table = &loaded;
      }
      for (const auto& h : subgroups_of_order(*parent, 16))
        if (auto m = find_table_assignment(h, *table)) {
          for (const auto& label : table->basis) b.generators.push_back(m->assignment.at(label));
          break;
        }
      if (b.generators.empty())
        throw std::runtime_error(e.name + ": no order-16 subgroup of " + e.extract->from + " admits table " +
                                 e.extract->component);
    } else {
      b.generators = e.generators;
    }
    b.group = std::make_shared<const MatrixGroup>(MatrixGroup::generate(b.generators));
  });
  return b;
}

std::vector<ExactMatrix> Catalog::generators(const std::string& name) const { return built(name).generators; }

std::shared_ptr<const MatrixGroup> Catalog::group(const std::string& name) const { return built(name).group; }

Assignment Catalog::assignment(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  const auto& gens = built(name).generators;
  std::vector<std::string> labels = e.labels;
  if (e.extract)
    for (const auto& t : tables_)
      if (t.name == e.extract->component) labels = t.basis;
  Assignment a(e.named.begin(), e.named.end());
  for (std::size_t k = 0; k < gens.size() && k < labels.size(); ++k) a[labels[k]] = gens[k];
  return a;
}

ProfileContext Catalog::context() const {
  ProfileContext ctx{tables_, {}};
  for (const char* name : {"D_I", "D_II", "D_III", "D_IV", "D_V"}) {
    if (!contains(name)) continue;
    const GroupProfile& p = profile(name);
    ctx.order32_references.push_back({name, group(name).get(), p.invariant, p.components});
  }
  return ctx;
}

const GroupProfile& Catalog::profile(const std::string& name) const {
  Built& b = built(name);
  std::call_once(b.profile_once, [&] {
    ProfileContext ctx = b.group->order() == 64 ? context() : ProfileContext{tables_, {}};
    b.profile = compute_profile(*b.group, ctx);
  });
  return b.profile;
}

VerificationReport Catalog::validate(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  VerificationReport r;
  r.subject = e.name;
  const Assignment a = assignment(name);
  auto add = [&](const std::string& check, bool pass, std::string lhs, std::string rhs) {
    r.checks.push_back({check, pass, std::move(lhs), std::move(rhs)});
  };
  auto merge = [&](const std::string& prefix, const VerificationReport& sub) {
    for (auto c : sub.checks) {
      c.name = prefix + c.name;
      r.checks.push_back(std::move(c));
    }
  };
  for (const auto& rel : e.relation_sets) merge("relations." + rel + ": ", verify_relations(a, load_relations(dir_, rel)));
  if (e.signature) merge("signature " + *e.signature + ": ", verify_relations(a, signature_relations(e.name, e.labels, parse_signature(*e.signature))));
  for (const auto& t : e.tables) merge("table." + t + ": ", verify_bracket_table(a, load_table(dir_, t)));

  const GroupProfile& p = profile(name);
  const ExpectedProfile& x = e.expected;
  auto num = [&](const char* field, const std::optional<std::size_t>& want, std::size_t got) {
    if (want) add(std::string("profile.") + field, *want == got, std::to_string(got), std::to_string(*want));
  };
  num("order", x.order, p.order);
  num("classes", x.classes, p.classes);
  num("center", x.center, p.center);
  num("index2_count", x.index2_count, p.index2_count);
  if (x.abelian_invariants)
    add("profile.abelian_invariants", *x.abelian_invariants == p.abelian_invariants, join(p.abelian_invariants),
        join(*x.abelian_invariants));
  if (x.rank) add("profile.rank", p.rank == x.rank, show(p.rank), std::to_string(*x.rank));
  if (x.census) {
    const std::string got = p.census ? p.census->str() : "ambiguous";
    add("profile.census", got == *x.census, got, *x.census);
  }
  if (x.invariant) add("profile.invariant", p.invariant == x.invariant, show(p.invariant), std::to_string(*x.invariant));
  if (x.block_invariants) {
    std::vector<int> got;
    for (const auto& b : p.blocks) got.push_back(b.invariant);
    add("profile.block_invariants", got == *x.block_invariants, join(got), join(*x.block_invariants));
  }
  if (x.index2_labels) {
    std::vector<std::string> got;
    for (const auto& c : p.index2) got.push_back(component_label(c.components));
    add("profile.index2_labels", got == *x.index2_labels, join(got), join(*x.index2_labels));
  }
  if (x.components) add("profile.components", p.components == *x.components, join(p.components), join(*x.components));
  if (x.decomposition)
    add("profile.decomposition", p.decomposition == *x.decomposition, join(p.decomposition), join(*x.decomposition));
  return r;
}

std::vector<std::string> Catalog::identify(const MatrixGroup& g) const {
  std::vector<std::string> out;
  std::optional<std::optional<int>> invariant;
  std::optional<std::vector<std::string>> composition;
  for (const auto& e : entries_) {
    auto h = group(e.name);
    if (h->order() != g.order()) continue;
    if (!invariant) invariant = trace_block_invariants(g).value;
    if (profile(e.name).invariant != *invariant) continue;
    if (g.order() == 32) {
      if (!composition) composition = component_composition(g, tables_);
      if (profile(e.name).components != *composition) continue;
    }
    if (is_isomorphic(g, *h)) out.push_back(e.name);
  }
  return out;
}

const Catalog& default_catalog() {
  static const Catalog c(default_data_dir());
  return c;
}

}  // namespace gammalab
