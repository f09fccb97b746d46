#include "gammalab/claims.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "gammalab/data.hpp"

namespace gammalab {

struct ClaimContext::Cache {
  std::once_flag sweep_once, extensions_once;
  std::vector<ModelClass> sweep;
  std::vector<Extension> extensions;
};

ClaimContext::ClaimContext(const Catalog& catalog, SearchOptions opts)
    : catalog_(catalog), opts_(opts), cache_(std::make_unique<Cache>()) {}

ClaimContext::~ClaimContext() = default;

const std::vector<ModelClass>& ClaimContext::sweep() const {
  std::call_once(cache_->sweep_once, [&] {
    cache_->sweep = sweep_gamma_models(all_signatures(4), doubled_pool(), catalog_.component_tables(), opts_);
  });
  return cache_->sweep;
}

const std::vector<ClaimContext::Extension>& ClaimContext::extensions() const {
  std::call_once(cache_->extensions_once, [&] {
    const auto pool = extension_pool();
    for (const auto& name : catalog_.names()) {
      if (catalog_.group(name)->order() != 32) continue;
      for (int square : {1, -1})
        for (auto& e : enumerate_extensions(catalog_.generators(name), square, pool, opts_))
          cache_->extensions.push_back({name, square, std::move(e)});
    }
  });
  return cache_->extensions;
}

namespace {

std::string braces(std::vector<std::string> v, bool sort = false) {
  if (sort) std::sort(v.begin(), v.end());
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k];
  return out + "}";
}

std::string num(std::size_t n) { return std::to_string(n); }
std::string opt_num(const std::optional<int>& v) { return v ? std::to_string(*v) : "undefined"; }

std::string outcome(const VerificationReport& r) {
  if (r.pass()) return "pass";
  for (const auto& c : r.checks)
    if (!c.pass) return "fail: " + c.name + " (" + c.lhs + " vs " + c.rhs + ")";
  return "fail";
}

std::string outcome(const std::vector<std::string>& failures) {
  return failures.empty() ? "all" : "fail: " + braces(failures);
}

const MatrixGroup& grp(const ClaimContext& c, const std::string& name) { return *c.catalog().group(name); }
const GroupProfile& prof(const ClaimContext& c, const std::string& name) { return c.catalog().profile(name); }

std::string table_outcome(const ClaimContext& c, const Assignment& a, const std::string& table) {
  return outcome(verify_bracket_table(a, load_table(c.catalog().data_dir(), table)));
}

std::string relation_outcome(const ClaimContext& c, const Assignment& a, const std::string& rel) {
  return outcome(verify_relations(a, load_relations(c.catalog().data_dir(), rel)));
}

Assignment flipped_boosts(const ClaimContext& c) {
  const GaussianRational i(0, 1);
  return substitute(c.catalog().assignment("pauli"), {{"b1''", "b1", i}, {"b2''", "b2", i}, {"b3''", "b3", i}});
}

Assignment flipped_primed_boosts(const ClaimContext& c) {
  const GaussianRational i(0, 1);
  return substitute(c.catalog().assignment("f_gamma"), {{"b1*", "b1'", i}, {"b2*", "b2'", i}, {"b3*", "b3'", i}});
}

std::string eigenvalues(const WeightReport& w) {
  std::vector<std::string> out;
  for (const auto& e : w.eigenvalues)
    for (std::size_t k = 0; k < e.multiplicity; ++k) out.push_back(e.value.str());
  return braces(out, true);
}

// Diagonal blocks of a block-diagonal generator set; throws when off-block
// entries are nonzero.
std::vector<std::vector<ExactMatrix>> diagonal_blocks(const std::vector<ExactMatrix>& gens, std::size_t size) {
  const std::size_t dim = gens.front().dim();
  std::vector<std::vector<ExactMatrix>> out(dim / size);
  for (const auto& m : gens)
    for (std::size_t b = 0; b < dim / size; ++b) {
      std::vector<GaussianRational> e;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          const bool inside = i / size == b && j / size == b;
          if (inside) e.push_back(m(i, j));
          else if (i / size == b && !m(i, j).is_zero()) throw std::domain_error("generators are not block diagonal");
        }
      out[b].emplace_back(size, std::move(e));
    }
  return out;
}

bool any_invertible(const std::vector<ExactMatrix>& forms) {
  return std::any_of(forms.begin(), forms.end(), [](const ExactMatrix& b) { return is_invertible(b); });
}

std::string block_forms(const ClaimContext& c, const std::string& name) {
  std::vector<std::string> kinds;
  for (const auto& block : diagonal_blocks(c.catalog().generators(name), 4)) {
    const bool sym = any_invertible(invariant_forms(block, 1));
    const bool anti = any_invertible(invariant_forms(block, -1));
    kinds.push_back(sym && anti ? "both" : sym ? "symmetric" : anti ? "antisymmetric" : "none");
  }
  return braces(kinds);
}

std::string product_of_generators(const ClaimContext& c, const std::string& name) {
  auto gens = c.catalog().generators(name);
  ExactMatrix six = gens.front();
  for (std::size_t k = 1; k < gens.size(); ++k) six = six * gens[k];
  const bool central = std::all_of(gens.begin(), gens.end(), [&](const ExactMatrix& x) { return six * x == x * six; });
  GaussianRational s;
  const bool scalar = (six * six).is_scalar(&s);
  return std::string(central ? "central" : "not central") + ", square " + (scalar ? s.str() : "not scalar");
}

FormKind expected_kind(int invariant) {
  return invariant == 1 ? FormKind::symmetric : invariant == -1 ? FormKind::antisymmetric : FormKind::none;
}

std::string form_of(const ClaimContext& c, const std::string& name) {
  const auto& g = grp(c, name);
  if (irreducibility_norm(g) == 1) return to_string(invariant_bilinear_form(g).kind);
  std::set<std::string> kinds;
  for (const auto& b : prof(c, name).blocks) kinds.insert(b.form ? to_string(*b.form) : "undetermined");
  return kinds.size() == 1 ? *kinds.begin() : braces({kinds.begin(), kinds.end()});
}

std::vector<std::string> order32_entries(const ClaimContext& c) {
  std::vector<std::string> out;
  for (const auto& n : c.catalog().names())
    if (grp(c, n).order() == 32) out.push_back(n);
  return out;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::string description, std::string anchor, std::string expected,
                 std::function<std::string(const ClaimContext&)> f) {
    r.push_back({std::move(id), std::move(description), std::move(anchor), std::move(expected), std::move(f)});
  };
  const std::string pauli_anchor = "Pauli group generated by the three sigma matrices";

  add("pauli.order", "order of the group generated by the Pauli matrices", pauli_anchor, "16",
      [](const ClaimContext& c) { return num(grp(c, "pauli").order()); });
  add("pauli.classes", "number of conjugacy classes", pauli_anchor, "10",
      [](const ClaimContext& c) { return num(conjugacy_classes(grp(c, "pauli")).size()); });
  add("pauli.center", "order of the center", pauli_anchor, "4",
      [](const ClaimContext& c) { return num(center(grp(c, "pauli")).order()); });
  add("pauli.center_scalars", "the center consists of the scalars +-1, +-i", pauli_anchor, "{-1,-i,1,i}",
      [](const ClaimContext& c) {
        const auto& g = grp(c, "pauli");
        std::vector<std::string> out;
        for (auto k : center(g).indices()) {
          GaussianRational s;
          out.push_back(g.element(k).is_scalar(&s) ? s.str() : "non-scalar");
        }
        return braces(out, true);
      });
  add("pauli.census", "irreducible representation dimensions", pauli_anchor, "8x1+2x2",
      [](const ClaimContext& c) { return irrep_census(grp(c, "pauli")).str(); });
  add("pauli.rank", "minimal number of generators", pauli_anchor, "3",
      [](const ClaimContext& c) { return num(minimal_generator_count(grp(c, "pauli"))); });

  const std::string quaternion_anchor = "order-8 subgroups generated by rotation elements";
  add("quaternion.Q2.order", "order of <a1, a2>", quaternion_anchor, "8",
      [](const ClaimContext& c) { return num(grp(c, "Q2").order()); });
  add("quaternion.Q2.relations", "quaternion relations on a1, a2, a3", quaternion_anchor, "pass",
      [](const ClaimContext& c) { return relation_outcome(c, c.catalog().assignment("Q2"), "quaternion"); });
  add("quaternion.q2.order", "order of <a1, a2'>", quaternion_anchor, "8",
      [](const ClaimContext& c) { return num(grp(c, "q2").order()); });
  add("quaternion.q2.generator_orders", "element orders of a1 and a2'", quaternion_anchor, "4,2",
      [](const ClaimContext& c) {
        const auto& g = grp(c, "q2");
        auto a = c.catalog().assignment("q2");
        return num(element_order(g, *g.find(a.at("a1")))) + "," + num(element_order(g, *g.find(a.at("a2'"))));
      });
  add("quaternion.q2.table", "bracket table of the second-kind generators", quaternion_anchor, "pass",
      [](const ClaimContext& c) { return table_outcome(c, c.catalog().assignment("q2"), "q2"); });
  add("quaternion.non_isomorphic", "the two order-8 groups are not isomorphic (full backtracking)",
      quaternion_anchor, "non-isomorphic", [](const ClaimContext& c) {
        return find_isomorphism(grp(c, "Q2"), grp(c, "q2")) ? "isomorphic" : "non-isomorphic";
      });

  const std::string bracket_anchor = "commutator tables of the connected components";
  add("brackets.d", "proper component table on the Pauli realization", bracket_anchor, "pass",
      [](const ClaimContext& c) { return table_outcome(c, c.catalog().assignment("pauli"), "d"); });
  add("brackets.f", "P-conjugate table on the explicit primed realization", bracket_anchor, "pass",
      [](const ClaimContext& c) { return table_outcome(c, c.catalog().assignment("f_gamma"), "f"); });
  add("brackets.b", "T-conjugate table on b'' = i b", bracket_anchor, "pass",
      [](const ClaimContext& c) { return table_outcome(c, flipped_boosts(c), "b"); });
  add("brackets.c", "TP-conjugate table on b* = i b'", bracket_anchor, "pass",
      [](const ClaimContext& c) { return table_outcome(c, flipped_primed_boosts(c), "c"); });
  add("brackets.substitution", "b -> i b turns a passing proper assignment into a passing T-conjugate one",
      "boost substitution", "pass", [](const ClaimContext& c) {
        const auto a = c.catalog().assignment("pauli");
        if (!verify_bracket_table(a, load_table(c.catalog().data_dir(), "d")).pass()) return std::string("d fails");
        const auto b = flipped_boosts(c);
        auto out = relation_outcome(c, b, "boost_substitution");
        return out == "pass" ? table_outcome(c, b, "b") : out;
      });
  add("brackets.products", "product identities among rotations, boosts and the central element",
      "identities (1), (2), (5) of the Pauli realization", "pass", [](const ClaimContext& c) {
        const auto a = c.catalog().assignment("pauli");
        for (const char* rel : {"center_products", "phase_products", "boost_product"})
          if (auto o = relation_outcome(c, a, rel); o != "pass") return std::string(rel) + " " + o;
        return std::string("pass");
      });

  const std::string weight_anchor = "eigenvalues of (i/2) a";
  add("weights.a1.eigenvalues", "eigenvalues of (i/2) a1", weight_anchor, "{-1/2,1/2}",
      [](const ClaimContext& c) { return eigenvalues(spin_weight(c.catalog().assignment("pauli").at("a1"))); });
  add("weights.a1.l0", "weight number of a1", weight_anchor, "1/2", [](const ClaimContext& c) {
    auto w = spin_weight(c.catalog().assignment("pauli").at("a1"));
    return w.l0 ? w.l0->get_str() : std::string("undefined");
  });
  add("weights.f_gamma.a2", "eigenvalues of (i/2) a2' in the primed realization", weight_anchor, "pure-imaginary",
      [](const ClaimContext& c) {
        return to_string(spin_weight(c.catalog().assignment("f_gamma").at("a2'")).classification);
      });
  add("weights.f_gamma.a3", "eigenvalues of (i/2) a3' in the primed realization", weight_anchor, "pure-imaginary",
      [](const ClaimContext& c) {
        return to_string(spin_weight(c.catalog().assignment("f_gamma").at("a3'")).classification);
      });

  const std::string dirac_anchor = "group of four anticommuting gamma matrices with unit squares";
  add("dirac.order", "order of the Dirac group", dirac_anchor, "32",
      [](const ClaimContext& c) { return num(grp(c, "D_II").order()); });
  add("dirac.index2_count", "number of order-16 subgroups (derived count)", dirac_anchor, "15",
      [](const ClaimContext& c) { return num(prof(c, "D_II").index2_count); });
  add("dirac.index2_classes", "isomorphism classes of order-16 subgroups", dirac_anchor, "2",
      [](const ClaimContext& c) { return num(prof(c, "D_II").index2.size()); });
  add("dirac.index2_labels", "component label of each order-16 class", dirac_anchor, "{d,b}",
      [](const ClaimContext& c) {
        std::vector<std::string> out;
        for (const auto& s : prof(c, "D_II").index2) out.push_back(component_label(s.components));
        return braces(out);
      });
  add("dirac.pauli_f_isomorphism", "isomorphism certificate between the Pauli group and the P-conjugate group",
      "d and f realize isomorphic groups", "verified", [](const ClaimContext& c) {
        const auto& g = grp(c, "pauli");
        const auto& h = grp(c, "f_gamma");
        auto cert = is_isomorphic(g, h);
        if (!cert) return std::string("not isomorphic");
        return verify_certificate(g, h, *cert) ? std::string("verified") : std::string("certificate rejected");
      });

  const std::string invariant_anchor = "structural invariants of the five order-32 groups";
  struct Five {
    const char* name;
    const char* value;
    const char* form;
  };
  for (const auto& [name, value, form] : {Five{"D_I", "1", "symmetric"}, Five{"D_II", "-1", "antisymmetric"},
                                          Five{"D_III", "0", "none"}, Five{"D_IV", "-1", "antisymmetric"},
                                          Five{"D_V", "1", "symmetric"}}) {
    const std::string n = name;
    add("invariants." + n, "structural invariant of " + n, invariant_anchor, value,
        [n](const ClaimContext& c) { return opt_num(prof(c, n).invariant); });
    add("invariants." + n + ".form", "invariant bilinear form kind of " + n, invariant_anchor, form,
        [n](const ClaimContext& c) { return form_of(c, n); });
  }

  const std::string search_anchor = "exhaustiveness of the five order-32 structures";
  add("search.classes", "classes found by the signature sweep", search_anchor, "5",
      [](const ClaimContext& c) { return num(c.sweep().size()); });
  add("search.identified", "catalog entry and invariant of each sweep class", search_anchor,
      "{D_I:1,D_II:-1,D_III:0,D_IV:-1,D_V:1}", [](const ClaimContext& c) {
        std::vector<std::string> out;
        for (const auto& m : c.sweep()) {
          auto names = c.catalog().identify(*m.group);
          out.push_back((names.empty() ? "unidentified" : braces(names).substr(1, braces(names).size() - 2)) + ":" +
                        opt_num(m.invariant));
        }
        return braces(out, true);
      });

  const std::string delta_anchor = "order-64 extensions by a fifth anticommuting generator";
  struct Delta {
    const char* name;
    const char* id;
    const char* decomposition;
    const char* invariant;
    const char* square;
    const char* forms;
  };
  for (const auto& d : {Delta{"Delta1", "delta1", "{D_II,D_III,D_IV}", "-1", "1", "{antisymmetric,antisymmetric}"},
                        Delta{"Delta2", "delta2", "{D_I,D_III,D_V}", "1", "1", "{symmetric,symmetric}"},
                        Delta{"Delta3", "delta3", "{D_I,D_II,D_III}", "0", "-1", "{none,none}"}}) {
    const std::string n = d.name, id = std::string("delta.") + d.id;
    add(id + ".order", "order of " + n, delta_anchor, "64", [n](const ClaimContext& c) { return num(grp(c, n).order()); });
    add(id + ".census", "irreducible representation dimensions of " + n, delta_anchor, "32x1+2x4",
        [n](const ClaimContext& c) { return irrep_census(grp(c, n)).str(); });
    add(id + ".order32_classes", "isomorphism classes of order-32 subgroups", delta_anchor, "3",
        [n](const ClaimContext& c) { return num(prof(c, n).index2.size()); });
    add(id + ".order32_subgroups", "number of order-32 subgroups (derived count)", delta_anchor, "31",
        [n](const ClaimContext& c) { return num(prof(c, n).index2_count); });
    add(id + ".decomposition", "order-32 subgroup classes identified against the catalog", delta_anchor,
        d.decomposition, [n](const ClaimContext& c) { return braces(prof(c, n).decomposition); });
    add(id + ".invariant", "structural invariant, common to both 4-dimensional blocks", delta_anchor, d.invariant,
        [n](const ClaimContext& c) { return opt_num(prof(c, n).invariant); });
    add(id + ".gamma6", "product of the five generators", delta_anchor, std::string("central, square ") + d.square,
        [n](const ClaimContext& c) { return product_of_generators(c, n); });
    add(id + ".block_forms", "nonsingular invariant bilinear forms on each 4-dimensional block", delta_anchor, d.forms,
        [n](const ClaimContext& c) { return block_forms(c, n); });
  }
  add("delta.compositions_distinct", "the three decompositions differ pairwise", delta_anchor, "3",
      [](const ClaimContext& c) {
        std::set<std::vector<std::string>> s;
        for (const char* n : {"Delta1", "Delta2", "Delta3"}) s.insert(prof(c, n).decomposition);
        return num(s.size());
      });

  const std::string ext_anchor = "all extensions of the five order-32 groups";
  add("extensions.classes", "isomorphism classes over every base and both squares", ext_anchor, "3",
      [](const ClaimContext& c) {
        std::vector<const MatrixGroup*> reps;
        for (const auto& e : c.extensions()) {
          const MatrixGroup& g = *e.result.group;
          if (std::none_of(reps.begin(), reps.end(), [&](const MatrixGroup* h) { return is_isomorphic(g, *h); }))
            reps.push_back(&g);
        }
        return num(reps.size());
      });
  add("extensions.identified", "catalog entries matched by the extensions", ext_anchor, "{Delta1,Delta2,Delta3}",
      [](const ClaimContext& c) {
        std::set<std::string> s;
        for (const auto& e : c.extensions()) {
          auto names = c.catalog().identify(*e.result.group);
          s.insert(names.empty() ? "unidentified" : braces(names).substr(1, braces(names).size() - 2));
        }
        return braces({s.begin(), s.end()});
      });
  add("extensions.soundness",
      "base relations and fifth generator relations hold; the five-fold product is central when all generators "
      "anticommute", ext_anchor,
      "all", [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& e : c.extensions()) {
          const auto& g = e.result.generators;
          const std::string tag = e.base + (e.square > 0 ? "+" : "-");
          const CatalogEntry& base = c.catalog().entry(e.base);
          Assignment a;
          for (std::size_t k = 0; k < 4; ++k) a["g" + std::to_string(k + 1)] = g[k];
          a["g5"] = g[4];
          std::vector<RelationSet> sets;
          for (const auto& rel : base.relation_sets) sets.push_back(load_relations(c.catalog().data_dir(), rel));
          if (base.signature) sets.push_back(signature_relations(tag, base.labels, parse_signature(*base.signature)));
          RelationSet fifth{tag + " fifth", "", {"g1", "g2", "g3", "g4", "g5"}, {}, {}};
          fifth.relations.push_back(parse_relation(e.square > 0 ? "g5^2 = 1" : "g5^2 = -1"));
          for (int k = 1; k <= 4; ++k) {
            const std::string x = "g" + std::to_string(k);
            fifth.relations.push_back(parse_relation(x + " g5 = -g5 " + x));
          }
          sets.push_back(fifth);
          for (const auto& rel : sets)
            if (!verify_relations(a, rel).pass()) failures.push_back(tag + " " + rel.name);
          // with a commuting fourth generator the five-fold product is not central
          if (base.signature && parse_signature(*base.signature).last_commutes) continue;
          ExactMatrix six = g[0] * g[1] * g[2] * g[3] * g[4];
          GaussianRational s;
          const bool central = std::all_of(g.begin(), g.end(), [&](const ExactMatrix& x) { return six * x == x * six; });
          if (!central || !(six * six).is_scalar(&s) || !(s == GaussianRational(1) || s == GaussianRational(-1)))
            failures.push_back(tag + " product");
        }
        return outcome(failures);
      });

  const std::string property_anchor = "structural identities over every catalog group";
  add("properties.group_axioms", "identity first, inverses, Latin square and associativity", property_anchor, "all",
      [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& n : c.catalog().names()) {
          const auto& g = grp(c, n);
          const auto size = static_cast<Index>(g.order());
          bool ok = g.element(0).is_identity();
          for (Index a = 0; a < size && ok; ++a) {
            std::vector<bool> row(size), col(size);
            for (Index b = 0; b < size; ++b) {
              row[g.product(a, b)] = true;
              col[g.product(b, a)] = true;
            }
            ok = std::all_of(row.begin(), row.end(), [](bool x) { return x; }) &&
                 std::all_of(col.begin(), col.end(), [](bool x) { return x; }) && g.product(a, g.inverse(a)) == 0 &&
                 g.product(0, a) == a;
            for (Index b = 0; b < size && ok; ++b)
              for (Index d = 0; d < size && ok; ++d)
                ok = g.product(g.product(a, b), d) == g.product(a, g.product(b, d));
          }
          if (!ok) failures.push_back(n);
        }
        return outcome(failures);
      });
  add("properties.class_equation", "class sizes divide the order, sum to it, and singletons form the center",
      property_anchor, "all", [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& n : c.catalog().names()) {
          const auto& g = grp(c, n);
          std::size_t total = 0, singletons = 0;
          bool ok = true;
          for (const auto& cls : conjugacy_classes(g)) {
            total += cls.size();
            singletons += cls.size() == 1;
            ok = ok && g.order() % cls.size() == 0;
          }
          if (!ok || total != g.order() || singletons != center(g).order()) failures.push_back(n);
        }
        return outcome(failures);
      });
  add("properties.census", "squares of irreducible dimensions sum to the order; one irreducible per class",
      property_anchor, "all", [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& n : c.catalog().names()) {
          const auto& g = grp(c, n);
          auto census = irrep_census(g);
          std::size_t sum = 0;
          for (auto d : census.dims) sum += d * d;
          if (sum != g.order() || census.dims.size() != conjugacy_classes(g).size()) failures.push_back(n);
        }
        return outcome(failures);
      });
  add("properties.indicator_form", "indicator and invariant bilinear form kind agree on every block",
      property_anchor, "all", [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& n : c.catalog().names()) {
          const auto& g = grp(c, n);
          bool ok = true;
          if (irreducibility_norm(g) == 1) {
            auto form = invariant_bilinear_form(g);
            ok = form.kind == expected_kind(structural_invariant(g).value) &&
                 (form.kind == FormKind::none || (form.witness && is_invertible(*form.witness)));
          }
          auto blocks = rep_blocks(g);
          auto traced = trace_block_invariants(g);
          ok = ok && blocks.size() == traced.blocks.size();
          for (std::size_t k = 0; ok && k < blocks.size(); ++k) {
            ok = blocks[k].invariant == traced.blocks[k].invariant;
            if (blocks[k].form) ok = ok && *blocks[k].form == expected_kind(blocks[k].invariant);
          }
          if (!ok) failures.push_back(n);
        }
        return outcome(failures);
      });
  add("properties.catalog_validates", "every catalog entry passes its relations, tables and expected profile",
      property_anchor, "all", [](const ClaimContext& c) {
        std::vector<std::string> failures;
        for (const auto& n : c.catalog().names())
          if (!c.catalog().validate(n).pass()) failures.push_back(n);
        return outcome(failures);
      });
  add("properties.order32_distinct", "the order-32 entries differ in isomorphism type, invariant or composition",
      property_anchor, "all", [](const ClaimContext& c) {
        auto five = order32_entries(c);
        std::vector<std::string> failures;
        for (std::size_t a = 0; a < five.size(); ++a)
          for (std::size_t b = a + 1; b < five.size(); ++b) {
            const auto& pa = prof(c, five[a]);
            const auto& pb = prof(c, five[b]);
            if (pa.invariant == pb.invariant && pa.components == pb.components &&
                is_isomorphic(grp(c, five[a]), grp(c, five[b])))
              failures.push_back(five[a] + "=" + five[b]);
          }
        return outcome(failures);
      });

  std::sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> r = build_registry();
  return r;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

std::vector<ClaimResult> run_claims(const ClaimContext& ctx, const std::string& filter, unsigned jobs) {
  std::vector<const Claim*> selected;
  for (const auto& c : claim_registry())
    if (glob_match(filter, c.id)) selected.push_back(&c);
  if (selected.empty()) throw UnknownClaim("no claim matches '" + filter + "'");

  std::vector<ClaimResult> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < selected.size();) {
      const Claim& c = *selected[k];
      ClaimResult& r = out[k];
      r.id = c.id;
      r.description = c.description;
      r.anchor = c.anchor;
      r.expected = c.expected;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        r.computed = c.compute(ctx);
      } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
      }
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      r.pass = r.computed == r.expected;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace gammalab
