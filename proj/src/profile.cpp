#include "gammalab/profile.hpp"

#include <algorithm>

namespace gammalab {

std::vector<std::string> component_composition(const MatrixGroup& g, const std::vector<BracketTable>& tables) {
  std::vector<bool> found(tables.size(), false);
  auto mark = [&](const Subgroup& h) {
    for (std::size_t k = 0; k < tables.size(); ++k)
      if (!found[k] && find_table_assignment(h, tables[k])) found[k] = true;
  };
  if (g.order() == 16) {
    mark(whole(g));
  } else if (g.order() % 16 == 0) {
    for (const auto& h : subgroups_of_order(g, 16)) mark(h);
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < tables.size(); ++k)
    if (found[k]) out.push_back(tables[k].name);
  return out;
}

std::string component_label(const std::vector<std::string>& components) {
  return components.empty() ? "unclassified" : components.front();
}

std::vector<SubgroupClass> subgroup_classes(const MatrixGroup& g, std::size_t n,
                                            const std::vector<ReferenceGroup>& refs,
                                            const std::vector<BracketTable>& tables) {
  struct Rep {
    MatrixGroup group;
    GroupFingerprint fp;
  };
  std::vector<Rep> reps;
  std::vector<SubgroupClass> out;
  for (const auto& h : subgroups_of_order(g, n)) {
    MatrixGroup hg = h.as_group();
    GroupFingerprint fp = fingerprint(hg);
    std::size_t k = 0;
    for (; k < reps.size(); ++k)
      if (reps[k].fp == fp && find_isomorphism(reps[k].group, hg)) break;
    auto names = n == 16 && !tables.empty() ? classify_component(h, tables) : std::vector<std::string>{};
    if (k == reps.size()) {
      reps.push_back({std::move(hg), fp});
      out.push_back({h.indices(), 0, std::nullopt, names, true, std::nullopt});
    } else if (names != out[k].components) {
      out[k].uniform = false;
      for (auto& name : names)
        if (std::find(out[k].components.begin(), out[k].components.end(), name) == out[k].components.end())
          out[k].components.push_back(name);
    }
    ++out[k].count;
  }
  for (std::size_t k = 0; k < reps.size(); ++k) {
    try {
      out[k].invariant = trace_block_invariants(reps[k].group).value;
    } catch (const std::domain_error&) {
    }
    for (const auto& r : refs) {
      if (r.group->order() != n) continue;
      if (r.invariant && r.invariant != out[k].invariant) continue;
      if (!is_isomorphic(*r.group, reps[k].group)) continue;
      if (r.composition && *r.composition != component_composition(reps[k].group, tables)) continue;
      out[k].identified = r.name;
      break;
    }
  }
  return out;
}

GroupProfile compute_profile(const MatrixGroup& g, const ProfileContext& ctx) {
  GroupProfile p;
  p.order = g.order();
  p.classes = conjugacy_classes(g).size();
  p.center = center(g).order();
  p.abelian_invariants = abelianization_invariants(g);
  if (is_two_group(g)) p.rank = minimal_generator_count(g);
  try {
    p.census = irrep_census(g);
  } catch (const AmbiguousCensus&) {
  }
  try {
    auto inv = invariant_profile(g);
    p.blocks = inv.blocks;
    p.invariant = inv.value;
  } catch (const std::domain_error&) {
  }
  if (g.order() % 2 == 0 && g.order() > 1) {
    const bool big = g.order() == 64;
    p.index2 = subgroup_classes(g, g.order() / 2, big ? ctx.order32_references : std::vector<ReferenceGroup>{},
                                g.order() == 32 || big ? ctx.component_tables : std::vector<BracketTable>{});
    for (const auto& c : p.index2) p.index2_count += c.count;
    if (big) {
      for (const auto& r : ctx.order32_references)
        for (const auto& c : p.index2)
          if (c.identified == r.name) p.decomposition.push_back(r.name);
      for (const auto& c : p.index2)
        if (!c.identified) p.decomposition.push_back("unidentified");
    }
  }
  if (g.order() == 16 || g.order() == 32) p.components = component_composition(g, ctx.component_tables);
  return p;
}

}  // namespace gammalab
