#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gammalab/exact.hpp"
#include "gammalab/group.hpp"

namespace gammalab {

/// xy - yx; throws DimensionError on mismatched sizes.
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

using Assignment = std::map<std::string, ExactMatrix>;

class UnassignedLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [x, y] = coeff * z; coeff 0 means the bracket vanishes and z is empty.
struct BracketEntry {
  std::string x, y;
  long coeff = 0;
  std::string z;

  std::string str() const;
};

/// Parses "[x,y] = 2*z", "[x,y]=-z" or "[x,y] = 0".
BracketEntry parse_bracket_entry(std::string_view text);

struct BracketTable {
  std::string name;
  std::string anchor;
  std::vector<std::string> basis;
  std::vector<BracketEntry> entries;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;
};

VerificationReport verify_bracket_table(const Assignment& assignment, const BracketTable& table);

/// One factor of a word: label^power.
struct Factor {
  std::string label;
  int power = 1;
};

/// scalar * (product of factors); an empty factor list is the identity.
struct Side {
  GaussianRational scalar{1};
  std::vector<Factor> factors;
};

struct Relation {
  std::string text;
  Side lhs, rhs;
};

/// `side := [scalar '*'] word | ['-'] word | scalar`, `word := factor+` separated
/// by spaces, `factor := label ['^' int]`. Throws ParseError.
Side parse_side(std::string_view text);
Relation parse_relation(std::string_view text);

struct RelationSet {
  std::string name;
  std::string anchor;
  std::vector<std::string> labels;
  /// Derived labels evaluated in order before the relations, e.g. G6 = G1 G2 G3 G4 G5.
  std::vector<std::pair<std::string, Side>> definitions;
  std::vector<Relation> relations;
};

ExactMatrix evaluate(const Side& side, const Assignment& assignment, std::size_t dim);
VerificationReport verify_relations(const Assignment& assignment, const RelationSet& relations);

/// Replaces labels: for each (new_label, old_label, scalar) sets
/// new_label = scalar * old_label. Other labels are kept.
Assignment substitute(const Assignment& a,
                      const std::vector<std::tuple<std::string, std::string, GaussianRational>>& rules);

/// A labelled assignment inside a subgroup that satisfies a table.
struct ComponentMatch {
  std::string table;
  Assignment assignment;
  std::vector<Index> elements;  // by table basis order
};

/// First assignment (lexicographic over element indices) of distinct members
/// of H that generates H and satisfies the table.
std::optional<ComponentMatch> find_table_assignment(const Subgroup& h, const BracketTable& table);

/// Names of the tables that admit such an assignment in H (order of `tables`).
std::vector<std::string> classify_component(const Subgroup& h, const std::vector<BracketTable>& tables);

/// Names of the tables satisfied when basis label k of each table is mapped
/// to realization[k].
std::vector<std::string> identify_table(const std::vector<ExactMatrix>& realization,
                                        const std::vector<BracketTable>& tables);

}  // namespace gammalab
