#include "gammalab/brackets.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gammalab {

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ParseError syntax(const std::string& what, std::string_view text) {
  return ParseError(what + " in '" + std::string(text) + "'", -1, -1, 0);
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

std::string scaled(long coeff, const std::string& label) {
  if (coeff == 0) return "0";
  if (coeff == 1) return label;
  if (coeff == -1) return "-" + label;
  return std::to_string(coeff) + "*" + label;
}

}  // namespace

std::string BracketEntry::str() const { return "[" + x + "," + y + "] = " + scaled(coeff, z); }

BracketEntry parse_bracket_entry(std::string_view text) {
  std::string_view s = trim(text);
  auto eq = s.find('=');
  if (s.empty() || s.front() != '[' || eq == std::string_view::npos) throw syntax("expected '[x,y] = rhs'", text);
  std::string_view left = trim(s.substr(0, eq));
  if (left.back() != ']') throw syntax("expected ']'", text);
  left = left.substr(1, left.size() - 2);
  auto comma = left.find(',');
  if (comma == std::string_view::npos) throw syntax("expected ','", text);
  BracketEntry e;
  e.x = std::string(trim(left.substr(0, comma)));
  e.y = std::string(trim(left.substr(comma + 1)));
  if (e.x.empty() || e.y.empty()) throw syntax("empty label", text);

  std::string_view rhs = trim(s.substr(eq + 1));
  if (rhs == "0") return e;
  long sign = 1;
  if (!rhs.empty() && rhs.front() == '-') {
    sign = -1;
    rhs = trim(rhs.substr(1));
  }
  long mag = 1;
  if (!rhs.empty() && std::isdigit(static_cast<unsigned char>(rhs.front()))) {
    std::size_t k = 0;
    mag = 0;
    while (k < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[k]))) mag = mag * 10 + (rhs[k++] - '0');
    rhs = trim(rhs.substr(k));
    if (rhs.empty() || rhs.front() != '*') throw syntax("expected '*' after coefficient", text);
    rhs = trim(rhs.substr(1));
  }
  if (rhs.empty() || !is_label_start(rhs.front())) throw syntax("expected a label", text);
  e.coeff = sign * mag;
  e.z = std::string(rhs);
  return e;
}

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

const ExactMatrix& lookup(const Assignment& a, const std::string& label) {
  auto it = a.find(label);
  if (it == a.end()) throw UnassignedLabel("label '" + label + "' is not assigned");
  return it->second;
}

}  // namespace

VerificationReport verify_bracket_table(const Assignment& assignment, const BracketTable& table) {
  VerificationReport r;
  r.subject = table.name;
  for (const auto& label : table.basis) lookup(assignment, label);
  for (const auto& e : table.entries) {
    const ExactMatrix& x = lookup(assignment, e.x);
    const ExactMatrix lhs = commutator(x, lookup(assignment, e.y));
    const ExactMatrix rhs =
        e.coeff == 0 ? ExactMatrix(x.dim()) : GaussianRational(e.coeff) * lookup(assignment, e.z);
    Check c{e.str(), lhs == rhs, format_matrix(lhs), format_matrix(rhs)};
    r.checks.push_back(std::move(c));
  }
  return r;
}

Side parse_side(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw syntax("empty side", text);
  Side side;
  auto star = s.find('*');
  if (star != std::string_view::npos) {
    side.scalar = parse_entry(trim(s.substr(0, star)));
    s = trim(s.substr(star + 1));
    if (s.empty()) throw syntax("expected a word after '*'", text);
  } else {
    try {
      side.scalar = parse_entry(s);
      return side;
    } catch (const ParseError&) {
    }
    if (s.front() == '-') {
      side.scalar = GaussianRational(-1);
      s = trim(s.substr(1));
    }
  }
  std::size_t k = 0;
  while (k < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[k]))) {
      ++k;
      continue;
    }
    if (!is_label_start(s[k])) throw syntax("expected a label", text);
    std::size_t start = k;
    while (k < s.size() && is_label_char(s[k]) && s[k] != '*') ++k;
    Factor f{std::string(s.substr(start, k - start)), 1};
    if (f.label == "i") throw syntax("'i' is reserved for the imaginary unit", text);
    if (k < s.size() && s[k] == '^') {
      ++k;
      std::size_t ds = k;
      if (k < s.size() && s[k] == '-') ++k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      std::string digits(s.substr(ds, k - ds));
      if (digits.empty() || digits == "-") throw syntax("expected an exponent", text);
      f.power = std::stoi(digits);
    }
    side.factors.push_back(std::move(f));
  }
  if (side.factors.empty()) throw syntax("empty word", text);
  return side;
}

Relation parse_relation(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw syntax("expected exactly one '='", text);
  return {std::string(trim(text)), parse_side(text.substr(0, eq)), parse_side(text.substr(eq + 1))};
}

ExactMatrix evaluate(const Side& side, const Assignment& assignment, std::size_t dim) {
  ExactMatrix m = ExactMatrix::identity(dim);
  for (const auto& f : side.factors) m = m * mat_pow(lookup(assignment, f.label), f.power);
  return side.scalar * m;
}

VerificationReport verify_relations(const Assignment& assignment, const RelationSet& relations) {
  VerificationReport r;
  r.subject = relations.name;
  Assignment a = assignment;
  for (const auto& label : relations.labels) lookup(a, label);
  if (a.empty()) throw UnassignedLabel("empty assignment");
  const std::size_t dim = a.begin()->second.dim();
  for (const auto& [label, def] : relations.definitions) a[label] = evaluate(def, a, dim);
  for (const auto& rel : relations.relations) {
    ExactMatrix lhs = evaluate(rel.lhs, a, dim);
    ExactMatrix rhs = evaluate(rel.rhs, a, dim);
    r.checks.push_back({rel.text, lhs == rhs, format_matrix(lhs), format_matrix(rhs)});
  }
  return r;
}

Assignment substitute(const Assignment& a,
                      const std::vector<std::tuple<std::string, std::string, GaussianRational>>& rules) {
  Assignment out = a;
  for (const auto& [to, from, s] : rules) out[to] = s * lookup(a, from);
  return out;
}

namespace {

class TableSearch {
 public:
  TableSearch(const Subgroup& h, const BracketTable& t) : h_(h), g_(*h.parent), t_(t) {
    for (const auto& l : t.basis) slot_[l] = slot_.size();
    for (const auto& e : t.entries)
      for (const auto& l : {e.x, e.y, e.z})
        if (!l.empty() && !slot_.count(l)) throw UnassignedLabel("table label '" + l + "' is not in the basis");
    members_ = h.indices();
    minus_ = g_.minus_identity();
    value_.assign(t.basis.size(), kFree);
  }

  std::optional<std::vector<Index>> run() {
    if (assign(0)) return value_;
    return std::nullopt;
  }

 private:
  static constexpr Index kFree = static_cast<Index>(-1);

  bool used(Index x) const { return std::find(value_.begin(), value_.end(), x) != value_.end(); }

  // [x, y] = k z with z as a group index, or nullopt when k z is not a group
  // element. Commuting and anticommuting pairs are read off the Cayley table.
  std::optional<Index> bracket_target(Index x, Index y, long k) const {
    Index xy = g_.product(x, y), yx = g_.product(y, x);
    if (minus_ && yx == g_.product(*minus_, xy)) {
      if (k == 2) return xy;
      if (k == -2) return g_.product(*minus_, xy);
    }
    return g_.find(GaussianRational(Rational(1, k)) * commutator(g_.element(x), g_.element(y)));
  }

  // Checks every entry with assigned brackets and forces determined labels.
  bool propagate(std::vector<std::size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : t_.entries) {
        Index x = value_[slot_.at(e.x)], y = value_[slot_.at(e.y)];
        if (x == kFree || y == kFree) continue;
        const bool commuting = g_.product(x, y) == g_.product(y, x);
        if (e.coeff == 0) {
          if (!commuting) return false;
          continue;
        }
        if (commuting) return false;
        std::size_t zs = slot_.at(e.z);
        auto z = bracket_target(x, y, e.coeff);
        if (value_[zs] != kFree) {
          if (z != value_[zs]) return false;
          continue;
        }
        if (!z || !h_.members.contains(*z) || used(*z)) return false;
        value_[zs] = *z;
        trail.push_back(zs);
        changed = true;
      }
    }
    return true;
  }

  bool complete() const {
    if (close_in(g_, value_).count() != h_.order()) return false;
    std::set<Index> distinct(value_.begin(), value_.end());
    return distinct.size() == value_.size();
  }

  bool assign(std::size_t pos) {
    while (pos < value_.size() && value_[pos] != kFree) ++pos;
    if (pos == value_.size()) return complete();
    for (auto x : members_) {
      if (used(x)) continue;
      std::vector<std::size_t> trail{pos};
      value_[pos] = x;
      if (propagate(trail) && assign(pos + 1)) return true;
      for (auto s : trail) value_[s] = kFree;
    }
    return false;
  }

  const Subgroup& h_;
  const MatrixGroup& g_;
  const BracketTable& t_;
  std::map<std::string, std::size_t> slot_;
  std::vector<Index> members_;
  std::vector<Index> value_;
  std::optional<Index> minus_;
};

}  // namespace

std::optional<ComponentMatch> find_table_assignment(const Subgroup& h, const BracketTable& table) {
  auto found = TableSearch(h, table).run();
  if (!found) return std::nullopt;
  ComponentMatch m{table.name, {}, *found};
  for (std::size_t k = 0; k < table.basis.size(); ++k) m.assignment[table.basis[k]] = h.parent->element((*found)[k]);
  return m;
}

std::vector<std::string> classify_component(const Subgroup& h, const std::vector<BracketTable>& tables) {
  std::vector<std::string> out;
  for (const auto& t : tables)
    if (find_table_assignment(h, t)) out.push_back(t.name);
  return out;
}

std::vector<std::string> identify_table(const std::vector<ExactMatrix>& realization,
                                        const std::vector<BracketTable>& tables) {
  std::vector<std::string> out;
  for (const auto& t : tables) {
    if (t.basis.size() != realization.size()) continue;
    Assignment a;
    for (std::size_t k = 0; k < t.basis.size(); ++k) a[t.basis[k]] = realization[k];
    if (verify_bracket_table(a, t).pass()) out.push_back(t.name);
  }
  return out;
}

}  // namespace gammalab
