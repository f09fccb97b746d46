#include "gammalab/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gammalab {

std::string IrrepCensus::str() const {
  std::map<std::size_t, std::size_t> counts;
  for (auto d : dims) ++counts[d];
  std::string out;
  for (const auto& [d, c] : counts) {
    if (!out.empty()) out += "+";
    out += std::to_string(c) + "x" + std::to_string(d);
  }
  return out;
}

IrrepCensus irrep_census(const MatrixGroup& g) {
  IrrepCensus c;
  const std::size_t n = g.order();
  c.num_irreps = conjugacy_classes(g).size();
  c.one_dim_count = n / derived_subgroup(g).order();
  const std::size_t higher = c.num_irreps - c.one_dim_count;

  std::vector<std::size_t> degrees;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) degrees.push_back(d);

  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> pick;
  // nonincreasing multisets of `higher` degrees whose squares sum to the rest
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t remaining,
                                                                          std::size_t max_pos) {
    if (left == 0) {
      if (remaining == 0) solutions.push_back(pick);
      return;
    }
    for (std::size_t k = max_pos; k-- > 0;) {
      std::size_t d2 = degrees[k] * degrees[k];
      if (d2 > remaining) continue;
      if (d2 * left < remaining) break;
      pick.push_back(degrees[k]);
      rec(left - 1, remaining - d2, k + 1);
      pick.pop_back();
    }
  };
  rec(higher, n - c.one_dim_count, degrees.size());
  if (solutions.size() != 1)
    throw AmbiguousCensus(solutions.empty() ? "no degree multiset fits the class count"
                                            : "ambiguous census: " + std::to_string(solutions.size()) +
                                                  " degree multisets fit the class count");
  c.dims.assign(c.one_dim_count, 1);
  c.dims.insert(c.dims.end(), solutions[0].begin(), solutions[0].end());
  std::sort(c.dims.begin(), c.dims.end());
  return c;
}

namespace {

GaussianRational character_norm_sum(const MatrixGroup& g) {
  GaussianRational s;
  for (const auto& x : g.elements()) s += GaussianRational(mat_trace(x).norm());
  return s;
}

GaussianRational square_trace_sum(const MatrixGroup& g) {
  GaussianRational s;
  for (Index x = 0; x < g.order(); ++x) s += mat_trace(g.element(g.product(x, x)));
  return s;
}

int as_small_int(const GaussianRational& v, const char* what) {
  if (!v.is_rational_integer()) throw std::logic_error(std::string(what) + " is not an integer: " + v.str());
  return static_cast<int>(v.re().get_num().get_si());
}

FormKind kind_for(int invariant) {
  if (invariant > 0) return FormKind::symmetric;
  if (invariant < 0) return FormKind::antisymmetric;
  return FormKind::none;
}

FormKind solve_kind(const std::vector<ExactMatrix>& gens, std::optional<ExactMatrix>* witness) {
  for (int sign : {1, -1}) {
    auto forms = invariant_forms(gens, sign);
    if (!forms.empty()) {
      if (witness) *witness = forms.front();
      return sign > 0 ? FormKind::symmetric : FormKind::antisymmetric;
    }
  }
  return FormKind::none;
}

std::vector<ExactMatrix> generator_matrices(const MatrixGroup& g) {
  std::vector<ExactMatrix> out;
  for (auto i : g.generators()) out.push_back(g.element(i));
  if (out.empty()) out.push_back(ExactMatrix::identity(g.dim()));
  return out;
}

}  // namespace

Rational irreducibility_norm(const MatrixGroup& g) {
  return character_norm_sum(g).re() / static_cast<long>(g.order());
}

StructuralInvariant structural_invariant(const MatrixGroup& g) {
  Rational norm = irreducibility_norm(g);
  if (norm != 1) throw ReducibleRepresentation("defining representation is reducible (character norm " +
                                               GaussianRational(norm).str() + ")");
  GaussianRational fs = square_trace_sum(g) / GaussianRational(static_cast<long>(g.order()));
  int v = as_small_int(fs, "indicator");
  if (v < -1 || v > 1) throw std::logic_error("indicator out of range: " + fs.str());
  return {v, g.dim()};
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::symmetric: return "symmetric";
    case FormKind::antisymmetric: return "antisymmetric";
    case FormKind::none: return "none";
  }
  return "none";
}

std::vector<ExactMatrix> invariant_forms(const std::vector<ExactMatrix>& gens, int sign) {
  const std::size_t n = gens.front().dim();
  const std::size_t vars = n * n;
  std::vector<Row> rows;
  for (const auto& g : gens) {
    // (g^T B g)_{ij} - B_{ij} = sum_{a,b} g_{ai} B_{ab} g_{bj} - B_{ij}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Row r(vars);
        for (std::size_t a = 0; a < n; ++a) {
          if (g(a, i).is_zero()) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (!g(b, j).is_zero()) r[a * n + b] += g(a, i) * g(b, j);
        }
        r[i * n + j] -= GaussianRational(1);
        rows.push_back(std::move(r));
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Row r(vars);
      r[a * n + b] += GaussianRational(1);
      r[b * n + a] -= GaussianRational(sign);
      rows.push_back(std::move(r));
    }
  std::vector<ExactMatrix> out;
  for (auto& v : nullspace(std::move(rows), vars)) out.emplace_back(n, std::move(v));
  return out;
}

BilinearForm invariant_bilinear_form(const MatrixGroup& g) {
  StructuralInvariant inv = structural_invariant(g);
  BilinearForm f;
  f.kind = solve_kind(generator_matrices(g), &f.witness);
  if (f.kind != kind_for(inv.value))
    throw std::logic_error("invariant form kind " + to_string(f.kind) + " disagrees with indicator " +
                           std::to_string(inv.value));
  if (f.witness && !is_invertible(*f.witness)) throw std::logic_error("invariant form is singular");
  return f;
}

namespace {

using Mat = std::vector<Row>;

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  Mat out(a.size(), Row(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Mat rows_of(const ExactMatrix& m) {
  Mat out(m.dim(), Row(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

ExactMatrix square_of(const Mat& rows) { return ExactMatrix::from_rows(rows); }

struct Space {
  Mat basis;  // n x k, columns span the subspace
  Mat coords;  // k x n, coords * basis = I
  std::vector<GaussianRational> character;
};

// Column space of a k x k projector p: basis vectors come from the reduced
// row echelon form of p^T, and the pivot positions read off coordinates.
std::pair<Mat, Mat> image_of(const Mat& p) {
  const std::size_t k = p.size();
  Mat t(k, Row(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i][j] = p[j][i];
  auto pivots = row_reduce(t, k);
  const std::size_t r = pivots.size();
  Mat basis(k, Row(r));
  Mat coords(r, Row(k));
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < k; ++i) basis[i][c] = t[c][i];
    coords[c][pivots[c]] = GaussianRational(1);
  }
  return {basis, coords};
}

const std::array<GaussianRational, 4>& fourth_roots() {
  static const std::array<GaussianRational, 4> roots{GaussianRational(1), GaussianRational(0, 1),
                                                     GaussianRational(-1), GaussianRational(0, -1)};
  return roots;
}

}  // namespace

std::vector<RepBlock> rep_blocks(const MatrixGroup& g) {
  const std::size_t n = g.dim();
  std::vector<Space> spaces{{rows_of(ExactMatrix::identity(n)), rows_of(ExactMatrix::identity(n)), {}}};
  const auto zs = center(g).indices();

  for (auto z : zs) {
    const int ord = element_order(g, z);
    const Mat zm = rows_of(g.element(z));
    std::vector<Space> next;
    for (const auto& s : spaces) {
      const std::size_t k = s.coords.size();
      Mat zr = multiply(multiply(s.coords, zm), s.basis);
      std::vector<Mat> powers{rows_of(ExactMatrix::identity(k))};
      for (int j = 1; j < ord; ++j) powers.push_back(multiply(powers.back(), zr));
      std::size_t total = 0;
      for (std::size_t r = 0; r < 4; ++r) {
        if ((static_cast<std::size_t>(ord) * r) % 4 != 0) continue;  // root must have order dividing ord
        const GaussianRational mu_inv = fourth_roots()[(4 - r) % 4];
        Mat p(k, Row(k));
        GaussianRational coeff(1);
        for (int j = 0; j < ord; ++j) {
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
              if (!powers[j][a][b].is_zero()) p[a][b] += coeff * powers[j][a][b];
          coeff *= mu_inv;
        }
        auto [basis, coords] = image_of(p);
        if (coords.empty()) continue;
        total += coords.size();
        Space child{multiply(s.basis, basis), multiply(coords, s.coords), s.character};
        child.character.push_back(fourth_roots()[r]);
        next.push_back(std::move(child));
      }
      if (total != k) throw std::domain_error("central element has eigenvalues outside the Gaussian field");
    }
    spaces = std::move(next);
  }

  std::vector<RepBlock> out;
  for (const auto& s : spaces) {
    std::vector<ExactMatrix> gens;
    for (auto gi : g.generators()) {
      Mat m = multiply(multiply(s.coords, rows_of(g.element(gi))), s.basis);
      gens.push_back(square_of(m));
    }
    const std::size_t k = s.coords.size();
    if (gens.empty()) gens.push_back(ExactMatrix::identity(k));
    MatrixGroup h = MatrixGroup::generate(gens, g.order());
    RepBlock b;
    b.dim = k;
    b.image_order = h.order();
    b.central_character = s.character;
    const GaussianRational norm = character_norm_sum(h) / GaussianRational(static_cast<long>(h.order()));
    const int nn = as_small_int(norm, "character norm");
    int m = 1;
    while (m * m < nn) ++m;
    if (m * m != nn) throw std::domain_error("block of dimension " + std::to_string(k) + " is not isotypic");
    b.multiplicity = static_cast<std::size_t>(m);
    const int fs = as_small_int(square_trace_sum(h) / GaussianRational(static_cast<long>(h.order())), "indicator");
    if (fs % m != 0) throw std::logic_error("indicator sum not divisible by multiplicity");
    b.invariant = fs / m;
    if (m == 1) {
      b.form = solve_kind(gens, nullptr);
      if (*b.form != kind_for(b.invariant))
        throw std::logic_error("block form kind disagrees with its indicator");
    }
    out.push_back(std::move(b));
  }
  return out;
}

InvariantProfile invariant_profile(const MatrixGroup& g) {
  InvariantProfile p;
  p.blocks = rep_blocks(g);
  bool agree = !p.blocks.empty();
  for (const auto& b : p.blocks) agree = agree && b.invariant == p.blocks.front().invariant;
  if (agree) p.value = p.blocks.front().invariant;
  return p;
}

namespace {

// Every homomorphism from the center into the fourth roots of unity, as
// exponent vectors over the center elements in index order.
std::vector<std::vector<int>> central_characters(const MatrixGroup& g, const std::vector<Index>& zs) {
  std::vector<std::map<Index, int>> partial{{{Index{0}, 0}}};
  for (auto z : zs) {
    std::vector<std::map<Index, int>> next;
    for (const auto& m : partial) {
      if (m.count(z)) {
        next.push_back(m);
        continue;
      }
      for (int r = 0; r < 4; ++r) {
        std::map<Index, int> ext = m;
        bool ok = true;
        Index zk = z;
        for (int k = 1; ok; ++k, zk = g.product(zk, z)) {
          if (m.count(zk)) {
            ok = (m.at(zk) - k * r) % 4 == 0;
            break;
          }
          for (const auto& [h, v] : m) {
            Index p = g.product(zk, h);
            int val = ((v + k * r) % 4 + 4) % 4;
            auto [it, fresh] = ext.emplace(p, val);
            if (!fresh && it->second != val) ok = false;
          }
        }
        if (ok) next.push_back(std::move(ext));
      }
    }
    partial = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& m : partial) {
    std::vector<int> v;
    for (auto z : zs) v.push_back(m.at(z));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TraceInvariants trace_block_invariants(const MatrixGroup& g) {
  const std::size_t n = g.order();
  const auto zs = center(g).indices();
  std::vector<GaussianRational> tr(n);
  for (Index x = 0; x < n; ++x) tr[x] = mat_trace(g.element(x));
  const GaussianRational inv_z(Rational(1, static_cast<long>(zs.size())));
  const GaussianRational inv_g(Rational(1, static_cast<long>(n)));

  TraceInvariants out;
  std::size_t total = 0;
  for (const auto& lam : central_characters(g, zs)) {
    std::vector<GaussianRational> chi(n);
    for (Index x = 0; x < n; ++x) {
      GaussianRational s;
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const auto& t = tr[g.product(zs[k], x)];
        if (!t.is_zero()) s += fourth_roots()[(4 - lam[k]) % 4] * t;
      }
      chi[x] = s * inv_z;
    }
    const int dim = as_small_int(chi[0], "block dimension");
    if (dim == 0) continue;
    GaussianRational norm, fs;
    for (Index x = 0; x < n; ++x) {
      norm += chi[x] * chi[x].conj();
      fs += chi[g.product(x, x)];
    }
    const int nn = as_small_int(norm * inv_g, "character norm");
    int m = 1;
    while (m * m < nn) ++m;
    if (m * m != nn) throw std::domain_error("block of dimension " + std::to_string(dim) + " is not isotypic");
    const int f = as_small_int(fs * inv_g, "indicator");
    if (f % m != 0) throw std::logic_error("indicator sum not divisible by multiplicity");
    TraceBlock b;
    for (int r : lam) b.central_character.push_back(fourth_roots()[r]);
    b.dim = static_cast<std::size_t>(dim);
    b.multiplicity = static_cast<std::size_t>(m);
    b.invariant = f / m;
    total += b.dim;
    out.blocks.push_back(std::move(b));
  }
  if (total != g.dim()) throw std::domain_error("central elements have eigenvalues outside the Gaussian field");
  bool agree = !out.blocks.empty();
  for (const auto& b : out.blocks) agree = agree && b.invariant == out.blocks.front().invariant;
  if (agree) out.value = out.blocks.front().invariant;
  return out;
}

Cyclotomic8::Cyclotomic8(const GaussianRational& g) {
  c_[0] = g.re();
  c_[2] = g.im();
}

Cyclotomic8 Cyclotomic8::zeta_power(int e) {
  e = ((e % 8) + 8) % 8;
  Cyclotomic8 z;
  if (e < 4)
    z.c_[e] = 1;
  else
    z.c_[e - 4] = -1;
  return z;
}

bool Cyclotomic8::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
bool Cyclotomic8::is_zero() const { return is_rational() && c_[0] == 0; }

Cyclotomic8& Cyclotomic8::operator+=(const Cyclotomic8& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic8 operator*(const Cyclotomic8& a, const Cyclotomic8& b) {
  Cyclotomic8 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Rational p = a.c_[i] * b.c_[j];
      if (i + j < 4)
        r.c_[i + j] += p;
      else
        r.c_[i + j - 4] -= p;
    }
  return r;
}

Cyclotomic8 operator*(const Rational& s, Cyclotomic8 a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

std::string Cyclotomic8::str() const {
  // z = (1+i)/r2 and z^3 = (-1+i)/r2
  GaussianRational base(c_[0], c_[2]);
  Rational r2_re = (c_[1] - c_[3]) / 2;
  Rational r2_im = (c_[1] + c_[3]) / 2;
  std::vector<std::string> parts;
  if (!base.is_zero()) parts.push_back(base.str());
  auto coef = [](const Rational& q) {
    if (q == 1) return std::string();
    if (q == -1) return std::string("-");
    return GaussianRational(q).str() + "*";
  };
  if (r2_re != 0) parts.push_back(coef(r2_re) + "r2");
  if (r2_im != 0) parts.push_back(coef(r2_im) + "r2i");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += (parts[k][0] == '-' ? "" : "+") + parts[k];
  return out;
}

std::string to_string(WeightClass w) {
  switch (w) {
    case WeightClass::real_half_integer: return "real-half-integer";
    case WeightClass::pure_imaginary: return "pure-imaginary";
    case WeightClass::mixed: return "mixed";
  }
  return "mixed";
}

WeightReport spin_weight(const ExactMatrix& g, std::string label) {
  const std::size_t dim = g.dim();
  std::vector<ExactMatrix> powers{ExactMatrix::identity(dim)};
  int order = 0;
  for (int j = 1; j <= 8; ++j) {
    powers.push_back(powers.back() * g);
    if (powers.back().is_identity()) {
      order = j;
      break;
    }
  }
  if (order == 0 || 8 % order != 0)
    throw std::invalid_argument("spin_weight supports element orders 1, 2, 4, 8 only");

  const int step = 8 / order;
  WeightReport rep;
  rep.label = std::move(label);
  bool all_real = true, all_imag = true;
  std::size_t total = 0;
  std::vector<std::pair<int, std::size_t>> by_angle;
  for (int k = 0; k < order; ++k) {
    Cyclotomic8 sum;
    for (int j = 0; j < order; ++j)
      sum += Cyclotomic8(mat_trace(powers[j])) * Cyclotomic8::zeta_power(-j * k * step);
    sum = Rational(1, order) * sum;
    if (!sum.is_rational() || sum.coeffs()[0].get_den() != 1 || sum.coeffs()[0] < 0)
      throw std::logic_error("eigenvalue multiplicity is not a non-negative integer");
    const std::size_t mult = sum.coeffs()[0].get_num().get_ui();
    if (mult == 0) continue;
    total += mult;
    by_angle.emplace_back((2 + k * step) % 8, mult);
  }
  if (total != dim) throw std::logic_error("eigenvalue multiplicities do not sum to the dimension");
  std::sort(by_angle.begin(), by_angle.end());
  for (const auto& [e, mult] : by_angle) {
    rep.eigenvalues.push_back({Rational(1, 2) * Cyclotomic8::zeta_power(e), mult});
    all_real = all_real && (e == 0 || e == 4);
    all_imag = all_imag && (e == 2 || e == 6);
  }
  if (all_real) {
    rep.classification = WeightClass::real_half_integer;
    rep.l0 = by_angle.front().first == 0 ? Rational(1, 2) : Rational(-1, 2);
  } else if (all_imag) {
    rep.classification = WeightClass::pure_imaginary;
  }
  return rep;
}

}  // namespace gammalab
