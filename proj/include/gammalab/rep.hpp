#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammalab/exact.hpp"
#include "gammalab/group.hpp"

namespace gammalab {

class AmbiguousCensus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReducibleRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IrrepCensus {
  std::size_t num_irreps = 0;
  std::size_t one_dim_count = 0;
  std::vector<std::size_t> dims;  // ascending, includes the 1s

  /// e.g. "8x1+2x2"
  std::string str() const;
  friend bool operator==(const IrrepCensus&, const IrrepCensus&) = default;
};

/// Class count, |G/G'| and the unique solution of sum d^2 = |G| with every
/// d >= 2 dividing |G|. Throws AmbiguousCensus when that is not unique.
IrrepCensus irrep_census(const MatrixGroup& g);

/// <chi, chi> of the defining representation.
Rational irreducibility_norm(const MatrixGroup& g);

struct StructuralInvariant {
  int value = 0;
  std::size_t rep_dim = 0;
};

/// (1/|G|) sum tr(g^2) of the defining representation, which must be
/// irreducible (ReducibleRepresentation otherwise).
StructuralInvariant structural_invariant(const MatrixGroup& g);

enum class FormKind { symmetric, antisymmetric, none };
std::string to_string(FormKind k);

struct BilinearForm {
  FormKind kind = FormKind::none;
  std::optional<ExactMatrix> witness;
};

/// Basis of {B : B^T = sign*B, g^T B g = B for all g in gens}.
std::vector<ExactMatrix> invariant_forms(const std::vector<ExactMatrix>& gens, int sign);

/// Invariant form of an irreducible defining representation; the kind is
/// cross-checked against structural_invariant and std::logic_error is thrown
/// on disagreement.
BilinearForm invariant_bilinear_form(const MatrixGroup& g);

/// One isotypic piece of the defining representation, split off by the
/// eigenvalues of central elements.
struct RepBlock {
  std::size_t dim = 0;
  std::size_t multiplicity = 0;  // copies of a single irreducible
  std::size_t image_order = 0;
  std::vector<GaussianRational> central_character;  // eigenvalue of each center element, by index
  int invariant = 0;
  std::optional<FormKind> form;  // only when multiplicity is 1
};

/// Throws std::domain_error when a block is not isotypic or central
/// eigenvalues are not Gaussian.
std::vector<RepBlock> rep_blocks(const MatrixGroup& g);

/// The per-block invariants, their common value (absent when blocks disagree).
struct InvariantProfile {
  std::vector<RepBlock> blocks;
  std::optional<int> value;
};
InvariantProfile invariant_profile(const MatrixGroup& g);

/// The same per-block invariants computed from traces alone: the block of a
/// central character lambda has character (1/|Z|) sum_z conj(lambda(z)) tr(z g).
/// Blocks are listed by their central character values on the center.
struct TraceBlock {
  std::vector<GaussianRational> central_character;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
  int invariant = 0;
};
struct TraceInvariants {
  std::vector<TraceBlock> blocks;
  std::optional<int> value;
};
TraceInvariants trace_block_invariants(const MatrixGroup& g);

/// c0 + c1 z + c2 z^2 + c3 z^3 with z = exp(i pi/4), reduced by z^4 = -1.
class Cyclotomic8 {
 public:
  Cyclotomic8() = default;
  explicit Cyclotomic8(const GaussianRational& g);
  static Cyclotomic8 zeta_power(int e);

  const std::array<Rational, 4>& coeffs() const { return c_; }
  bool is_rational() const;
  bool is_zero() const;

  Cyclotomic8& operator+=(const Cyclotomic8& o);
  friend Cyclotomic8 operator+(Cyclotomic8 a, const Cyclotomic8& b) { return a += b; }
  friend Cyclotomic8 operator*(const Cyclotomic8& a, const Cyclotomic8& b);
  friend Cyclotomic8 operator*(const Rational& s, Cyclotomic8 a);
  friend bool operator==(const Cyclotomic8& a, const Cyclotomic8& b) { return a.c_ == b.c_; }

  /// Entry grammar extended with r2 = sqrt 2, e.g. "1/4*r2+1/4*r2i".
  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

enum class WeightClass { real_half_integer, pure_imaginary, mixed };
std::string to_string(WeightClass w);

struct WeightReport {
  std::string label;
  struct Eigenvalue {
    Cyclotomic8 value;  // eigenvalue of (i/2) g
    std::size_t multiplicity = 0;
  };
  std::vector<Eigenvalue> eigenvalues;  // by increasing angle
  WeightClass classification = WeightClass::mixed;
  std::optional<Rational> l0;
};

/// Eigenvalues of (i/2) g for g of order 1, 2, 4 or 8 from power traces.
/// Throws std::invalid_argument for other orders.
WeightReport spin_weight(const ExactMatrix& g, std::string label = {});

}  // namespace gammalab
