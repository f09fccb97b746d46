#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gammalab {

using Rational = mpq_class;

/// Raised by the entry and matrix parsers. Carries the matrix position of the
/// offending entry (or -1 when the error is structural) and the character
/// offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int row, int col, std::size_t offset);

  int row() const { return row_; }
  int col() const { return col_; }
  std::size_t offset() const { return offset_; }

 private:
  int row_;
  int col_;
  std::size_t offset_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact complex scalar re + im*i with rational parts. Both parts are kept in
/// lowest terms with positive denominators at all times, so structural
/// equality is value equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_rational_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form (see parse_entry for the grammar).
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses one entry: `real | imag | real sign imag`, where
/// `real := ['-'] nat ['/' nat]` and `imag := ['-'] [nat ['/' nat]] 'i'`.
GaussianRational parse_entry(std::string_view text);

/// Dense square matrix over GaussianRational, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);
  ExactMatrix(std::size_t dim, std::vector<GaussianRational> entries);

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix scalar(std::size_t dim, const GaussianRational& s);
  /// Builds from nested rows; all rows must have length rows.size().
  static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

  std::size_t dim() const { return dim_; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  std::span<const GaussianRational> entries() const { return entries_; }

  bool is_zero() const;
  bool is_identity() const;
  /// True for a multiple of the identity; the multiple is stored in `value`.
  bool is_scalar(GaussianRational* value = nullptr) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a);

  /// Canonical key used for hashing and equality-indexed lookups.
  std::string key() const;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> entries_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
GaussianRational mat_trace(const ExactMatrix& a);
ExactMatrix mat_adjoint(const ExactMatrix& a);
ExactMatrix mat_transpose(const ExactMatrix& a);
ExactMatrix mat_pow(const ExactMatrix& a, int exponent);

/// Kronecker product a (x) b; block (i,j) of the result is a(i,j) * b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
/// Block-diagonal direct sum.
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

std::string format_matrix(const ExactMatrix& a);
/// Accepts `[[e,e],[e,e]]`; entries may optionally be double-quoted.
ExactMatrix parse_matrix(std::string_view text);

// ---- Gaussian elimination over the Gaussian rationals ----

using Row = std::vector<GaussianRational>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<Row>& rows, std::size_t cols);
std::size_t rank(std::vector<Row> rows, std::size_t cols);
/// Basis of {x : A x = 0} for A given by rows with `cols` columns.
std::vector<Row> nullspace(std::vector<Row> rows, std::size_t cols);

std::size_t mat_rank(const ExactMatrix& a);
bool is_invertible(const ExactMatrix& a);
/// Throws std::domain_error when singular.
ExactMatrix mat_inverse(const ExactMatrix& a);

struct MatrixKeyHash {
  std::size_t operator()(const ExactMatrix& m) const { return std::hash<std::string>{}(m.key()); }
};

}  // namespace gammalab
