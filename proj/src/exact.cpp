#include "gammalab/exact.hpp"

#include <cctype>
#include <sstream>

namespace gammalab {

ParseError::ParseError(const std::string& what, int row, int col, std::size_t offset)
    : std::runtime_error(what), row_(row), col_(col), offset_(offset) {}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

bool GaussianRational::is_rational_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

namespace {

std::string rational_str(const Rational& q) {
  return q.get_str();  // gmp prints "a" or "a/b" in lowest terms
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = rational_str(re_);
  if (sgn(im_) != 0) {
    Rational mag = abs(im_);
    if (sgn(im_) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1) out += rational_str(mag);
    out += 'i';
  }
  return out;
}

// ---- entry parser ----

namespace {

class EntryScanner {
 public:
  explicit EntryScanner(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  bool read_nat(mpz_class& out) {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) return false;
    out.set_str(std::string(s_.substr(start, pos_ - start)), 10);
    return true;
  }

  // ['/' nat] after a numerator
  Rational read_fraction(const mpz_class& num) {
    if (peek() != '/') return Rational(num);
    advance();
    mpz_class den;
    if (!read_nat(den)) fail("expected denominator after '/'");
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("entry '" + std::string(s_) + "': " + msg + " at offset " + std::to_string(pos_), -1, -1, pos_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Parses one signed term; returns true if it was imaginary.
bool parse_term(EntryScanner& sc, bool negative, Rational& value) {
  mpz_class num;
  bool has_num = sc.read_nat(num);
  if (!has_num) {
    if (sc.peek() != 'i') sc.fail("expected a number or 'i'");
    sc.advance();
    value = negative ? -1 : 1;
    return true;
  }
  Rational q = sc.read_fraction(num);
  if (negative) q = -q;
  if (sc.peek() == 'i') {
    sc.advance();
    value = q;
    return true;
  }
  value = q;
  return false;
}

}  // namespace

GaussianRational parse_entry(std::string_view text) {
  EntryScanner sc(text);
  if (sc.done()) sc.fail("empty entry");
  bool neg = false;
  if (sc.peek() == '-') {
    neg = true;
    sc.advance();
  }
  Rational first;
  bool first_imag = parse_term(sc, neg, first);
  if (sc.done()) return first_imag ? GaussianRational(0, first) : GaussianRational(first, 0);
  if (first_imag) sc.fail("imaginary part must come last");
  char sign = sc.peek();
  if (sign != '+' && sign != '-') sc.fail("unexpected character");
  sc.advance();
  Rational second;
  bool second_imag = parse_term(sc, sign == '-', second);
  if (!second_imag) sc.fail("second term must be imaginary");
  if (!sc.done()) sc.fail("trailing characters");
  return {first, second};
}

// ---- matrices ----

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<GaussianRational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) throw DimensionError("entry count does not match dimension");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) { return scalar(dim, 1); }

ExactMatrix ExactMatrix::scalar(std::size_t dim, const GaussianRational& s) {
  ExactMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = s;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  std::size_t n = rows.size();
  if (n == 0) throw DimensionError("empty matrix");
  std::vector<GaussianRational> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {n, std::move(flat)};
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  GaussianRational v;
  return is_scalar(&v) && v == GaussianRational(1);
}

bool ExactMatrix::is_scalar(GaussianRational* value) const {
  if (dim_ == 0) return false;
  const GaussianRational& d = entries_[0];
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto& e = (*this)(r, c);
      if (r == c ? !(e == d) : !e.is_zero()) return false;
    }
  if (value) *value = d;
  return true;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(*this);
  for (auto& e : m.entries_) e = -e;
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in matrix sum");
  ExactMatrix m(a);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in matrix difference");
  ExactMatrix m(a);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in matrix product");
  const std::size_t n = a.dim_;
  ExactMatrix m(n);
  // Catalog matrices are monomial, so skipping zeros dominates the cost.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m(i, j) += aik * bkj;
      }
    }
  return m;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a) {
  ExactMatrix m(a);
  for (auto& e : m.entries_) e *= s;
  return m;
}

std::string ExactMatrix::key() const { return format_matrix(*this); }

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

GaussianRational mat_trace(const ExactMatrix& a) {
  GaussianRational t;
  for (std::size_t k = 0; k < a.dim(); ++k) t += a(k, k);
  return t;
}

ExactMatrix mat_transpose(const ExactMatrix& a) {
  ExactMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(c, r) = a(r, c);
  return m;
}

ExactMatrix mat_adjoint(const ExactMatrix& a) {
  ExactMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(c, r) = a(r, c).conj();
  return m;
}

ExactMatrix mat_pow(const ExactMatrix& a, int exponent) {
  if (exponent < 0) return mat_pow(mat_inverse(a), -exponent);
  ExactMatrix result = ExactMatrix::identity(a.dim());
  ExactMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  ExactMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  ExactMatrix out(n + m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(n + r, n + c) = b(r, c);
  return out;
}

std::string format_matrix(const ExactMatrix& a) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (c) out += ',';
      out += a(r, c).str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

ExactMatrix parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch, int row, int col) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError(std::string("expected '") + ch + "' at offset " + std::to_string(pos), row, col, pos);
    ++pos;
  };

  std::vector<std::vector<GaussianRational>> rows;
  expect('[', -1, -1);
  for (int r = 0;; ++r) {
    expect('[', r, -1);
    std::vector<GaussianRational> row;
    for (int c = 0;; ++c) {
      skip_ws();
      bool quoted = pos < text.size() && text[pos] == '"';
      if (quoted) ++pos;
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && text[pos] != '"' &&
             !std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      std::string_view token = text.substr(start, pos - start);
      try {
        row.push_back(parse_entry(token));
      } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(r) + ", column " + std::to_string(c) + ": " + e.what(), r, c,
                         start + e.offset());
      }
      if (quoted) expect('"', r, c);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']', r, c);
      break;
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']', r, -1);
    break;
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters at offset " + std::to_string(pos), -1, -1, pos);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != rows.size())
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(rows.size()),
                       static_cast<int>(r), -1, pos);
  return ExactMatrix::from_rows(rows);
}

// ---- elimination ----

std::vector<std::size_t> row_reduce(std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    GaussianRational inv = rows[lead][c].inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!rows[lead][k].is_zero()) rows[lead][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].is_zero()) continue;
      GaussianRational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[lead][k].is_zero()) rows[r][k] -= f * rows[lead][k];
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(std::vector<Row> rows, std::size_t cols) { return row_reduce(rows, cols).size(); }

std::vector<Row> nullspace(std::vector<Row> rows, std::size_t cols) {
  auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::vector<Row> to_rows(const ExactMatrix& a) {
  std::vector<Row> rows(a.dim(), Row(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) rows[r][c] = a(r, c);
  return rows;
}

}  // namespace

std::size_t mat_rank(const ExactMatrix& a) { return rank(to_rows(a), a.dim()); }

bool is_invertible(const ExactMatrix& a) { return mat_rank(a) == a.dim(); }

ExactMatrix mat_inverse(const ExactMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Row> rows(n, Row(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = a(r, c);
    rows[r][n + r] = 1;
  }
  auto pivots = row_reduce(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  ExactMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

}  // namespace gammalab
