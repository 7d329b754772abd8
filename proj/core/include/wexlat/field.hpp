#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wexlat {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

bool is_prime(Scalar n);

/// Arithmetic context for the prime field F_p. All element values are
/// canonical representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Scalar p);
  PrimeField() : p_(2) {}

  Scalar modulus() const { return p_; }

  Scalar reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;  // throws on a == 0

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Scalar p_;
};

/// Dense matrix over F_p, row-major. Dimensions here stay in the dozens,
/// so there is no sparse path.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n);
  static Matrix from_rows(PrimeField f, const std::vector<Vec>& rows, std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix transpose() const;
  Vec apply(const Vec& x) const;  // this * x

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// Byte key identifying (p, shape, entries); used to dedupe canonical forms.
  std::string key() const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix mat;                       // zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per row
};

/// Unique reduced row-echelon form of m with zero rows removed.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows form a basis of { x : m x^T = 0 }; row count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Particular solution of m x = b with free variables set to zero,
/// or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Subspaces are handled as row spaces; the canonical form (RREF, zero
// rows dropped, rows in pivot order) is the dedupe key everywhere.
Matrix row_space(const Matrix& spanning_rows);
bool subspace_contains(const RrefResult& basis, Vec v);
bool subspace_leq(const Matrix& a_rref, const Matrix& b_rref);
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a_rref, const Matrix& b_rref);

}  // namespace wexlat
