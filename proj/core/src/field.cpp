#include "wexlat/field.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace wexlat {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2)
  Scalar r = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Matrix Matrix::identity(PrimeField f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % f.modulus();
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_)) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar aik = at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = field_.mul(x, s);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = field_.add(r[i], field_.mul(at(i, j), x[j]));
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

std::string Matrix::key() const {
  std::string s;
  s.reserve(12 + a_.size() * 4);
  auto push32 = [&s](Scalar v) {
    char b[4];
    std::memcpy(b, &v, 4);
    s.append(b, 4);
  };
  push32(field_.modulus());
  push32(static_cast<Scalar>(rows_));
  push32(static_cast<Scalar>(cols_));
  for (Scalar v : a_) push32(v);
  return s;
}

RrefResult rref(const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t pr = r;
    while (pr < w.rows() && w.at(pr, c) == 0) ++pr;
    if (pr == w.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(pr, j), w.at(r, j));
    Scalar s = f.inv(w.at(r, c));
    for (std::size_t j = c; j < w.cols(); ++j) w.at(r, j) = f.mul(w.at(r, j), s);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Scalar fct = w.at(i, c);
      for (std::size_t j = c; j < w.cols(); ++j)
        w.at(i, j) = f.sub(w.at(i, j), f.mul(fct, w.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(f, r, w.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
  return {out, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).mat.rows(); }

Matrix kernel_basis(const Matrix& m) {
  auto R = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : R.pivots) is_piv[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Matrix out(m.field(), free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    out.at(i, free_cols[i]) = 1;
    for (std::size_t rr = 0; rr < R.pivots.size(); ++rr)
      out.at(i, R.pivots[rr]) = m.field().neg(R.mat.at(rr, free_cols[i]));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i] % m.field().modulus();
  }
  auto R = rref(aug);
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
    x[R.pivots[i]] = R.mat.at(i, m.cols());
  }
  return x;
}

Matrix row_space(const Matrix& spanning_rows) { return rref(spanning_rows).mat; }

bool subspace_contains(const RrefResult& basis, Vec v) {
  const PrimeField& f = basis.mat.field();
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    Scalar c = v[basis.pivots[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = f.sub(v[j], f.mul(c, basis.mat.at(i, j)));
  }
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

bool subspace_leq(const Matrix& a_rref, const Matrix& b_rref) {
  RrefResult b{b_rref, {}};
  for (std::size_t i = 0; i < b_rref.rows(); ++i) {
    std::size_t c = 0;
    while (c < b_rref.cols() && b_rref.at(i, c) == 0) ++c;
    b.pivots.push_back(c);
  }
  for (std::size_t i = 0; i < a_rref.rows(); ++i)
    if (!subspace_contains(b, a_rref.row(i))) return false;
  return true;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) {
  return row_space(Matrix::vstack(a, b));
}

Matrix subspace_intersection(const Matrix& a_rref, const Matrix& b_rref) {
  // Zassenhaus: kernel of [A^T | B^T] stacked gives coefficient pairs with
  // x A = y B; the intersection is spanned by the x A.
  const std::size_t n = a_rref.cols();
  const std::size_t ra = a_rref.rows(), rb = b_rref.rows();
  if (ra == 0 || rb == 0) return Matrix(a_rref.field(), 0, n);
  Matrix sys(a_rref.field(), n, ra + rb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ra; ++i) sys.at(j, i) = a_rref.at(i, j);
    for (std::size_t i = 0; i < rb; ++i) sys.at(j, ra + i) = a_rref.field().neg(b_rref.at(i, j));
  }
  Matrix ker = kernel_basis(sys);
  Matrix span(a_rref.field(), ker.rows(), n);
  for (std::size_t k = 0; k < ker.rows(); ++k)
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < n; ++j)
        span.at(k, j) = a_rref.field().add(span.at(k, j),
                                           a_rref.field().mul(ker.at(k, i), a_rref.at(i, j)));
  return row_space(span);
}

}  // namespace wexlat
