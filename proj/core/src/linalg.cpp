#include "qweyl/linalg.hpp"

#include "qweyl/errors.hpp"

namespace qweyl {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) { return scalar(n, Scalar::one(f)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& c) {
  Matrix m(n, n, c.field());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

void Matrix::require_shape(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix shape mismatch");
  if (field_ != o.field_) throw ParameterError("matrix field mismatch");
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::pow(unsigned k) const {
  if (rows_ != cols_) throw ParameterError("matrix power of a non-square matrix");
  Matrix result = identity(rows_, field_), base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

std::optional<Scalar> Matrix::scalar_value() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return Scalar::zero(field_);
  const Scalar c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& v = (*this)(i, j);
      if (i == j ? v != c : !v.is_zero()) return std::nullopt;
    }
  return c;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ParameterError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw ParameterError("matrix field mismatch");
  Matrix r(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator*(const Scalar& c, Matrix a) {
  for (auto& v : a.data_) v *= c;
  return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw ParameterError("matrix-vector shape mismatch");
  Vector r(a.rows_, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Vector flatten(const Matrix& m) { return m.data(); }

SparseVector sparsify(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

namespace {

// a + c * b, both sorted.
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    v = axpy(v, -v[pos].second, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar inv = v.front().second.inverse();
  for (auto& [idx, val] : v) val *= inv;
  rows_.emplace(v.front().first, std::move(v));
  return true;
}

bool EchelonBasis::contains(const Vector& v) const { return reduce(sparsify(v)).empty(); }

std::vector<Vector> EchelonBasis::null_space() const {
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (rows_.count(free)) continue;
    Vector x(dim_, Scalar::zero(field_));
    x[free] = Scalar::one(field_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t k = 1; k < it->second.size(); ++k) {
        const auto& [idx, val] = it->second[k];
        if (!x[idx].is_zero()) acc += val * x[idx];
      }
      x[it->first] = -acc;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis e(m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
    e.insert(std::move(row));
  }
  return e.rank();
}

std::vector<Vector> kernel(const Matrix& m) {
  EchelonBasis e(m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
    e.insert(std::move(row));
  }
  return e.null_space();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ParameterError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix a = m, inv = Matrix::identity(n, f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Scalar s = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar c = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= c * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= c * inv(col, j);
      }
    }
  }
  return inv;
}

Vector charpoly(const Matrix& m) {
  // Faddeev-LeVerrier.
  if (m.rows() != m.cols()) throw ParameterError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Vector c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix mk(n, n, f);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + Matrix::scalar(n, c[n - k + 1]);
    c[n - k] = -(m * mk).trace() * Scalar::from_integer(f, static_cast<long>(k)).inverse();
  }
  return c;
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& ops, const std::vector<Scalar>& scales) {
  if (ops.empty()) throw ParameterError("commutant_basis needs at least one operator");
  if (!scales.empty() && scales.size() != ops.size()) throw ParameterError("one scale per operator expected");
  const std::size_t n = ops.front().rows();
  const Field f = ops.front().field();
  EchelonBasis eq(n * n, f);
  for (std::size_t g = 0; g < ops.size(); ++g) {
    const Matrix& op = ops[g];
    if (op.rows() != n || op.cols() != n) throw ParameterError("commutant_basis needs square operators of one size");
    const Scalar c = scales.empty() ? Scalar::one(f) : scales[g];
    // (M G - c G M)_{ij} = sum_k M_ik G_kj - c G_ik M_kj
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::map<std::size_t, Scalar> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (!op(k, j).is_zero()) row.try_emplace(i * n + k, Scalar::zero(f)).first->second += op(k, j);
          if (!op(i, k).is_zero()) row.try_emplace(k * n + j, Scalar::zero(f)).first->second -= c * op(i, k);
        }
        SparseVector sv;
        for (auto& [idx, v] : row)
          if (!v.is_zero()) sv.emplace_back(idx, std::move(v));
        if (!sv.empty()) eq.insert(std::move(sv));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : eq.null_space()) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace qweyl
