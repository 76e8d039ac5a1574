#include "ga/linalg.hpp"

#include <stdexcept>

namespace ga {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (is_zero(v)) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!is_zero(o.at(k, j))) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!is_zero(at(i, j)) && !is_zero(x[j])) y[i] += at(i, j) * x[j];
  return y;
}

int RationalMatrix::rref() {
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (!is_zero(at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
    Rational inv = 1 / at(rank, col);
    for (int j = col; j < cols_; ++j)
      if (!is_zero(at(rank, j))) at(rank, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || is_zero(at(i, col))) continue;
      Rational f = at(i, col);
      for (int j = col; j < cols_; ++j)
        if (!is_zero(at(rank, j))) at(i, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

LinearSubspace::LinearSubspace(int ambient, RationalMatrix span) : ambient_(ambient) {
  if (span.cols() != ambient) throw std::invalid_argument("basis width != ambient dimension");
  int rank = span.rref();
  basis_ = RationalMatrix(rank, ambient);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < ambient; ++j) basis_.at(i, j) = span.at(i, j);
}

bool LinearSubspace::contains(const std::vector<Rational>& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Rational> rem = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(basis_.at(i, j))) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (is_zero(rem[lead])) continue;
    Rational f = rem[lead];  // pivot entries are 1 in RREF
    for (int j = lead; j < ambient_; ++j)
      if (!is_zero(basis_.at(i, j))) rem[j] -= f * basis_.at(i, j);
  }
  for (const Rational& x : rem)
    if (!is_zero(x)) return false;
  return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  for (int i = 0; i < other.basis_.rows(); ++i) {
    std::vector<Rational> row(ambient_);
    for (int j = 0; j < ambient_; ++j) row[j] = other.basis_.at(i, j);
    if (!contains(row)) return false;
  }
  return true;
}

LinearSubspace kernel(const RationalMatrix& m) {
  RationalMatrix red = m;
  red.rref();
  int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  {
    int row = 0;
    for (int col = 0; col < cols && row < red.rows(); ++col) {
      if (!is_zero(red.at(row, col))) {
        pivot_of_col[col] = row;
        ++row;
      }
    }
  }
  std::vector<int> free_cols;
  for (int col = 0; col < cols; ++col)
    if (pivot_of_col[col] < 0) free_cols.push_back(col);

  RationalMatrix basis(int(free_cols.size()), cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(int(k), fc) = 1;
    for (int col = 0; col < cols; ++col) {
      int row = pivot_of_col[col];
      if (row >= 0) basis.at(int(k), col) = -red.at(row, fc);
    }
  }
  return LinearSubspace(cols, std::move(basis));
}

LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const int amb = a.ambient_dim();
  const int ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return LinearSubspace::zero_subspace(amb);
  // x in both spans: x = alpha*A = beta*B. Solve A^T alpha - B^T beta = 0.
  RationalMatrix m(amb, ka + kb);
  for (int j = 0; j < ka; ++j)
    for (int i = 0; i < amb; ++i) m.at(i, j) = a.basis().at(j, i);
  for (int j = 0; j < kb; ++j)
    for (int i = 0; i < amb; ++i) m.at(i, ka + j) = -b.basis().at(j, i);
  LinearSubspace coeffs = kernel(m);
  RationalMatrix span(coeffs.dim(), amb);
  for (int i = 0; i < coeffs.dim(); ++i)
    for (int j = 0; j < ka; ++j) {
      const Rational& c = coeffs.basis().at(i, j);
      if (is_zero(c)) continue;
      for (int t = 0; t < amb; ++t) span.at(i, t) += c * a.basis().at(j, t);
    }
  return LinearSubspace(amb, std::move(span));
}

LinearSubspace subspace_sum(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  RationalMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.ambient_dim(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return LinearSubspace(a.ambient_dim(), std::move(stacked));
}

LinearSubspace restrict_kernel(const LinearSubspace& k, const RationalMatrix& op) {
  const int amb = k.ambient_dim();
  if (op.cols() != amb) throw std::invalid_argument("operator dimension mismatch");
  if (k.dim() == 0) return k;
  // Columns = images of the current basis vectors; kernel coefficients
  // give the combinations that the operator kills.
  RationalMatrix images(op.rows(), k.dim());
  for (int i = 0; i < k.dim(); ++i) {
    std::vector<Rational> x(amb);
    for (int j = 0; j < amb; ++j) x[j] = k.basis().at(i, j);
    std::vector<Rational> y = op.apply(x);
    for (int t = 0; t < op.rows(); ++t) images.at(t, i) = y[t];
  }
  LinearSubspace coeffs = kernel(images);
  RationalMatrix span(coeffs.dim(), amb);
  for (int i = 0; i < coeffs.dim(); ++i)
    for (int j = 0; j < k.dim(); ++j) {
      const Rational& c = coeffs.basis().at(i, j);
      if (is_zero(c)) continue;
      for (int t = 0; t < amb; ++t) span.at(i, t) += c * k.basis().at(j, t);
    }
  return LinearSubspace(amb, std::move(span));
}

void SparseOperator::add(int row, int col, const Rational& value) {
  if (is_zero(value)) return;
  by_col_[col].emplace_back(row, value);
}

std::vector<Rational> SparseOperator::apply(const std::vector<Rational>& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (int col = 0; col < cols_; ++col) {
    if (is_zero(x[col])) continue;
    for (const auto& [row, v] : by_col_[col]) y[row] += v * x[col];
  }
  return y;
}

RationalMatrix SparseOperator::dense() const {
  RationalMatrix m(rows_, cols_);
  for (int col = 0; col < cols_; ++col)
    for (const auto& [row, v] : by_col_[col]) m.at(row, col) += v;
  return m;
}

namespace {

// Rows of `span` combined by the kernel coefficients `coeffs`.
RationalMatrix combine_rows(const LinearSubspace& coeffs, const LinearSubspace& k) {
  const int amb = k.ambient_dim();
  RationalMatrix span(coeffs.dim(), amb);
  for (int i = 0; i < coeffs.dim(); ++i)
    for (int j = 0; j < k.dim(); ++j) {
      const Rational& c = coeffs.basis().at(i, j);
      if (is_zero(c)) continue;
      for (int t = 0; t < amb; ++t) span.at(i, t) += c * k.basis().at(j, t);
    }
  return span;
}

}  // namespace

LinearSubspace restrict_kernel(const LinearSubspace& k, const SparseOperator& op) {
  const int amb = k.ambient_dim();
  if (op.cols() != amb) throw std::invalid_argument("operator dimension mismatch");
  if (k.dim() == 0) return k;
  // Images of the basis vectors, kept as sparse columns: only rows that some
  // image actually touches enter the elimination.
  std::vector<std::map<int, Rational>> images(k.dim());
  std::map<int, int> row_index;
  for (int i = 0; i < k.dim(); ++i) {
    std::vector<Rational> x(amb);
    for (int j = 0; j < amb; ++j) x[j] = k.basis().at(i, j);
    std::vector<Rational> y = op.apply(x);
    for (int t = 0; t < op.rows(); ++t)
      if (!is_zero(y[t])) {
        images[i].emplace(t, y[t]);
        row_index.emplace(t, 0);
      }
  }
  int next = 0;
  for (auto& [row, idx] : row_index) idx = next++;
  RationalMatrix compact(int(row_index.size()), k.dim());
  for (int i = 0; i < k.dim(); ++i)
    for (const auto& [row, v] : images[i]) compact.at(row_index.at(row), i) = v;
  LinearSubspace coeffs = kernel(compact);
  return LinearSubspace(amb, combine_rows(coeffs, k));
}

RationalMatrix mul_operator(const Multivector& t, Side side) {
  const Signature& sig = t.sig();
  const int dim = int(sig.blade_count());
  RationalMatrix m(dim, dim);
  for (Blade b = 0; b < Blade(dim); ++b) {
    for (const auto& [a, c] : t.coeffs()) {
      BladeProduct p = side == Side::Left ? blade_product(a, b, sig) : blade_product(b, a, sig);
      if (p.coeff == 0) continue;
      m.at(int(p.blade), int(b)) += p.coeff * c;
    }
  }
  return m;
}

std::optional<Multivector> inverse(const Multivector& t) {
  const Signature& sig = t.sig();
  const int dim = int(sig.blade_count());
  RationalMatrix aug(dim, dim + 1);
  {
    RationalMatrix left = mul_operator(t, Side::Left);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) aug.at(i, j) = left.at(i, j);
  }
  aug.at(0, dim) = 1;  // vec(e)
  aug.rref();
  // Invertible iff the multiplication operator itself has full rank: every
  // one of the first `dim` columns must carry a pivot (a pivot landing in
  // the augmented column would only signal inconsistency).
  for (int col = 0; col < dim; ++col)
    if (is_zero(aug.at(col, col))) return std::nullopt;
  std::vector<Rational> x(dim);
  for (int i = 0; i < dim; ++i) x[i] = aug.at(i, dim);
  Multivector inv = Multivector::from_vector(sig, x);
  // A left inverse is two-sided in a finite-dimensional unital algebra.
  Multivector e = Multivector::scalar(sig, 1);
  if (!(t * inv == e) || !(inv * t == e)) throw std::logic_error("inverse failed verification");
  return inv;
}

}  // namespace ga
