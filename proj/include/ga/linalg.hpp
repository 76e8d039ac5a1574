#pragma once

#include <optional>
#include <vector>

#include "ga/multivector.hpp"
#include "ga/rational.hpp"

namespace ga {

// Dense exact-rational matrix. Pivoting takes the first nonzero entry;
// there are no numerical concerns in exact arithmetic.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  static RationalMatrix identity(int n);
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool operator==(const RationalMatrix& o) const = default;

  // In-place reduction to unique reduced row echelon form; returns rank.
  int rref();

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// A linear subspace of Q^ambient, held as an RREF basis matrix (rows =
// basis vectors). RREF is unique, so subspace equality is matrix equality.
class LinearSubspace {
 public:
  LinearSubspace() : ambient_(0) {}
  // Rows of `span` are canonicalized; zero rows are dropped.
  LinearSubspace(int ambient, RationalMatrix span);

  static LinearSubspace zero_subspace(int ambient) { return LinearSubspace(ambient, RationalMatrix(0, ambient)); }
  static LinearSubspace full(int ambient) { return LinearSubspace(ambient, RationalMatrix::identity(ambient)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const LinearSubspace& other) const;

  bool operator==(const LinearSubspace& o) const = default;

 private:
  int ambient_;
  RationalMatrix basis_;
};

LinearSubspace kernel(const RationalMatrix& m);
LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);
LinearSubspace subspace_sum(const LinearSubspace& a, const LinearSubspace& b);
// {x in k : op(x) = 0}; op acts on column vectors of the ambient space.
LinearSubspace restrict_kernel(const LinearSubspace& k, const RationalMatrix& op);

// Column-sparse operator, for the kernel computations whose matrices have a
// handful of entries per column; keeps 2^n > 256 within reach.
class SparseOperator {
 public:
  SparseOperator(int rows, int cols) : rows_(rows), cols_(cols), by_col_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void add(int row, int col, const Rational& value);
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  RationalMatrix dense() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rational>>> by_col_;
};

LinearSubspace restrict_kernel(const LinearSubspace& k, const SparseOperator& op);

enum class Side { Left, Right };

// 2^n x 2^n matrix of x -> t*x (Left) or x -> x*t (Right) in the blade basis.
RationalMatrix mul_operator(const Multivector& t, Side side);

// Exact inverse, or nullopt when t is a zero divisor. Solves t*x = e and
// verifies the two-sided identity.
std::optional<Multivector> inverse(const Multivector& t);

}  // namespace ga
