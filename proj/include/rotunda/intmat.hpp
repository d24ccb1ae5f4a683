#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rotunda/numeric.hpp"

namespace rotunda {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Values are immutable in spirit: the mutating accessors exist for
/// construction, all module operations are pure.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  const std::vector<Int>& entries() const { return entries_; }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  /// Total order: by (rows, cols), then entry-lexicographic. Used for the
  /// deterministic enumeration order.
  bool lex_less(const IntMat& o) const;

  IntMat multiply(const IntMat& o) const;
  IntMat transpose() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

struct HnfResult {
  IntMat h;  // row-style Hermite canonical form, U*A = H
  IntMat u;  // unimodular transform
};

struct SnfResult {
  IntMat d;  // diagonal, d1 | d2 | ...
  IntMat u;  // unimodular, U*A*V = D
  IntMat v;  // unimodular
};

/// Row-style Hermite normal form. Pivots are positive, entries above a pivot
/// are reduced into [0, pivot), zero rows sink to the bottom.
HnfResult hermite_normal_form(const IntMat& a);

/// Smith normal form with both transforms and the divisibility chain fixed up.
SnfResult smith_normal_form(const IntMat& a);

/// Rank over the rationals.
std::size_t int_rank(const IntMat& a);

/// Exact determinant (Bareiss). Requires a square matrix.
Int determinant(const IntMat& a);

/// Basis of the right kernel {x in Z^cols : A x = 0} as rows of the result.
/// The returned lattice is saturated (a direct summand of Z^cols).
IntMat integer_kernel(const IntMat& a);

/// Basis (as rows, in HNF) of the saturation of the row lattice of A:
/// rowspace_Q(A) intersected with Z^cols.
IntMat row_lattice_saturation(const IntMat& a);

/// True iff v lies in the rational row space of A.
bool in_row_space(const IntMat& a, const IntVec& v);

/// Basis of the relation space {c : sum_i c_i v_i = 0} of a family of
/// rational vectors, canonicalized to primitive integer vectors with
/// positive leading entry, ordered deterministically.
/// All vectors must have equal length.
std::vector<RatVec> q_linear_relations(const std::vector<RatVec>& vectors);

/// Rank over Q of a family of rational vectors.
std::size_t rat_rank(const std::vector<RatVec>& vectors);

/// One representative per distinct rational row space realized by an integer
/// matrix of size r x n (rank_min <= r <= n), full row rank, entries bounded
/// by |.| <= height. Representatives are the HNF bases of the saturated row
/// lattices, sorted by (rank, entry-lexicographic).
std::vector<IntMat> enumerate_canonical_matrices(std::size_t n, std::size_t rank_min,
                                                 long height);

}  // namespace rotunda
