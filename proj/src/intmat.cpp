#include "rotunda/intmat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rotunda/errors.hpp"

namespace rotunda {

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InputError("IntMat: entry count does not match dimensions");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMat: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

bool IntMat::lex_less(const IntMat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    int c = cmp(entries_[k], o.entries_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

IntMat IntMat::multiply(const IntMat& o) const {
  if (cols_ != o.rows_) throw InputError("IntMat: dimension mismatch in multiply");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMat::is_zero() const {
  for (const Int& x : entries_)
    if (x != 0) return false;
  return true;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMat& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row a += k * row b
void add_row(IntMat& m, std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += k * m.at(b, j);
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_col(IntMat& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = -m.at(i, j);
}

// col a += k * col b
void add_col(IntMat& m, std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += k * m.at(i, b);
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& a) {
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Clear the column below pivot_row with Euclidean row operations.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
      }
      if (best == h.rows()) break;  // column is zero from pivot_row down
      swap_rows(h, pivot_row, best);
      swap_rows(u, pivot_row, best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q, r;
        fdiv_qr(q, r, h.at(i, col), h.at(pivot_row, col));
        add_row(h, i, pivot_row, -q);
        add_row(u, i, pivot_row, -q);
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (pivot_row < h.rows() && h.at(pivot_row, col) != 0) {
      if (h.at(pivot_row, col) < 0) {
        negate_row(h, pivot_row);
        negate_row(u, pivot_row);
      }
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < pivot_row; ++i) {
        Int q, r;
        fdiv_qr(q, r, h.at(i, col), h.at(pivot_row, col));
        add_row(h, i, pivot_row, -q);
        add_row(u, i, pivot_row, -q);
      }
      ++pivot_row;
    }
  }
  return {std::move(h), std::move(u)};
}

namespace {

// Positions of the first nonzero entry in a matrix block, or cols if none.
bool find_nonzero(const IntMat& m, std::size_t start, std::size_t& oi, std::size_t& oj) {
  bool found = false;
  for (std::size_t i = start; i < m.rows(); ++i)
    for (std::size_t j = start; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      if (!found || cmp(abs(m.at(i, j)), abs(m.at(oi, oj))) < 0) {
        oi = i;
        oj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
  IntMat d = a;
  IntMat u = IntMat::identity(a.rows());
  IntMat v = IntMat::identity(a.cols());
  std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pi = k, pj = k;
    if (!find_nonzero(d, k, pi, pj)) break;
    swap_rows(d, k, pi);
    swap_rows(u, k, pi);
    swap_cols(d, k, pj);
    swap_cols(v, k, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column k below the pivot.
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int q, r;
        fdiv_qr(q, r, d.at(i, k), d.at(k, k));
        add_row(d, i, k, -q);
        add_row(u, i, k, -q);
        if (d.at(i, k) != 0) {
          swap_rows(d, k, i);
          swap_rows(u, k, i);
          dirty = true;
        }
      }
      // Clear row k to the right of the pivot.
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int q, r;
        fdiv_qr(q, r, d.at(k, j), d.at(k, k));
        add_col(d, j, k, -q);
        add_col(v, j, k, -q);
        if (d.at(k, j) != 0) {
          swap_cols(d, k, j);
          swap_cols(v, k, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide every entry of the trailing block; if not, fold the
      // offending row into row k and restart the clearing loop.
      for (std::size_t i = k + 1; i < d.rows() && !dirty; ++i)
        for (std::size_t j = k + 1; j < d.cols() && !dirty; ++j) {
          if (d.at(i, j) % d.at(k, k) != 0) {
            add_row(d, k, i, 1);
            add_row(u, k, i, 1);
            dirty = true;
          }
        }
    }
    if (d.at(k, k) < 0) {
      negate_row(d, k);
      negate_row(u, k);
    }
  }
  // The divide-each-successor property holds by construction; normalize signs
  // already done. Assert the chain as a cheap internal check.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (d.at(k, k) != 0 && d.at(k + 1, k + 1) % d.at(k, k) != 0)
      throw std::logic_error("smith_normal_form: divisibility chain violated");
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::size_t int_rank(const IntMat& a) {
  HnfResult h = hermite_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.h.cols(); ++j)
      if (h.h.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

Int determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix not square");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(m, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMat integer_kernel(const IntMat& a) {
  // Rows of U corresponding to zero rows of HNF(A^T) span {x : A x = 0}.
  IntMat at = a.transpose();
  HnfResult h = hermite_normal_form(at);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < h.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.h.cols(); ++j)
      if (h.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(h.u.row(i));
  }
  IntMat k = IntMat::from_rows(rows, a.cols());
  return hermite_normal_form(k).h;
}

IntMat row_lattice_saturation(const IntMat& a) {
  // rowspace(A) is the orthogonal complement of ker(A applied to columns),
  // so saturating twice through integer kernels lands on rowspace ∩ Z^n.
  IntMat k = integer_kernel(a);
  std::size_t kr = int_rank(k);
  IntMat ktrim(kr, a.cols());
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) ktrim.at(i, j) = k.at(i, j);
  IntMat s = integer_kernel(ktrim);
  std::size_t sr = int_rank(s);
  IntMat out(sr, a.cols());
  for (std::size_t i = 0; i < sr; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = s.at(i, j);
  return out;
}

bool in_row_space(const IntMat& a, const IntVec& v) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  IntMat base = IntMat::from_rows(rows, a.cols());
  rows.push_back(v);
  IntMat ext = IntMat::from_rows(rows, a.cols());
  return int_rank(base) == int_rank(ext);
}

namespace {

// Reduced row echelon form over Q, in place. Returns pivot column list.
std::vector<std::size_t> rref(std::vector<RatVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

std::vector<RatVec> q_linear_relations(const std::vector<RatVec>& vectors) {
  std::size_t k = vectors.size();
  if (k == 0) return {};
  std::size_t n = vectors[0].size();
  for (const RatVec& v : vectors)
    if (v.size() != n) throw InputError("q_linear_relations: ragged vectors");

  // Transpose: relations are the kernel of the n x k system.
  std::vector<RatVec> m(n, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m[j][i] = vectors[i][j];
  std::vector<std::size_t> pivots = rref(m);

  std::vector<bool> is_pivot(k, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < k; ++c) {
    if (is_pivot[c]) continue;
    RatVec rel(k, Rat(0));
    rel[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) rel[pivots[r]] = -m[r][c];
    IntVec prim = primitive_integer_vector(rel);
    RatVec out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = Rat(prim[j]);
    basis.push_back(std::move(out));
  }
  return basis;
}

std::size_t rat_rank(const std::vector<RatVec>& vectors) {
  std::vector<RatVec> m = vectors;
  return rref(m).size();
}

namespace {

// Incremental rational echelon basis for rank pruning during enumeration.
struct Echelon {
  std::vector<RatVec> rows;

  // Returns false if v is dependent on the current rows; otherwise adds it.
  bool add(const IntVec& v) {
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
    for (const RatVec& r : rows) {
      std::size_t lead = 0;
      while (lead < r.size() && r[lead] == 0) ++lead;
      if (lead < r.size() && w[lead] != 0) {
        Rat f = w[lead] / r[lead];
        for (std::size_t j = lead; j < w.size(); ++j) w[j] -= f * r[j];
      }
    }
    bool zero = true;
    for (const Rat& x : w)
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) return false;
    rows.push_back(std::move(w));
    return true;
  }
};

}  // namespace

std::vector<IntMat> enumerate_canonical_matrices(std::size_t n, std::size_t rank_min,
                                                 long height) {
  if (rank_min < 1 || rank_min > n) throw PreconditionError("rank_min must be in [1, n]");
  if (height < 1) throw PreconditionError("height must be >= 1");

  // Primitive direction vectors of bounded height, first nonzero positive.
  std::vector<IntVec> dirs;
  IntVec v(n, Int(0));
  std::function<void(std::size_t)> gen = [&](std::size_t i) {
    if (i == n) {
      if (is_zero_vec(v)) return;
      IntVec p = primitive_part(v);
      if (p == v) dirs.push_back(v);
      return;
    }
    for (long x = -height; x <= height; ++x) {
      v[i] = x;
      gen(i + 1);
    }
    v[i] = 0;
  };
  gen(0);
  // Keep one of {v, -v}: primitive_part enforces positive leading entry,
  // so the negatives were already dropped above. Dedupe just in case.
  std::sort(dirs.begin(), dirs.end(), [](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  std::set<std::vector<Int>> seen;  // serialized canonical representatives
  std::vector<IntMat> out;

  // DFS over independent subsets; every rational row space spanned by
  // height-bounded vectors has a basis among the primitive directions.
  std::vector<IntVec> chosen;
  std::function<void(std::size_t, Echelon&)> dfs = [&](std::size_t start, Echelon& ech) {
    std::size_t r = chosen.size();
    if (r >= rank_min && r >= 1) {
      IntMat m = IntMat::from_rows(chosen, n);
      IntMat canon = row_lattice_saturation(m);
      std::vector<Int> key;
      key.push_back(Int(static_cast<long>(canon.rows())));
      for (const Int& e : canon.entries()) key.push_back(e);
      if (seen.insert(key).second) out.push_back(canon);
    }
    if (r == n) return;
    for (std::size_t i = start; i < dirs.size(); ++i) {
      Echelon next = ech;
      if (!next.add(dirs[i])) continue;
      chosen.push_back(dirs[i]);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  Echelon ech;
  dfs(0, ech);

  std::sort(out.begin(), out.end(), [](const IntMat& a, const IntMat& b) { return a.lex_less(b); });
  return out;
}

}  // namespace rotunda
