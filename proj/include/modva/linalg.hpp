#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "modva/fp.hpp"

namespace modva {

// Dense matrix over F_p with exact Gaussian elimination.  Pivoting is
// deterministic (first nonzero entry in row-major scan order) so reduced
// forms, ranks and kernel bases are reproducible.
class FpMatrix {
 public:
  FpMatrix(size_t rows, size_t cols, uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static FpMatrix fromRows(const std::vector<std::vector<uint32_t>>& rows, size_t cols,
                           uint32_t p) {
    FpMatrix m(rows.size(), cols, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t p() const { return p_; }

  uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  std::vector<std::vector<uint32_t>> rowVectors() const {
    std::vector<std::vector<uint32_t>> out(rows_, std::vector<uint32_t>(cols_));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
    return out;
  }

  // In-place reduced row echelon form; returns the pivot column of each
  // pivot row (row i < rank has its pivot at pivots[i]).
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t sel = row;
      while (sel < rows_ && at(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(sel, j));
      uint32_t inv = invMod(at(row, col), p_);
      for (size_t j = col; j < cols_; ++j) at(row, j) = mulMod(at(row, j), inv, p_);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || at(i, col) == 0) continue;
        uint32_t f = at(i, col);
        for (size_t j = col; j < cols_; ++j)
          at(i, j) = subMod(at(i, j), mulMod(f, at(row, j), p_), p_);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    FpMatrix m = *this;
    return m.rref().size();
  }

  // Basis of the right kernel {x : Ax = 0}, one vector per free column, in
  // ascending free-column order with a 1 in the free slot.
  std::vector<std::vector<uint32_t>> kernelBasis() const {
    FpMatrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> isPivot(cols_, false);
    for (size_t c : pivots) isPivot[c] = true;
    std::vector<std::vector<uint32_t>> out;
    for (size_t free = 0; free < cols_; ++free) {
      if (isPivot[free]) continue;
      std::vector<uint32_t> v(cols_, 0);
      v[free] = 1;
      for (size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = negMod(m.at(i, free), p_);
      out.push_back(std::move(v));
    }
    return out;
  }

  // y = A x
  std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<uint32_t> y(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
      uint64_t acc = 0;
      for (size_t j = 0; j < cols_; ++j) {
        acc += static_cast<uint64_t>(at(i, j)) * x[j] % p_;
        if (acc >= (1ull << 62)) acc %= p_;
      }
      y[i] = static_cast<uint32_t>(acc % p_);
    }
    return y;
  }

 private:
  size_t rows_, cols_;
  uint32_t p_;
  std::vector<uint32_t> a_;
};

// span comparison helper: do the row spans of A and B coincide?
inline bool sameRowSpan(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols() || a.p() != b.p()) return false;
  size_t ra = a.rank(), rb = b.rank();
  if (ra != rb) return false;
  FpMatrix stacked(a.rows() + b.rows(), a.cols(), a.p());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
  return stacked.rank() == ra;
}

}  // namespace modva
