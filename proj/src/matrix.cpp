#include "mrgrc/matrix.hpp"

#include "mrgrc/errors.hpp"

namespace mrgrc {

std::vector<uint32_t> SymbolMatrix::row(int r) const {
  return std::vector<uint32_t>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
}

void SymbolMatrix::append_row(const std::vector<uint32_t>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw Error(Errc::BadInput, "append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

void SymbolMatrix::append_rows(const SymbolMatrix& other) {
  if (other.rows_ == 0) return;
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw Error(Errc::BadInput, "append_rows: width mismatch");
  a_.insert(a_.end(), other.a_.begin(), other.a_.end());
  rows_ += other.rows_;
}

SymbolMatrix identity_matrix(int n) {
  SymbolMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SymbolMatrix random_matrix(int rows, int cols, const Field& f, Rng& rng) {
  SymbolMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<uint32_t>(rng.below(f.order())));
  return m;
}

SymbolMatrix stack(const SymbolMatrix& a, const SymbolMatrix& b) {
  SymbolMatrix m = a;
  m.append_rows(b);
  return m;
}

SymbolMatrix matmul(const SymbolMatrix& a, const SymbolMatrix& b, const Field& f) {
  if (a.cols() != b.rows()) throw Error(Errc::BadInput, "matmul: inner dimension mismatch");
  SymbolMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.set(i, j, f.add(c.at(i, j), f.mul(aik, b.at(k, j))));
    }
  }
  return c;
}

int rank(const SymbolMatrix& m, const Field& f) {
  // Plain Gaussian elimination on a working copy.
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<uint32_t>> w(rows);
  for (int r = 0; r < rows; ++r) w[r] = m.row(r);

  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (w[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(w[rk], w[pivot]);
    uint32_t piv_inv = f.inv(w[rk][c]);
    for (int j = c; j < cols; ++j) w[rk][j] = f.mul(w[rk][j], piv_inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rk || w[r][c] == 0) continue;
      uint32_t factor = w[r][c];
      for (int j = c; j < cols; ++j) w[r][j] = f.sub(w[r][j], f.mul(factor, w[rk][j]));
    }
    ++rk;
  }
  return rk;
}

bool in_rowspace(const SymbolMatrix& candidate, const SymbolMatrix& basis, const Field& f) {
  int rb = rank(basis, f);
  return rank(stack(basis, candidate), f) == rb;
}

}  // namespace mrgrc
