#pragma once

#include <cstdint>
#include <vector>

#include "mrgrc/gf.hpp"
#include "mrgrc/rng.hpp"

namespace mrgrc {

// Dense matrix of field elements. Rows are coefficient vectors over the B
// message symbols; rank doubles as entropy (in log q units) for linear codes.
class SymbolMatrix {
 public:
  SymbolMatrix() : rows_(0), cols_(0) {}
  SymbolMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  void set(int r, int c, uint32_t v) { a_[size_t(r) * cols_ + c] = v; }

  std::vector<uint32_t> row(int r) const;
  void append_row(const std::vector<uint32_t>& row);
  void append_rows(const SymbolMatrix& other);  // vertical stack; cols must match

  bool operator==(const SymbolMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

SymbolMatrix identity_matrix(int n);
SymbolMatrix random_matrix(int rows, int cols, const Field& f, Rng& rng);
SymbolMatrix stack(const SymbolMatrix& a, const SymbolMatrix& b);

// c = a * b over f.
SymbolMatrix matmul(const SymbolMatrix& a, const SymbolMatrix& b, const Field& f);

int rank(const SymbolMatrix& m, const Field& f);

// true iff every candidate row already lies in the rowspace of basis:
// rank(basis) == rank(basis stacked with candidate).
bool in_rowspace(const SymbolMatrix& candidate, const SymbolMatrix& basis, const Field& f);

}  // namespace mrgrc
