#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sf/field.hpp"

namespace sf {

// Dense matrix over a Field, row-major. Row reduction uses the fixed
// pivoting rule (first nonzero entry in column-major scan), so every
// derived basis is deterministic.
class FMatrix {
public:
  FMatrix() = default;
  FMatrix(const Field* F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FMatrix identity(const Field* F, size_t n);

  const Field* field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Fe at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Fe& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t* row(size_t i) { return a_.data() + i * cols_; }
  const uint32_t* row(size_t i) const { return a_.data() + i * cols_; }

  bool is_zero() const;
  bool operator==(const FMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  FMatrix mul(const FMatrix& b) const;
  FMatrix transpose() const;
  static FMatrix hstack(const std::vector<FMatrix>& parts);
  static FMatrix vstack(const std::vector<FMatrix>& parts);

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<size_t> rref();
  size_t rank() const;

  // Basis of the right null space, as matrix columns (possibly 0 columns).
  FMatrix kernel() const;

  // One solution of A x = b (free variables set to 0), or nullopt when b is
  // outside the column space.
  std::optional<std::vector<Fe>> solve(const std::vector<Fe>& b) const;

private:
  void row_axpy(size_t dst, size_t src, Fe c);  // row[dst] += c * row[src]
  void row_scale(size_t i, Fe c);

  const Field* F_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Fe> a_;
};

}  // namespace sf
