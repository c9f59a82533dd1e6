#pragma once

#include <vector>

#include "sf/poly.hpp"

namespace sf {

// Dense matrix of polynomials, row-major.
class PMatrix {
public:
  PMatrix() = default;
  PMatrix(const PolyRing* R, size_t rows, size_t cols)
      : R_(R), rows_(rows), cols_(cols), a_(rows * cols, Poly::zero(R)) {}

  static PMatrix identity(const PolyRing* R, size_t n);
  static PMatrix scalar(const PolyRing* R, size_t n, const Poly& z);

  const PolyRing* ring() const { return R_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Poly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Poly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

  bool is_zero() const;

  PMatrix mul(const PMatrix& o) const;
  PMatrix add(const PMatrix& o) const;
  PMatrix sub(const PMatrix& o) const;
  PMatrix neg() const;
  PMatrix transpose() const;
  PMatrix scaled(const Poly& z) const;
  PMatrix map_ring(const PolyRing* R2) const;

  std::vector<Poly> column(size_t j) const;
  void set_column(size_t j, const std::vector<Poly>& col);
  PMatrix drop_row_col(size_t r, size_t c) const;

  bool operator==(const PMatrix& o) const;

private:
  const PolyRing* R_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

}  // namespace sf
