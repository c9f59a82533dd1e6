#include "sf/fmatrix.hpp"

#include <algorithm>

#include "sf/simd_kernels.hpp"

namespace sf {

FMatrix FMatrix::identity(const Field* F, size_t n) {
  FMatrix m(F, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Fe v) { return v == 0; });
}

void FMatrix::row_axpy(size_t dst, size_t src, Fe c) {
  if (c == 0 || cols_ == 0) return;
  if (F_->is_prime_field()) {
    kern::active_kernels().axpy(row(dst), row(src), c, cols_, F_->p());
    return;
  }
  uint32_t* y = row(dst);
  const uint32_t* x = row(src);
  for (size_t j = 0; j < cols_; ++j) y[j] = F_->add(y[j], F_->mul(c, x[j]));
}

void FMatrix::row_scale(size_t i, Fe c) {
  if (c == 1 || cols_ == 0) return;
  if (F_->is_prime_field()) {
    kern::active_kernels().scale(row(i), c, cols_, F_->p());
    return;
  }
  uint32_t* y = row(i);
  for (size_t j = 0; j < cols_; ++j) y[j] = F_->mul(c, y[j]);
}

FMatrix FMatrix::mul(const FMatrix& b) const {
  if (cols_ != b.rows_) fail("InputError", "matrix product dimension mismatch");
  FMatrix c(F_, rows_, b.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      Fe v = at(i, k);
      if (v == 0) continue;
      if (F_->is_prime_field() && b.cols_ > 0) {
        kern::active_kernels().axpy(c.row(i), b.row(k), v, b.cols_, F_->p());
      } else {
        for (size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) = F_->add(c.at(i, j), F_->mul(v, b.at(k, j)));
      }
    }
  return c;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(F_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FMatrix FMatrix::hstack(const std::vector<FMatrix>& parts) {
  size_t rows = parts.at(0).rows_, cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) fail("InputError", "hstack row mismatch");
    cols += p.cols_;
  }
  FMatrix m(parts[0].F_, rows, cols);
  size_t off = 0;
  for (const auto& p : parts) {
    for (size_t i = 0; i < rows; ++i)
      std::copy(p.row(i), p.row(i) + p.cols_, m.row(i) + off);
    off += p.cols_;
  }
  return m;
}

FMatrix FMatrix::vstack(const std::vector<FMatrix>& parts) {
  size_t cols = parts.at(0).cols_, rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) fail("InputError", "vstack column mismatch");
    rows += p.rows_;
  }
  FMatrix m(parts[0].F_, rows, cols);
  size_t off = 0;
  for (const auto& p : parts) {
    std::copy(p.a_.begin(), p.a_.end(), m.a_.begin() + off * cols);
    off += p.rows_;
  }
  return m;
}

std::vector<size_t> FMatrix::rref() {
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < cols_ && prow < rows_; ++col) {
    size_t sel = rows_;
    for (size_t i = prow; i < rows_; ++i)
      if (at(i, col) != 0) { sel = i; break; }
    if (sel == rows_) continue;
    if (sel != prow)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(prow, j));
    row_scale(prow, F_->inv(at(prow, col)));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == prow) continue;
      Fe v = at(i, col);
      if (v != 0) row_axpy(i, prow, F_->neg(v));
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

size_t FMatrix::rank() const {
  FMatrix c = *this;
  return c.rref().size();
}

FMatrix FMatrix::kernel() const {
  FMatrix r = *this;
  std::vector<size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;

  size_t nk = cols_ - pivots.size();
  FMatrix k(F_, cols_, nk);
  size_t out = 0;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    k.at(fc, out) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      k.at(pivots[pi], out) = F_->neg(r.at(pi, fc));
    ++out;
  }
  return k;
}

std::optional<std::vector<Fe>> FMatrix::solve(const std::vector<Fe>& b) const {
  if (b.size() != rows_) fail("InputError", "solve dimension mismatch");
  FMatrix aug(F_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, aug.row(i));
    aug.at(i, cols_) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Fe> x(cols_, 0);
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, cols_);
  return x;
}

}  // namespace sf
