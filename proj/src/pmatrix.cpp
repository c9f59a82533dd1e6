#include "sf/pmatrix.hpp"

namespace sf {

PMatrix PMatrix::identity(const PolyRing* R, size_t n) {
  return scalar(R, n, Poly::constant(R, 1));
}

PMatrix PMatrix::scalar(const PolyRing* R, size_t n, const Poly& z) {
  PMatrix m(R, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = z;
  return m;
}

bool PMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PMatrix PMatrix::mul(const PMatrix& o) const {
  if (cols_ != o.rows_) fail("InternalError", "polynomial matrix product dimension mismatch");
  PMatrix r(R_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Poly& v = at(i, k);
      if (v.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j).add(v.mul(o.at(k, j)));
      }
    }
  return r;
}

PMatrix PMatrix::add(const PMatrix& o) const {
  PMatrix r(R_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].add(o.a_[i]);
  return r;
}

PMatrix PMatrix::sub(const PMatrix& o) const {
  PMatrix r(R_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].sub(o.a_[i]);
  return r;
}

PMatrix PMatrix::neg() const {
  PMatrix r(R_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].neg();
  return r;
}

PMatrix PMatrix::transpose() const {
  PMatrix r(R_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PMatrix PMatrix::scaled(const Poly& z) const {
  PMatrix r(R_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].mul(z);
  return r;
}

PMatrix PMatrix::map_ring(const PolyRing* R2) const {
  PMatrix r(R2, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].map_ring(R2);
  return r;
}

std::vector<Poly> PMatrix::column(size_t j) const {
  std::vector<Poly> c;
  c.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

void PMatrix::set_column(size_t j, const std::vector<Poly>& col) {
  for (size_t i = 0; i < rows_; ++i) at(i, j) = col[i];
}

PMatrix PMatrix::drop_row_col(size_t r, size_t c) const {
  PMatrix m(R_, rows_ - 1, cols_ - 1);
  for (size_t i = 0, ii = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (size_t j = 0, jj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m.at(ii, jj) = at(i, j);
      ++jj;
    }
    ++ii;
  }
  return m;
}

bool PMatrix::operator==(const PMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

}  // namespace sf
