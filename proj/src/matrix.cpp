#include "sct/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sct {

Mat Mat::identity(uint32_t n, uint32_t p) {
  Mat m(n, p);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(n_, p_);
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t k = 0; k < n_; ++k) {
      uint32_t v = a_[i * n_ + k];
      if (v == 0) continue;
      for (uint32_t j = 0; j < n_; ++j)
        r.a_[i * n_ + j] = static_cast<uint8_t>((r.a_[i * n_ + j] + v * o.a_[k * n_ + j]) % p_);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(n_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = static_cast<uint8_t>((a_[i] + o.a_[i]) % p_);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(n_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = static_cast<uint8_t>((a_[i] + p_ - o.a_[i]) % p_);
  return r;
}

Mat Mat::inverse() const {
  PrimeField F(p_);
  Mat work = *this;
  Mat inv = identity(n_, p_);
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("matrix is singular");
    if (pivot != col)
      for (uint32_t j = 0; j < n_; ++j) {
        std::swap(work.a_[pivot * n_ + j], work.a_[col * n_ + j]);
        std::swap(inv.a_[pivot * n_ + j], inv.a_[col * n_ + j]);
      }
    uint8_t s = F.inv(work.at(col, col));
    for (uint32_t j = 0; j < n_; ++j) {
      work.a_[col * n_ + j] = F.mul(work.a_[col * n_ + j], s);
      inv.a_[col * n_ + j] = F.mul(inv.a_[col * n_ + j], s);
    }
    for (uint32_t r = 0; r < n_; ++r) {
      if (r == col) continue;
      uint8_t f = work.at(r, col);
      if (f == 0) continue;
      for (uint32_t j = 0; j < n_; ++j) {
        work.a_[r * n_ + j] = F.sub(work.a_[r * n_ + j], F.mul(f, work.a_[col * n_ + j]));
        inv.a_[r * n_ + j] = F.sub(inv.a_[r * n_ + j], F.mul(f, inv.a_[col * n_ + j]));
      }
    }
  }
  return inv;
}

bool Mat::is_zero() const {
  for (uint8_t b : a_)
    if (b != 0) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (uint32_t i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (uint32_t j = 0; j < n_; ++j) os << (j ? " " : "[") << static_cast<int>(at(i, j));
    os << "]" << (i + 1 == n_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace sct
