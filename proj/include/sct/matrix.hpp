#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sct/field.hpp"

namespace sct {

// Dense square matrix over F_p with canonical byte entries.  Row/column
// indices are 0-based; the root/position types used by the combinatorial
// layer are 1-based and converted at the boundary.
class Mat {
 public:
  Mat() : n_(0), p_(2) {}
  Mat(uint32_t n, uint32_t p) : n_(n), p_(p), a_(n * n, 0) {}

  static Mat identity(uint32_t n, uint32_t p);

  uint32_t n() const { return n_; }
  uint32_t p() const { return p_; }
  uint8_t at(uint32_t r, uint32_t c) const { return a_[r * n_ + c]; }
  void set(uint32_t r, uint32_t c, uint8_t v) { a_[r * n_ + c] = static_cast<uint8_t>(v % p_); }
  const std::vector<uint8_t>& data() const { return a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat inverse() const;  // throws std::domain_error if singular

  bool is_zero() const;
  bool operator==(const Mat& o) const = default;
  auto operator<=>(const Mat& o) const = default;

  std::string str() const;

 private:
  uint32_t n_, p_;
  std::vector<uint8_t> a_;
};

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = 146527 * m.n() + m.p();
    for (uint8_t b : m.data()) h = h * 1099511628211ULL + b;
    return h;
  }
};

}  // namespace sct
