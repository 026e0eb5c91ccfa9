#pragma once

#include <cstdint>
#include <vector>

#include "sct/cyclotomic.hpp"

namespace sct {

// A value in F_p together with its modulus; operations check that both
// operands live in the same field and that inverses exist.
struct FieldElement {
  uint32_t value;
  uint32_t modulus;

  bool operator==(const FieldElement&) const = default;
};

FieldElement fe_make(uint32_t value, uint32_t p);
FieldElement fe_add(FieldElement a, FieldElement b);
FieldElement fe_sub(FieldElement a, FieldElement b);
FieldElement fe_mul(FieldElement a, FieldElement b);
FieldElement fe_neg(FieldElement a);
FieldElement fe_inv(FieldElement a);  // throws std::domain_error on 0

// Arithmetic tables for one prime field; entries are canonical uint8_t
// residues, suitable for tight loops over small matrices.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
  uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
  uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a * b) % p_); }
  uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
  uint8_t inv(uint8_t a) const;

 private:
  uint32_t p_;
  std::vector<uint8_t> inv_;
};

}  // namespace sct
