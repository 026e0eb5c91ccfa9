#include "sct/field.hpp"

#include <stdexcept>

namespace sct {

namespace {
void check_same_field(FieldElement a, FieldElement b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("operands lie in different prime fields");
}
}  // namespace

FieldElement fe_make(uint32_t value, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  return FieldElement{value % p, p};
}

FieldElement fe_add(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return FieldElement{(a.value + b.value) % a.modulus, a.modulus};
}

FieldElement fe_sub(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return FieldElement{(a.value + a.modulus - b.value) % a.modulus, a.modulus};
}

FieldElement fe_mul(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  uint64_t prod = static_cast<uint64_t>(a.value) * b.value;
  return FieldElement{static_cast<uint32_t>(prod % a.modulus), a.modulus};
}

FieldElement fe_neg(FieldElement a) { return FieldElement{(a.modulus - a.value) % a.modulus, a.modulus}; }

FieldElement fe_inv(FieldElement a) {
  if (a.value % a.modulus == 0) throw std::domain_error("zero has no multiplicative inverse");
  uint32_t result = 1, base = a.value % a.modulus, e = a.modulus - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<uint32_t>(static_cast<uint64_t>(result) * base % a.modulus);
    base = static_cast<uint32_t>(static_cast<uint64_t>(base) * base % a.modulus);
    e >>= 1;
  }
  return FieldElement{result, a.modulus};
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (p > 251) throw std::invalid_argument("prime too large for byte-entry matrices");
  inv_.assign(p, 0);
  for (uint32_t a = 1; a < p; ++a)
    for (uint32_t b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }
}

uint8_t PrimeField::inv(uint8_t a) const {
  if (a % p_ == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a % p_];
}

}  // namespace sct
