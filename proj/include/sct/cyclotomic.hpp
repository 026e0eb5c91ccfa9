#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sct/rational.hpp"

namespace sct {

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic,
// length phi(m) + 1.  Computed by exact division of x^m - 1 by the
// cyclotomic polynomials of the proper divisors of m.
std::vector<BigInt> cyclotomic_polynomial(unsigned m);

// An element of Q(zeta_m), stored as the canonical residue modulo the m-th
// cyclotomic polynomial: a rational coefficient vector of length phi(m).
// Equality of values with different conductors is decided after promoting
// both into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();  // zero, conductor 1
  explicit Cyclotomic(const Rational& r);
  Cyclotomic(unsigned m, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(unsigned m, long long e);
  static Cyclotomic zero_in(unsigned m);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclotomic promoted(unsigned big_m) const;  // requires conductor | big_m

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);  // r must be nonzero
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }

  bool operator==(const Cyclotomic& o) const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws std::domain_error if not rational
  bool has_integral_coeffs() const;

  Cyclotomic conj() const;  // the automorphism zeta_m -> zeta_m^{-1}

  std::string str() const;

 private:
  unsigned m_;
  std::vector<Rational> c_;
};

// Character values for the prime field F_p live in Q(zeta_m) with
// m = lcm(p, p-1): the additive characters take values in mu_p and the
// multiplicative characters of F_p^* in mu_{p-1}.
class CharacterRing {
 public:
  explicit CharacterRing(unsigned p);  // p must be prime

  unsigned p() const { return p_; }
  unsigned conductor() const { return m_; }
  unsigned generator() const { return g_; }  // smallest primitive root mod p
  unsigned dlog(unsigned u) const;           // base-generator log of u in F_p^*

  // eps^t where eps = zeta_p, t taken mod p.
  const Cyclotomic& additive(long long t) const;
  // theta_k(u) = zeta_{p-1}^{k * dlog(u)}; u must be a unit mod p.
  const Cyclotomic& multiplicative(unsigned k, unsigned u) const;
  // zeta_m^e
  const Cyclotomic& root(long long e) const;

 private:
  unsigned p_, m_, g_;
  std::vector<unsigned> dlog_;
  std::vector<Cyclotomic> zeta_pow_;
};

// Accumulates integer multiplicities of roots of unity zeta_m^e, converting
// to a Cyclotomic only once; keeps orbit-sum loops in machine integers.
class RootCounter {
 public:
  explicit RootCounter(unsigned m);
  void add(long long e, long long mult = 1);
  unsigned conductor() const { return m_; }
  Cyclotomic value() const;

 private:
  unsigned m_;
  std::vector<long long> cnt_;
};

bool is_prime(unsigned long long v);

}  // namespace sct
