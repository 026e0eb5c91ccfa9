#include "sct/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sct {

bool is_prime(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned v = m;
  for (unsigned d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      result -= result / d;
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) result -= result / v;
  return result;
}

namespace {

// Quotient of exact polynomial division (ascending coefficients).
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<BigInt> quot(dn - dd + 1);
  for (size_t k = dn - dd + 1; k-- > 0;) {
    BigInt c = num[k + dd] / den[dd];
    quot[k] = c;
    if (c != 0)
      for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("polynomial division not exact");
  return quot;
}

struct RingData {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<Rational> modulus;            // Phi_m, ascending, monic, length phi+1
  std::vector<std::vector<Rational>> zpow;  // zeta^e reduced, e in [0, m)
};

// Reduce a polynomial (ascending coefficients) modulo Phi_m in place and
// truncate to length phi.
void reduce_mod(std::vector<Rational>& v, const RingData& rd) {
  for (size_t k = v.size(); k-- > rd.phi;) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    for (unsigned i = 0; i <= rd.phi; ++i) v[k - rd.phi + i] -= c * rd.modulus[i];
  }
  v.resize(rd.phi);
}

const RingData& ring_data(unsigned m) {
  static std::mutex mtx;
  static std::map<unsigned, std::unique_ptr<RingData>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;

  auto rd = std::make_unique<RingData>();
  rd->m = m;
  rd->phi = euler_phi(m);
  for (const BigInt& c : cyclotomic_polynomial(m)) rd->modulus.emplace_back(c);

  std::vector<Rational> cur(rd->phi, Rational(0));
  cur[0] = 1;
  rd->zpow.push_back(cur);
  for (unsigned e = 1; e < m; ++e) {
    std::vector<Rational> next(rd->phi + 1, Rational(0));
    for (unsigned k = 0; k < rd->phi; ++k) next[k + 1] = cur[k];
    reduce_mod(next, *rd);
    cur = next;
    rd->zpow.push_back(cur);
  }
  const RingData& ref = *rd;
  cache.emplace(m, std::move(rd));
  return ref;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<BigInt> poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;  // x^m - 1
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

Cyclotomic::Cyclotomic() : m_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r) : m_(1), c_(1, r) {}

Cyclotomic::Cyclotomic(unsigned m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (c_.size() != ring_data(m).phi)
    throw std::invalid_argument("coefficient vector length must equal phi(m)");
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long long e) {
  const RingData& rd = ring_data(m);
  long long r = e % static_cast<long long>(m);
  if (r < 0) r += m;
  return Cyclotomic(m, rd.zpow[static_cast<size_t>(r)]);
}

Cyclotomic Cyclotomic::zero_in(unsigned m) {
  return Cyclotomic(m, std::vector<Rational>(euler_phi(m), Rational(0)));
}

Cyclotomic Cyclotomic::promoted(unsigned big_m) const {
  if (big_m == m_) return *this;
  if (big_m % m_ != 0) throw std::invalid_argument("can only promote into a multiple conductor");
  const RingData& rd = ring_data(big_m);
  const unsigned step = big_m / m_;
  std::vector<Rational> out(rd.phi, Rational(0));
  for (unsigned k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = rd.zpow[(static_cast<unsigned long long>(k) * step) % big_m];
    for (unsigned i = 0; i < rd.phi; ++i) out[i] += c_[k] * pw[i];
  }
  return Cyclotomic(big_m, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned m = std::lcm(m_, o.m_);
  if (m != m_) *this = promoted(m);
  if (m != o.m_) {
    Cyclotomic tmp = o.promoted(m);
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
  } else {
    for (unsigned i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  *this += -o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  unsigned m = std::lcm(m_, o.m_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  const RingData& rd = ring_data(m);
  std::vector<Rational> prod(2 * rd.phi, Rational(0));
  for (unsigned i = 0; i < rd.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < rd.phi; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  reduce_mod(prod, rd);
  m_ = m;
  c_ = std::move(prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (Rational& c : c_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r == 0) throw std::domain_error("division by zero");
  for (Rational& c : c_) c /= r;
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  unsigned m = std::lcm(m_, o.m_);
  if (m == m_ && m == o.m_) return c_ == o.c_;
  return promoted(m).c_ == o.promoted(m).c_;
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return c_[0];
}

bool Cyclotomic::has_integral_coeffs() const {
  for (const Rational& c : c_)
    if (!is_integer(c)) return false;
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  const RingData& rd = ring_data(m_);
  std::vector<Rational> out(rd.phi, Rational(0));
  for (unsigned k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = rd.zpow[(m_ - k) % m_];
    for (unsigned i = 0; i < rd.phi; ++i) out[i] += c_[k] * pw[i];
  }
  return Cyclotomic(m_, std::move(out));
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (k == 0) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << "z" << m_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

CharacterRing::CharacterRing(unsigned p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  m_ = std::lcm(p, p - 1);
  g_ = 1;
  if (p > 2) {
    for (unsigned g = 2; g < p; ++g) {
      unsigned order = 1, v = g;
      while (v != 1) {
        v = static_cast<unsigned>((static_cast<unsigned long long>(v) * g) % p);
        ++order;
      }
      if (order == p - 1) {
        g_ = g;
        break;
      }
    }
  }
  dlog_.assign(p, 0);
  unsigned v = 1;
  for (unsigned a = 0; a < p - 1; ++a) {
    dlog_[v] = a;
    v = static_cast<unsigned>((static_cast<unsigned long long>(v) * g_) % p);
  }
  zeta_pow_.reserve(m_);
  for (unsigned e = 0; e < m_; ++e) zeta_pow_.push_back(Cyclotomic::root_of_unity(m_, e));
}

unsigned CharacterRing::dlog(unsigned u) const {
  if (u % p_ == 0) throw std::invalid_argument("discrete log of a non-unit");
  return dlog_[u % p_];
}

const Cyclotomic& CharacterRing::additive(long long t) const {
  long long r = t % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return zeta_pow_[static_cast<size_t>(r) * (m_ / p_)];
}

const Cyclotomic& CharacterRing::multiplicative(unsigned k, unsigned u) const {
  unsigned a = dlog(u);
  unsigned e = (m_ / (p_ - 1)) * ((static_cast<unsigned long long>(k) * a) % (p_ - 1));
  return zeta_pow_[e % m_];
}

const Cyclotomic& CharacterRing::root(long long e) const {
  long long r = e % static_cast<long long>(m_);
  if (r < 0) r += m_;
  return zeta_pow_[static_cast<size_t>(r)];
}

RootCounter::RootCounter(unsigned m) : m_(m), cnt_(m, 0) {}

void RootCounter::add(long long e, long long mult) {
  long long r = e % static_cast<long long>(m_);
  if (r < 0) r += m_;
  cnt_[static_cast<size_t>(r)] += mult;
}

Cyclotomic RootCounter::value() const {
  Cyclotomic acc = Cyclotomic::zero_in(m_);
  for (unsigned e = 0; e < m_; ++e)
    if (cnt_[e] != 0)
      acc += Cyclotomic::root_of_unity(m_, e) * Rational(static_cast<long>(cnt_[e]));
  return acc;
}

}  // namespace sct
