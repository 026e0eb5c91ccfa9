#include "doctest.h"
#include "sct/cyclotomic.hpp"

#include <stdexcept>

using namespace sct;

TEST_CASE("euler phi on small arguments") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    // the first index with a coefficient outside {-1, 0, 1}
    const auto c105 = cyclotomic_polynomial(105);
    CHECK(c105.size() == euler_phi(105) + 1);
    CHECK(c105[7] == -2);
}

TEST_CASE("roots of unity obey the defining relations") {
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(Rational(-1)));
    CHECK((i * i * i * i).rational_value() == Rational(1));

    const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    CHECK((w * w + w + Cyclotomic(Rational(1))).is_zero());

    // full vanishing sums for several primes
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Cyclotomic s;
        for (unsigned t = 0; t < p; ++t) s += Cyclotomic::root_of_unity(p, t);
        CHECK(s.is_zero());
    }
}

TEST_CASE("values meet across different conductors") {
    // -zeta_3 equals zeta_6^5
    const Cyclotomic a = -Cyclotomic::root_of_unity(3, 1);
    CHECK(a == Cyclotomic::root_of_unity(6, 5));
    // zeta_2 * zeta_3 = zeta_6^5 as well
    CHECK(Cyclotomic::root_of_unity(2, 1) * Cyclotomic::root_of_unity(3, 1) ==
          Cyclotomic::root_of_unity(6, 5));
    // promotion keeps the value
    const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    CHECK(w.promoted(12) == w);
}

TEST_CASE("conjugation and rationality predicates") {
    const Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
    CHECK(z.conj() == Cyclotomic::root_of_unity(5, 4));
    CHECK((z * z.conj()).rational_value() == Rational(1));
    CHECK(!z.is_rational());
    CHECK(z.has_integral_coeffs());
    const Cyclotomic r = z + z.conj() + Cyclotomic::root_of_unity(5, 2) +
                         Cyclotomic::root_of_unity(5, 3);
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rational(-1));
    CHECK_THROWS_AS((void)z.rational_value(), std::domain_error);
}

TEST_CASE("rational scaling and division") {
    Cyclotomic z = Cyclotomic::root_of_unity(8, 1);
    z *= Rational(3, 2);
    z /= Rational(3, 2);
    CHECK(z == Cyclotomic::root_of_unity(8, 1));
    CHECK_THROWS((void)(z / Rational(0)));
}

TEST_CASE("character ring for p = 3") {
    const CharacterRing ring(3);
    CHECK(ring.conductor() == 6);
    CHECK(ring.generator() == 2);
    CHECK(ring.dlog(1) == 0);
    CHECK(ring.dlog(2) == 1);
    CHECK(ring.additive(0).rational_value() == Rational(1));
    CHECK((ring.additive(1) + ring.additive(2)).rational_value() == Rational(-1));
    CHECK(ring.additive(5) == ring.additive(2));
    // the order-2 multiplicative character sends the non-square to -1
    CHECK(ring.multiplicative(1, 2).rational_value() == Rational(-1));
    CHECK(ring.multiplicative(1, 1).rational_value() == Rational(1));
    CHECK(ring.multiplicative(0, 2).rational_value() == Rational(1));
}

TEST_CASE("character ring for p = 5") {
    const CharacterRing ring(5);
    CHECK(ring.conductor() == 20);
    CHECK(ring.generator() == 2);
    // theta_1 has order 4: theta_1(2)^2 = theta_1(4) = -1
    const Cyclotomic t2 = ring.multiplicative(1, 2);
    CHECK((t2 * t2).rational_value() == Rational(-1));
    // orthogonality of theta_1 with the trivial character
    Cyclotomic s;
    for (unsigned u = 1; u < 5; ++u) s += ring.multiplicative(1, u);
    CHECK(s.is_zero());
}

TEST_CASE("root counters match direct sums") {
    RootCounter rc(5);
    for (int e = 0; e < 5; ++e) rc.add(e);
    CHECK(rc.value().is_zero());

    RootCounter rc2(6);
    rc2.add(0, 4);
    rc2.add(3, 1);
    CHECK(rc2.value().rational_value() == Rational(3));

    RootCounter rc3(4);
    rc3.add(1);
    rc3.add(2);
    CHECK(rc3.value() == Cyclotomic::root_of_unity(4, 1) - Cyclotomic(Rational(1)));
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}
