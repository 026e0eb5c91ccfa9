#include "doctest.h"
#include "sct/groups.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

using namespace sct;

namespace {

AdmissiblePair plain(std::vector<Root> roots) {
    BasicSubset D(std::move(roots));
    return AdmissiblePair{D, std::vector<uint8_t>(D.size(), 1)};
}

}  // namespace

TEST_CASE("root algebra arithmetic in the full upper pattern") {
    const RootAlgebra J = RootAlgebra::unitriangular(3, 2);
    CHECK(J.rank() == 3);
    CHECK(J.size() == 8);

    for (Idx x = 0; x < J.size(); ++x) CHECK(J.index(J.digits(x)) == x);

    const int k12 = J.root_index(1, 2), k13 = J.root_index(1, 3), k23 = J.root_index(2, 3);
    REQUIRE(k12 >= 0);
    REQUIRE(k13 >= 0);
    REQUIRE(k23 >= 0);
    CHECK(J.mul(J.unit_root(k12), J.unit_root(k23)) == J.unit_root(k13));
    CHECK(J.mul(J.unit_root(k23), J.unit_root(k12)) == 0);
    CHECK(J.mul(J.unit_root(k13), J.unit_root(k12)) == 0);

    // matrix round trip agrees with the abstract product
    for (Idx a = 0; a < J.size(); ++a) {
        CHECK(J.from_matrix(J.to_matrix(a)) == a);
        for (Idx b = 0; b < J.size(); ++b)
            CHECK(J.to_matrix(J.mul(a, b)) == J.to_matrix(a) * J.to_matrix(b));
    }
}

TEST_CASE("root algebra validates its input") {
    CHECK_THROWS_AS(RootAlgebra(3, 2, {{1, 2}, {2, 3}}), std::invalid_argument);  // not closed
    CHECK_THROWS_AS(RootAlgebra(3, 4, {{1, 2}}), std::invalid_argument);          // p not prime
    CHECK_THROWS_AS(RootAlgebra(2, 2, {{1, 3}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(RootAlgebra::unitriangular(9, 7), CapExceeded);
    CHECK_NOTHROW(RootAlgebra(3, 2, {{1, 2}, {1, 3}}));  // closed without (2,3)
}

TEST_CASE("canonical pattern recognition") {
    const RootAlgebra J = RootAlgebra::unitriangular(3, 3);
    const Idx x = J.add(J.unit_root(J.root_index(1, 2)), J.unit_root(J.root_index(2, 3)));
    auto D = J.basic01_pattern(x);
    REQUIRE(D.has_value());
    CHECK(*D == BasicSubset({{1, 2}, {2, 3}}));

    const Idx y = J.add(J.unit_root(J.root_index(1, 2), 2), J.unit_root(J.root_index(2, 3)));
    CHECK(!J.basic01_pattern(y).has_value());  // digit 2 is not 0/1
    auto P = J.basic_support_pattern(y);
    REQUIRE(P.has_value());
    CHECK(P->D == BasicSubset({{1, 2}, {2, 3}}));
    CHECK(P->labels == std::vector<uint8_t>{2, 1});

    const Idx z = J.add(J.unit_root(J.root_index(1, 2)), J.unit_root(J.root_index(1, 3)));
    CHECK(!J.basic_support_pattern(z).has_value());  // row 1 used twice
}

TEST_CASE("group law of the unipotent group") {
    const UTContext G = UTContext::unitriangular(3, 3);
    CHECK(G.order() == 27);
    for (Idx a = 0; a < G.order(); ++a) {
        CHECK(G.gmul(a, G.identity()) == a);
        CHECK(G.gmul(G.identity(), a) == a);
        CHECK(G.gmul(a, G.ginv(a)) == G.identity());
        CHECK(G.gmul(G.ginv(a), a) == G.identity());
    }
    // associativity is checked exhaustively inside the table builder
    const GroupTable T = G.cayley();
    CHECK(T.order == 27);
    CHECK(T.times(3, 5) == G.gmul(3, 5));
}

TEST_CASE("superclasses of the order-8 group") {
    const UTContext G = UTContext::unitriangular(3, 2);
    REQUIRE(G.superclasses().size() == 5);

    std::map<AdmissiblePair, size_t> size_by_label;
    for (const auto& sc : G.superclasses()) {
        REQUIRE(sc.label.has_value());
        size_by_label[*sc.label] = sc.members.size();
    }
    CHECK(size_by_label[plain({})] == 1);
    CHECK(size_by_label[plain({{1, 2}})] == 2);
    CHECK(size_by_label[plain({{1, 3}})] == 1);
    CHECK(size_by_label[plain({{2, 3}})] == 2);
    CHECK(size_by_label[plain({{1, 2}, {2, 3}})] == 2);

    // class sizes partition the group
    size_t total = 0;
    for (const auto& sc : G.superclasses()) total += sc.members.size();
    CHECK(total == G.order());

    // label lookup inverts labelling
    for (size_t c = 0; c < G.superclasses().size(); ++c)
        CHECK(G.superclass_by_label(G.superclass_label(c)) == static_cast<int>(c));
}

TEST_CASE("superclass counts over larger ground sets") {
    CHECK(UTContext::unitriangular(3, 3).superclasses().size() == 11);
    CHECK(UTContext::unitriangular(4, 2).superclasses().size() == 15);
    CHECK(UTContext::unitriangular(4, 3).superclasses().size() == 49);
    // labels exhaust the admissible pairs
    const UTContext G = UTContext::unitriangular(3, 3);
    for (const auto& P : enumerate_admissible_pairs(3, 3))
        CHECK(G.superclass_by_label(P) >= 0);
}

TEST_CASE("dual orbits of the order-8 group") {
    const UTContext G = UTContext::unitriangular(3, 2);
    REQUIRE(G.dual_orbits().size() == 5);

    const RootAlgebra& J = G.J();
    const Idx lam = J.unit_root(J.root_index(1, 3));  // the corner functional
    const auto& orb = G.dual_orbits()[G.dual_orbit_of(lam)];
    CHECK(orb.members.size() == 4);
    CHECK(orb.right_orbit_count == 2);
    CHECK(G.right_orbit(lam).size() == 2);
    CHECK(G.left_orbit(lam).size() == 2);

    const auto stab = G.right_stabilizer_subalgebra(lam);
    CHECK(stab.size() == 4);
    for (Idx y : stab)
        CHECK(J.digit(y, J.root_index(1, 2)) == 0);
}

TEST_CASE("orbit sizes times stabilizer sizes give the group order") {
    for (int n = 2; n <= 3; ++n)
        for (int p : {2, 3}) {
            const UTContext G = UTContext::unitriangular(n, p);
            for (const auto& orb : G.dual_orbits()) {
                const Idx lam = orb.rep;
                CHECK(G.right_orbit(lam).size() * G.right_stabilizer_subalgebra(lam).size() ==
                      G.order());
            }
        }
}

TEST_CASE("dual orbit labels biject with superclass labels") {
    for (int n = 2; n <= 4; ++n) {
        const UTContext G = UTContext::unitriangular(n, 2);
        CHECK(G.dual_orbits().size() == G.superclasses().size());
        for (size_t c = 0; c < G.dual_orbits().size(); ++c)
            CHECK(G.dual_orbit_by_label(G.dual_orbit_label(c)) == static_cast<int>(c));
    }
}

TEST_CASE("group table construction rejects broken laws") {
    CHECK_NOTHROW(build_group_table(2, 0, [](Idx a, Idx b) { return a ^ b; }));
    CHECK_THROWS_AS(build_group_table(2, 0, [](Idx, Idx) { return Idx{0}; }),
                    std::logic_error);
    const GroupTable T = build_group_table(4, 0, [](Idx a, Idx b) { return (a + b) % 4; });
    CHECK(T.inv(1) == 3);
    CHECK(T.conj(1, 2) == 1);
}
