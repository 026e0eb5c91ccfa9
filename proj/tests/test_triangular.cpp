#include "doctest.h"
#include "sct/triangular.hpp"

#include <map>
#include <stdexcept>

using namespace sct;

namespace {

TriClassLabel lab(std::vector<int> h, std::vector<Root> roots) {
    return TriClassLabel{std::move(h), BasicSubset(std::move(roots))};
}

}  // namespace

TEST_CASE("torus indexing round trip") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    CHECK(G.torus_order() == 8);
    CHECK(G.order() == 216);
    for (Idx t = 0; t < G.torus_order(); ++t) CHECK(G.torus_index(G.torus_values(t)) == t);
    CHECK(G.torus_values(G.torus_one()) == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS((void)G.torus_index({0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)G.torus_index({1, 1}), std::invalid_argument);
}

TEST_CASE("group law of the full triangular group") {
    const TriangularContext G = TriangularContext::triangular(2, 3);
    CHECK(G.order() == 12);
    for (Idx a = 0; a < G.order(); ++a) {
        CHECK(G.gmul(a, G.identity()) == a);
        CHECK(G.gmul(G.identity(), a) == a);
        CHECK(G.gmul(a, G.ginv(a)) == G.identity());
        CHECK(G.gmul(G.ginv(a), a) == G.identity());
        for (Idx b = 0; b < G.order(); ++b)
            CHECK(G.to_matrix(G.gmul(a, b)) == G.to_matrix(a) * G.to_matrix(b));
    }
    CHECK_NOTHROW(G.cayley());
    CHECK_NOTHROW(TriangularContext::triangular(3, 2).cayley());
}

TEST_CASE("matrix product agrees on a sample of the bigger group") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    for (Idx a = 7; a < G.order(); a += 31)
        for (Idx b = 3; b < G.order(); b += 29) {
            CHECK(G.to_matrix(G.gmul(a, b)) == G.to_matrix(a) * G.to_matrix(b));
            CHECK(G.gmul(a, G.ginv(a)) == G.identity());
        }
}

TEST_CASE("superclasses of the triangular group on two points") {
    const TriangularContext G = TriangularContext::triangular(2, 3);
    REQUIRE(G.superclasses().size() == 5);

    std::map<TriClassLabel, size_t> size_by_label;
    for (const auto& sc : G.superclasses()) size_by_label[sc.label] = sc.members.size();
    CHECK(size_by_label[lab({1, 1}, {})] == 1);
    CHECK(size_by_label[lab({1, 1}, {{1, 2}})] == 2);
    CHECK(size_by_label[lab({2, 1}, {})] == 3);
    CHECK(size_by_label[lab({1, 2}, {})] == 3);
    CHECK(size_by_label[lab({2, 2}, {})] == 3);

    size_t total = 0;
    for (const auto& sc : G.superclasses()) total += sc.members.size();
    CHECK(total == G.order());

    // the identity sits alone in class 0
    CHECK(G.superclass_of(G.identity()) == 0);
    CHECK(G.superclasses()[0].members.size() == 1);

    for (size_t c = 0; c < G.superclasses().size(); ++c)
        CHECK(G.superclass_by_label(G.superclasses()[c].label) == static_cast<int>(c));
}

TEST_CASE("superclass counts for triangular groups") {
    CHECK(TriangularContext::triangular(3, 2).superclasses().size() == 5);
    CHECK(TriangularContext::triangular(3, 3).superclasses().size() == 15);
}

TEST_CASE("canonical members have fixing diagonals") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    for (const auto& sc : G.superclasses()) {
        // the diagonal is constant across the class
        for (Idx g : sc.members) CHECK(G.torus_values(G.torus_part(g)) == sc.label.h);
        for (int i : sc.label.D.support())
            CHECK(sc.label.h[static_cast<size_t>(i - 1)] == 1);
        CHECK(G.nil_part(sc.rep) == G.J().basic_element(sc.label.D));
    }
}

TEST_CASE("nilpotent and dual orbits carry one basic label each") {
    const TriangularContext G2 = TriangularContext::triangular(2, 3);
    CHECK(G2.j_orbits().size() == 2);
    CHECK(G2.dual_orbits().size() == 2);

    const TriangularContext G3 = TriangularContext::triangular(3, 3);
    CHECK(G3.j_orbits().size() == 5);
    CHECK(G3.dual_orbits().size() == 5);
    // the scaled corner element lies in the orbit labelled by the corner root
    const RootAlgebra& J = G3.J();
    const Idx two_corner = J.unit_root(J.root_index(1, 3), 2);
    CHECK(G3.j_orbits()[G3.j_orbit_of(two_corner)].label == BasicSubset({{1, 3}}));
    CHECK(G3.dual_orbits()[G3.dual_orbit_of(two_corner)].label == BasicSubset({{1, 3}}));
}

TEST_CASE("corner pieces of the algebra and its dual") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    const RootAlgebra& J = G.J();
    const std::vector<int> S = {1, 3};

    const auto corner = G.corner_j(S);
    REQUIRE(corner.size() == 3);  // multiples of the corner unit
    for (Idx x : corner)
        if (x != 0) CHECK(J.digit(x, J.root_index(1, 3)) != 0);
    CHECK(G.corner_dual(S) == corner);

    // torus pieces attached to the idempotent on {1, 3}
    CHECK(G.torus_fixing(S).size() == 2);     // diag(1, *, 1)
    CHECK(G.torus_supported(S).size() == 4);  // diag(*, 1, *)
    for (Idx t : G.torus_fixing(S)) {
        const auto h = G.torus_values(t);
        CHECK(h[0] == 1);
        CHECK(h[2] == 1);
    }
    for (Idx t : G.torus_supported(S)) CHECK(G.torus_values(t)[1] == 1);

    // corner orbits: zero alone, the punctured corner line as one orbit
    const auto orbits = orbit_decompose_within(corner, G.corner_dual_moves(S));
    REQUIRE(orbits.members.size() == 2);
    CHECK(G.orbit_regular_in(orbits.members[1], S));
    CHECK(!G.orbit_regular_in(orbits.members[0], S));
}

TEST_CASE("dual torus transform scales digits by row and column values") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    const RootAlgebra& J = G.J();
    const Idx lam = J.unit_root(J.root_index(1, 3));
    const Idx t = G.torus_index({2, 1, 1});
    // digit scales by h_1^{-1} h_3 = 2^{-1} = 2
    CHECK(G.dual_torus_transform(t, lam) == J.unit_root(J.root_index(1, 3), 2));
    CHECK(G.dual_torus_transform(G.torus_one(), lam) == lam);
}

TEST_CASE("right annihilator of the corner functional") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    const RootAlgebra& J = G.J();
    const Idx lam = J.unit_root(J.root_index(1, 3));
    const auto stab = G.right_stabilizer_subalgebra(lam);
    CHECK(stab.size() == 9);  // digits free on (1,3) and (2,3), zero on (1,2)
    for (Idx y : stab) CHECK(J.digit(y, J.root_index(1, 2)) == 0);
}

TEST_CASE("index support and regularity") {
    const TriangularContext G = TriangularContext::triangular(3, 3);
    const RootAlgebra& J = G.J();
    CHECK(G.index_support(0).empty());
    const Idx x = J.add(J.unit_root(J.root_index(1, 2)), J.unit_root(J.root_index(2, 3)));
    CHECK(G.index_support(x) == std::vector<int>{1, 2, 3});
    CHECK(G.index_support(J.unit_root(J.root_index(1, 3))) == std::vector<int>{1, 3});
}

TEST_CASE("caps guard the construction") {
    CHECK_THROWS_AS(TriangularContext::triangular(6, 5), CapExceeded);
}
