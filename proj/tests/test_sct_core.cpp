#include "doctest.h"
#include "sct/groups.hpp"
#include "sct/sct_core.hpp"

#include <stdexcept>

using namespace sct;

namespace {

Cyclotomic cyc(long v) { return Cyclotomic(Rational(v)); }

// the order-4 cyclic group averaged by inversion: three parts, three summed
// characters
SuperTheory averaged_c4() {
    std::vector<Idx> cube(4);
    for (Idx t = 0; t < 4; ++t) cube[t] = (3 * t) % 4;
    return gamma_average(cyclic_theory(4), {cube});
}

}  // namespace

TEST_CASE("partitions validate membership") {
    CHECK_THROWS_AS(SuperPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SuperPartition(3, {{0}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(SuperPartition(3, {{0}, {1, 2, 3}}), std::invalid_argument);
    const SuperPartition P(4, {{2, 0}, {1, 3}});
    CHECK(P.parts[0] == std::vector<Idx>{0, 2});  // parts come back sorted
    CHECK(P.part_of[3] == 1);
}

TEST_CASE("scalar products of the constant function") {
    const SuperTheory C = cyclic_theory(4);
    const auto one = dense_from_parts(C.classes, C.chars[0]);
    CHECK(scalar_product(C.table, one, one).rational_value() == Rational(1));
    // distinct irreducible characters are orthogonal
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            CHECK(scalar_product(C.table, dense_from_parts(C.classes, C.chars[i]),
                                 dense_from_parts(C.classes, C.chars[j]))
                      .is_zero());
    CHECK_THROWS_AS((void)scalar_product(C.table, one, std::vector<Cyclotomic>(3)),
                    std::invalid_argument);
}

TEST_CASE("per-part scalar product matches the dense sum") {
    const SuperTheory A = averaged_c4();
    for (size_t i = 0; i < A.chars.size(); ++i)
        for (size_t j = 0; j < A.chars.size(); ++j)
            CHECK(scalar_product_on_parts(A.classes, A.chars[i], A.chars[j]) ==
                  scalar_product(A.table, dense_from_parts(A.classes, A.chars[i]),
                                 dense_from_parts(A.classes, A.chars[j])));
}

TEST_CASE("averaging the cyclic group by inversion") {
    const SuperTheory A = averaged_c4();
    REQUIRE(A.classes.size() == 3);
    CHECK(A.classes.parts[0] == std::vector<Idx>{0});
    CHECK(A.classes.parts[1] == std::vector<Idx>{1, 3});
    CHECK(A.classes.parts[2] == std::vector<Idx>{2});

    REQUIRE(A.chars.size() == 3);
    CHECK(A.chars[0] == std::vector<Cyclotomic>{cyc(1), cyc(1), cyc(1)});
    CHECK(A.chars[1] == std::vector<Cyclotomic>{cyc(2), cyc(0), cyc(-2)});
    CHECK(A.chars[2] == std::vector<Cyclotomic>{cyc(1), cyc(-1), cyc(1)});

    std::vector<std::vector<Cyclotomic>> dense;
    for (const auto& row : A.chars) dense.push_back(dense_from_parts(A.classes, row));
    CHECK(verify_theory(A.table, A.classes, dense).pass);
    CHECK(schur_check(A.table, A.classes).pass);

    // the value fibers recover the parts exactly
    const SuperPartition F = partition_from_value_fibers(4, dense);
    CHECK(F.parts == A.classes.parts);
}

TEST_CASE("trivial symmetry leaves a theory unchanged") {
    const SuperTheory C = cyclic_theory(6);
    std::vector<Idx> id(6);
    for (Idx t = 0; t < 6; ++t) id[t] = t;
    const SuperTheory A = gamma_average(C, {id});
    CHECK(A.classes.parts == C.classes.parts);
    CHECK(A.chars == C.chars);
}

TEST_CASE("incompatible actions are rejected") {
    const SuperTheory C = cyclic_theory(4);
    // swapping the identity with a generator does not permute the characters
    std::vector<Idx> swap01 = {1, 0, 2, 3};
    CHECK_THROWS_AS((void)gamma_average(C, {swap01}), std::invalid_argument);
    CHECK_THROWS_AS((void)gamma_average(C, {std::vector<Idx>(3)}), std::invalid_argument);
}

TEST_CASE("classical table of the symmetric group passes") {
    const SuperTheory S = s3_conjugacy_theory();
    std::vector<std::vector<Cyclotomic>> dense;
    for (const auto& row : S.chars) dense.push_back(dense_from_parts(S.classes, row));
    CHECK(verify_theory(S.table, S.classes, dense).pass);
    CHECK(schur_check(S.table, S.classes).pass);
    // degrees weighted by themselves rebuild the regular character
    CHECK(regular_decomposition(S.table, S.classes, S.chars, {1, 1, 2}).pass);
}

TEST_CASE("axiom failures are reported with their pair") {
    const SuperTheory A = averaged_c4();
    std::vector<std::vector<Cyclotomic>> dense;
    for (const auto& row : A.chars) dense.push_back(dense_from_parts(A.classes, row));

    // (a): perturb one value off its part
    auto broken = dense;
    broken[1][3] = cyc(5);
    auto r = verify_theory(A.table, A.classes, broken);
    CHECK(!r.pass);
    CHECK(r.axiom == 'a');
    CHECK(r.i == 1);

    // (b): duplicate a character
    auto dup = dense;
    dup[2] = dense[0];
    r = verify_theory(A.table, A.classes, dup);
    CHECK(!r.pass);
    CHECK(r.axiom == 'b');
    CHECK(r.i == 0);
    CHECK(r.j == 2);

    // (c): drop a character
    auto fewer = dense;
    fewer.pop_back();
    r = verify_theory(A.table, A.classes, fewer);
    CHECK(!r.pass);
    CHECK(r.axiom == 'c');

    // (d): fuse the identity into another part
    const SuperPartition merged(4, {{0, 2}, {1, 3}});
    std::vector<std::vector<Cyclotomic>> two = {
        dense_from_parts(merged, {cyc(1), cyc(1)}),
        dense_from_parts(merged, {cyc(1), cyc(-1)}),
    };
    r = verify_theory(A.table, merged, two);
    CHECK(!r.pass);
    CHECK(r.axiom == 'd');
}

TEST_CASE("schur conditions on superclasses and on broken partitions") {
    const UTContext G = UTContext::unitriangular(3, 2);
    const GroupTable T = G.cayley();
    std::vector<std::vector<Idx>> parts;
    for (const auto& sc : G.superclasses()) parts.push_back(sc.members);
    CHECK(schur_check(T, SuperPartition(G.order(), std::move(parts))).pass);

    // a partition that is not conjugation-invariant
    const SuperTheory S = s3_conjugacy_theory();
    const auto r = schur_check(S.table, SuperPartition(6, {{0}, {1, 2}, {3, 4, 5}}));
    CHECK(!r.pass);
    CHECK(r.failure.find("centrality") != std::string::npos);

    // identity fused away
    const auto r2 = schur_check(S.table, SuperPartition(6, {{0, 1, 2}, {3, 4, 5}}));
    CHECK(!r2.pass);
    CHECK(r2.failure.find("identity") != std::string::npos);
}

TEST_CASE("idempotents from the weighted character rows") {
    // full irreducible theories: weights 1 everywhere
    const SuperTheory C = cyclic_theory(4);
    CHECK(idempotents_from_table(C.table, C.classes, C.chars, {1, 1, 1, 1}).size() == 4);

    const SuperTheory A = averaged_c4();
    const auto f = idempotents_from_table(A.table, A.classes, A.chars, {1, 1, 1});
    REQUIRE(f.size() == 3);
    // f_0 is the average of the group
    for (Idx g = 0; g < 4; ++g) CHECK(f[0][g] == Cyclotomic(Rational(1, 4)));

    const SuperTheory S = s3_conjugacy_theory();
    CHECK(idempotents_from_table(S.table, S.classes, S.chars, {1, 1, 2}).size() == 3);

    // wrong weights break idempotency
    CHECK_THROWS_AS(
        (void)idempotents_from_table(S.table, S.classes, S.chars, {1, 1, 1}),
        std::logic_error);

    const SuperTheory C2 = cyclic_theory(2);
    CHECK(idempotents_from_table(C2.table, C2.classes, C2.chars, {1, 1}).size() == 2);
}

TEST_CASE("weighted sums match the regular character") {
    const SuperTheory C = cyclic_theory(4);
    CHECK(regular_decomposition(C.table, C.classes, C.chars, {1, 1, 1, 1}).pass);
    const SuperTheory A = averaged_c4();
    CHECK(regular_decomposition(A.table, A.classes, A.chars, {1, 1, 1}).pass);
    const auto bad = regular_decomposition(A.table, A.classes, A.chars, {2, 1, 1});
    CHECK(!bad.pass);
    CHECK(bad.i >= 0);
}

TEST_CASE("integrality certificates") {
    CHECK(integrality_check(cyc(1), 5, Rational(1)));          // trivial character
    CHECK(integrality_check(cyc(0), 2, Rational(2)));          // zero value
    CHECK(integrality_check(cyc(-2), 3, Rational(2)));         // -3 integral
    CHECK(!integrality_check(cyc(1), 1, Rational(2)));         // 1/2 not integral
    CHECK(integrality_check(Cyclotomic::root_of_unity(4, 1), 2, Rational(2)));
    CHECK_THROWS_AS((void)integrality_check(cyc(1), 1, Rational(0)), std::invalid_argument);
}
