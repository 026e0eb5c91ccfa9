#pragma once

#include <cstdint>
#include <vector>

#include "sct/combinatorics.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/group_table.hpp"
#include "sct/groups.hpp"
#include "sct/sct_core.hpp"

namespace sct {

// --- closed-form supercharacter values -------------------------------------

// Value of the one-arc character indexed by (alpha, c) on the superclass with
// label cls: zero when cls meets a singular decomposition of alpha, otherwise
// q^{d'} times the additive-character factor when alpha itself lies in cls.
Cyclotomic elementary_value(const CharacterRing& ring, Root alpha, int c,
                            const AdmissiblePair& cls);

// Value of the supercharacter labeled chr on the superclass labeled cls: the
// product of the one-arc values over the arcs of chr.
Cyclotomic supercharacter_value(const CharacterRing& ring, const AdmissiblePair& chr,
                                const AdmissiblePair& cls);

// Full closed-form table: rows follow ctx.dual_orbits(), columns follow
// ctx.superclasses().
CharTable closed_table(const UTContext& ctx);

// Partition of the element index range into the superclasses of ctx.
SuperPartition class_partition(const UTContext& ctx);

// --- induced-character oracle ----------------------------------------------

// Value at the group element 1+g of the character induced to the whole group
// from the linear character (1+y) -> eps^{lam(y)} on the right-stabilizer
// subgroup of lam.  Computed by the classical induction sum over the group.
Cyclotomic induced_value(const UTContext& ctx, Idx lam, Idx g);

// Induced character evaluated at every superclass representative.
std::vector<Cyclotomic> induced_on_classes(const UTContext& ctx, Idx lam);

// Induced character evaluated at every group element.
std::vector<Cyclotomic> induced_dense(const UTContext& ctx, Idx lam);

// --- orbit-sum forms ---------------------------------------------------------

struct KirillovPair {
    Cyclotomic orbit_form;  // (1/n(lam)) * sum over mu in the dual orbit of eps^{mu(x)}
    Cyclotomic class_form;  // (|lam G| / |G x G|) * sum over y in the class orbit of eps^{lam(y)}
};

// Both orbit-sum expressions for the supercharacter attached to lam, evaluated
// at the group element 1+x.
KirillovPair kirillov_forms(const UTContext& ctx, Idx lam, Idx x);

// --- norm and degree identities ----------------------------------------------

struct NormReport {
    Rational scalar;          // (chi, chi) from the closed-form values
    std::uint64_t intersection = 0;  // |G lam  intersect  lam G|
    std::uint64_t q_to_c = 0;        // q^{c(D)} for the orbit label D
    Rational degree;          // chi at the identity class
    std::uint64_t q_to_d = 0;        // q^{d(D)}
    bool pass = false;        // scalar == intersection == q_to_c and degree == q_to_d
};

NormReport norm_identity(const UTContext& ctx, Idx lam);

// --- algebra subgroups: restriction and superinduction ------------------------

// The subgroup 1+J' for a multiplicatively closed subset of the root pattern,
// with the index translation into the ambient group.
struct SubgroupEmbedding {
    UTContext sub;
    std::vector<Idx> to_ambient;  // sub element index -> ambient element index
};

SubgroupEmbedding subgroup_on_roots(const UTContext& ctx, const std::vector<Root>& roots);

// Coefficients of the restriction of a dense ambient class function in the
// subgroup's supercharacter basis (order of emb.sub.dual_orbits()).  Throws
// std::logic_error unless the decomposition is exact with nonnegative integer
// coefficients.
std::vector<Rational> restrict_and_decompose(const UTContext& ctx,
                                             const SubgroupEmbedding& emb,
                                             const std::vector<Cyclotomic>& dense_ambient);

// Superinduction of a dense subgroup class function to the ambient group:
// value at 1+x is the average of the zero-extension of phi over 1 + a x b for
// all group pairs (a, b).  The result is constant on superclasses.
std::vector<Cyclotomic> superinduce(const UTContext& ctx, const SubgroupEmbedding& emb,
                                    const std::vector<Cyclotomic>& phi_sub);

struct ReciprocityReport {
    Cyclotomic lhs;  // (SInd phi, psi) over the ambient group
    Cyclotomic rhs;  // (phi, Res psi) over the subgroup
    bool pass = false;
};

// Frobenius reciprocity for superinduction against restriction.
ReciprocityReport frobenius_check(const UTContext& ctx, const SubgroupEmbedding& emb,
                                  const std::vector<Cyclotomic>& phi_sub,
                                  const std::vector<Cyclotomic>& psi_ambient);

// Coefficients of SInd(phi) in the ambient supercharacter basis; throws
// std::logic_error unless the decomposition is exact with nonnegative rational
// coefficients.
std::vector<Rational> superinduction_coefficients(const UTContext& ctx,
                                                  const SubgroupEmbedding& emb,
                                                  const std::vector<Cyclotomic>& phi_sub);

// --- structure-constant algebras attached to the crossings of a basic subset ---

// Finite-dimensional algebra over F_p whose basis products are given by a
// table of element indices (each row entry is the full product of two basis
// elements).  Elements are digit vectors encoded as indices, first basis
// element most significant.  The constructor verifies associativity on basis
// triples and nilpotency, throwing std::logic_error on failure.
class FpAlgebra {
public:
    FpAlgebra(int p, int dim, std::vector<std::vector<Idx>> basis_products);

    int p() const { return p_; }
    int dim() const { return dim_; }
    Idx size() const { return size_; }
    int nilpotency_class() const { return nilpotency_class_; }

    std::vector<int> digits(Idx x) const;
    Idx index(const std::vector<int>& digits) const;
    Idx basis(int k) const;  // index of the k-th basis element

    Idx add(Idx a, Idx b) const;
    Idx neg(Idx a) const;
    Idx scale(int c, Idx a) const;
    Idx mul(Idx a, Idx b) const;

private:
    int p_;
    int dim_;
    Idx size_;
    std::vector<Idx> pow_;
    std::vector<std::vector<Idx>> prod_;  // basis pair -> element index
    int nilpotency_class_ = 0;
};

// The crossing pattern of D together with the two structure-constant algebras
// it generates: the plain one on the crossing roots, and its one-dimensional
// central extension (extension generator last in the basis order).
struct CrossingAlgebras {
    std::vector<Root> generators;  // sorted crossing roots of D
    FpAlgebra cx;
    FpAlgebra tcx;
};

CrossingAlgebras crossing_algebras(const BasicSubset& D, int p);

// The group 1+A on the index set of A; verifies the group axioms.
GroupTable algebra_group(const FpAlgebra& A);

// Number of two-sided orbits of 1+A acting on A, and on the dual space of A.
Idx algebra_superclass_count(const FpAlgebra& A);
Idx algebra_dual_orbit_count(const FpAlgebra& A);

// --- subalgebras attached to a functional -------------------------------------

// Membership tests for the three nested subalgebras attached to lam: the right
// stabilizer subalgebra l, its intersection k with ker(lam), and the larger
// algebra s of elements annihilating l on the left under lam.
bool in_l_subalgebra(const UTContext& ctx, Idx lam, Idx x);
bool in_k_subalgebra(const UTContext& ctx, Idx lam, Idx x);
bool in_s_subalgebra(const UTContext& ctx, Idx lam, Idx x);

}  // namespace sct
