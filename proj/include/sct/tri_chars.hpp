#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sct/sct_core.hpp"
#include "sct/triangular.hpp"
#include "sct/ut_chars.hpp"

namespace sct {

// Supercharacter label of a triangular-type group G = H + J: a basic subset D
// naming the regular two-sided dual orbit omega* inside the corner J_e, where
// e is the diagonal idempotent on the index support of D, together with a
// linear character theta of the fixing torus H(e) = {h : h_i = 1 on supp(e)}.
// theta is stored as one exponent per diagonal position against the fixed
// primitive root; entries on the support of D are zero.
struct TriCharLabel {
    BasicSubset D;
    std::vector<int> theta;  // length n, exponents in [0, p-2]

    bool operator==(const TriCharLabel& o) const { return D == o.D && theta == o.theta; }
    bool operator<(const TriCharLabel& o) const {
        if (D != o.D) return D < o.D;
        return theta < o.theta;
    }
    std::string str() const;
};

// Every basic subset of the root pattern paired with every exponent vector
// supported off it.  Verifies that the total count equals the superclass
// count and throws std::logic_error otherwise.
std::vector<TriCharLabel> enumerate_tri_characters(const TriangularContext& ctx);

// theta evaluated at the torus element with the given diagonal values.
Cyclotomic theta_value(const TriangularContext& ctx, const TriCharLabel& chr,
                       const std::vector<int>& h);

// One supercharacter of a triangular-type group, bundled with its inducing
// data: the linear character xi(h + x) = theta(h) eps^{lam(x)} of the
// subgroup G_alpha = H(e) + {u in J : lam(u J) = 0}, induced up to G by
// averaging conjugates.
class TriCharacter {
public:
    TriCharacter(const TriangularContext& ctx, TriCharLabel label);
    // Induce from a different functional of the same orbit; lam must lie in
    // omega* (throws std::invalid_argument otherwise).
    TriCharacter(const TriangularContext& ctx, TriCharLabel label, Idx lam);

    const TriCharLabel& label() const { return label_; }
    Idx lam() const { return lam_; }
    const std::vector<Idx>& omega_star() const { return omega_; }
    Idx inducing_subgroup_order() const { return sub_order_; }

    // xi extended by zero off G_alpha.
    Cyclotomic xi_dot(Idx g) const;
    // (1/|G_alpha|) sum over a in G of xi_dot(a g a^{-1}).
    Cyclotomic induced_value(Idx g) const;
    std::vector<Cyclotomic> induced_on_classes() const;  // one value per superclass
    std::vector<Cyclotomic> induced_dense() const;       // one value per element

private:
    const TriangularContext* ctx_;
    TriCharLabel label_;
    Idx lam_ = 0;
    std::vector<Idx> omega_;         // sorted corner orbit of lam
    std::vector<long long> xi_exp_;  // zeta_m exponent per element, -1 off G_alpha
    Idx sub_order_ = 0;

    void build_(const TriangularContext& ctx);
};

// Closed product-formula value of the supercharacter labelled chr on the
// superclass labelled cls.
Cyclotomic tri_closed_value(const TriangularContext& ctx, const TriCharLabel& chr,
                            const TriClassLabel& cls);

// Closed-formula table: rows follow chars, columns follow ctx.superclasses().
CharTable tri_closed_table(const TriangularContext& ctx,
                           const std::vector<TriCharLabel>& chars);

// The superclass partition as a reusable partition object.
SuperPartition tri_class_partition(const TriangularContext& ctx);

// Both orbit-sum expressions for the supercharacter value at g = h + x, which
// requires hx = xh = x (throws std::invalid_argument otherwise).  Writing f
// for the diagonal idempotent on {i : h_i = 1} and Omega* for the unique
// two-sided corner orbit in J_f^* meeting J_e^* exactly in omega*:
struct TriKirillovPair {
    // |H_e| theta(h) / n(Omega*) * sum over mu in Omega* of eps^{mu(x)},
    // where n counts the right orbits inside Omega* and H_e = e H e.
    Cyclotomic orbit_form;
    // |H_e| |lam N_f| theta(h) / |orbit of x| * sum over y in the corner
    // orbit of x of eps^{lam(y)}.
    Cyclotomic class_form;
};
TriKirillovPair tri_kirillov_forms(const TriangularContext& ctx, const TriCharLabel& chr,
                                   Idx g);

// The norm identity (chi, chi) = |H_{N lam N}| |J lam meet lam J| / |H(e)|:
// the direct scalar product against the product of the order of the torus
// stabilizer of the two-sided nilpotent orbit of lam, the intersection of the
// one-sided dual translate spans, and the inverse order of the fixing torus.
struct TriNormReport {
    Rational scalar;                      // (chi, chi) from induced values
    Idx torus_stabilizer = 0;             // |H_{N lam N}|
    Idx torus_fixing = 0;                 // |H(e)|
    std::uint64_t dual_intersection = 0;  // |J lam meet lam J|
    bool pass = false;
};
TriNormReport tri_norm(const TriangularContext& ctx, const TriCharLabel& chr);

// Subgroup of triangular type spanned by the full torus and a closed
// sub-root-pattern, with the element-index embedding into the ambient group.
struct TriSubgroupEmbedding {
    TriangularContext sub;
    std::vector<Idx> to_ambient;
};
TriSubgroupEmbedding tri_subgroup_on_roots(const TriangularContext& ctx,
                                           const std::vector<Root>& roots);

// Restriction of an ambient superclass function to the subgroup, decomposed
// over the subgroup's supercharacters; coefficients must be exact nonnegative
// integers (throws std::logic_error otherwise).
std::vector<Rational> tri_restrict_and_decompose(const TriangularContext& ctx,
                                                 const TriSubgroupEmbedding& emb,
                                                 const std::vector<Cyclotomic>& psi_ambient);

// Superinduction: |H| / (|G| |G'|) * sum over a, b in the unipotent part and
// t in the torus of the zero-extension of phi at 1 + t a (g-1) b t^{-1}.
std::vector<Cyclotomic> tri_superinduce(const TriangularContext& ctx,
                                        const TriSubgroupEmbedding& emb,
                                        const std::vector<Cyclotomic>& phi_sub);

// Frobenius reciprocity (SInd phi, psi)_G = (phi, Res psi)_{G'}.
ReciprocityReport tri_frobenius_check(const TriangularContext& ctx,
                                      const TriSubgroupEmbedding& emb,
                                      const std::vector<Cyclotomic>& phi_sub,
                                      const std::vector<Cyclotomic>& psi_ambient);

// Coefficients of SInd phi over the ambient supercharacters; must be exact
// nonnegative rationals (throws std::logic_error otherwise).
std::vector<Rational> tri_superinduction_coefficients(const TriangularContext& ctx,
                                                      const TriSubgroupEmbedding& emb,
                                                      const std::vector<Cyclotomic>& phi_sub);

}  // namespace sct
