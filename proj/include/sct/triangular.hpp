#pragma once

#include <string>
#include <vector>

#include "sct/field.hpp"
#include "sct/groups.hpp"

namespace sct {

// Superclass label of a triangular-type group: the common diagonal h of the
// class plus the basic subset of the unique member h + x_D with hx = xh = x.
struct TriClassLabel {
    std::vector<int> h;  // diagonal values, h[i] in [1, p)
    BasicSubset D;

    bool operator==(const TriClassLabel& o) const { return h == o.h && D == o.D; }
    bool operator<(const TriClassLabel& o) const {
        if (h != o.h) return h < o.h;
        return D < o.D;
    }
    std::string str() const;
};

// The triangular-type group G = H + J for the full diagonal torus
// H = (F_p^*)^n acting on a root algebra J by left/right multiplication.
// For the full strictly-upper root set this is T_n(F_p).  Elements are
// indexed as t * |J| + x where t indexes the diagonal and x the nilpotent
// part, so g = h_t + x.
class TriangularContext {
public:
    TriangularContext(RootAlgebra J, std::uint64_t element_cap = kDefaultElementCap);
    static TriangularContext triangular(int n, int p,
                                        std::uint64_t element_cap = kDefaultElementCap);

    const RootAlgebra& J() const { return J_; }
    int n() const { return J_.n(); }
    int p() const { return J_.p(); }
    Idx torus_order() const { return torus_order_; }
    Idx nil_order() const { return J_.size(); }
    Idx order() const { return torus_order_ * J_.size(); }

    // --- element indexing ---
    Idx element(Idx t, Idx x) const { return t * J_.size() + x; }
    Idx torus_part(Idx g) const { return g / J_.size(); }
    Idx nil_part(Idx g) const { return g % J_.size(); }
    std::vector<int> torus_values(Idx t) const;  // h_i in [1, p)
    Idx torus_index(const std::vector<int>& h) const;
    Idx identity() const { return element(torus_one_, 0); }
    Idx torus_one() const { return torus_one_; }

    Idx gmul(Idx a, Idx b) const;
    Idx ginv(Idx g) const;
    Mat to_matrix(Idx g) const;

    // h*x and x*h for a diagonal h (scales digit (i,j) by h_i resp. h_j)
    Idx torus_scale_left(Idx t, Idx x) const;
    Idx torus_scale_right(Idx x, Idx t) const;
    Idx torus_mul(Idx s, Idx t) const;
    Idx torus_inv(Idx t) const;

    const CharacterRing& ring() const { return ring_; }

    // --- superclasses: orbits of g -> 1 + t a (g-1) b t^{-1} ---
    struct Superclass {
        TriClassLabel label;
        Idx rep = 0;  // index of h + x_D
        std::vector<Idx> members;
    };
    const std::vector<Superclass>& superclasses() const { return superclasses_; }
    Idx superclass_of(Idx g) const { return class_of_[g]; }
    int superclass_by_label(const TriClassLabel& label) const;

    // --- orbits of the triple action x -> t a x b t^{-1} on J and J* ---
    struct JOrbit {
        BasicSubset label;  // unique member with 0/1 digits on a basic subset
        Idx rep = 0;
        std::vector<Idx> members;
    };
    const std::vector<JOrbit>& j_orbits() const { return j_orbits_; }
    Idx j_orbit_of(Idx x) const { return j_orbit_of_[x]; }

    struct DualOrbit {
        BasicSubset label;  // common support of the basic-support members
        Idx rep = 0;        // least basic-support member
        std::vector<Idx> members;
    };
    const std::vector<DualOrbit>& dual_orbits() const { return dual_orbits_; }
    Idx dual_orbit_of(Idx lam) const { return dual_orbit_of_[lam]; }

    // --- corner machinery; S is an ascending subset of [1, n] ---
    // x-indices supported on roots inside S (the corner subalgebra J_e)
    std::vector<Idx> corner_j(const std::vector<int>& S) const;
    // functionals supported on roots inside S (J_e^* embedded by zero)
    std::vector<Idx> corner_dual(const std::vector<int>& S) const;
    // full triple-action moves of the corner group on J / J* (ambient indices)
    std::vector<MoveTable> corner_j_moves(const std::vector<int>& S) const;
    std::vector<MoveTable> corner_dual_moves(const std::vector<int>& S) const;
    // right action (lam n)(x) = lam(nx) of the corner algebra group only
    std::vector<MoveTable> corner_dual_right_moves(const std::vector<int>& S) const;

    // Two-sided dual moves of the unipotent part only (no torus scaling).
    std::vector<MoveTable> dual_nilpotent_moves() const;
    // (h . lam)(x) = lam(h^{-1} x h): digit (i, j) scaled by h_i^{-1} h_j.
    Idx dual_torus_transform(Idx t, Idx lam) const;
    // {y in J : lam(y x) = 0 for all x in J}
    std::vector<Idx> right_stabilizer_subalgebra(Idx lam) const;

    // H(e_S) = {h : h e = e} = {h : h_i = 1 on S}; sorted torus indices
    std::vector<Idx> torus_fixing(const std::vector<int>& S) const;
    // H_e = e H e embedded with ones off S: {h : h_i = 1 off S}
    std::vector<Idx> torus_supported(const std::vector<int>& S) const;

    // True when an orbit living inside the S-corner meets no proper corner:
    // every member must have index support equal to S exactly.
    bool orbit_regular_in(const std::vector<Idx>& members, const std::vector<int>& S) const;
    // Union of {i, j} over the supported roots of x.
    std::vector<int> index_support(Idx x) const;

    GroupTable cayley() const;

private:
    RootAlgebra J_;
    PrimeField field_;
    CharacterRing ring_;
    Idx torus_order_;
    Idx torus_one_;
    std::vector<Idx> tpow_;  // digit weights for the torus index

    std::vector<Superclass> superclasses_;
    std::vector<Idx> class_of_;
    std::vector<JOrbit> j_orbits_;
    std::vector<Idx> j_orbit_of_;
    std::vector<DualOrbit> dual_orbits_;
    std::vector<Idx> dual_orbit_of_;

    std::vector<MoveTable> group_moves_() const;
};

}  // namespace sct
