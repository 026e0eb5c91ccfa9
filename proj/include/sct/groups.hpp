#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sct/combinatorics.hpp"
#include "sct/cyclotomic.hpp"
#include "sct/group_table.hpp"
#include "sct/matrix.hpp"

namespace sct {

inline constexpr std::uint64_t kDefaultElementCap = 1000000;

// Raised when an enumeration would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// F_p-span of matrix units E_beta over a set of strictly-upper positive roots
// closed under composition: if (i,j) and (j,l) are roots then so is (i,l).
// The span is then a nilpotent associative algebra.  Elements are indexed by
// row-major digit vectors (coefficient of the first root is the most
// significant digit); index 0 is the zero element.
class RootAlgebra {
public:
    RootAlgebra(int n, int p, std::vector<Root> roots,
                std::uint64_t element_cap = kDefaultElementCap);

    // All roots (i,j), 1 <= i < j <= n: the strictly upper-triangular pattern.
    static RootAlgebra unitriangular(int n, int p,
                                     std::uint64_t element_cap = kDefaultElementCap);

    int n() const { return n_; }
    int p() const { return p_; }
    int rank() const { return static_cast<int>(roots_.size()); }
    Idx size() const { return size_; }
    const std::vector<Root>& roots() const { return roots_; }
    bool has_root(int i, int j) const { return root_index(i, j) >= 0; }
    int root_index(int i, int j) const;  // position in roots(), or -1

    std::vector<int> digits(Idx x) const;
    Idx index(const std::vector<int>& digits) const;
    int digit(Idx x, int k) const;

    Idx add(Idx a, Idx b) const;
    Idx sub(Idx a, Idx b) const;
    Idx neg(Idx a) const;
    Idx mul(Idx a, Idx b) const;  // the algebra product
    Idx scale(int c, Idx a) const;
    Idx unit_root(int k, int c = 1) const;  // c * E_{roots()[k]}

    // Sum of E_beta over D (all coefficients 1).
    Idx basic_element(const BasicSubset& D) const;
    // Sum of labels(beta) * E_beta over the admissible pair.
    Idx labeled_element(const AdmissiblePair& P) const;

    // If x has all digits in {0,1} and its support is a basic subset, returns
    // that subset.
    std::optional<BasicSubset> basic01_pattern(Idx x) const;
    // If the support of x (roots with nonzero digit) is a basic subset,
    // returns the pair (support, nonzero digits).
    std::optional<AdmissiblePair> basic_support_pattern(Idx x) const;

    Mat to_matrix(Idx x) const;
    Idx from_matrix(const Mat& m) const;  // throws if support escapes the roots

    // Evaluation of the functional with digit vector lam at the element x:
    // sum of lam_beta * x_beta mod p.
    int pair(Idx lam, Idx x) const;

private:
    int n_;
    int p_;
    std::vector<Root> roots_;
    Idx size_;
    std::vector<Idx> pow_;  // pow_[k] = p^(rank-1-k), the weight of digit k
    struct ProductTriple {
        int a, b, c;  // E_{roots[a]} * E_{roots[b]} = E_{roots[c]}
    };
    std::vector<ProductTriple> triples_;
};

// --- generic orbit machinery over precomputed permutation move tables ---

using MoveTable = std::vector<Idx>;  // image of every point under one generator

// Orbit partition of the full index range [0, universe) under the closure of
// the moves.  Every move must be a bijection drawn from a finite group, so
// forward closure alone yields genuine orbits.
struct OrbitSet {
    std::vector<Idx> orbit_of;              // point -> orbit id
    std::vector<std::vector<Idx>> members;  // orbit id -> sorted points
    std::vector<Idx> reps;                  // least member per orbit
};

OrbitSet orbit_decompose(Idx universe, const std::vector<MoveTable>& moves);

// Sorted orbit of a single point.
std::vector<Idx> orbit_from_seed(Idx seed, const std::vector<MoveTable>& moves);

// Number of orbits into which a move-invariant sorted subset splits.
Idx count_orbits_within(const std::vector<Idx>& subset,
                        const std::vector<MoveTable>& moves);

// Orbit partition of a move-invariant sorted subset; members hold ambient
// indices.
struct SubsetOrbits {
    std::vector<std::vector<Idx>> members;  // sorted ambient indices
    std::vector<Idx> reps;
};
SubsetOrbits orbit_decompose_within(const std::vector<Idx>& subset,
                                    const std::vector<MoveTable>& moves);

// --- the algebra group 1 + J ---

// Group of elements 1+x for x in a root algebra J over F_p, together with the
// two-sided orbit data on J (superclasses) and on the dual space J*
// (supercharacter labels).  Group elements share indices with J.
class UTContext {
public:
    explicit UTContext(RootAlgebra J);
    static UTContext unitriangular(int n, int p,
                                   std::uint64_t element_cap = kDefaultElementCap);

    const RootAlgebra& J() const { return J_; }
    int n() const { return J_.n(); }
    int p() const { return J_.p(); }
    Idx order() const { return J_.size(); }
    Idx identity() const { return 0; }

    Idx gmul(Idx a, Idx b) const;  // (1+x_a)(1+x_b)
    Idx ginv(Idx a) const;

    const CharacterRing& ring() const { return ring_; }

    // Two-sided orbit 1 + GxG; the canonical representative is the unique
    // member with basic support when it exists.
    struct Superclass {
        std::optional<AdmissiblePair> label;
        Idx rep = 0;               // canonical member when labeled, else least
        std::vector<Idx> members;  // sorted x-indices; the class is 1+members
    };
    const std::vector<Superclass>& superclasses() const { return superclasses_; }
    Idx superclass_of(Idx x) const { return class_of_[x]; }
    // Throws std::logic_error when the orbit lacks a canonical representative.
    const AdmissiblePair& superclass_label(Idx class_id) const;
    // Index of the superclass whose canonical representative matches, or -1.
    int superclass_by_label(const AdmissiblePair& label) const;

    // Two-sided orbit G lam G in the dual space, with the number of right
    // orbits it splits into.
    struct DualOrbit {
        std::optional<AdmissiblePair> label;
        Idx rep = 0;  // index of the canonical functional when labeled, else least
        std::vector<Idx> members;
        Idx right_orbit_count = 0;  // n(lam)
    };
    const std::vector<DualOrbit>& dual_orbits() const { return dual_orbits_; }
    Idx dual_orbit_of(Idx lam) const { return dual_orbit_of_[lam]; }
    const AdmissiblePair& dual_orbit_label(Idx orbit_id) const;
    int dual_orbit_by_label(const AdmissiblePair& label) const;

    // Right orbit lam*G under (lam g)(x) = lam(gx); left orbit under
    // (g lam)(x) = lam(xg).  Sorted.
    std::vector<Idx> right_orbit(Idx lam) const;
    std::vector<Idx> left_orbit(Idx lam) const;

    // {y in J : lam(y x) = 0 for all x in J}, sorted.  1 + the result is the
    // stabilizer subgroup of lam under the right action.
    std::vector<Idx> right_stabilizer_subalgebra(Idx lam) const;

    // Move tables (left then right multiplications by the transvections
    // 1+E_beta) acting on J and on J*.
    const std::vector<MoveTable>& j_moves() const { return j_moves_; }
    const std::vector<MoveTable>& dual_right_moves() const { return dual_right_moves_; }
    const std::vector<MoveTable>& dual_left_moves() const { return dual_left_moves_; }

    GroupTable cayley() const;

private:
    RootAlgebra J_;
    CharacterRing ring_;
    std::vector<MoveTable> j_moves_;
    std::vector<MoveTable> dual_right_moves_;
    std::vector<MoveTable> dual_left_moves_;
    std::vector<Superclass> superclasses_;
    std::vector<Idx> class_of_;
    std::vector<DualOrbit> dual_orbits_;
    std::vector<Idx> dual_orbit_of_;
};

}  // namespace sct
