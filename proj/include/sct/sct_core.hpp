#pragma once

#include <string>
#include <vector>

#include "sct/cyclotomic.hpp"
#include "sct/group_table.hpp"

namespace sct {

// Partition of the element index range [0, order) into disjoint, covering,
// internally sorted parts.
struct SuperPartition {
    std::vector<std::vector<Idx>> parts;
    std::vector<Idx> part_of;  // element -> part id

    SuperPartition() = default;
    SuperPartition(Idx order, std::vector<std::vector<Idx>> parts_in);  // validates

    size_t size() const { return parts.size(); }
    Idx order() const { return static_cast<Idx>(part_of.size()); }
};

// chars[i][j] = value of the i-th character on the j-th part.
using CharTable = std::vector<std::vector<Cyclotomic>>;

// One value per element from one value per part.
std::vector<Cyclotomic> dense_from_parts(const SuperPartition& P,
                                         const std::vector<Cyclotomic>& per_part);

// Partition of the elements into fibers of the joint value map
// g -> (f_0(g), f_1(g), ...); parts ordered by least member.
SuperPartition partition_from_value_fibers(Idx order,
                                           const std::vector<std::vector<Cyclotomic>>& dense);

// (1/|G|) sum_g f1(g) conj(f2(g)) over element-indexed values.
Cyclotomic scalar_product(const GroupTable& G, const std::vector<Cyclotomic>& f1,
                          const std::vector<Cyclotomic>& f2);
// The same sum taken part by part for part-constant values.
Cyclotomic scalar_product_on_parts(const SuperPartition& P, const std::vector<Cyclotomic>& f1,
                                   const std::vector<Cyclotomic>& f2);

// Coefficients of target against a list of pairwise orthogonal element-indexed
// rows under the (1/order)-normalized scalar product.  The expansion must
// reconstruct the target exactly with nonnegative rational (optionally
// integer) coefficients; throws std::logic_error otherwise, prefixing the
// violation with the given context string.
std::vector<Rational> decompose_nonnegative(Idx order,
                                            const std::vector<std::vector<Cyclotomic>>& basis,
                                            const std::vector<Cyclotomic>& target,
                                            bool require_integer, const std::string& what);

// Outcome of a structural check; on failure names the violated condition and
// the offending index pair.
struct CheckReport {
    bool pass = true;
    std::string failure;
    char axiom = 0;    // 'a'..'d' for the four partition-pair axioms
    long i = -1;       // first offending index (character, part, or element)
    long j = -1;       // second offending index when applicable
};

// The four axioms tying a character list to a partition: (a) every character
// is constant on every part, (b) distinct characters are orthogonal, (c) as
// many characters as parts, (d) the identity forms a part of its own.
CheckReport verify_theory(const GroupTable& G, const SuperPartition& K,
                          const std::vector<std::vector<Cyclotomic>>& dense_chars);

// Conditions on the part-indicator sums inside the group algebra, checked in
// increasing cost order: the identity part exists, parts close under
// elementwise inversion, each indicator is central, and the span of the
// indicators closes under convolution.
CheckReport schur_check(const GroupTable& G, const SuperPartition& K);

// f_i(g) = (1/|G|) conj(n_i chi_i(K(g))); verifies f_i f_j = delta_ij f_i
// under convolution and throws std::logic_error otherwise.  Returns the f_i
// as element-indexed coefficient vectors.
std::vector<std::vector<Cyclotomic>> idempotents_from_table(const GroupTable& G,
                                                            const SuperPartition& K,
                                                            const CharTable& chars,
                                                            const std::vector<long>& n);

// sum_i n_i chi_i must equal the regular character: |G| at the identity and
// zero elsewhere.  On failure reports the first offending element in i.
CheckReport regular_decomposition(const GroupTable& G, const SuperPartition& K,
                                  const CharTable& chars, const std::vector<long>& n);

// chi(g) |K| / chi(1) must have integer coordinates over the power basis of
// its cyclotomic field; degree = chi(1) must be a nonzero rational.
bool integrality_check(const Cyclotomic& chi_on_class, Idx class_size, const Rational& degree);

// A complete bundled theory: table, classes, per-part character values.
struct SuperTheory {
    GroupTable table;
    SuperPartition classes;
    CharTable chars;
    std::vector<std::string> char_names;
    std::vector<std::string> class_names;
};

// All irreducible characters of the cyclic group Z_n on singleton parts.
SuperTheory cyclic_theory(unsigned n);
// Conjugacy classes and the classical character table of the symmetric
// group on three letters.
SuperTheory s3_conjugacy_theory();

// Coarsen a theory along a finite group of symmetries given by generator
// bijections of the element set: parts fuse into orbit unions, characters
// into sums over distinct orbit members.  Throws std::invalid_argument when
// a generator fails to permute the parts or the characters.
SuperTheory gamma_average(const SuperTheory& base,
                          const std::vector<std::vector<Idx>>& generators);

}  // namespace sct
