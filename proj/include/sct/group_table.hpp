#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sct {

using Idx = std::uint32_t;

// Dense multiplication table of a finite group whose elements are indexed
// 0..order-1.  All higher-level verification (orthogonality, convolution
// closure, centrality) runs against this representation only.
struct GroupTable {
    Idx order = 0;
    Idx identity = 0;
    std::vector<Idx> product;  // row-major: product[a*order + b]
    std::vector<Idx> inverse;

    Idx times(Idx a, Idx b) const {
        return product[static_cast<std::size_t>(a) * order + b];
    }
    Idx inv(Idx a) const { return inverse[a]; }
    // g a g^{-1}
    Idx conj(Idx a, Idx g) const { return times(times(g, a), inverse[g]); }
};

// Builds the dense table from a multiplication callback.  Verifies the
// identity and inverse laws exactly and associativity on a deterministic
// sample of triples (all triples for small orders).  Throws std::logic_error
// if a law fails.
GroupTable build_group_table(Idx order, Idx identity,
                             const std::function<Idx(Idx, Idx)>& mul);

}  // namespace sct
