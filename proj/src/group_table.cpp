#include "sct/group_table.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace sct {

GroupTable build_group_table(Idx order, Idx identity,
                             const std::function<Idx(Idx, Idx)>& mul) {
    if (order == 0) throw std::invalid_argument("group order must be positive");
    GroupTable t;
    t.order = order;
    t.identity = identity;
    t.product.assign(static_cast<std::size_t>(order) * order, 0);
    for (Idx a = 0; a < order; ++a) {
        for (Idx b = 0; b < order; ++b) {
            Idx c = mul(a, b);
            if (c >= order) throw std::logic_error("product index out of range");
            t.product[static_cast<std::size_t>(a) * order + b] = c;
        }
    }

    t.inverse.assign(order, order);
    for (Idx a = 0; a < order; ++a) {
        if (t.times(identity, a) != a || t.times(a, identity) != a)
            throw std::logic_error("identity law fails at element " + std::to_string(a));
        for (Idx b = 0; b < order; ++b) {
            if (t.times(a, b) == identity && t.times(b, a) == identity) {
                t.inverse[a] = b;
                break;
            }
        }
        if (t.inverse[a] == order)
            throw std::logic_error("no inverse for element " + std::to_string(a));
    }

    auto check_assoc = [&](Idx a, Idx b, Idx c) {
        if (t.times(t.times(a, b), c) != t.times(a, t.times(b, c)))
            throw std::logic_error("associativity fails");
    };
    std::uint64_t cube = static_cast<std::uint64_t>(order) * order * order;
    if (cube <= 200000) {
        for (Idx a = 0; a < order; ++a)
            for (Idx b = 0; b < order; ++b)
                for (Idx c = 0; c < order; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<Idx> pick(0, order - 1);
        for (int k = 0; k < 4096; ++k) check_assoc(pick(rng), pick(rng), pick(rng));
    }
    return t;
}

}  // namespace sct
