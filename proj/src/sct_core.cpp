#include "sct/sct_core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sct {

namespace {

std::string pair_msg(const std::string& what, long i, long j) {
    std::ostringstream os;
    os << what << " (" << i;
    if (j >= 0) os << ", " << j;
    os << ")";
    return os.str();
}

}  // namespace

SuperPartition::SuperPartition(Idx order, std::vector<std::vector<Idx>> parts_in)
    : parts(std::move(parts_in)), part_of(order, static_cast<Idx>(-1)) {
    for (size_t c = 0; c < parts.size(); ++c) {
        auto& part = parts[c];
        if (part.empty()) throw std::invalid_argument("empty part");
        std::sort(part.begin(), part.end());
        for (Idx g : part) {
            if (g >= order) throw std::invalid_argument("part member out of range");
            if (part_of[g] != static_cast<Idx>(-1))
                throw std::invalid_argument("parts overlap");
            part_of[g] = static_cast<Idx>(c);
        }
    }
    for (Idx g = 0; g < order; ++g)
        if (part_of[g] == static_cast<Idx>(-1))
            throw std::invalid_argument("parts do not cover the group");
}

std::vector<Cyclotomic> dense_from_parts(const SuperPartition& P,
                                         const std::vector<Cyclotomic>& per_part) {
    if (per_part.size() != P.size())
        throw std::invalid_argument("one value per part required");
    std::vector<Cyclotomic> dense(P.order());
    for (Idx g = 0; g < P.order(); ++g) dense[g] = per_part[P.part_of[g]];
    return dense;
}

SuperPartition partition_from_value_fibers(Idx order,
                                           const std::vector<std::vector<Cyclotomic>>& dense) {
    for (const auto& f : dense)
        if (f.size() != order) throw std::invalid_argument("value vector has the wrong length");
    std::vector<std::vector<Idx>> parts;
    std::vector<Idx> rep;  // representative element of each fiber
    for (Idx g = 0; g < order; ++g) {
        bool placed = false;
        for (size_t c = 0; c < rep.size() && !placed; ++c) {
            bool same = true;
            for (const auto& f : dense)
                if (!(f[g] == f[rep[c]])) {
                    same = false;
                    break;
                }
            if (same) {
                parts[c].push_back(g);
                placed = true;
            }
        }
        if (!placed) {
            parts.push_back({g});
            rep.push_back(g);
        }
    }
    return SuperPartition(order, std::move(parts));
}

Cyclotomic scalar_product(const GroupTable& G, const std::vector<Cyclotomic>& f1,
                          const std::vector<Cyclotomic>& f2) {
    if (f1.size() != G.order || f2.size() != G.order)
        throw std::invalid_argument("value vectors do not match the group order");
    Cyclotomic acc;
    for (Idx g = 0; g < G.order; ++g) acc += f1[g] * f2[g].conj();
    return acc / Rational(static_cast<long>(G.order));
}

Cyclotomic scalar_product_on_parts(const SuperPartition& P, const std::vector<Cyclotomic>& f1,
                                   const std::vector<Cyclotomic>& f2) {
    if (f1.size() != P.size() || f2.size() != P.size())
        throw std::invalid_argument("one value per part required");
    Cyclotomic acc;
    for (size_t c = 0; c < P.size(); ++c)
        acc += f1[c] * f2[c].conj() * Rational(static_cast<long>(P.parts[c].size()));
    return acc / Rational(static_cast<long>(P.order()));
}

std::vector<Rational> decompose_nonnegative(Idx order,
                                            const std::vector<std::vector<Cyclotomic>>& basis,
                                            const std::vector<Cyclotomic>& target,
                                            bool require_integer, const std::string& what) {
    auto dot = [order](const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) {
        Cyclotomic s;
        for (Idx x = 0; x < order; ++x) s += f[x] * g[x].conj();
        return s / Rational(static_cast<long>(order));
    };
    std::vector<Rational> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& chi : basis) {
        Cyclotomic num = dot(target, chi);
        Rational den = dot(chi, chi).rational_value();
        Cyclotomic quot = num / den;
        if (!quot.is_rational())
            throw std::logic_error(what + ": coefficient is not rational");
        Rational c = quot.rational_value();
        if (c < 0) throw std::logic_error(what + ": negative coefficient");
        if (require_integer && c.get_den() != 1)
            throw std::logic_error(what + ": coefficient is not an integer");
        coeffs.push_back(c);
    }
    std::vector<Cyclotomic> recon(order);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (Idx x = 0; x < order; ++x) recon[x] += basis[i][x] * coeffs[i];
    }
    for (Idx x = 0; x < order; ++x)
        if (!(recon[x] == target[x]))
            throw std::logic_error(what + ": decomposition is not exact");
    return coeffs;
}

CheckReport verify_theory(const GroupTable& G, const SuperPartition& K,
                          const std::vector<std::vector<Cyclotomic>>& dense_chars) {
    CheckReport r;
    if (K.order() != G.order) {
        r = {false, "partition does not match the group order", 0, -1, -1};
        return r;
    }
    for (size_t i = 0; i < dense_chars.size(); ++i) {
        if (dense_chars[i].size() != G.order)
            return {false, pair_msg("axiom a: character not defined on the group", i, -1), 'a',
                    static_cast<long>(i), -1};
        for (size_t j = 0; j < K.size(); ++j) {
            const auto& part = K.parts[j];
            for (Idx g : part)
                if (!(dense_chars[i][g] == dense_chars[i][part[0]]))
                    return {false,
                            pair_msg("axiom a: character not constant on part", i, j), 'a',
                            static_cast<long>(i), static_cast<long>(j)};
        }
    }
    for (size_t i = 0; i < dense_chars.size(); ++i)
        for (size_t j = i + 1; j < dense_chars.size(); ++j)
            if (!scalar_product(G, dense_chars[i], dense_chars[j]).is_zero())
                return {false, pair_msg("axiom b: characters not orthogonal", i, j), 'b',
                        static_cast<long>(i), static_cast<long>(j)};
    if (dense_chars.size() != K.size())
        return {false,
                pair_msg("axiom c: character count differs from part count",
                         static_cast<long>(dense_chars.size()), static_cast<long>(K.size())),
                'c', static_cast<long>(dense_chars.size()), static_cast<long>(K.size())};
    const Idx idc = K.part_of[G.identity];
    if (K.parts[idc].size() != 1)
        return {false, pair_msg("axiom d: identity does not form its own part", idc, -1), 'd',
                static_cast<long>(idc), -1};
    return r;
}

CheckReport schur_check(const GroupTable& G, const SuperPartition& K) {
    if (K.order() != G.order)
        return {false, "partition does not match the group order", 0, -1, -1};
    // the identity part
    const Idx idc = K.part_of[G.identity];
    if (K.parts[idc].size() != 1)
        return {false, pair_msg("identity part: not a singleton", idc, -1), 0,
                static_cast<long>(idc), -1};
    // inverse closure
    for (size_t c = 0; c < K.size(); ++c) {
        const Idx target = K.part_of[G.inv(K.parts[c][0])];
        for (Idx g : K.parts[c])
            if (K.part_of[G.inv(g)] != target)
                return {false, pair_msg("inversion: part splits under inversion", c, g), 0,
                        static_cast<long>(c), static_cast<long>(g)};
    }
    // centrality: parts invariant under conjugation
    for (size_t c = 0; c < K.size(); ++c)
        for (Idx a : K.parts[c])
            for (Idx g = 0; g < G.order; ++g)
                if (K.part_of[G.conj(a, g)] != c)
                    return {false, pair_msg("centrality: part not conjugation-invariant", c, g),
                            0, static_cast<long>(c), static_cast<long>(g)};
    // convolution closure of the indicator span
    std::vector<long> cnt(G.order);
    for (size_t i = 0; i < K.size(); ++i)
        for (size_t j = 0; j < K.size(); ++j) {
            std::fill(cnt.begin(), cnt.end(), 0L);
            for (Idx a : K.parts[i])
                for (Idx b : K.parts[j]) ++cnt[G.times(a, b)];
            for (size_t c = 0; c < K.size(); ++c) {
                const long v = cnt[K.parts[c][0]];
                for (Idx g : K.parts[c])
                    if (cnt[g] != v)
                        return {false,
                                pair_msg("convolution: product of parts not part-constant", i, j),
                                0, static_cast<long>(i), static_cast<long>(j)};
            }
        }
    return {};
}

std::vector<std::vector<Cyclotomic>> idempotents_from_table(const GroupTable& G,
                                                            const SuperPartition& K,
                                                            const CharTable& chars,
                                                            const std::vector<long>& n) {
    if (chars.size() != K.size() || n.size() != K.size())
        throw std::invalid_argument("need one character and one normalizer per part");
    const Rational order(static_cast<long>(G.order));
    std::vector<std::vector<Cyclotomic>> f(chars.size());
    for (size_t i = 0; i < chars.size(); ++i) {
        f[i].resize(G.order);
        for (Idx g = 0; g < G.order; ++g)
            f[i][g] = (chars[i][K.part_of[g]] * Rational(n[i])).conj() / order;
    }
    // convolution products must reproduce the Kronecker pattern
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) {
            std::vector<Cyclotomic> conv(G.order);
            for (Idx a = 0; a < G.order; ++a) {
                if (f[i][a].is_zero()) continue;
                for (Idx b = 0; b < G.order; ++b)
                    conv[G.times(a, b)] += f[i][a] * f[j][b];
            }
            for (Idx g = 0; g < G.order; ++g) {
                const Cyclotomic want = (i == j) ? f[i][g] : Cyclotomic();
                if (!(conv[g] == want))
                    throw std::logic_error(
                        pair_msg("idempotent convolution fails for characters", i, j));
            }
        }
    return f;
}

CheckReport regular_decomposition(const GroupTable& G, const SuperPartition& K,
                                  const CharTable& chars, const std::vector<long>& n) {
    if (chars.size() != K.size() || n.size() != K.size())
        return {false, "need one character and one normalizer per part", 0, -1, -1};
    for (Idx g = 0; g < G.order; ++g) {
        Cyclotomic acc;
        for (size_t i = 0; i < chars.size(); ++i)
            acc += chars[i][K.part_of[g]] * Rational(n[i]);
        const Cyclotomic want(g == G.identity ? Rational(static_cast<long>(G.order))
                                              : Rational(0));
        if (!(acc == want))
            return {false, pair_msg("weighted character sum misses the regular character at", g,
                                    -1),
                    0, static_cast<long>(g), -1};
    }
    return {};
}

bool integrality_check(const Cyclotomic& chi_on_class, Idx class_size, const Rational& degree) {
    if (degree == Rational(0)) throw std::invalid_argument("zero degree");
    return (chi_on_class * Rational(static_cast<long>(class_size)) / degree)
        .has_integral_coeffs();
}

SuperTheory cyclic_theory(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclic group needs a positive order");
    SuperTheory T;
    T.table = build_group_table(n, 0, [n](Idx a, Idx b) { return (a + b) % n; });
    std::vector<std::vector<Idx>> parts;
    for (Idx g = 0; g < n; ++g) parts.push_back({g});
    T.classes = SuperPartition(n, std::move(parts));
    T.chars.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        T.chars[k].resize(n);
        for (unsigned t = 0; t < n; ++t)
            T.chars[k][t] = Cyclotomic::root_of_unity(n, static_cast<long long>(k) * t);
        std::ostringstream nm;
        nm << "chi_" << k;
        T.char_names.push_back(nm.str());
        std::ostringstream cn;
        cn << "g^" << k;
        T.class_names.push_back(cn.str());
    }
    return T;
}

SuperTheory s3_conjugacy_theory() {
    // permutations of three letters in lexicographic one-line order
    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const auto mul = [](Idx a, Idx b) {
        int c[3];
        for (int x = 0; x < 3; ++x) c[x] = perm[a][perm[b][x]];
        for (Idx s = 0; s < 6; ++s)
            if (c[0] == perm[s][0] && c[1] == perm[s][1] && c[2] == perm[s][2]) return s;
        throw std::logic_error("composition escaped the permutation list");
    };
    SuperTheory T;
    T.table = build_group_table(6, 0, mul);
    T.classes = SuperPartition(6, {{0}, {1, 2, 5}, {3, 4}});
    const auto row = [](long a, long b, long c) {
        return std::vector<Cyclotomic>{Cyclotomic(Rational(a)), Cyclotomic(Rational(b)),
                                       Cyclotomic(Rational(c))};
    };
    T.chars = {row(1, 1, 1), row(1, -1, 1), row(2, 0, -1)};
    T.char_names = {"trivial", "sign", "standard"};
    T.class_names = {"e", "transpositions", "3-cycles"};
    return T;
}

SuperTheory gamma_average(const SuperTheory& base,
                          const std::vector<std::vector<Idx>>& generators) {
    const Idx order = base.table.order;
    const size_t m = base.classes.size();
    if (base.chars.size() != m)
        throw std::invalid_argument("base theory needs one character per part");

    // permutations induced on parts and on characters
    std::vector<std::vector<size_t>> part_perm, char_perm;
    for (const auto& tau : generators) {
        if (tau.size() != order)
            throw std::invalid_argument("generator does not act on the element set");
        std::vector<size_t> pp(m);
        for (size_t c = 0; c < m; ++c) {
            const size_t target = base.classes.part_of[tau[base.classes.parts[c][0]]];
            for (Idx g : base.classes.parts[c])
                if (base.classes.part_of[tau[g]] != target)
                    throw std::invalid_argument("the action does not permute the parts");
            if (base.classes.parts[target].size() != base.classes.parts[c].size())
                throw std::invalid_argument("the action does not permute the parts");
            pp[c] = target;
        }
        // the moved character chi^tau(tau(g)) = chi(g), i.e. per part:
        // value on part pp[c] equals the old value on part c
        std::vector<size_t> cp(m, m);
        for (size_t i = 0; i < m; ++i) {
            std::vector<Cyclotomic> moved(m);
            for (size_t c = 0; c < m; ++c) moved[pp[c]] = base.chars[i][c];
            for (size_t j = 0; j < m && cp[i] == m; ++j)
                if (moved == base.chars[j]) cp[i] = j;
            if (cp[i] == m)
                throw std::invalid_argument("the action does not permute the characters");
        }
        part_perm.push_back(std::move(pp));
        char_perm.push_back(std::move(cp));
    }

    // orbit fusion on part ids and on character ids
    const auto orbits = [m](const std::vector<std::vector<size_t>>& perms) {
        std::vector<long> orb(m, -1);
        std::vector<std::vector<size_t>> out;
        for (size_t s = 0; s < m; ++s) {
            if (orb[s] >= 0) continue;
            std::vector<size_t> stack{s}, members;
            orb[s] = static_cast<long>(out.size());
            while (!stack.empty()) {
                const size_t v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (const auto& perm : perms)
                    if (orb[perm[v]] < 0) {
                        orb[perm[v]] = orb[s];
                        stack.push_back(perm[v]);
                    }
            }
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        return out;
    };
    const auto part_orbits = orbits(part_perm);
    const auto char_orbits = orbits(char_perm);

    SuperTheory out;
    out.table = base.table;
    std::vector<std::vector<Idx>> fused;
    std::vector<Idx> old_to_new(m);
    for (size_t c = 0; c < part_orbits.size(); ++c) {
        std::vector<Idx> members;
        std::string name;
        for (size_t old : part_orbits[c]) {
            members.insert(members.end(), base.classes.parts[old].begin(),
                           base.classes.parts[old].end());
            old_to_new[old] = static_cast<Idx>(c);
            if (!name.empty()) name += ",";
            name += old < base.class_names.size() ? base.class_names[old] : "?";
        }
        fused.push_back(std::move(members));
        out.class_names.push_back(name);
    }
    out.classes = SuperPartition(order, std::move(fused));

    for (const auto& orbit : char_orbits) {
        std::vector<Cyclotomic> sum(m);
        std::string name;
        for (size_t i : orbit) {
            for (size_t c = 0; c < m; ++c) sum[c] += base.chars[i][c];
            if (!name.empty()) name += "+";
            name += i < base.char_names.size() ? base.char_names[i] : "?";
        }
        // the orbit sum is constant across fused parts; collapse and verify
        std::vector<Cyclotomic> collapsed(out.classes.size());
        std::vector<char> set(out.classes.size(), 0);
        for (size_t c = 0; c < m; ++c) {
            const Idx nc = old_to_new[c];
            if (!set[nc]) {
                collapsed[nc] = sum[c];
                set[nc] = 1;
            } else if (!(collapsed[nc] == sum[c])) {
                throw std::invalid_argument("orbit sums are not constant on fused parts");
            }
        }
        out.chars.push_back(std::move(collapsed));
        out.char_names.push_back(name);
    }
    return out;
}

}  // namespace sct
