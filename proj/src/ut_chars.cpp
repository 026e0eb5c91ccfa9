#include "sct/ut_chars.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace sct {

namespace {

// (1/N) sum_x f(x) conj(g(x)) over dense element-indexed values.
Cyclotomic dot(Idx N, const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) {
    Cyclotomic s;
    for (Idx x = 0; x < N; ++x) s += f[x] * g[x].conj();
    return s / Rational(static_cast<long>(N));
}

// Induction sum at one element, with the stabilizer membership mask prepared.
Cyclotomic induced_at(const UTContext& ctx, Idx lam, Idx g, const std::vector<char>& in_stab,
                      Idx stab_size) {
    const CharacterRing& ring = ctx.ring();
    const unsigned m = ring.conductor();
    const long long step = m / ring.p();
    const RootAlgebra& J = ctx.J();
    const Idx N = ctx.order();
    RootCounter cnt(m);
    for (Idx a = 0; a < N; ++a) {
        Idx c = ctx.gmul(ctx.gmul(a, g), ctx.ginv(a));
        if (in_stab[c]) cnt.add(step * J.pair(lam, c));
    }
    return cnt.value() / Rational(static_cast<long>(stab_size));
}

std::vector<char> stabilizer_mask(const UTContext& ctx, Idx lam, Idx* stab_size) {
    std::vector<Idx> stab = ctx.right_stabilizer_subalgebra(lam);
    std::vector<char> mask(ctx.order(), 0);
    for (Idx u : stab) mask[u] = 1;
    *stab_size = static_cast<Idx>(stab.size());
    return mask;
}

// Dense supercharacter basis rows (one per dual orbit) from the induction
// oracle; valid for any root pattern, not just the full one.
std::vector<std::vector<Cyclotomic>> oracle_basis(const UTContext& ctx) {
    std::vector<std::vector<Cyclotomic>> rows;
    rows.reserve(ctx.dual_orbits().size());
    for (const auto& orb : ctx.dual_orbits()) rows.push_back(induced_dense(ctx, orb.rep));
    return rows;
}

}  // namespace

// --- closed-form values -------------------------------------------------------

Cyclotomic elementary_value(const CharacterRing& ring, Root alpha, int c,
                            const AdmissiblePair& cls) {
    const BasicSubset& D = cls.D;
    for (int l = alpha.i + 1; l < alpha.j; ++l)
        if (D.contains(Root{alpha.i, l}) || D.contains(Root{l, alpha.j}))
            return Cyclotomic();
    long long w = 1;
    const long long q = ring.p();
    for (int t = 0; t < reduced_weight(alpha, D); ++t) w *= q;
    Cyclotomic out{Rational(static_cast<long>(w))};
    const auto& roots = D.roots();
    for (size_t t = 0; t < roots.size(); ++t)
        if (roots[t] == alpha) {
            out *= ring.additive(static_cast<long long>(c) * cls.labels[t]);
            break;
        }
    return out;
}

Cyclotomic supercharacter_value(const CharacterRing& ring, const AdmissiblePair& chr,
                                const AdmissiblePair& cls) {
    Cyclotomic out{Rational(1)};
    const auto& roots = chr.D.roots();
    for (size_t t = 0; t < roots.size(); ++t) {
        out *= elementary_value(ring, roots[t], chr.labels[t], cls);
        if (out.is_zero()) break;
    }
    return out;
}

CharTable closed_table(const UTContext& ctx) {
    const CharacterRing& ring = ctx.ring();
    const auto& orbits = ctx.dual_orbits();
    const auto& classes = ctx.superclasses();
    CharTable out(orbits.size());
    for (size_t i = 0; i < orbits.size(); ++i) {
        const AdmissiblePair& chr = ctx.dual_orbit_label(static_cast<Idx>(i));
        out[i].reserve(classes.size());
        for (size_t j = 0; j < classes.size(); ++j)
            out[i].push_back(
                supercharacter_value(ring, chr, ctx.superclass_label(static_cast<Idx>(j))));
    }
    return out;
}

SuperPartition class_partition(const UTContext& ctx) {
    std::vector<std::vector<Idx>> parts;
    parts.reserve(ctx.superclasses().size());
    for (const auto& cls : ctx.superclasses()) parts.push_back(cls.members);
    return SuperPartition(ctx.order(), std::move(parts));
}

// --- induced-character oracle --------------------------------------------------

Cyclotomic induced_value(const UTContext& ctx, Idx lam, Idx g) {
    Idx stab_size = 0;
    std::vector<char> mask = stabilizer_mask(ctx, lam, &stab_size);
    return induced_at(ctx, lam, g, mask, stab_size);
}

std::vector<Cyclotomic> induced_on_classes(const UTContext& ctx, Idx lam) {
    Idx stab_size = 0;
    std::vector<char> mask = stabilizer_mask(ctx, lam, &stab_size);
    std::vector<Cyclotomic> out;
    out.reserve(ctx.superclasses().size());
    for (const auto& cls : ctx.superclasses())
        out.push_back(induced_at(ctx, lam, cls.rep, mask, stab_size));
    return out;
}

std::vector<Cyclotomic> induced_dense(const UTContext& ctx, Idx lam) {
    Idx stab_size = 0;
    std::vector<char> mask = stabilizer_mask(ctx, lam, &stab_size);
    const CharacterRing& ring = ctx.ring();
    const unsigned m = ring.conductor();
    const long long step = m / ring.p();
    const RootAlgebra& J = ctx.J();
    const Idx N = ctx.order();
    std::vector<RootCounter> acc(N, RootCounter(m));
    for (Idx a = 0; a < N; ++a) {
        const Idx ai = ctx.ginv(a);
        for (Idx g = 0; g < N; ++g) {
            Idx c = ctx.gmul(ctx.gmul(a, g), ai);
            if (mask[c]) acc[g].add(step * J.pair(lam, c));
        }
    }
    std::vector<Cyclotomic> out;
    out.reserve(N);
    const Rational h(static_cast<long>(stab_size));
    for (Idx g = 0; g < N; ++g) out.push_back(acc[g].value() / h);
    return out;
}

// --- orbit-sum forms -----------------------------------------------------------

KirillovPair kirillov_forms(const UTContext& ctx, Idx lam, Idx x) {
    const CharacterRing& ring = ctx.ring();
    const unsigned m = ring.conductor();
    const long long step = m / ring.p();
    const RootAlgebra& J = ctx.J();

    const auto& orbit = ctx.dual_orbits()[ctx.dual_orbit_of(lam)];
    RootCounter over_orbit(m);
    for (Idx mu : orbit.members) over_orbit.add(step * J.pair(mu, x));
    Cyclotomic orbit_form =
        over_orbit.value() / Rational(static_cast<long>(orbit.right_orbit_count));

    const auto& cls = ctx.superclasses()[ctx.superclass_of(x)];
    const std::size_t lam_right = ctx.right_orbit(lam).size();
    RootCounter over_class(m);
    for (Idx y : cls.members) over_class.add(step * J.pair(lam, y));
    Cyclotomic class_form =
        over_class.value() * Rational(static_cast<long>(lam_right),
                                      static_cast<long>(cls.members.size()));

    return KirillovPair{std::move(orbit_form), std::move(class_form)};
}

// --- norm and degree identities --------------------------------------------------

NormReport norm_identity(const UTContext& ctx, Idx lam) {
    const CharacterRing& ring = ctx.ring();
    const Idx orbit_id = ctx.dual_orbit_of(lam);
    const AdmissiblePair& label = ctx.dual_orbit_label(orbit_id);
    const auto& classes = ctx.superclasses();

    Cyclotomic total;
    Cyclotomic at_identity;
    for (size_t j = 0; j < classes.size(); ++j) {
        Cyclotomic v = supercharacter_value(ring, label, ctx.superclass_label(static_cast<Idx>(j)));
        if (classes[j].members.front() == 0 && classes[j].members.size() == 1) at_identity = v;
        total += v * v.conj() * Rational(static_cast<long>(classes[j].members.size()));
    }
    total /= Rational(static_cast<long>(ctx.order()));

    NormReport rep;
    rep.scalar = total.rational_value();

    std::vector<Idx> right = ctx.right_orbit(lam);
    std::vector<Idx> left = ctx.left_orbit(lam);
    std::vector<Idx> both;
    std::set_intersection(right.begin(), right.end(), left.begin(), left.end(),
                          std::back_inserter(both));
    rep.intersection = both.size();

    const long long q = ctx.p();
    rep.q_to_c = 1;
    for (int t = 0; t < crossing_number(label.D); ++t) rep.q_to_c *= q;
    rep.degree = at_identity.rational_value();
    rep.q_to_d = 1;
    for (int t = 0; t < dimension_weight(label.D); ++t) rep.q_to_d *= q;

    rep.pass = rep.scalar == Rational(static_cast<long>(rep.intersection)) &&
               rep.scalar == Rational(static_cast<long>(rep.q_to_c)) &&
               rep.degree == Rational(static_cast<long>(rep.q_to_d));
    return rep;
}

// --- algebra subgroups ------------------------------------------------------------

SubgroupEmbedding subgroup_on_roots(const UTContext& ctx, const std::vector<Root>& roots) {
    const RootAlgebra& amb = ctx.J();
    RootAlgebra sub(amb.n(), amb.p(), roots);

    std::vector<int> where(sub.rank());
    for (int k = 0; k < sub.rank(); ++k) {
        const Root& r = sub.roots()[static_cast<size_t>(k)];
        int a = amb.root_index(r.i, r.j);
        if (a < 0) throw std::invalid_argument("subgroup root outside the ambient pattern");
        where[k] = a;
    }

    std::vector<Idx> to_ambient(sub.size());
    std::vector<int> ambient_digits(amb.rank());
    for (Idx s = 0; s < sub.size(); ++s) {
        std::vector<int> sd = sub.digits(s);
        std::fill(ambient_digits.begin(), ambient_digits.end(), 0);
        for (int k = 0; k < sub.rank(); ++k) ambient_digits[where[k]] = sd[k];
        to_ambient[s] = amb.index(ambient_digits);
    }

    UTContext sub_ctx(std::move(sub));
    const Idx M = sub_ctx.order();
    if (static_cast<std::uint64_t>(M) * M <= 1u << 20)
        for (Idx s = 0; s < M; ++s)
            for (Idx t = 0; t < M; ++t)
                if (to_ambient[sub_ctx.gmul(s, t)] != ctx.gmul(to_ambient[s], to_ambient[t]))
                    throw std::logic_error("subgroup embedding is not multiplicative");
    return SubgroupEmbedding{std::move(sub_ctx), std::move(to_ambient)};
}

std::vector<Rational> restrict_and_decompose(const UTContext& ctx,
                                             const SubgroupEmbedding& emb,
                                             const std::vector<Cyclotomic>& dense_ambient) {
    if (dense_ambient.size() != ctx.order())
        throw std::invalid_argument("ambient value vector has the wrong length");
    const Idx M = emb.sub.order();
    std::vector<Cyclotomic> restricted(M);
    for (Idx h = 0; h < M; ++h) restricted[h] = dense_ambient[emb.to_ambient[h]];
    return decompose_nonnegative(M, oracle_basis(emb.sub), restricted, true, "restriction");
}

std::vector<Cyclotomic> superinduce(const UTContext& ctx, const SubgroupEmbedding& emb,
                                    const std::vector<Cyclotomic>& phi_sub) {
    const Idx N = ctx.order();
    const Idx M = emb.sub.order();
    if (phi_sub.size() != M)
        throw std::invalid_argument("subgroup value vector has the wrong length");
    const RootAlgebra& J = ctx.J();

    std::vector<long> to_sub(N, -1);
    for (Idx h = 0; h < M; ++h) to_sub[emb.to_ambient[h]] = static_cast<long>(h);

    std::vector<long long> cnt(M);
    auto value_at = [&](Idx x) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Idx a = 0; a < N; ++a) {
            const Idx w = J.add(x, J.mul(a, x));
            for (Idx b = 0; b < N; ++b) {
                long h = to_sub[J.add(w, J.mul(w, b))];
                if (h >= 0) ++cnt[static_cast<size_t>(h)];
            }
        }
        Cyclotomic s;
        for (Idx h = 0; h < M; ++h)
            if (cnt[h] != 0) s += phi_sub[h] * Rational(static_cast<long>(cnt[h]));
        return s / Rational(static_cast<long>(N) * static_cast<long>(M));
    };

    std::vector<Cyclotomic> out(N);
    const bool exhaustive = static_cast<double>(N) * N * N <= 2e6;
    if (exhaustive) {
        for (Idx x = 0; x < N; ++x) out[x] = value_at(x);
        for (const auto& cls : ctx.superclasses())
            for (Idx x : cls.members)
                if (!(out[x] == out[cls.rep]))
                    throw std::logic_error("superinduction value varies within a superclass");
    } else {
        for (const auto& cls : ctx.superclasses()) {
            Cyclotomic v = value_at(cls.rep);
            for (Idx x : cls.members) out[x] = v;
        }
    }
    return out;
}

ReciprocityReport frobenius_check(const UTContext& ctx, const SubgroupEmbedding& emb,
                                  const std::vector<Cyclotomic>& phi_sub,
                                  const std::vector<Cyclotomic>& psi_ambient) {
    if (psi_ambient.size() != ctx.order())
        throw std::invalid_argument("ambient value vector has the wrong length");
    const Idx M = emb.sub.order();
    std::vector<Cyclotomic> sind = superinduce(ctx, emb, phi_sub);
    std::vector<Cyclotomic> res(M);
    for (Idx h = 0; h < M; ++h) res[h] = psi_ambient[emb.to_ambient[h]];

    ReciprocityReport rep;
    rep.lhs = dot(ctx.order(), sind, psi_ambient);
    rep.rhs = dot(M, phi_sub, res);
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

std::vector<Rational> superinduction_coefficients(const UTContext& ctx,
                                                  const SubgroupEmbedding& emb,
                                                  const std::vector<Cyclotomic>& phi_sub) {
    std::vector<Cyclotomic> sind = superinduce(ctx, emb, phi_sub);
    return decompose_nonnegative(ctx.order(), oracle_basis(ctx), sind, false, "superinduction");
}

// --- structure-constant algebras ----------------------------------------------------

FpAlgebra::FpAlgebra(int p, int dim, std::vector<std::vector<Idx>> basis_products)
    : p_(p), dim_(dim), prod_(std::move(basis_products)) {
    if (!is_prime(p_)) throw std::invalid_argument("field order must be prime");
    if (dim_ < 0) throw std::invalid_argument("dimension must be nonnegative");
    size_ = 1;
    for (int k = 0; k < dim_; ++k) {
        if (size_ > kDefaultElementCap / static_cast<Idx>(p_))
            throw CapExceeded("structure-constant algebra would exceed the size cap");
        size_ *= static_cast<Idx>(p_);
    }
    pow_.assign(static_cast<size_t>(dim_), 1);
    for (int k = dim_ - 2; k >= 0; --k) pow_[k] = pow_[k + 1] * static_cast<Idx>(p_);

    if (prod_.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("product table has the wrong shape");
    for (const auto& row : prod_) {
        if (row.size() != static_cast<size_t>(dim_))
            throw std::invalid_argument("product table has the wrong shape");
        for (Idx e : row)
            if (e >= size_) throw std::invalid_argument("product table entry out of range");
    }

    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (mul(mul(basis(i), basis(j)), basis(k)) !=
                    mul(basis(i), mul(basis(j), basis(k))))
                    throw std::logic_error("structure-constant algebra is not associative");

    nilpotency_class_ = 1;
    if (dim_ > 0) {
        std::set<Idx> layer;
        for (int k = 0; k < dim_; ++k) layer.insert(basis(k));
        int t = 1;
        while (!layer.empty()) {
            ++t;
            if (t > dim_ + 1)
                throw std::logic_error("structure-constant algebra is not nilpotent");
            std::set<Idx> next;
            for (Idx x : layer)
                for (int k = 0; k < dim_; ++k) {
                    Idx pr = mul(x, basis(k));
                    if (pr != 0) next.insert(pr);
                }
            layer = std::move(next);
        }
        nilpotency_class_ = t;
    }
}

std::vector<int> FpAlgebra::digits(Idx x) const {
    std::vector<int> d(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k)
        d[k] = static_cast<int>((x / pow_[k]) % static_cast<Idx>(p_));
    return d;
}

Idx FpAlgebra::index(const std::vector<int>& digits) const {
    Idx out = 0;
    for (int k = 0; k < dim_; ++k)
        out += static_cast<Idx>(((digits[k] % p_) + p_) % p_) * pow_[k];
    return out;
}

Idx FpAlgebra::basis(int k) const { return pow_[static_cast<size_t>(k)]; }

Idx FpAlgebra::add(Idx a, Idx b) const {
    std::vector<int> da = digits(a), db = digits(b);
    for (int k = 0; k < dim_; ++k) da[k] = (da[k] + db[k]) % p_;
    return index(da);
}

Idx FpAlgebra::neg(Idx a) const {
    std::vector<int> d = digits(a);
    for (int k = 0; k < dim_; ++k) d[k] = (p_ - d[k]) % p_;
    return index(d);
}

Idx FpAlgebra::scale(int c, Idx a) const {
    std::vector<int> d = digits(a);
    for (int k = 0; k < dim_; ++k) d[k] = (d[k] * (((c % p_) + p_) % p_)) % p_;
    return index(d);
}

Idx FpAlgebra::mul(Idx a, Idx b) const {
    std::vector<int> da = digits(a), db = digits(b), r(static_cast<size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!db[j]) continue;
            Idx t = prod_[i][j];
            if (!t) continue;
            int coeff = (da[i] * db[j]) % p_;
            if (!coeff) continue;
            std::vector<int> dt = digits(t);
            for (int k = 0; k < dim_; ++k) r[k] = (r[k] + coeff * dt[k]) % p_;
        }
    }
    return index(r);
}

CrossingAlgebras crossing_algebras(const BasicSubset& D, int p) {
    std::vector<Root> cr = crossing_closure(D);
    const int c = static_cast<int>(cr.size());
    auto pos = [&cr](Root r) -> int {
        auto it = std::lower_bound(cr.begin(), cr.end(), r);
        return (it != cr.end() && *it == r) ? static_cast<int>(it - cr.begin()) : -1;
    };
    auto basis_index = [p](int dim, int k) {
        Idx v = 1;
        for (int t = k + 1; t < dim; ++t) v *= static_cast<Idx>(p);
        return v;
    };

    std::vector<std::vector<Idx>> plain(static_cast<size_t>(c),
                                        std::vector<Idx>(static_cast<size_t>(c), 0));
    std::vector<std::vector<Idx>> extended(static_cast<size_t>(c) + 1,
                                           std::vector<Idx>(static_cast<size_t>(c) + 1, 0));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            const Root a = cr[static_cast<size_t>(i)];
            const Root b = cr[static_cast<size_t>(j)];
            if (a.j != b.i) continue;
            const Root composite{a.i, b.j};
            int k = pos(composite);
            if (k >= 0) {
                plain[i][j] = basis_index(c, k);
                extended[i][j] = basis_index(c + 1, k);
            } else if (D.contains(composite)) {
                extended[i][j] = basis_index(c + 1, c);
            }
        }
    return CrossingAlgebras{std::move(cr), FpAlgebra(p, c, std::move(plain)),
                            FpAlgebra(p, c + 1, std::move(extended))};
}

GroupTable algebra_group(const FpAlgebra& A) {
    return build_group_table(A.size(), 0,
                             [&A](Idx a, Idx b) { return A.add(A.add(a, b), A.mul(a, b)); });
}

Idx algebra_superclass_count(const FpAlgebra& A) {
    const Idx N = A.size();
    std::vector<MoveTable> moves;
    moves.reserve(2 * (N > 0 ? N - 1 : 0));
    for (Idx u = 1; u < N; ++u) {
        MoveTable left(N), right(N);
        for (Idx x = 0; x < N; ++x) {
            left[x] = A.add(x, A.mul(u, x));
            right[x] = A.add(x, A.mul(x, u));
        }
        moves.push_back(std::move(left));
        moves.push_back(std::move(right));
    }
    return static_cast<Idx>(orbit_decompose(N, moves).members.size());
}

Idx algebra_dual_orbit_count(const FpAlgebra& A) {
    const Idx N = A.size();
    const int d = A.dim();
    const int p = A.p();
    std::vector<MoveTable> moves;
    for (Idx u = 1; u < N; ++u) {
        std::vector<std::vector<int>> right_img(static_cast<size_t>(d)),
            left_img(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) {
            const Idx bk = A.basis(k);
            right_img[k] = A.digits(A.add(bk, A.mul(u, bk)));
            left_img[k] = A.digits(A.add(bk, A.mul(bk, u)));
        }
        MoveTable right(N), left(N);
        std::vector<int> nr(static_cast<size_t>(d)), nl(static_cast<size_t>(d));
        for (Idx lam = 0; lam < N; ++lam) {
            const std::vector<int> dl = A.digits(lam);
            for (int k = 0; k < d; ++k) {
                int sr = 0, sl = 0;
                for (int t = 0; t < d; ++t) {
                    sr += dl[t] * right_img[k][t];
                    sl += dl[t] * left_img[k][t];
                }
                nr[k] = sr % p;
                nl[k] = sl % p;
            }
            right[lam] = A.index(nr);
            left[lam] = A.index(nl);
        }
        moves.push_back(std::move(right));
        moves.push_back(std::move(left));
    }
    return static_cast<Idx>(orbit_decompose(N, moves).members.size());
}

// --- subalgebra membership ------------------------------------------------------

bool in_l_subalgebra(const UTContext& ctx, Idx lam, Idx x) {
    const RootAlgebra& J = ctx.J();
    for (int k = 0; k < J.rank(); ++k)
        if (J.pair(lam, J.mul(x, J.unit_root(k))) != 0) return false;
    return true;
}

bool in_k_subalgebra(const UTContext& ctx, Idx lam, Idx x) {
    return in_l_subalgebra(ctx, lam, x) && ctx.J().pair(lam, x) == 0;
}

bool in_s_subalgebra(const UTContext& ctx, Idx lam, Idx x) {
    const RootAlgebra& J = ctx.J();
    for (Idx y : ctx.right_stabilizer_subalgebra(lam))
        if (J.pair(lam, J.mul(x, y)) != 0) return false;
    return true;
}

}  // namespace sct
