#include "sct/tri_chars.hpp"

#include <algorithm>
#include <iterator>
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

// Rank of a small matrix over F_p by Gaussian elimination.
int rank_fp(std::vector<std::vector<int>> M, int p) {
    const int nr = static_cast<int>(M.size());
    if (nr == 0) return 0;
    const int nc = static_cast<int>(M[0].size());
    auto inv_mod = [p](int a) {
        int r = 1, b = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (M[r][c] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        const int s = inv_mod(((M[rank][c] % p) + p) % p);
        for (int cc = c; cc < nc; ++cc) M[rank][cc] = ((M[rank][cc] * s) % p + p) % p;
        for (int r = 0; r < nr; ++r) {
            if (r == rank || M[r][c] % p == 0) continue;
            const int f = ((M[r][c] % p) + p) % p;
            for (int cc = c; cc < nc; ++cc)
                M[r][cc] = ((M[r][cc] - f * M[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// F_p-span of the generators inside the digit-vector index space, sorted.
std::vector<Idx> fp_span(const RootAlgebra& J, const std::vector<Idx>& gens) {
    std::set<Idx> span;
    span.insert(0);
    std::vector<Idx> frontier{0};
    while (!frontier.empty()) {
        std::vector<Idx> next;
        for (Idx e : frontier)
            for (Idx g : gens) {
                Idx s = J.add(e, g);
                if (span.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return {span.begin(), span.end()};
}

// Dense supercharacter basis rows in enumeration order.
std::vector<std::vector<Cyclotomic>> tri_oracle_basis(const TriangularContext& ctx) {
    std::vector<std::vector<Cyclotomic>> rows;
    for (const TriCharLabel& label : enumerate_tri_characters(ctx))
        rows.push_back(TriCharacter(ctx, label).induced_dense());
    return rows;
}

}  // namespace

std::string TriCharLabel::str() const {
    std::string s = D.str();
    s += "; theta=(";
    for (size_t i = 0; i < theta.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(theta[i]);
    }
    s += ")";
    return s;
}

std::vector<TriCharLabel> enumerate_tri_characters(const TriangularContext& ctx) {
    const int n = ctx.n();
    const int p = ctx.p();
    std::vector<TriCharLabel> out;
    for (const auto& orb : ctx.j_orbits()) {
        const BasicSubset& D = orb.label;
        std::vector<char> on(n + 1, 0);
        for (int i : D.support()) on[i] = 1;
        std::vector<int> free_pos;
        for (int i = 1; i <= n; ++i)
            if (!on[i]) free_pos.push_back(i);
        std::vector<int> theta(n, 0);
        while (true) {
            out.push_back(TriCharLabel{D, theta});
            size_t k = 0;
            while (k < free_pos.size()) {
                int& e = theta[free_pos[k] - 1];
                if (++e <= p - 2) break;
                e = 0;
                ++k;
            }
            if (k == free_pos.size()) break;
        }
    }
    if (out.size() != ctx.superclasses().size())
        throw std::logic_error("supercharacter and superclass counts differ");
    return out;
}

Cyclotomic theta_value(const TriangularContext& ctx, const TriCharLabel& chr,
                       const std::vector<int>& h) {
    const CharacterRing& ring = ctx.ring();
    const long long q1 = ring.p() - 1;
    long long e = 0;
    for (int i = 0; i < ctx.n(); ++i)
        e += static_cast<long long>(chr.theta[i]) * ring.dlog(static_cast<unsigned>(h[i]));
    return ring.root(e % q1 * (ring.conductor() / q1) % ring.conductor());
}

// --- the supercharacter as an induced linear character --------------------------------

TriCharacter::TriCharacter(const TriangularContext& ctx, TriCharLabel label)
    : ctx_(&ctx), label_(std::move(label)) {
    lam_ = ctx.J().basic_element(label_.D);
    build_(ctx);
}

TriCharacter::TriCharacter(const TriangularContext& ctx, TriCharLabel label, Idx lam)
    : ctx_(&ctx), label_(std::move(label)), lam_(lam) {
    build_(ctx);
}

void TriCharacter::build_(const TriangularContext& ctx) {
    const RootAlgebra& J = ctx.J();
    const int n = ctx.n();
    const int p = ctx.p();
    if (static_cast<int>(label_.theta.size()) != n)
        throw std::invalid_argument("theta exponent vector has the wrong length");
    const std::vector<int> S = label_.D.support();
    std::vector<char> on(n + 1, 0);
    for (int i : S) on[i] = 1;
    for (int i = 1; i <= n; ++i) {
        const int e = label_.theta[i - 1];
        if (e < 0 || e > p - 2 || (on[i] && e != 0))
            throw std::invalid_argument("theta exponent out of range");
    }

    omega_ = orbit_from_seed(J.basic_element(label_.D), ctx.corner_dual_moves(S));
    if (!ctx.orbit_regular_in(omega_, S))
        throw std::logic_error("corner dual orbit of the basic functional is not regular");
    if (!std::binary_search(omega_.begin(), omega_.end(), lam_))
        throw std::invalid_argument("functional does not lie in the labelled dual orbit");

    const std::vector<Idx> fixing = ctx.torus_fixing(S);
    const std::vector<Idx> stab = ctx.right_stabilizer_subalgebra(lam_);
    sub_order_ = static_cast<Idx>(fixing.size() * stab.size());

    const CharacterRing& ring = ctx.ring();
    const long long m = ring.conductor();
    const long long add_step = m / ring.p();
    const long long mult_step = m / (ring.p() - 1);
    xi_exp_.assign(ctx.order(), -1);
    for (Idx t : fixing) {
        const std::vector<int> h = ctx.torus_values(t);
        long long te = 0;
        for (int i = 0; i < n; ++i)
            te += static_cast<long long>(label_.theta[i]) * ring.dlog(static_cast<unsigned>(h[i]));
        te = te % (ring.p() - 1) * mult_step % m;
        for (Idx x : stab)
            xi_exp_[ctx.element(t, x)] = (te + add_step * J.pair(lam_, x)) % m;
    }
}

Cyclotomic TriCharacter::xi_dot(Idx g) const {
    if (xi_exp_[g] < 0) return Cyclotomic();
    return ctx_->ring().root(xi_exp_[g]);
}

Cyclotomic TriCharacter::induced_value(Idx g) const {
    const TriangularContext& ctx = *ctx_;
    RootCounter cnt(ctx.ring().conductor());
    for (Idx a = 0; a < ctx.order(); ++a) {
        const Idx c = ctx.gmul(ctx.gmul(a, g), ctx.ginv(a));
        if (xi_exp_[c] >= 0) cnt.add(xi_exp_[c]);
    }
    return cnt.value() / Rational(static_cast<long>(sub_order_));
}

std::vector<Cyclotomic> TriCharacter::induced_on_classes() const {
    std::vector<Cyclotomic> out;
    out.reserve(ctx_->superclasses().size());
    for (const auto& K : ctx_->superclasses()) out.push_back(induced_value(K.rep));
    return out;
}

std::vector<Cyclotomic> TriCharacter::induced_dense() const {
    std::vector<Cyclotomic> out;
    out.reserve(ctx_->order());
    for (Idx g = 0; g < ctx_->order(); ++g) out.push_back(induced_value(g));
    return out;
}

// --- closed product formula -----------------------------------------------------------

Cyclotomic tri_closed_value(const TriangularContext& ctx, const TriCharLabel& chr,
                            const TriClassLabel& cls) {
    const int n = ctx.n();
    const int p = ctx.p();
    if (static_cast<int>(cls.h.size()) != n)
        throw std::invalid_argument("class diagonal has the wrong length");

    // Vanishing: a class arc sharing its row and ending strictly inside a
    // character arc, one sharing its column and starting strictly inside, or
    // a diagonal value not fixed on the character's support.
    for (Root g : chr.D.roots())
        for (Root c : cls.D.roots()) {
            if (c.i == g.i && c.j < g.j) return Cyclotomic();
            if (c.j == g.j && c.i > g.i) return Cyclotomic();
        }
    for (int i : chr.D.support())
        if (cls.h[i - 1] != 1) return Cyclotomic();

    // Total corank of the interior submatrices of h - 1 + x_{D'}.
    long long mexp = 0;
    for (Root g : chr.D.roots()) {
        const int size = g.j - g.i - 1;
        if (size == 0) continue;
        std::vector<std::vector<int>> M(size, std::vector<int>(size, 0));
        for (int r = 0; r < size; ++r) M[r][r] = (cls.h[g.i + r] - 1) % p;
        for (Root c : cls.D.roots())
            if (c.i > g.i && c.j < g.j) M[c.i - g.i - 1][c.j - g.i - 1] = 1;
        mexp += size - rank_fp(M, p);
    }

    int inter = 0;
    for (Root g : chr.D.roots())
        if (cls.D.contains(g)) ++inter;
    const long long s = 2 * static_cast<long long>(chr.D.size()) - inter;

    Rational w(inter % 2 ? -1 : 1);
    for (long long t = 0; t < mexp; ++t) w *= Rational(p);
    for (long long t = 0; t < s; ++t) w *= Rational(p - 1);
    return theta_value(ctx, chr, cls.h) * w;
}

CharTable tri_closed_table(const TriangularContext& ctx,
                           const std::vector<TriCharLabel>& chars) {
    CharTable T;
    T.reserve(chars.size());
    for (const auto& chr : chars) {
        std::vector<Cyclotomic> row;
        row.reserve(ctx.superclasses().size());
        for (const auto& K : ctx.superclasses()) row.push_back(tri_closed_value(ctx, chr, K.label));
        T.push_back(std::move(row));
    }
    return T;
}

SuperPartition tri_class_partition(const TriangularContext& ctx) {
    std::vector<std::vector<Idx>> parts;
    parts.reserve(ctx.superclasses().size());
    for (const auto& K : ctx.superclasses()) parts.push_back(K.members);
    return SuperPartition(ctx.order(), std::move(parts));
}

// --- orbit-sum expressions ------------------------------------------------------------

TriKirillovPair tri_kirillov_forms(const TriangularContext& ctx, const TriCharLabel& chr,
                                   Idx g) {
    const RootAlgebra& J = ctx.J();
    const CharacterRing& ring = ctx.ring();
    const Idx x = ctx.nil_part(g);
    const std::vector<int> h = ctx.torus_values(ctx.torus_part(g));
    for (int k = 0; k < J.rank(); ++k)
        if (J.digit(x, k) != 0) {
            const Root r = J.roots()[k];
            if (h[r.i - 1] != 1 || h[r.j - 1] != 1)
                throw std::invalid_argument("torus and nilpotent parts do not commute");
        }

    TriKirillovPair out;
    const std::vector<int> S = chr.D.support();
    for (int i : S)
        if (h[i - 1] != 1) return out;  // theta extended by zero off H(e)

    std::vector<int> Sf;
    for (int i = 1; i <= ctx.n(); ++i)
        if (h[i - 1] == 1) Sf.push_back(i);

    const Idx lam = J.basic_element(chr.D);
    const std::vector<Idx> omega = orbit_from_seed(lam, ctx.corner_dual_moves(S));
    std::vector<Idx> dual_e = ctx.corner_dual(S);
    std::sort(dual_e.begin(), dual_e.end());
    std::vector<Idx> dual_f = ctx.corner_dual(Sf);
    std::sort(dual_f.begin(), dual_f.end());

    // The unique two-sided corner orbit upstairs meeting J_e^* exactly in omega*.
    const SubsetOrbits orbs = orbit_decompose_within(dual_f, ctx.corner_dual_moves(Sf));
    const std::vector<Idx>* Omega = nullptr;
    for (const auto& O : orbs.members) {
        std::vector<Idx> meet;
        std::set_intersection(O.begin(), O.end(), dual_e.begin(), dual_e.end(),
                              std::back_inserter(meet));
        if (meet == omega) {
            if (Omega) throw std::logic_error("extension orbit over omega* is not unique");
            Omega = &O;
        }
    }
    if (!Omega) throw std::logic_error("no extension orbit meets the corner in omega*");

    const std::vector<MoveTable> right_moves = ctx.corner_dual_right_moves(Sf);
    const Idx n_omega = count_orbits_within(*Omega, right_moves);
    const Idx he = static_cast<Idx>(ctx.torus_supported(S).size());
    const long long add_step = static_cast<long long>(ring.conductor()) / ring.p();
    const Cyclotomic th = theta_value(ctx, chr, h);

    {
        RootCounter cnt(ring.conductor());
        for (Idx mu : *Omega) cnt.add(add_step * J.pair(mu, x));
        out.orbit_form =
            cnt.value() * th * Rational(static_cast<long>(he)) / Rational(static_cast<long>(n_omega));
    }
    {
        const std::vector<Idx> lam_orbit = orbit_from_seed(lam, right_moves);
        const std::vector<Idx> x_orbit = orbit_from_seed(x, ctx.corner_j_moves(Sf));
        RootCounter cnt(ring.conductor());
        for (Idx y : x_orbit) cnt.add(add_step * J.pair(lam, y));
        out.class_form = cnt.value() * th *
                         Rational(static_cast<long>(he * lam_orbit.size())) /
                         Rational(static_cast<long>(x_orbit.size()));
    }
    return out;
}

// --- norm identity ----------------------------------------------------------------------

TriNormReport tri_norm(const TriangularContext& ctx, const TriCharLabel& chr) {
    const RootAlgebra& J = ctx.J();
    TriNormReport rep;

    const TriCharacter chi(ctx, chr);
    const std::vector<Cyclotomic> vals = chi.induced_on_classes();
    const Cyclotomic sc = scalar_product_on_parts(tri_class_partition(ctx), vals, vals);
    if (!sc.is_rational()) throw std::logic_error("norm is not rational");
    rep.scalar = sc.rational_value();

    const Idx lam = J.basic_element(chr.D);
    const std::vector<Idx> nln = orbit_from_seed(lam, ctx.dual_nilpotent_moves());
    for (Idx t = 0; t < ctx.torus_order(); ++t) {
        bool stable = true;
        for (Idx mu : nln)
            if (!std::binary_search(nln.begin(), nln.end(), ctx.dual_torus_transform(t, mu))) {
                stable = false;
                break;
            }
        if (stable) ++rep.torus_stabilizer;
    }
    rep.torus_fixing = static_cast<Idx>(ctx.torus_fixing(chr.D.support()).size());

    std::vector<Idx> left_gens, right_gens;
    for (int k = 0; k < J.rank(); ++k) {
        std::vector<int> v(J.rank()), w(J.rank());
        for (int b = 0; b < J.rank(); ++b) {
            v[b] = J.pair(lam, J.mul(J.unit_root(b), J.unit_root(k)));
            w[b] = J.pair(lam, J.mul(J.unit_root(k), J.unit_root(b)));
        }
        left_gens.push_back(J.index(v));
        right_gens.push_back(J.index(w));
    }
    const std::vector<Idx> jlam = fp_span(J, left_gens);
    const std::vector<Idx> lamj = fp_span(J, right_gens);
    std::vector<Idx> meet;
    std::set_intersection(jlam.begin(), jlam.end(), lamj.begin(), lamj.end(),
                          std::back_inserter(meet));
    rep.dual_intersection = meet.size();

    const Rational expected(
        rat(static_cast<long>(rep.torus_stabilizer * rep.dual_intersection),
            static_cast<long>(rep.torus_fixing)));
    rep.pass = (rep.scalar == expected);
    return rep;
}

// --- subgroups of triangular type -------------------------------------------------------

TriSubgroupEmbedding tri_subgroup_on_roots(const TriangularContext& ctx,
                                           const std::vector<Root>& roots) {
    const RootAlgebra& J = ctx.J();
    TriangularContext sub(RootAlgebra(ctx.n(), ctx.p(), roots));
    const RootAlgebra& SJ = sub.J();

    std::vector<int> root_map(SJ.rank());
    for (int k = 0; k < SJ.rank(); ++k) {
        const Root r = SJ.roots()[k];
        const int a = J.root_index(r.i, r.j);
        if (a < 0) throw std::invalid_argument("subgroup root outside the ambient pattern");
        root_map[k] = a;
    }
    std::vector<Idx> nil_map(SJ.size());
    for (Idx x = 0; x < SJ.size(); ++x) {
        const std::vector<int> d = SJ.digits(x);
        std::vector<int> D(J.rank(), 0);
        for (int k = 0; k < SJ.rank(); ++k) D[root_map[k]] = d[k];
        nil_map[x] = J.index(D);
    }

    TriSubgroupEmbedding emb{std::move(sub), {}};
    const Idx M = emb.sub.order();
    emb.to_ambient.resize(M);
    for (Idx g = 0; g < M; ++g)
        emb.to_ambient[g] = ctx.element(emb.sub.torus_part(g), nil_map[emb.sub.nil_part(g)]);
    if (M * M <= (Idx(1) << 20))
        for (Idx a = 0; a < M; ++a)
            for (Idx b = 0; b < M; ++b)
                if (emb.to_ambient[emb.sub.gmul(a, b)] !=
                    ctx.gmul(emb.to_ambient[a], emb.to_ambient[b]))
                    throw std::logic_error("subgroup embedding is not a homomorphism");
    return emb;
}

std::vector<Rational> tri_restrict_and_decompose(const TriangularContext& ctx,
                                                 const TriSubgroupEmbedding& emb,
                                                 const std::vector<Cyclotomic>& psi_ambient) {
    if (psi_ambient.size() != ctx.order())
        throw std::invalid_argument("ambient value vector has the wrong length");
    const Idx M = emb.sub.order();
    std::vector<Cyclotomic> res(M);
    for (Idx g = 0; g < M; ++g) res[g] = psi_ambient[emb.to_ambient[g]];
    return decompose_nonnegative(M, tri_oracle_basis(emb.sub), res, true, "restriction");
}

std::vector<Cyclotomic> tri_superinduce(const TriangularContext& ctx,
                                        const TriSubgroupEmbedding& emb,
                                        const std::vector<Cyclotomic>& phi_sub) {
    const Idx N = ctx.order();
    const Idx M = emb.sub.order();
    if (phi_sub.size() != M)
        throw std::invalid_argument("subgroup value vector has the wrong length");
    const RootAlgebra& J = ctx.J();
    const Idx nil = J.size();
    const Idx tor = ctx.torus_order();

    std::vector<long> to_sub(N, -1);
    for (Idx g = 0; g < M; ++g) to_sub[emb.to_ambient[g]] = static_cast<long>(g);
    std::vector<Idx> tinv(tor);
    for (Idx t = 0; t < tor; ++t) tinv[t] = ctx.torus_inv(t);
    const Rational norm =
        rat(static_cast<long>(tor), static_cast<long>(N) * static_cast<long>(M));

    auto value_at = [&](Idx g) {
        const Idx th = ctx.torus_part(g);
        const Idx x = ctx.nil_part(g);
        std::vector<Idx> hv(nil);
        for (Idx v = 0; v < nil; ++v) hv[v] = J.sub(ctx.torus_scale_left(th, v), v);
        std::vector<long long> cnt(M, 0);
        for (Idx u = 0; u < nil; ++u) {
            const Idx uh = J.sub(ctx.torus_scale_right(u, th), u);
            const Idx base = J.add(J.add(uh, x), J.mul(u, x));
            for (Idx v = 0; v < nil; ++v) {
                const Idx w = J.add(J.add(base, J.mul(base, v)), hv[v]);
                for (Idx t = 0; t < tor; ++t) {
                    const Idx wc = ctx.torus_scale_left(t, ctx.torus_scale_right(w, tinv[t]));
                    const long sg = to_sub[ctx.element(th, wc)];
                    if (sg >= 0) ++cnt[sg];
                }
            }
        }
        Cyclotomic acc;
        for (Idx sg = 0; sg < M; ++sg)
            if (cnt[sg] != 0) acc += phi_sub[sg] * Rational(static_cast<long>(cnt[sg]));
        return acc * norm;
    };

    std::vector<Cyclotomic> out(N);
    const bool exhaustive =
        static_cast<std::uint64_t>(N) * tor * nil * nil <= 20000000ULL;
    if (exhaustive) {
        for (Idx g = 0; g < N; ++g) out[g] = value_at(g);
        for (const auto& K : ctx.superclasses())
            for (Idx g : K.members)
                if (!(out[g] == out[K.rep]))
                    throw std::logic_error("superinduction is not a superclass function");
    } else {
        for (const auto& K : ctx.superclasses()) {
            const Cyclotomic v = value_at(K.rep);
            for (Idx g : K.members) out[g] = v;
        }
    }
    return out;
}

ReciprocityReport tri_frobenius_check(const TriangularContext& ctx,
                                      const TriSubgroupEmbedding& emb,
                                      const std::vector<Cyclotomic>& phi_sub,
                                      const std::vector<Cyclotomic>& psi_ambient) {
    const Idx M = emb.sub.order();
    const std::vector<Cyclotomic> sind = tri_superinduce(ctx, emb, phi_sub);
    std::vector<Cyclotomic> res(M);
    for (Idx g = 0; g < M; ++g) res[g] = psi_ambient[emb.to_ambient[g]];
    ReciprocityReport rep;
    rep.lhs = dot(ctx.order(), sind, psi_ambient);
    rep.rhs = dot(M, phi_sub, res);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

std::vector<Rational> tri_superinduction_coefficients(const TriangularContext& ctx,
                                                      const TriSubgroupEmbedding& emb,
                                                      const std::vector<Cyclotomic>& phi_sub) {
    const std::vector<Cyclotomic> sind = tri_superinduce(ctx, emb, phi_sub);
    return decompose_nonnegative(ctx.order(), tri_oracle_basis(ctx), sind, false,
                                 "superinduction");
}

}  // namespace sct
