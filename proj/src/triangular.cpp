#include "sct/triangular.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace sct {

namespace {

bool contains_int(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// x -> x + E_k x  (composition with 1 + E_k on the left inside 1 + J)
MoveTable j_left_table(const RootAlgebra& J, int k) {
    MoveTable t(J.size());
    const Idx e = J.unit_root(k);
    for (Idx x = 0; x < J.size(); ++x) t[x] = J.add(x, J.mul(e, x));
    return t;
}

// x -> x + x E_k
MoveTable j_right_table(const RootAlgebra& J, int k) {
    MoveTable t(J.size());
    const Idx e = J.unit_root(k);
    for (Idx x = 0; x < J.size(); ++x) t[x] = J.add(x, J.mul(x, e));
    return t;
}

// x -> h x h^{-1} for the diagonal with value gamma at position l, 1 elsewhere
MoveTable j_scale_table(const RootAlgebra& J, const PrimeField& F, int l, int gamma) {
    MoveTable t(J.size());
    const int gamma_inv = F.inv(static_cast<uint8_t>(gamma));
    for (Idx x = 0; x < J.size(); ++x) {
        std::vector<int> d = J.digits(x);
        for (int k = 0; k < J.rank(); ++k) {
            const Root r = J.roots()[k];
            if (r.i == l)
                d[k] = F.mul(static_cast<uint8_t>(gamma), static_cast<uint8_t>(d[k]));
            else if (r.j == l)
                d[k] = F.mul(static_cast<uint8_t>(gamma_inv), static_cast<uint8_t>(d[k]));
        }
        t[x] = J.index(d);
    }
    return t;
}

// lam -> lam', lam'(x) = lam((1 + E_k) x)
MoveTable dual_right_table(const RootAlgebra& J, int k) {
    const Idx e = J.unit_root(k);
    std::vector<Idx> images(J.rank());
    for (int b = 0; b < J.rank(); ++b) {
        const Idx eb = J.unit_root(b);
        images[b] = J.add(eb, J.mul(e, eb));
    }
    MoveTable t(J.size());
    std::vector<int> d(J.rank());
    for (Idx lam = 0; lam < J.size(); ++lam) {
        for (int b = 0; b < J.rank(); ++b) d[b] = J.pair(lam, images[b]);
        t[lam] = J.index(d);
    }
    return t;
}

// lam -> lam', lam'(x) = lam(x (1 + E_k))
MoveTable dual_left_table(const RootAlgebra& J, int k) {
    const Idx e = J.unit_root(k);
    std::vector<Idx> images(J.rank());
    for (int b = 0; b < J.rank(); ++b) {
        const Idx eb = J.unit_root(b);
        images[b] = J.add(eb, J.mul(eb, e));
    }
    MoveTable t(J.size());
    std::vector<int> d(J.rank());
    for (Idx lam = 0; lam < J.size(); ++lam) {
        for (int b = 0; b < J.rank(); ++b) d[b] = J.pair(lam, images[b]);
        t[lam] = J.index(d);
    }
    return t;
}

// lam -> lam', lam'(x) = lam(h^{-1} x h) with gamma at position l
MoveTable dual_scale_table(const RootAlgebra& J, const PrimeField& F, int l, int gamma) {
    // lam(h^{-1} E_{ij} h) = h_i^{-1} h_j lam(E_{ij}), so digits scale just as
    // elements do with the roles of row and column exchanged.
    const int gamma_inv = F.inv(static_cast<uint8_t>(gamma));
    MoveTable t(J.size());
    for (Idx lam = 0; lam < J.size(); ++lam) {
        std::vector<int> d = J.digits(lam);
        for (int k = 0; k < J.rank(); ++k) {
            const Root r = J.roots()[k];
            if (r.i == l)
                d[k] = F.mul(static_cast<uint8_t>(gamma_inv), static_cast<uint8_t>(d[k]));
            else if (r.j == l)
                d[k] = F.mul(static_cast<uint8_t>(gamma), static_cast<uint8_t>(d[k]));
        }
        t[lam] = J.index(d);
    }
    return t;
}

}  // namespace

std::string TriClassLabel::str() const {
    std::ostringstream os;
    os << "h=(";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) os << ",";
        os << h[i];
    }
    os << ");D=" << D.str();
    return os.str();
}

TriangularContext::TriangularContext(RootAlgebra Jin, std::uint64_t element_cap)
    : J_(std::move(Jin)),
      field_(static_cast<uint32_t>(J_.p())),
      ring_(static_cast<unsigned>(J_.p())) {
    const int n = J_.n();
    const int p = J_.p();

    std::uint64_t torus = 1;
    for (int i = 0; i < n; ++i) {
        torus *= static_cast<std::uint64_t>(p - 1);
        if (torus > element_cap)
            throw CapExceeded("triangular-type group order exceeds the element cap");
    }
    if (torus > element_cap / static_cast<std::uint64_t>(J_.size()))
        throw CapExceeded("triangular-type group order exceeds the element cap");
    torus_order_ = static_cast<Idx>(torus);
    torus_one_ = 0;
    tpow_.assign(static_cast<size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        tpow_[static_cast<size_t>(i)] = tpow_[static_cast<size_t>(i) + 1] * static_cast<Idx>(p - 1);

    // The orbit labellings below assume the row operations 1 + E_k generate
    // the full unipotent group and the single-position scalings generate the
    // torus; verify both before trusting any orbit decomposition.
    {
        std::vector<char> seen(J_.size(), 0);
        std::vector<Idx> stack{0};
        seen[0] = 1;
        Idx found = 1;
        while (!stack.empty()) {
            const Idx x = stack.back();
            stack.pop_back();
            for (int k = 0; k < J_.rank(); ++k) {
                const Idx e = J_.unit_root(k);
                const Idx y = J_.add(J_.add(x, e), J_.mul(x, e));
                if (!seen[y]) {
                    seen[y] = 1;
                    ++found;
                    stack.push_back(y);
                }
            }
        }
        if (found != J_.size())
            throw std::logic_error("row operations fail to generate the unipotent group");
    }
    if (p > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        std::vector<char> seen(torus_order_, 0);
        std::vector<Idx> stack{torus_one_};
        seen[torus_one_] = 1;
        Idx found = 1;
        while (!stack.empty()) {
            const Idx t = stack.back();
            stack.pop_back();
            for (int l = 1; l <= n; ++l) {
                std::vector<int> h(static_cast<size_t>(n), 1);
                h[static_cast<size_t>(l - 1)] = gamma;
                const Idx u = torus_mul(t, torus_index(h));
                if (!seen[u]) {
                    seen[u] = 1;
                    ++found;
                    stack.push_back(u);
                }
            }
        }
        if (found != torus_order_)
            throw std::logic_error("scalings fail to generate the torus");
    }

    // --- superclasses ---
    const OrbitSet os = orbit_decompose(order(), group_moves_());
    class_of_ = os.orbit_of;
    superclasses_.resize(os.members.size());
    for (size_t c = 0; c < os.members.size(); ++c) {
        Superclass& sc = superclasses_[c];
        sc.members = os.members[c];
        int hits = 0;
        for (Idx g : sc.members) {
            const auto D = J_.basic01_pattern(nil_part(g));
            if (!D) continue;
            const std::vector<int> h = torus_values(torus_part(g));
            bool diag_fixes = true;
            for (int i : D->support())
                if (h[static_cast<size_t>(i - 1)] != 1) diag_fixes = false;
            if (!diag_fixes) continue;
            ++hits;
            sc.rep = g;
            sc.label = TriClassLabel{h, *D};
        }
        if (hits != 1)
            throw std::logic_error("superclass lacks a unique canonical member");
    }

    // --- orbits of x -> t a x b t^{-1} on J ---
    std::vector<MoveTable> jm;
    for (int k = 0; k < J_.rank(); ++k) {
        jm.push_back(j_left_table(J_, k));
        jm.push_back(j_right_table(J_, k));
    }
    if (p > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        for (int l = 1; l <= n; ++l) jm.push_back(j_scale_table(J_, field_, l, gamma));
    }
    const OrbitSet jos = orbit_decompose(J_.size(), jm);
    j_orbit_of_ = jos.orbit_of;
    j_orbits_.resize(jos.members.size());
    for (size_t c = 0; c < jos.members.size(); ++c) {
        JOrbit& o = j_orbits_[c];
        o.members = jos.members[c];
        int hits = 0;
        for (Idx x : o.members) {
            const auto D = J_.basic01_pattern(x);
            if (!D) continue;
            ++hits;
            o.rep = x;
            o.label = *D;
        }
        if (hits != 1)
            throw std::logic_error("nilpotent orbit lacks a unique canonical member");
    }

    // --- dual orbits ---
    std::vector<MoveTable> dm;
    for (int k = 0; k < J_.rank(); ++k) {
        dm.push_back(dual_right_table(J_, k));
        dm.push_back(dual_left_table(J_, k));
    }
    if (p > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        for (int l = 1; l <= n; ++l) dm.push_back(dual_scale_table(J_, field_, l, gamma));
    }
    const OrbitSet dos = orbit_decompose(J_.size(), dm);
    dual_orbit_of_ = dos.orbit_of;
    dual_orbits_.resize(dos.members.size());
    std::set<BasicSubset> seen_labels;
    for (size_t c = 0; c < dos.members.size(); ++c) {
        DualOrbit& o = dual_orbits_[c];
        o.members = dos.members[c];
        bool found = false;
        for (Idx lam : o.members) {
            const auto ap = J_.basic_support_pattern(lam);
            if (!ap) continue;
            if (!found) {
                o.rep = lam;
                o.label = ap->D;
                found = true;
            } else if (!(ap->D == o.label)) {
                throw std::logic_error("dual orbit mixes distinct basic supports");
            }
        }
        if (!found)
            throw std::logic_error("dual orbit lacks a basic-support member");
        if (!seen_labels.insert(o.label).second)
            throw std::logic_error("two dual orbits share one basic support");
    }
    if (j_orbits_.size() != dual_orbits_.size())
        throw std::logic_error("nilpotent and dual orbit counts disagree");
}

TriangularContext TriangularContext::triangular(int n, int p, std::uint64_t element_cap) {
    return TriangularContext(RootAlgebra::unitriangular(n, p, element_cap), element_cap);
}

std::vector<int> TriangularContext::torus_values(Idx t) const {
    const int n = J_.n();
    const Idx base = static_cast<Idx>(J_.p() - 1);
    std::vector<int> h(static_cast<size_t>(n), 1);
    if (base == 0) return h;  // unreachable: p >= 2 gives base >= 1
    for (int i = 0; i < n; ++i)
        h[static_cast<size_t>(i)] = static_cast<int>((t / tpow_[static_cast<size_t>(i)]) % base) + 1;
    return h;
}

Idx TriangularContext::torus_index(const std::vector<int>& h) const {
    const int n = J_.n();
    const int p = J_.p();
    if (static_cast<int>(h.size()) != n)
        throw std::invalid_argument("diagonal has the wrong length");
    Idx t = 0;
    for (int i = 0; i < n; ++i) {
        const int v = h[static_cast<size_t>(i)];
        if (v < 1 || v >= p) throw std::invalid_argument("diagonal value outside the unit range");
        t += static_cast<Idx>(v - 1) * tpow_[static_cast<size_t>(i)];
    }
    return t;
}

Idx TriangularContext::torus_mul(Idx s, Idx t) const {
    const std::vector<int> a = torus_values(s);
    const std::vector<int> b = torus_values(t);
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = field_.mul(static_cast<uint8_t>(a[i]), static_cast<uint8_t>(b[i]));
    return torus_index(c);
}

Idx TriangularContext::torus_inv(Idx t) const {
    std::vector<int> h = torus_values(t);
    for (int& v : h) v = field_.inv(static_cast<uint8_t>(v));
    return torus_index(h);
}

Idx TriangularContext::torus_scale_left(Idx t, Idx x) const {
    const std::vector<int> h = torus_values(t);
    std::vector<int> d = J_.digits(x);
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        d[static_cast<size_t>(k)] =
            field_.mul(static_cast<uint8_t>(h[static_cast<size_t>(r.i - 1)]),
                       static_cast<uint8_t>(d[static_cast<size_t>(k)]));
    }
    return J_.index(d);
}

Idx TriangularContext::torus_scale_right(Idx x, Idx t) const {
    const std::vector<int> h = torus_values(t);
    std::vector<int> d = J_.digits(x);
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        d[static_cast<size_t>(k)] =
            field_.mul(static_cast<uint8_t>(h[static_cast<size_t>(r.j - 1)]),
                       static_cast<uint8_t>(d[static_cast<size_t>(k)]));
    }
    return J_.index(d);
}

Idx TriangularContext::gmul(Idx a, Idx b) const {
    const Idx t1 = torus_part(a), x1 = nil_part(a);
    const Idx t2 = torus_part(b), x2 = nil_part(b);
    // (h1 + x1)(h2 + x2) = h1 h2 + h1 x2 + x1 h2 + x1 x2
    const Idx nil =
        J_.add(J_.add(torus_scale_left(t1, x2), torus_scale_right(x1, t2)), J_.mul(x1, x2));
    return element(torus_mul(t1, t2), nil);
}

Idx TriangularContext::ginv(Idx g) const {
    const Idx t = torus_part(g), x = nil_part(g);
    const Idx ti = torus_inv(t);
    // (h + x)^{-1} = (1 + h^{-1} x)^{-1} h^{-1}
    const Idx ny = J_.neg(torus_scale_left(ti, x));
    Idx acc = 0, pw = ny;
    while (pw != 0) {
        acc = J_.add(acc, pw);
        pw = J_.mul(pw, ny);
    }
    return element(ti, torus_scale_right(acc, ti));
}

Mat TriangularContext::to_matrix(Idx g) const {
    Mat m = J_.to_matrix(nil_part(g));
    const std::vector<int> h = torus_values(torus_part(g));
    for (int i = 0; i < J_.n(); ++i)
        m.set(static_cast<uint32_t>(i), static_cast<uint32_t>(i),
              static_cast<uint8_t>(h[static_cast<size_t>(i)]));
    return m;
}

std::vector<MoveTable> TriangularContext::group_moves_() const {
    const int n = J_.n();
    const int p = J_.p();
    const Idx jn = J_.size();
    std::vector<MoveTable> moves;
    // Composing g with 1 + E_k on either side fixes the diagonal h of g and
    // maps the strictly upper part x to x + (h_j - 1) E_k + E_k x on the
    // left and to x + (h_i - 1) E_k + x E_k on the right, for k = (i, j).
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        const Idx e = J_.unit_root(k);
        MoveTable left(order()), right(order());
        for (Idx t = 0; t < torus_order_; ++t) {
            const std::vector<int> h = torus_values(t);
            const int hi = h[static_cast<size_t>(r.i - 1)];
            const int hj = h[static_cast<size_t>(r.j - 1)];
            const Idx el = hj == 1 ? 0 : J_.unit_root(k, hj - 1);
            const Idx er = hi == 1 ? 0 : J_.unit_root(k, hi - 1);
            for (Idx x = 0; x < jn; ++x) {
                left[element(t, x)] = element(t, J_.add(J_.add(x, el), J_.mul(e, x)));
                right[element(t, x)] = element(t, J_.add(J_.add(x, er), J_.mul(x, e)));
            }
        }
        moves.push_back(std::move(left));
        moves.push_back(std::move(right));
    }
    if (p > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        for (int l = 1; l <= n; ++l) {
            const MoveTable scale = j_scale_table(J_, field_, l, gamma);
            MoveTable conj(order());
            for (Idx t = 0; t < torus_order_; ++t)
                for (Idx x = 0; x < jn; ++x) conj[element(t, x)] = element(t, scale[x]);
            moves.push_back(std::move(conj));
        }
    }
    return moves;
}

int TriangularContext::superclass_by_label(const TriClassLabel& label) const {
    for (size_t c = 0; c < superclasses_.size(); ++c)
        if (superclasses_[c].label == label) return static_cast<int>(c);
    return -1;
}

std::vector<Idx> TriangularContext::corner_j(const std::vector<int>& S) const {
    std::vector<Idx> out;
    for (Idx x = 0; x < J_.size(); ++x) {
        bool inside = true;
        for (int k = 0; k < J_.rank() && inside; ++k)
            if (J_.digit(x, k)) {
                const Root r = J_.roots()[k];
                inside = contains_int(S, r.i) && contains_int(S, r.j);
            }
        if (inside) out.push_back(x);
    }
    return out;
}

std::vector<Idx> TriangularContext::corner_dual(const std::vector<int>& S) const {
    return corner_j(S);  // functionals share the digit indexing of elements
}

std::vector<MoveTable> TriangularContext::corner_j_moves(const std::vector<int>& S) const {
    std::vector<MoveTable> moves;
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        if (!contains_int(S, r.i) || !contains_int(S, r.j)) continue;
        moves.push_back(j_left_table(J_, k));
        moves.push_back(j_right_table(J_, k));
    }
    if (J_.p() > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        for (int l : S) moves.push_back(j_scale_table(J_, field_, l, gamma));
    }
    return moves;
}

std::vector<MoveTable> TriangularContext::corner_dual_moves(const std::vector<int>& S) const {
    std::vector<MoveTable> moves;
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        if (!contains_int(S, r.i) || !contains_int(S, r.j)) continue;
        moves.push_back(dual_right_table(J_, k));
        moves.push_back(dual_left_table(J_, k));
    }
    if (J_.p() > 2) {
        const int gamma = static_cast<int>(ring_.generator());
        for (int l : S) moves.push_back(dual_scale_table(J_, field_, l, gamma));
    }
    return moves;
}

std::vector<MoveTable> TriangularContext::corner_dual_right_moves(const std::vector<int>& S) const {
    std::vector<MoveTable> moves;
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        if (!contains_int(S, r.i) || !contains_int(S, r.j)) continue;
        moves.push_back(dual_right_table(J_, k));
    }
    return moves;
}

std::vector<MoveTable> TriangularContext::dual_nilpotent_moves() const {
    std::vector<MoveTable> moves;
    for (int k = 0; k < J_.rank(); ++k) {
        moves.push_back(dual_right_table(J_, k));
        moves.push_back(dual_left_table(J_, k));
    }
    return moves;
}

Idx TriangularContext::dual_torus_transform(Idx t, Idx lam) const {
    const std::vector<int> h = torus_values(t);
    std::vector<int> d = J_.digits(lam);
    for (int k = 0; k < J_.rank(); ++k) {
        const Root r = J_.roots()[k];
        const int hi_inv = field_.inv(static_cast<uint8_t>(h[static_cast<size_t>(r.i - 1)]));
        const int hj = h[static_cast<size_t>(r.j - 1)];
        d[static_cast<size_t>(k)] = field_.mul(
            field_.mul(static_cast<uint8_t>(hi_inv), static_cast<uint8_t>(hj)),
            static_cast<uint8_t>(d[static_cast<size_t>(k)]));
    }
    return J_.index(d);
}

std::vector<Idx> TriangularContext::right_stabilizer_subalgebra(Idx lam) const {
    std::vector<Idx> out;
    for (Idx y = 0; y < J_.size(); ++y) {
        bool kills = true;
        for (int k = 0; k < J_.rank() && kills; ++k)
            kills = J_.pair(lam, J_.mul(y, J_.unit_root(k))) == 0;
        if (kills) out.push_back(y);
    }
    return out;
}

std::vector<Idx> TriangularContext::torus_fixing(const std::vector<int>& S) const {
    std::vector<Idx> out;
    for (Idx t = 0; t < torus_order_; ++t) {
        const std::vector<int> h = torus_values(t);
        bool ok = true;
        for (int i : S) ok = ok && h[static_cast<size_t>(i - 1)] == 1;
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<Idx> TriangularContext::torus_supported(const std::vector<int>& S) const {
    std::vector<Idx> out;
    for (Idx t = 0; t < torus_order_; ++t) {
        const std::vector<int> h = torus_values(t);
        bool ok = true;
        for (int i = 1; i <= J_.n(); ++i)
            if (!contains_int(S, i) && h[static_cast<size_t>(i - 1)] != 1) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<int> TriangularContext::index_support(Idx x) const {
    std::set<int> s;
    for (int k = 0; k < J_.rank(); ++k)
        if (J_.digit(x, k)) {
            s.insert(J_.roots()[k].i);
            s.insert(J_.roots()[k].j);
        }
    return std::vector<int>(s.begin(), s.end());
}

bool TriangularContext::orbit_regular_in(const std::vector<Idx>& members,
                                         const std::vector<int>& S) const {
    for (Idx x : members)
        if (index_support(x) != S) return false;
    return true;
}

GroupTable TriangularContext::cayley() const {
    return build_group_table(order(), identity(),
                             [this](Idx a, Idx b) { return gmul(a, b); });
}

}  // namespace sct
