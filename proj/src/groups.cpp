#include "sct/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sct {

namespace {

void check_cap(int p, std::size_t rank, std::uint64_t cap, const char* what) {
    std::uint64_t acc = 1;
    for (std::size_t k = 0; k < rank; ++k) {
        if (acc > cap / static_cast<std::uint64_t>(p))
            throw CapExceeded(std::string(what) + " would exceed the size cap of " +
                              std::to_string(cap) + " elements");
        acc *= static_cast<std::uint64_t>(p);
    }
    if (acc > cap)
        throw CapExceeded(std::string(what) + " would exceed the size cap of " +
                          std::to_string(cap) + " elements");
}

}  // namespace

RootAlgebra::RootAlgebra(int n, int p, std::vector<Root> roots, std::uint64_t element_cap)
    : n_(n), p_(p), roots_(std::move(roots)) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be at least 1");
    if (!is_prime(p_)) throw std::invalid_argument("field order must be prime");
    std::sort(roots_.begin(), roots_.end());
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        const Root& r = roots_[k];
        if (r.i < 1 || r.i >= r.j || r.j > n_)
            throw std::invalid_argument("root out of range");
        if (k > 0 && roots_[k - 1] == r)
            throw std::invalid_argument("duplicate root");
    }
    // closure under composition
    for (const Root& a : roots_)
        for (const Root& b : roots_) {
            if (a.j != b.i) continue;
            if (!std::binary_search(roots_.begin(), roots_.end(), Root{a.i, b.j}))
                throw std::invalid_argument("root set is not closed under products");
        }

    check_cap(p_, roots_.size(), element_cap, "root algebra enumeration");
    Idx sz = 1;
    for (std::size_t k = 0; k < roots_.size(); ++k) sz *= static_cast<Idx>(p_);
    size_ = sz;

    pow_.assign(roots_.size(), 1);
    for (int k = rank() - 2; k >= 0; --k) pow_[k] = pow_[k + 1] * static_cast<Idx>(p_);

    for (int a = 0; a < rank(); ++a)
        for (int b = 0; b < rank(); ++b) {
            if (roots_[a].j != roots_[b].i) continue;
            int c = root_index(roots_[a].i, roots_[b].j);
            triples_.push_back({a, b, c});
        }
}

RootAlgebra RootAlgebra::unitriangular(int n, int p, std::uint64_t element_cap) {
    std::vector<Root> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.push_back({i, j});
    return RootAlgebra(n, p, std::move(roots), element_cap);
}

int RootAlgebra::root_index(int i, int j) const {
    auto it = std::lower_bound(roots_.begin(), roots_.end(), Root{i, j});
    if (it == roots_.end() || !(*it == Root{i, j})) return -1;
    return static_cast<int>(it - roots_.begin());
}

std::vector<int> RootAlgebra::digits(Idx x) const {
    std::vector<int> d(roots_.size());
    for (int k = rank() - 1; k >= 0; --k) {
        d[k] = static_cast<int>(x % static_cast<Idx>(p_));
        x /= static_cast<Idx>(p_);
    }
    return d;
}

Idx RootAlgebra::index(const std::vector<int>& d) const {
    Idx x = 0;
    for (int k = 0; k < rank(); ++k) x = x * static_cast<Idx>(p_) + static_cast<Idx>(d[k]);
    return x;
}

int RootAlgebra::digit(Idx x, int k) const {
    return static_cast<int>((x / pow_[k]) % static_cast<Idx>(p_));
}

Idx RootAlgebra::add(Idx a, Idx b) const {
    Idx out = 0;
    for (int k = 0; k < rank(); ++k) {
        int s = digit(a, k) + digit(b, k);
        if (s >= p_) s -= p_;
        out += static_cast<Idx>(s) * pow_[k];
    }
    return out;
}

Idx RootAlgebra::sub(Idx a, Idx b) const { return add(a, neg(b)); }

Idx RootAlgebra::neg(Idx a) const {
    Idx out = 0;
    for (int k = 0; k < rank(); ++k) {
        int d = digit(a, k);
        out += static_cast<Idx>(d == 0 ? 0 : p_ - d) * pow_[k];
    }
    return out;
}

Idx RootAlgebra::mul(Idx a, Idx b) const {
    std::vector<int> out(roots_.size(), 0);
    for (const ProductTriple& t : triples_) {
        out[t.c] = (out[t.c] + digit(a, t.a) * digit(b, t.b)) % p_;
    }
    return index(out);
}

Idx RootAlgebra::scale(int c, Idx a) const {
    c %= p_;
    if (c < 0) c += p_;
    Idx out = 0;
    for (int k = 0; k < rank(); ++k)
        out += static_cast<Idx>((digit(a, k) * c) % p_) * pow_[k];
    return out;
}

Idx RootAlgebra::unit_root(int k, int c) const {
    c %= p_;
    if (c < 0) c += p_;
    return static_cast<Idx>(c) * pow_[k];
}

Idx RootAlgebra::basic_element(const BasicSubset& D) const {
    Idx out = 0;
    for (const Root& r : D.roots()) {
        int k = root_index(r.i, r.j);
        if (k < 0) throw std::invalid_argument("basic subset uses a root outside the algebra");
        out += pow_[k];
    }
    return out;
}

Idx RootAlgebra::labeled_element(const AdmissiblePair& P) const {
    Idx out = 0;
    const auto& roots = P.D.roots();
    for (std::size_t t = 0; t < roots.size(); ++t) {
        int k = root_index(roots[t].i, roots[t].j);
        if (k < 0) throw std::invalid_argument("admissible pair uses a root outside the algebra");
        out += static_cast<Idx>(P.labels[t] % p_) * pow_[k];
    }
    return out;
}

std::optional<BasicSubset> RootAlgebra::basic01_pattern(Idx x) const {
    std::vector<Root> supp;
    for (int k = 0; k < rank(); ++k) {
        int d = digit(x, k);
        if (d == 0) continue;
        if (d != 1) return std::nullopt;
        supp.push_back(roots_[k]);
    }
    std::set<int> rows, cols;
    for (const Root& r : supp) {
        if (!rows.insert(r.i).second || !cols.insert(r.j).second) return std::nullopt;
    }
    return BasicSubset(supp);
}

std::optional<AdmissiblePair> RootAlgebra::basic_support_pattern(Idx x) const {
    std::vector<Root> supp;
    std::vector<uint8_t> labels;
    for (int k = 0; k < rank(); ++k) {
        int d = digit(x, k);
        if (d == 0) continue;
        supp.push_back(roots_[k]);
        labels.push_back(static_cast<uint8_t>(d));
    }
    std::set<int> rows, cols;
    for (const Root& r : supp) {
        if (!rows.insert(r.i).second || !cols.insert(r.j).second) return std::nullopt;
    }
    return AdmissiblePair{BasicSubset(supp), labels};
}

Mat RootAlgebra::to_matrix(Idx x) const {
    Mat m(n_, p_);
    for (int k = 0; k < rank(); ++k)
        m.set(roots_[k].i - 1, roots_[k].j - 1, digit(x, k));
    return m;
}

Idx RootAlgebra::from_matrix(const Mat& m) const {
    if (m.n() != n_ || m.p() != p_) throw std::invalid_argument("matrix shape mismatch");
    Idx out = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int v = m.at(i, j);
            if (v == 0) continue;
            if (i == j) throw std::invalid_argument("matrix has diagonal support");
            int k = root_index(i + 1, j + 1);
            if (k < 0) throw std::invalid_argument("matrix support escapes the root set");
            out += static_cast<Idx>(v) * pow_[k];
        }
    return out;
}

int RootAlgebra::pair(Idx lam, Idx x) const {
    int acc = 0;
    for (int k = 0; k < rank(); ++k) acc += digit(lam, k) * digit(x, k);
    return acc % p_;
}

// --- orbit machinery ---

OrbitSet orbit_decompose(Idx universe, const std::vector<MoveTable>& moves) {
    OrbitSet out;
    const Idx unseen = universe;
    out.orbit_of.assign(universe, unseen);
    for (Idx seed = 0; seed < universe; ++seed) {
        if (out.orbit_of[seed] != unseen) continue;
        Idx id = static_cast<Idx>(out.members.size());
        std::vector<Idx> orbit;
        std::deque<Idx> queue{seed};
        out.orbit_of[seed] = id;
        while (!queue.empty()) {
            Idx x = queue.front();
            queue.pop_front();
            orbit.push_back(x);
            for (const MoveTable& mv : moves) {
                Idx y = mv[x];
                if (out.orbit_of[y] == unseen) {
                    out.orbit_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.reps.push_back(orbit.front());
        out.members.push_back(std::move(orbit));
    }
    return out;
}

std::vector<Idx> orbit_from_seed(Idx seed, const std::vector<MoveTable>& moves) {
    std::set<Idx> seen{seed};
    std::deque<Idx> queue{seed};
    while (!queue.empty()) {
        Idx x = queue.front();
        queue.pop_front();
        for (const MoveTable& mv : moves) {
            Idx y = mv[x];
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return std::vector<Idx>(seen.begin(), seen.end());
}

Idx count_orbits_within(const std::vector<Idx>& subset,
                        const std::vector<MoveTable>& moves) {
    return static_cast<Idx>(orbit_decompose_within(subset, moves).members.size());
}

SubsetOrbits orbit_decompose_within(const std::vector<Idx>& subset,
                                    const std::vector<MoveTable>& moves) {
    SubsetOrbits out;
    std::set<Idx> unseen(subset.begin(), subset.end());
    for (Idx seed : subset) {
        if (!unseen.count(seed)) continue;
        std::vector<Idx> orbit;
        std::deque<Idx> queue{seed};
        unseen.erase(seed);
        while (!queue.empty()) {
            Idx x = queue.front();
            queue.pop_front();
            orbit.push_back(x);
            for (const MoveTable& mv : moves) {
                Idx y = mv[x];
                auto it = unseen.find(y);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    queue.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.reps.push_back(orbit.front());
        out.members.push_back(std::move(orbit));
    }
    return out;
}

// --- UTContext ---

UTContext::UTContext(RootAlgebra J) : J_(std::move(J)), ring_(J_.p()) {
    const Idx N = J_.size();
    const int r = J_.rank();

    // move tables for the transvections 1+E_k on J and on J*
    j_moves_.reserve(2 * r);
    for (int k = 0; k < r; ++k) {
        MoveTable left(N), right(N);
        Idx e = J_.unit_root(k);
        for (Idx x = 0; x < N; ++x) {
            left[x] = J_.add(x, J_.mul(e, x));
            right[x] = J_.add(x, J_.mul(x, e));
        }
        j_moves_.push_back(std::move(left));
        j_moves_.push_back(std::move(right));
    }
    for (int k = 0; k < r; ++k) {
        MoveTable rt(N), lt(N);
        Idx e = J_.unit_root(k);
        for (Idx lam = 0; lam < N; ++lam) {
            // right action: (lam g)(x) = lam(gx) = lam(x) + lam(E_k x)
            std::vector<int> d = J_.digits(lam);
            std::vector<int> drt = d, dlt = d;
            for (int b = 0; b < r; ++b) {
                Idx eb = J_.unit_root(b);
                Idx ekb = J_.mul(e, eb);   // E_k E_b
                Idx bek = J_.mul(eb, e);   // E_b E_k
                if (ekb != 0) {
                    for (int c = 0; c < r; ++c)
                        drt[b] = (drt[b] + J_.digit(ekb, c) * d[c]) % J_.p();
                }
                if (bek != 0) {
                    for (int c = 0; c < r; ++c)
                        dlt[b] = (dlt[b] + J_.digit(bek, c) * d[c]) % J_.p();
                }
            }
            rt[lam] = J_.index(drt);
            lt[lam] = J_.index(dlt);
        }
        dual_right_moves_.push_back(std::move(rt));
        dual_left_moves_.push_back(std::move(lt));
    }

    // The transvections must generate the whole group: breadth-first closure
    // of {1+E_k} under right multiplication has to reach every element.
    {
        std::vector<char> seen(N, 0);
        seen[0] = 1;
        std::deque<Idx> queue{0};
        Idx reached = 1;
        while (!queue.empty()) {
            Idx g = queue.front();
            queue.pop_front();
            for (int k = 0; k < r; ++k) {
                Idx h = gmul(g, J_.unit_root(k));
                if (!seen[h]) {
                    seen[h] = 1;
                    ++reached;
                    queue.push_back(h);
                }
            }
        }
        if (reached != N)
            throw std::logic_error("transvections fail to generate the group");
    }

    // superclasses: two-sided orbits on J
    OrbitSet sc = orbit_decompose(N, j_moves_);
    class_of_ = std::move(sc.orbit_of);
    superclasses_.reserve(sc.members.size());
    for (std::size_t id = 0; id < sc.members.size(); ++id) {
        Superclass cls;
        cls.members = std::move(sc.members[id]);
        cls.rep = cls.members.front();
        int canonical = 0;
        for (Idx x : cls.members) {
            if (auto pat = J_.basic_support_pattern(x)) {
                if (++canonical > 1)
                    throw std::logic_error("two canonical members in one superclass");
                cls.label = std::move(pat);
                cls.rep = x;
            }
        }
        superclasses_.push_back(std::move(cls));
    }

    // dual two-sided orbits with right-orbit counts
    std::vector<MoveTable> dual_moves;
    dual_moves.reserve(2 * r);
    for (const auto& mv : dual_right_moves_) dual_moves.push_back(mv);
    for (const auto& mv : dual_left_moves_) dual_moves.push_back(mv);
    OrbitSet dc = orbit_decompose(N, dual_moves);
    dual_orbit_of_ = std::move(dc.orbit_of);
    dual_orbits_.reserve(dc.members.size());
    for (std::size_t id = 0; id < dc.members.size(); ++id) {
        DualOrbit orb;
        orb.members = std::move(dc.members[id]);
        orb.rep = orb.members.front();
        int canonical = 0;
        for (Idx lam : orb.members) {
            if (auto pat = J_.basic_support_pattern(lam)) {
                if (++canonical > 1)
                    throw std::logic_error("two canonical members in one dual orbit");
                orb.label = std::move(pat);
                orb.rep = lam;
            }
        }
        orb.right_orbit_count = count_orbits_within(orb.members, dual_right_moves_);
        dual_orbits_.push_back(std::move(orb));
    }
}

UTContext UTContext::unitriangular(int n, int p, std::uint64_t element_cap) {
    return UTContext(RootAlgebra::unitriangular(n, p, element_cap));
}

Idx UTContext::gmul(Idx a, Idx b) const {
    return J_.add(J_.add(a, b), J_.mul(a, b));
}

Idx UTContext::ginv(Idx a) const {
    // (1+x)^{-1} = 1 + sum_{k>=1} (-x)^k
    Idx t = J_.neg(a);
    Idx acc = t;
    Idx pw = t;
    while (true) {
        pw = J_.mul(pw, t);
        if (pw == 0) break;
        acc = J_.add(acc, pw);
    }
    return acc;
}

const AdmissiblePair& UTContext::superclass_label(Idx class_id) const {
    const auto& cls = superclasses_.at(class_id);
    if (!cls.label)
        throw std::logic_error("superclass lacks a canonical representative");
    return *cls.label;
}

int UTContext::superclass_by_label(const AdmissiblePair& label) const {
    for (std::size_t i = 0; i < superclasses_.size(); ++i)
        if (superclasses_[i].label && *superclasses_[i].label == label)
            return static_cast<int>(i);
    return -1;
}

const AdmissiblePair& UTContext::dual_orbit_label(Idx orbit_id) const {
    const auto& orb = dual_orbits_.at(orbit_id);
    if (!orb.label)
        throw std::logic_error("dual orbit lacks a canonical representative");
    return *orb.label;
}

int UTContext::dual_orbit_by_label(const AdmissiblePair& label) const {
    for (std::size_t i = 0; i < dual_orbits_.size(); ++i)
        if (dual_orbits_[i].label && *dual_orbits_[i].label == label)
            return static_cast<int>(i);
    return -1;
}

std::vector<Idx> UTContext::right_orbit(Idx lam) const {
    return orbit_from_seed(lam, dual_right_moves_);
}

std::vector<Idx> UTContext::left_orbit(Idx lam) const {
    return orbit_from_seed(lam, dual_left_moves_);
}

std::vector<Idx> UTContext::right_stabilizer_subalgebra(Idx lam) const {
    std::vector<Idx> out;
    for (Idx y = 0; y < J_.size(); ++y) {
        bool ok = true;
        for (int k = 0; k < J_.rank() && ok; ++k)
            ok = J_.pair(lam, J_.mul(y, J_.unit_root(k))) == 0;
        if (ok) out.push_back(y);
    }
    return out;
}

GroupTable UTContext::cayley() const {
    return build_group_table(order(), 0, [this](Idx a, Idx b) { return gmul(a, b); });
}

}  // namespace sct
