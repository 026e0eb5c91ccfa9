#include "sct/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sct {

BasicSubset::BasicSubset(std::vector<Root> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  std::set<int> rows, cols;
  for (const Root& r : roots_) {
    if (r.i < 1 || r.i >= r.j) throw std::invalid_argument("root must satisfy 1 <= i < j");
    if (!rows.insert(r.i).second) throw std::invalid_argument("two roots share a row");
    if (!cols.insert(r.j).second) throw std::invalid_argument("two roots share a column");
  }
}

bool BasicSubset::contains(Root r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

std::vector<int> BasicSubset::support() const {
  std::set<int> s;
  for (const Root& r : roots_) {
    s.insert(r.i);
    s.insert(r.j);
  }
  return {s.begin(), s.end()};
}

std::string BasicSubset::str() const {
  if (roots_.empty()) return "-";
  std::ostringstream os;
  for (const Root& r : roots_) os << "(" << r.i << "," << r.j << ")";
  return os.str();
}

namespace {

void basic_subsets_rec(int n, const std::vector<Root>& all, size_t start, std::vector<Root>& cur,
                       std::vector<BasicSubset>& out) {
  out.push_back(BasicSubset(cur));
  for (size_t idx = start; idx < all.size(); ++idx) {
    const Root& cand = all[idx];
    bool ok = true;
    for (const Root& r : cur)
      if (r.i == cand.i || r.j == cand.j) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(cand);
    basic_subsets_rec(n, all, idx + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BasicSubset> enumerate_basic_subsets(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Root> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back(Root{i, j});
  std::vector<BasicSubset> out;
  std::vector<Root> cur;
  basic_subsets_rec(n, all, 0, cur, out);
  return out;  // DFS in lexicographic candidate order emits sorted output
}

unsigned long long bell_number(unsigned n) {
  std::vector<unsigned long long> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<unsigned long long> next(i + 1);
    next[0] = row.back();
    for (unsigned j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

int crossing_number(const BasicSubset& D) {
  const auto& rs = D.roots();
  int c = 0;
  for (size_t a = 0; a < rs.size(); ++a)
    for (size_t b = 0; b < rs.size(); ++b)
      if (rs[a].i < rs[b].i && rs[b].i < rs[a].j && rs[a].j < rs[b].j) ++c;
  return c;
}

int dimension_weight(const BasicSubset& D) {
  int d = 0;
  for (const Root& r : D.roots()) d += r.j - r.i - 1;
  return d;
}

std::vector<Root> singular_positions(Root alpha) {
  std::vector<Root> out;
  for (int l = alpha.i + 1; l < alpha.j; ++l) {
    out.push_back(Root{alpha.i, l});
    out.push_back(Root{l, alpha.j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int interior_count(Root alpha, const BasicSubset& D) {
  int c = 0;
  for (const Root& r : D.roots())
    if (r.i > alpha.i && r.j < alpha.j) ++c;
  return c;
}

int reduced_weight(Root alpha, const BasicSubset& D) {
  return alpha.j - alpha.i - 1 - interior_count(alpha, D);
}

std::vector<Root> crossing_closure(const BasicSubset& D) {
  std::set<Root> out;
  for (const Root& a : D.roots())
    for (const Root& b : D.roots())
      if (a.i < b.i && b.i < a.j && a.j < b.j) out.insert(Root{a.i, b.i});
  return {out.begin(), out.end()};
}

namespace {

// D is basic, so extending a chain on either side has at most one candidate.
CrossingChain extend_maximally(std::vector<int> idx, const BasicSubset& D) {
  for (;;) {  // leftwards: prepend z with (z, idx[1]) in D and z < idx[0]
    const Root* found = nullptr;
    for (const Root& r : D.roots())
      if (r.j == idx[1] && r.i < idx[0]) found = &r;
    if (!found) break;
    idx.insert(idx.begin(), found->i);
  }
  for (;;) {  // rightwards: append w with (idx[t-1], w) in D and w > idx[t]
    const Root* found = nullptr;
    for (const Root& r : D.roots())
      if (r.i == idx[idx.size() - 2] && r.j > idx.back()) found = &r;
    if (!found) break;
    idx.push_back(found->j);
  }
  return CrossingChain{std::move(idx)};
}

}  // namespace

std::vector<CrossingChain> maximal_crossings(const BasicSubset& D) {
  std::set<CrossingChain> chains;
  for (const Root& a : D.roots())
    for (const Root& b : D.roots())
      if (a.i < b.i && b.i < a.j && a.j < b.j)
        chains.insert(extend_maximally({a.i, b.i, a.j, b.j}, D));
  return {chains.begin(), chains.end()};
}

bool is_multiple_irreducible(const BasicSubset& D) {
  for (const CrossingChain& c : maximal_crossings(D))
    if (c.length() % 2 != 0) return false;
  return true;
}

int multiple_irreducible_exponent(const BasicSubset& D) {
  if (!is_multiple_irreducible(D))
    throw std::domain_error("some maximal crossing has odd length");
  int c = crossing_number(D);
  return dimension_weight(D) - c / 2;
}

std::string AdmissiblePair::str() const {
  if (D.roots().empty()) return "-";
  std::ostringstream os;
  for (size_t k = 0; k < D.roots().size(); ++k) {
    const Root& r = D.roots()[k];
    os << "(" << r.i << "," << r.j << "):" << static_cast<int>(labels[k]);
  }
  return os.str();
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(int n, unsigned p) {
  std::vector<AdmissiblePair> out;
  for (const BasicSubset& D : enumerate_basic_subsets(n)) {
    std::vector<uint8_t> labels(D.size(), 1);
    for (;;) {
      out.push_back(AdmissiblePair{D, labels});
      size_t k = labels.size();
      while (k > 0 && labels[k - 1] == p - 1) labels[--k] = 1;
      if (k == 0) break;
      ++labels[k - 1];
    }
  }
  return out;
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n_) throw std::invalid_argument("block element out of range");
      if (!seen.insert(v).second) throw std::invalid_argument("blocks are not disjoint");
    }
  }
  if (static_cast<int>(seen.size()) != n_) throw std::invalid_argument("blocks do not cover [n]");
  std::sort(blocks_.begin(), blocks_.end());
}

std::string SetPartition::str() const {
  std::ostringstream os;
  bool multi = n_ > 9;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << "|";
    for (size_t k = 0; k < blocks_[b].size(); ++k) {
      if (multi && k) os << ",";
      os << blocks_[b][k];
    }
  }
  return os.str();
}

SetPartition SetPartition::parse(const std::string& s) {
  std::vector<std::vector<int>> blocks;
  int count = 0;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::vector<int> block;
    if (part.find(',') != std::string::npos) {
      std::stringstream ps(part);
      std::string tok;
      while (std::getline(ps, tok, ',')) block.push_back(std::stoi(tok));
    } else {
      for (char c : part) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad partition syntax");
        block.push_back(c - '0');
      }
    }
    count += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
  }
  return SetPartition(count, std::move(blocks));
}

namespace {

void partitions_of_rec(const std::vector<int>& elems, size_t idx,
                       std::vector<std::vector<int>>& cur,
                       std::vector<std::vector<std::vector<int>>>& out) {
  if (idx == elems.size()) {
    out.push_back(cur);
    return;
  }
  for (size_t bi = 0; bi < cur.size(); ++bi) {  // by index: recursion grows cur
    cur[bi].push_back(elems[idx]);
    partitions_of_rec(elems, idx + 1, cur, out);
    cur[bi].pop_back();
  }
  cur.push_back({elems[idx]});
  partitions_of_rec(elems, idx + 1, cur, out);
  cur.pop_back();
}

std::vector<std::vector<std::vector<int>>> partitions_of(const std::vector<int>& elems) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  partitions_of_rec(elems, 0, cur, out);
  return out;
}

}  // namespace

std::vector<SetPartition> enumerate_set_partitions(int n) {
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  std::vector<SetPartition> out;
  for (auto& blocks : partitions_of(elems)) out.push_back(SetPartition(n, std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

BasicSubset partition_to_basic(const SetPartition& P) {
  std::vector<Root> roots;
  for (const auto& b : P.blocks())
    for (size_t k = 0; k + 1 < b.size(); ++k) roots.push_back(Root{b[k], b[k + 1]});
  return BasicSubset(std::move(roots));
}

SetPartition basic_to_partition(int n, const BasicSubset& D) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Root& r : D.roots()) parent[find(r.i)] = find(r.j);
  std::map<int, std::vector<int>> comp;
  for (int v = 1; v <= n; ++v) comp[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : comp) blocks.push_back(std::move(members));
  return SetPartition(n, std::move(blocks));
}

std::vector<std::vector<int>> standardize_blocks(const std::vector<std::vector<int>>& blocks) {
  std::set<int> ground;
  for (const auto& b : blocks) ground.insert(b.begin(), b.end());
  std::map<int, int> relabel;
  int next = 1;
  for (int v : ground) relabel[v] = next++;
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(relabel[v]);
    std::sort(nb.begin(), nb.end());
    out.push_back(std::move(nb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition standardize_partition(const std::vector<std::vector<int>>& blocks) {
  int count = 0;
  for (const auto& b : blocks) count += static_cast<int>(b.size());
  return SetPartition(count, standardize_blocks(blocks));
}

std::vector<std::pair<SetPartition, SetPartition>> ordered_splits(const SetPartition& P) {
  const auto& blocks = P.blocks();
  size_t b = blocks.size();
  std::vector<std::pair<SetPartition, SetPartition>> out;
  for (size_t mask = 0; mask < (size_t{1} << b); ++mask) {
    std::vector<std::vector<int>> left, right;
    for (size_t k = 0; k < b; ++k) ((mask >> k) & 1 ? left : right).push_back(blocks[k]);
    out.emplace_back(standardize_partition(left), standardize_partition(right));
  }
  return out;
}

RiggedPartition::RiggedPartition(int n, int y, std::vector<std::vector<int>> blocks,
                                 std::vector<std::pair<int, int>> rigging)
    : n_(n), y_(y), blocks_(std::move(blocks)), rigging_(std::move(rigging)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n_) throw std::invalid_argument("block element out of range");
      if (!seen.insert(v).second) throw std::invalid_argument("blocks are not disjoint");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::sort(rigging_.begin(), rigging_.end());
  for (const auto& [pos, label] : rigging_) {
    if (pos < 1 || pos > n_) throw std::invalid_argument("rigged position out of range");
    if (!seen.insert(pos).second) throw std::invalid_argument("rigged position clashes");
    if (label < 1 || label > y_) throw std::invalid_argument("rigging label out of range");
  }
  if (static_cast<int>(seen.size()) != n_)
    throw std::invalid_argument("support and rigging do not cover [n]");
}

std::vector<int> RiggedPartition::support() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.insert(s.end(), b.begin(), b.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::string RiggedPartition::str() const {
  std::ostringstream os;
  bool multi = n_ > 9;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << "|";
    for (size_t k = 0; k < blocks_[b].size(); ++k) {
      if (multi && k) os << ",";
      os << blocks_[b][k];
    }
  }
  if (!rigging_.empty()) {
    os << ";";
    for (size_t k = 0; k < rigging_.size(); ++k) {
      if (k) os << ",";
      os << rigging_[k].first << ":" << rigging_[k].second;
    }
  }
  return os.str();
}

RiggedPartition RiggedPartition::parse(const std::string& s, int y) {
  std::string blocks_part = s, rig_part;
  if (auto pos = s.find(';'); pos != std::string::npos) {
    blocks_part = s.substr(0, pos);
    rig_part = s.substr(pos + 1);
  }
  std::vector<std::vector<int>> blocks;
  int count = 0;
  if (!blocks_part.empty()) {
    std::stringstream ss(blocks_part);
    std::string part;
    while (std::getline(ss, part, '|')) {
      std::vector<int> block;
      for (char c : part) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad partition syntax");
        block.push_back(c - '0');
      }
      count += static_cast<int>(block.size());
      blocks.push_back(std::move(block));
    }
  }
  std::vector<std::pair<int, int>> rigging;
  if (!rig_part.empty()) {
    std::stringstream ss(rig_part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad rigging syntax");
      rigging.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
      ++count;
    }
  }
  return RiggedPartition(count, y, std::move(blocks), std::move(rigging));
}

std::vector<RiggedPartition> enumerate_rigged_partitions(int n, int y) {
  std::vector<RiggedPartition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> supp, rest;
    for (int v = 1; v <= n; ++v) ((mask >> (v - 1)) & 1 ? supp : rest).push_back(v);
    std::vector<std::vector<int>> labelings;
    std::vector<int> labels(rest.size(), 1);
    if (rest.empty()) {
      labelings.push_back({});
    } else if (y >= 1) {
      for (;;) {
        labelings.push_back(labels);
        size_t k = labels.size();
        while (k > 0 && labels[k - 1] == y) labels[--k] = 1;
        if (k == 0) break;
        ++labels[k - 1];
      }
    }
    for (auto& blocks : partitions_of(supp))
      for (const auto& lab : labelings) {
        std::vector<std::pair<int, int>> rigging;
        for (size_t k = 0; k < rest.size(); ++k) rigging.emplace_back(rest[k], lab[k]);
        out.push_back(RiggedPartition(n, y, blocks, std::move(rigging)));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RiggedPartition standardize_rigged(const std::vector<std::vector<int>>& blocks,
                                   const std::vector<std::pair<int, int>>& rigging, int y) {
  std::set<int> ground;
  for (const auto& b : blocks) ground.insert(b.begin(), b.end());
  for (const auto& [pos, label] : rigging) ground.insert(pos);
  std::map<int, int> relabel;
  int next = 1;
  for (int v : ground) relabel[v] = next++;
  std::vector<std::vector<int>> nb;
  for (const auto& b : blocks) {
    std::vector<int> x;
    for (int v : b) x.push_back(relabel[v]);
    nb.push_back(std::move(x));
  }
  std::vector<std::pair<int, int>> nr;
  for (const auto& [pos, label] : rigging) nr.emplace_back(relabel[pos], label);
  return RiggedPartition(static_cast<int>(ground.size()), y, std::move(nb), std::move(nr));
}

std::vector<std::pair<RiggedPartition, RiggedPartition>> rigged_splits(const RiggedPartition& P) {
  const auto& blocks = P.blocks();
  const auto& rig = P.rigging();
  size_t b = blocks.size(), r = rig.size();
  std::vector<std::pair<RiggedPartition, RiggedPartition>> out;
  for (size_t mask = 0; mask < (size_t{1} << (b + r)); ++mask) {
    std::vector<std::vector<int>> lb, rb;
    std::vector<std::pair<int, int>> lr, rr;
    for (size_t k = 0; k < b; ++k) ((mask >> k) & 1 ? lb : rb).push_back(blocks[k]);
    for (size_t k = 0; k < r; ++k) ((mask >> (b + k)) & 1 ? lr : rr).push_back(rig[k]);
    out.emplace_back(standardize_rigged(lb, lr, P.y()), standardize_rigged(rb, rr, P.y()));
  }
  return out;
}

namespace {

void matchings_rec(const std::vector<std::vector<int>>& pb, const std::vector<std::vector<int>>& qb,
                   size_t idx, std::vector<bool>& used, std::vector<int>& match,
                   std::vector<std::vector<int>>& out) {
  if (idx == pb.size()) {
    out.push_back(match);
    return;
  }
  match[idx] = -1;
  matchings_rec(pb, qb, idx + 1, used, match, out);
  for (size_t q = 0; q < qb.size(); ++q) {
    if (used[q]) continue;
    used[q] = true;
    match[idx] = static_cast<int>(q);
    matchings_rec(pb, qb, idx + 1, used, match, out);
    used[q] = false;
  }
  match[idx] = -1;
}

}  // namespace

std::vector<RiggedPartition> direct_consequences(const RiggedPartition& P,
                                                 const RiggedPartition& Q) {
  if (P.y() != Q.y()) throw std::invalid_argument("alphabet sizes differ");
  const int k = P.n(), m = Q.n();
  std::vector<std::vector<int>> qb;
  for (const auto& b : Q.blocks()) {
    std::vector<int> x;
    for (int v : b) x.push_back(v + k);
    qb.push_back(std::move(x));
  }
  std::vector<std::pair<int, int>> rigging = P.rigging();
  for (const auto& [pos, label] : Q.rigging()) rigging.emplace_back(pos + k, label);

  std::vector<std::vector<int>> matchings;
  std::vector<bool> used(qb.size(), false);
  std::vector<int> match(P.blocks().size(), -1);
  matchings_rec(P.blocks(), qb, 0, used, match, matchings);

  std::vector<RiggedPartition> out;
  for (const auto& mt : matchings) {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> taken(qb.size(), false);
    for (size_t i = 0; i < mt.size(); ++i) {
      std::vector<int> blk = P.blocks()[i];
      if (mt[i] >= 0) {
        taken[mt[i]] = true;
        blk.insert(blk.end(), qb[mt[i]].begin(), qb[mt[i]].end());
      }
      blocks.push_back(std::move(blk));
    }
    for (size_t q = 0; q < qb.size(); ++q)
      if (!taken[q]) blocks.push_back(qb[q]);
    out.push_back(RiggedPartition(k + m, P.y(), std::move(blocks), rigging));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RiggedPartition to_rigged(const SetPartition& P, int y) {
  return RiggedPartition(P.n(), y, P.blocks(), {});
}

SetPartition to_partition(const RiggedPartition& P) {
  if (!P.rigging().empty()) throw std::invalid_argument("partition has rigged points");
  return SetPartition(P.n(), P.blocks());
}

}  // namespace sct
