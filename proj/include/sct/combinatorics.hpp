#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sct {

// Position (i, j) with 1 <= i < j <= n, identified with the matrix unit E_ij.
struct Root {
  int i = 0;
  int j = 0;
  auto operator<=>(const Root&) const = default;
};

// A set of roots with at most one member in every row and every column,
// kept sorted; the canonical orbit representatives of both superclasses and
// supercharacters are indexed by these.
class BasicSubset {
 public:
  BasicSubset() = default;
  explicit BasicSubset(std::vector<Root> roots);  // sorts; validates rook condition

  const std::vector<Root>& roots() const { return roots_; }
  size_t size() const { return roots_.size(); }
  bool contains(Root r) const;
  std::vector<int> support() const;  // sorted endpoints

  auto operator<=>(const BasicSubset&) const = default;

  std::string str() const;

 private:
  std::vector<Root> roots_;
};

std::vector<BasicSubset> enumerate_basic_subsets(int n);  // lexicographic
unsigned long long bell_number(unsigned n);

// Number of pairs (i,j),(k,l) in D with i < k < j < l.
int crossing_number(const BasicSubset& D);
// d(D) = sum over (i,j) in D of (j - i - 1).
int dimension_weight(const BasicSubset& D);
// Positions (i,l) and (l,j) with i < l < j, for alpha = (i,j).
std::vector<Root> singular_positions(Root alpha);
// Number of roots of D strictly inside the rectangle of alpha = (i,j):
// row index > i and column index < j.
int interior_count(Root alpha, const BasicSubset& D);
// j - i - 1 - interior_count(alpha, D).
int reduced_weight(Root alpha, const BasicSubset& D);
// Cr(D): positions (i,j) such that some (i,k), (j,l) in D satisfy i<j<k<l.
std::vector<Root> crossing_closure(const BasicSubset& D);

// A chain i_0 < ... < i_{k+2} with every (i_s, i_{s+2}) in D; its length k
// counts the consecutive crossings along the chain.
struct CrossingChain {
  std::vector<int> indices;
  int length() const { return static_cast<int>(indices.size()) - 3; }
  auto operator<=>(const CrossingChain&) const = default;
};

// All maximal chains of length >= 1; empty exactly when crossing_number is 0.
std::vector<CrossingChain> maximal_crossings(const BasicSubset& D);
bool is_multiple_irreducible(const BasicSubset& D);
// Defined when is_multiple_irreducible: d(D) - c(D)/2.
int multiple_irreducible_exponent(const BasicSubset& D);

// A basic subset with a nonzero field label per root (parallel to roots()).
struct AdmissiblePair {
  BasicSubset D;
  std::vector<uint8_t> labels;
  auto operator<=>(const AdmissiblePair&) const = default;
  std::string str() const;
};

std::vector<AdmissiblePair> enumerate_admissible_pairs(int n, unsigned p);

// Partition of [n] into disjoint nonempty blocks; blocks sorted internally
// and ordered by their minima.
class SetPartition {
 public:
  SetPartition() : n_(0) {}
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  auto operator<=>(const SetPartition&) const = default;

  std::string str() const;  // "14|2|3"
  static SetPartition parse(const std::string& s);

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

std::vector<SetPartition> enumerate_set_partitions(int n);  // lexicographic

// Arcs between consecutive elements of every block.
BasicSubset partition_to_basic(const SetPartition& P);
// Connected components of the arc set, singletons included.
SetPartition basic_to_partition(int n, const BasicSubset& D);

// Relabel disjoint sorted blocks over an arbitrary ground set by the unique
// order isomorphism onto an initial segment of the positive integers.
std::vector<std::vector<int>> standardize_blocks(const std::vector<std::vector<int>>& blocks);
SetPartition standardize_partition(const std::vector<std::vector<int>>& blocks);

// All 2^{#blocks} ordered decompositions of P, both sides standardized.
std::vector<std::pair<SetPartition, SetPartition>> ordered_splits(const SetPartition& P);

// Partition of a subset of [n] plus a label in [1, y] on every point outside
// the partitioned support.
class RiggedPartition {
 public:
  RiggedPartition() : n_(0), y_(0) {}
  RiggedPartition(int n, int y, std::vector<std::vector<int>> blocks,
                  std::vector<std::pair<int, int>> rigging);

  int n() const { return n_; }
  int y() const { return y_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<std::pair<int, int>>& rigging() const { return rigging_; }
  std::vector<int> support() const;

  auto operator<=>(const RiggedPartition&) const = default;

  std::string str() const;  // "14|2;3:1"
  static RiggedPartition parse(const std::string& s, int y);

 private:
  int n_, y_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::pair<int, int>> rigging_;
};

std::vector<RiggedPartition> enumerate_rigged_partitions(int n, int y);  // lexicographic

RiggedPartition standardize_rigged(const std::vector<std::vector<int>>& blocks,
                                   const std::vector<std::pair<int, int>>& rigging, int y);

// All ordered decompositions: every block and every rigged point goes to one
// of the two sides independently; both sides standardized.
std::vector<std::pair<RiggedPartition, RiggedPartition>> rigged_splits(const RiggedPartition& P);

// All partitions of [k+m] refining to (P | shifted Q): blocks merge at most
// one block of P with at most one block of Q, riggings are carried over
// unchanged.  Enumerated via partial matchings between the block lists.
std::vector<RiggedPartition> direct_consequences(const RiggedPartition& P, const RiggedPartition& Q);

RiggedPartition to_rigged(const SetPartition& P, int y = 0);
SetPartition to_partition(const RiggedPartition& P);  // requires full support

}  // namespace sct
