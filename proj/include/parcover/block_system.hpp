#ifndef PARCOVER_BLOCK_SYSTEM_HPP
#define PARCOVER_BLOCK_SYSTEM_HPP

#include <compare>
#include <vector>

#include "parcover/errors.hpp"
#include "parcover/permutation.hpp"

namespace parcover {

// all_block_systems enumerates 2^(d-1) seed closures; keep d small by default
inline constexpr int kDefaultDegreeCap = 16;

// A partition of {0, ..., d-1} stored as one block id per point. Ids are
// normalized to first-use order, so block 0 always contains point 0 and
// equality is plain sequence comparison.
class BlockSystem {
public:
  // takes any assignment of (arbitrary) labels and normalizes the ids
  explicit BlockSystem(std::vector<int> block_of);

  static BlockSystem singletons(int degree);
  static BlockSystem one_block(int degree);

  int degree() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return count_; }
  int block_of(int point) const { return block_of_[point]; }
  const std::vector<int> &assignment() const { return block_of_; }

  // members of each block, ascending, indexed by block id
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  bool is_invariant_under(const Permutation &g) const;

  // True iff every block of *this lies inside a block of `coarser`.
  bool refines(const BlockSystem &coarser) const;

  friend bool operator==(const BlockSystem &, const BlockSystem &) = default;
  friend auto operator<=>(const BlockSystem &, const BlockSystem &) = default;

private:
  std::vector<int> block_of_;
  int count_ = 0;
};

// Blocks are the nonempty pairwise intersections p ∩ q: the coarsest
// partition refining both arguments.
BlockSystem common_refinement(const BlockSystem &p, const BlockSystem &q);

// The finest block system of the action in which all of `seed` lies in one
// block, computed by union-find propagation. Requires a transitive action
// and 0 ∈ seed.
BlockSystem block_closure(const std::vector<Permutation> &generators,
                          int degree, const std::vector<int> &seed);

// Every block system of the (transitive) action, the two trivial ones
// included, sorted by (block count, assignment). Obtained by closing every
// subset {0} ∪ S, S ⊆ {1, ..., d-1}, and deduplicating.
std::vector<BlockSystem>
all_block_systems(const std::vector<Permutation> &generators, int degree,
                  int degree_cap = kDefaultDegreeCap);

struct BlockAction {
  Permutation on_blocks;
  std::vector<int> orbit_lengths; // cycle type of on_blocks, descending
};

// The permutation induced on block ids; throws std::invalid_argument if the
// partition is not invariant under p.
BlockAction action_on_blocks(const Permutation &p, const BlockSystem &partition);

} // namespace parcover

#endif
