#include "parcover/block_system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace parcover {

BlockSystem::BlockSystem(std::vector<int> block_of)
    : block_of_(std::move(block_of)) {
  if (block_of_.empty())
    throw std::invalid_argument("empty block assignment");
  std::map<int, int> remap;
  for (int &b : block_of_) {
    auto [it, inserted] = remap.try_emplace(b, count_);
    if (inserted)
      ++count_;
    b = it->second;
  }
}

BlockSystem BlockSystem::singletons(int degree) {
  std::vector<int> ids(degree);
  std::iota(ids.begin(), ids.end(), 0);
  return BlockSystem(std::move(ids));
}

BlockSystem BlockSystem::one_block(int degree) {
  if (degree < 1)
    throw std::invalid_argument("degree must be positive");
  return BlockSystem(std::vector<int>(degree, 0));
}

std::vector<std::vector<int>> BlockSystem::blocks() const {
  std::vector<std::vector<int>> result(count_);
  for (int i = 0; i < degree(); ++i)
    result[block_of_[i]].push_back(i);
  return result;
}

std::vector<int> BlockSystem::block_sizes() const {
  std::vector<int> sizes(count_, 0);
  for (int b : block_of_)
    ++sizes[b];
  return sizes;
}

bool BlockSystem::is_invariant_under(const Permutation &g) const {
  if (g.degree() != degree())
    return false;
  std::vector<int> image(count_, -1);
  for (int i = 0; i < degree(); ++i) {
    int from = block_of_[i];
    int to = block_of_[g(i)];
    if (image[from] == -1)
      image[from] = to;
    else if (image[from] != to)
      return false;
  }
  return true;
}

bool BlockSystem::refines(const BlockSystem &coarser) const {
  if (coarser.degree() != degree())
    return false;
  std::vector<int> image(count_, -1);
  for (int i = 0; i < degree(); ++i) {
    int mine = block_of_[i];
    int theirs = coarser.block_of_[i];
    if (image[mine] == -1)
      image[mine] = theirs;
    else if (image[mine] != theirs)
      return false;
  }
  return true;
}

BlockSystem common_refinement(const BlockSystem &p, const BlockSystem &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch between block systems");
  std::vector<int> raw(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    raw[i] = p.block_of(i) * q.block_count() + q.block_of(i);
  return BlockSystem(std::move(raw));
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[b] = a;
    return true;
  }

  std::vector<int> parent;
};

// Closure without the transitivity precondition check; callers validate once.
BlockSystem closure_impl(const std::vector<Permutation> &generators, int degree,
                         const std::vector<int> &seed) {
  UnionFind uf(degree);
  // merge the seed, then propagate each merged pair through every generator
  std::deque<std::pair<int, int>> pending;
  for (int s : seed) {
    if (s < 0 || s >= degree)
      throw std::invalid_argument("seed point out of range");
    if (uf.unite(seed.front(), s))
      pending.emplace_back(seed.front(), s);
  }
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    for (const auto &g : generators) {
      int ga = g(a);
      int gb = g(b);
      if (uf.unite(ga, gb))
        pending.emplace_back(ga, gb);
    }
  }
  std::vector<int> assignment(degree);
  for (int i = 0; i < degree; ++i)
    assignment[i] = uf.find(i);
  BlockSystem result{std::move(assignment)};
#ifndef NDEBUG
  // transitive actions force equal block sizes
  const auto sizes = result.block_sizes();
  for (int s : sizes)
    assert(s == sizes.front() && "blocks of a transitive action have one size");
#endif
  return result;
}

void require_transitive(const std::vector<Permutation> &generators,
                        int degree) {
  if (!is_transitive(generators, degree))
    throw std::invalid_argument("generators do not act transitively");
}

} // namespace

BlockSystem block_closure(const std::vector<Permutation> &generators,
                          int degree, const std::vector<int> &seed) {
  require_transitive(generators, degree);
  if (seed.empty() ||
      std::find(seed.begin(), seed.end(), 0) == seed.end())
    throw std::invalid_argument("seed must contain point 0");
  return closure_impl(generators, degree, seed);
}

std::vector<BlockSystem>
all_block_systems(const std::vector<Permutation> &generators, int degree,
                  int degree_cap) {
  // 2^(degree-1) closures; the subset mask must also fit in 64 bits
  if (degree > degree_cap || degree > 64)
    throw DegreeCapError(degree, degree_cap);
  require_transitive(generators, degree);

  std::set<std::vector<int>> seen;
  std::vector<BlockSystem> out;
  const std::uint64_t mask_count = std::uint64_t{1} << (degree - 1);
  std::vector<int> seed;
  for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
    seed.clear();
    seed.push_back(0);
    for (int i = 1; i < degree; ++i)
      if (mask & (std::uint64_t{1} << (i - 1)))
        seed.push_back(i);
    BlockSystem system = closure_impl(generators, degree, seed);
    if (seen.insert(system.assignment()).second)
      out.push_back(std::move(system));
  }
  std::sort(out.begin(), out.end(),
            [](const BlockSystem &a, const BlockSystem &b) {
              if (a.block_count() != b.block_count())
                return a.block_count() < b.block_count();
              return a.assignment() < b.assignment();
            });
  return out;
}

BlockAction action_on_blocks(const Permutation &p, const BlockSystem &partition) {
  if (p.degree() != partition.degree())
    throw std::invalid_argument("degree mismatch between permutation and blocks");
  std::vector<int> image(partition.block_count(), -1);
  for (int i = 0; i < p.degree(); ++i) {
    int from = partition.block_of(i);
    int to = partition.block_of(p(i));
    if (image[from] == -1)
      image[from] = to;
    else if (image[from] != to)
      throw std::invalid_argument(
          "block system is not invariant under the permutation");
  }
  Permutation on_blocks{std::move(image)};
  std::vector<int> lengths = cycle_type(on_blocks);
  return BlockAction{std::move(on_blocks), std::move(lengths)};
}

DegreeCapError::DegreeCapError(int degree_, int cap_)
    : std::runtime_error("degree cap exceeded: degree " +
                         std::to_string(degree_) + " is above the cap " +
                         std::to_string(cap_)),
      degree(degree_), cap(cap_) {}

} // namespace parcover
