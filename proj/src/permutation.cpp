#include "parcover/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parcover {

Permutation::Permutation(int degree) : images_(degree > 0 ? degree : 0) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>> &cycles) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  for (const auto &cycle : cycles) {
    if (cycle.empty())
      throw std::invalid_argument("empty cycle");
    for (int v : cycle) {
      if (v < 0 || v >= degree)
        throw std::invalid_argument("cycle index out of range: " +
                                    std::to_string(v));
      if (used[v])
        throw std::invalid_argument("repeated index in cycles: " +
                                    std::to_string(v));
      used[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    images[i] = p(q(i));
  return Permutation(std::move(images));
}

Permutation commutator(const Permutation &a, const Permutation &b) {
  return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

std::vector<std::vector<int>> cycles(const Permutation &p) {
  std::vector<std::vector<int>> result;
  std::vector<char> visited(p.degree(), 0);
  // sweeping in ascending order makes each cycle start at its smallest element
  for (int i = 0; i < p.degree(); ++i) {
    if (visited[i])
      continue;
    std::vector<int> cycle;
    for (int j = i; !visited[j]; j = p(j)) {
      visited[j] = 1;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> cycle_type(const Permutation &p) {
  std::vector<int> lengths;
  for (const auto &cycle : cycles(p))
    lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

std::vector<int> orbit(int start, const std::vector<Permutation> &generators,
                       int degree) {
  if (start < 0 || start >= degree)
    throw std::invalid_argument("orbit start out of range");
  std::vector<char> reached(degree, 0);
  reached[start] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto &g : generators) {
      int j = g(i);
      if (!reached[j]) {
        reached[j] = 1;
        queue.push_back(j);
      }
    }
  }
  std::vector<int> result;
  for (int i = 0; i < degree; ++i)
    if (reached[i])
      result.push_back(i);
  return result;
}

bool is_transitive(const std::vector<Permutation> &generators, int degree) {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("degree mismatch among generators");
  return static_cast<int>(orbit(0, generators, degree).size()) == degree;
}

std::string to_cycle_string(const Permutation &p) {
  std::ostringstream out;
  bool printed = false;
  for (const auto &cycle : cycles(p)) {
    if (cycle.size() < 2)
      continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i];
    out << ')';
    printed = true;
  }
  return printed ? out.str() : "id";
}

} // namespace parcover
