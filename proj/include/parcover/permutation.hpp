#ifndef PARCOVER_PERMUTATION_HPP
#define PARCOVER_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace parcover {

// A bijection of {0, ..., d-1}, stored as its image table: images()[i] is
// where point i goes. Immutable after construction.
class Permutation {
public:
  // identity on `degree` points
  explicit Permutation(int degree);

  // takes an image table; rejects anything that is not a bijection
  explicit Permutation(std::vector<int> images);

  // cycles are 0-based and may omit fixed points
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

// compose(p, q) applies q first: result(i) = p(q(i))
Permutation compose(const Permutation &p, const Permutation &q);

Permutation commutator(const Permutation &a, const Permutation &b);

// All cycles of p, fixed points included, ordered by smallest element and
// rotated so each cycle starts with its smallest element.
std::vector<std::vector<int>> cycles(const Permutation &p);

// Cycle lengths in descending order; they sum to the degree.
std::vector<int> cycle_type(const Permutation &p);

// Orbit of `start` under the generated group, sorted ascending.
std::vector<int> orbit(int start, const std::vector<Permutation> &generators,
                       int degree);

// True iff the generated group has a single orbit on {0, ..., degree-1}.
// An empty generator list is transitive exactly when degree == 1.
bool is_transitive(const std::vector<Permutation> &generators, int degree);

// "(0 1 2)(3 4)" with fixed points omitted; "id" for the identity.
std::string to_cycle_string(const Permutation &p);

} // namespace parcover

#endif
