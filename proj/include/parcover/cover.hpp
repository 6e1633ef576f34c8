#ifndef PARCOVER_COVER_HPP
#define PARCOVER_COVER_HPP

#include <string>
#include <vector>

#include "parcover/permutation.hpp"

namespace parcover {

// Opaque point label on the base curve, e.g. "0", "infty", "p1".
using PointId = std::string;

struct BranchPoint {
  PointId point;
  Permutation monodromy;
};

// Monodromy datum of a degree-d branched cover of a genus-g curve: one
// permutation per branch point plus 2g handle permutations (a1, b1, ...,
// ag, bg), subject to the surface-group product relation
//
//   [a1,b1] ... [ag,bg] * s_{x1} ... s_{xn} = id
//
// with the branch factors taken in stored order. The datum determines the
// cover up to isomorphism; points not listed are unramified.
class MonodromyCover {
public:
  MonodromyCover(int degree, int base_genus, std::vector<BranchPoint> branch,
                 std::vector<Permutation> handles = {});

  int degree() const { return degree_; }
  int base_genus() const { return base_genus_; }
  const std::vector<BranchPoint> &branch() const { return branch_; }
  const std::vector<Permutation> &handles() const { return handles_; }

  // handles first, then branch permutations in stored order
  std::vector<Permutation> monodromy_generators() const;

  // nullptr for unlisted (unramified) points
  const Permutation *branch_monodromy(const PointId &point) const;

private:
  int degree_;
  int base_genus_;
  std::vector<BranchPoint> branch_;
  std::vector<Permutation> handles_;
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

// Checks degree consistency, label uniqueness, handle count, absence of
// identity branch permutations, the product relation, and transitivity.
// Reports every violation found, not only the first.
ValidationReport validate_cover(const MonodromyCover &cover);

// The points over which the cover ramifies, in stored order.
std::vector<PointId> branch_locus(const MonodromyCover &cover);

// Multiplicities of the cover over `point` (the cycle type of its
// monodromy), descending. Unlisted points give all ones.
std::vector<int> ramification_profile(const MonodromyCover &cover,
                                      const PointId &point);

// Genus of the covering curve via Riemann-Hurwitz:
//   2g_Y - 2 = d(2g_X - 2) + sum over cycles (length - 1).
int genus_of_Y(const MonodromyCover &cover);

// One preimage of a base point per cycle of the monodromy there (fixed
// points included), ordered by smallest cycle element; the multiplicity of
// the cover at the preimage is the cycle length.
struct FiberPoint {
  PointId base;
  int cycle_index;
  int multiplicity;
};

std::vector<FiberPoint> fiber_over(const MonodromyCover &cover,
                                   const PointId &point);

// Deterministic label of a fiber point on the covering curve: "<base>#<cycle>".
PointId fiber_label(const FiberPoint &fp);

} // namespace parcover

#endif
