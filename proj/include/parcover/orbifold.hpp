#ifndef PARCOVER_ORBIFOLD_HPP
#define PARCOVER_ORBIFOLD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parcover/block_system.hpp"
#include "parcover/cover.hpp"

namespace parcover {

// The base curve with marked points carrying integer weights N >= 1 (the
// inertia order at each mark). Points not listed are unmarked.
struct OrbifoldStructure {
  std::map<PointId, std::int64_t> marked;

  std::optional<std::int64_t> order_at(const PointId &point) const;
};

// An intermediate cover Y -> Z -> X, encoded by a block system of the
// monodromy action: degree_over_base is the number of blocks (the degree of
// Z -> X), and ramification lists, per branch point, the orbit lengths of
// its monodromy on blocks (the multiplicities of Z -> X over that point).
struct IntermediateCoverReport {
  BlockSystem system;
  int degree_over_base;
  bool etale;
  std::map<PointId, std::vector<int>> ramification;
};

// A block system is orbifold-etale when the induced cover Z -> X is
// unramified away from the marked points and every ramification order over
// a marked point divides its N. Handle generators impose nothing.
bool is_orbifold_etale(const BlockSystem &system, const MonodromyCover &cover,
                       const OrbifoldStructure &orbifold);

IntermediateCoverReport describe_intermediate_cover(
    const BlockSystem &system, const MonodromyCover &cover,
    const OrbifoldStructure &orbifold);

// One report per block system of the action, sorted by (degree over base,
// block assignment).
std::vector<IntermediateCoverReport>
intermediate_covers(const MonodromyCover &cover,
                    const OrbifoldStructure &orbifold,
                    int degree_cap = kDefaultDegreeCap);

// Only the orbifold-etale ones. Always contains the one-block system.
std::vector<IntermediateCoverReport>
etale_intermediate_covers(const MonodromyCover &cover,
                          const OrbifoldStructure &orbifold,
                          int degree_cap = kDefaultDegreeCap);

// The etale system with the most blocks. Verifies that it is unique and
// refines every other etale system; a violation throws SelfCheckError
// (it cannot happen for valid data).
IntermediateCoverReport
maximal_etale_cover(const MonodromyCover &cover,
                    const OrbifoldStructure &orbifold,
                    int degree_cap = kDefaultDegreeCap);

// Rank of the canonical subbundle of the direct image of the structure
// sheaf: the degree over the base of the maximal etale intermediate cover.
int rank_of_canonical_subbundle(const MonodromyCover &cover,
                                const OrbifoldStructure &orbifold,
                                int degree_cap = kDefaultDegreeCap);

enum class Verdict { preserved, not_preserved };

struct StabilityVerdict {
  Verdict verdict;
  int rank; // rank of the canonical subbundle
  // the nontrivial etale intermediate cover obstructing preservation
  std::optional<IntermediateCoverReport> witness;
};

// preserved iff the canonical subbundle has rank one: pullback along the
// cover then keeps every stable parabolic bundle with weights in (1/N_x)Z
// stable. Otherwise some stable bundle destabilizes, and the maximal etale
// intermediate cover is attached as the witness.
StabilityVerdict stability_verdict(const MonodromyCover &cover,
                                   const OrbifoldStructure &orbifold,
                                   int degree_cap = kDefaultDegreeCap);

// True iff gcd(N_x, m) = 1 for every marked point x and every multiplicity
// m of the cover over x. A sufficient (strictly stronger) condition for the
// preserved verdict.
bool coprime_hypothesis_holds(const MonodromyCover &cover,
                              const OrbifoldStructure &orbifold);

} // namespace parcover

#endif
