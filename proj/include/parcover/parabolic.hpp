#ifndef PARCOVER_PARABOLIC_HPP
#define PARCOVER_PARABOLIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "parcover/cover.hpp"
#include "parcover/orbifold.hpp"
#include "parcover/rational.hpp"

namespace parcover {

// Which curve a bundle lives on; pullback moves data from the base curve to
// the covering curve, and fiber points get "<base>#<cycle>" labels there.
enum class CurveTag { base_curve, covering_curve };

// Rank-one parabolic data: underlying degree plus one weight per point of
// the parabolic divisor. Zero weights are never stored.
struct ParabolicLineBundle {
  std::int64_t deg = 0;
  std::map<PointId, Weight> weights;
  CurveTag curve = CurveTag::base_curve;

  // drops zero weights
  static ParabolicLineBundle make(std::int64_t deg,
                                  std::map<PointId, Weight> weights,
                                  CurveTag curve = CurveTag::base_curve);

  friend bool operator==(const ParabolicLineBundle &,
                         const ParabolicLineBundle &) = default;
};

// A bundle presented globally as a direct sum of parabolic line bundles.
struct SplitParabolicBundle {
  std::vector<ParabolicLineBundle> summands; // nonempty, one common curve

  static SplitParabolicBundle make(std::vector<ParabolicLineBundle> summands);

  CurveTag curve() const { return summands.front().curve; }
  std::int64_t rank() const {
    return static_cast<std::int64_t>(summands.size());
  }

  friend bool operator==(const SplitParabolicBundle &,
                         const SplitParabolicBundle &) = default;
};

// Weight multiset data of a parabolic bundle, enough for every degree
// computation: per listed point, merged (weight, multiplicity) entries
// sorted by weight and summing to the rank. Zero weights are kept
// explicitly so the sums check out, but a point carrying only zero weight
// is dropped entirely (unlisted points mean all-zero weights).
class WeightProfile {
public:
  struct Entry {
    Weight weight;
    std::int64_t multiplicity;

    friend bool operator==(const Entry &, const Entry &) = default;
  };

  using PointWeights = std::vector<Entry>;

  // merges equal weights, sorts, validates the multiplicity sums
  WeightProfile(std::int64_t rank, std::int64_t deg,
                std::map<PointId, PointWeights> profile);

  std::int64_t rank() const { return rank_; }
  std::int64_t deg() const { return deg_; }
  const std::map<PointId, PointWeights> &profile() const { return profile_; }

  friend bool operator==(const WeightProfile &, const WeightProfile &) = default;

private:
  std::int64_t rank_;
  std::int64_t deg_;
  std::map<PointId, PointWeights> profile_;
};

// parabolic degree: underlying degree plus the weight-multiplicity sum
Rational par_deg(const ParabolicLineBundle &line);
Rational par_deg(const SplitParabolicBundle &bundle);
Rational par_deg(const WeightProfile &profile);

// parabolic slope: par_deg / rank
Rational par_mu(const ParabolicLineBundle &line);
Rational par_mu(const SplitParabolicBundle &bundle);
Rational par_mu(const WeightProfile &profile);

// The canonical parabolic structure on the direct image of the structure
// sheaf of the covering curve: rank d, underlying degree
// (1 - g_Y) - d(1 - g_X), and at each branch point one weight j/l for every
// ramification cycle of length l and 0 <= j < l. Its parabolic degree is
// exactly zero; this is checked on every call and a failure throws
// SelfCheckError.
WeightProfile direct_image_structure(const MonodromyCover &cover);

// Parabolic dual: weights 0 -> 0, a -> 1-a with multiplicities kept, and
// the underlying degree chosen so that par_deg negates. An involution.
WeightProfile dual(const WeightProfile &profile);

// Rank-one tensor product: weights add and overflow into the degree.
ParabolicLineBundle tensor_line(const ParabolicLineBundle &a,
                                const ParabolicLineBundle &b);

// Floor-formula pullback: at a preimage of multiplicity m of a point of
// weight a, the pulled back weight is frac(m*a) while floor(m*a) twists the
// underlying degree. par_deg scales by the covering degree.
ParabolicLineBundle pullback_line(const MonodromyCover &cover,
                                  const ParabolicLineBundle &line);
SplitParabolicBundle pullback_split(const MonodromyCover &cover,
                                    const SplitParabolicBundle &bundle);

WeightProfile to_profile(const SplitParabolicBundle &bundle);

// True iff every nonzero weight sits at a marked point and is an integral
// multiple of 1/N there.
bool weights_divisible(const WeightProfile &profile,
                       const OrbifoldStructure &orbifold);
bool weights_divisible(const SplitParabolicBundle &bundle,
                       const OrbifoldStructure &orbifold);

} // namespace parcover

#endif
