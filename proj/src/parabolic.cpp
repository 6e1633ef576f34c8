#include "parcover/parabolic.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "parcover/errors.hpp"

namespace parcover {

ParabolicLineBundle ParabolicLineBundle::make(std::int64_t deg,
                                              std::map<PointId, Weight> weights,
                                              CurveTag curve) {
  for (auto it = weights.begin(); it != weights.end();)
    it = it->second.is_zero() ? weights.erase(it) : std::next(it);
  return ParabolicLineBundle{deg, std::move(weights), curve};
}

SplitParabolicBundle
SplitParabolicBundle::make(std::vector<ParabolicLineBundle> summands) {
  if (summands.empty())
    throw std::invalid_argument("split bundle needs at least one summand");
  for (const auto &line : summands)
    if (line.curve != summands.front().curve)
      throw std::invalid_argument("summands live on different curves");
  return SplitParabolicBundle{std::move(summands)};
}

WeightProfile::WeightProfile(std::int64_t rank, std::int64_t deg,
                             std::map<PointId, PointWeights> profile)
    : rank_(rank), deg_(deg) {
  if (rank_ < 1)
    throw std::invalid_argument("rank must be positive");
  for (auto &[point, entries] : profile) {
    std::map<Weight, std::int64_t> merged;
    std::int64_t total = 0;
    for (const auto &entry : entries) {
      if (entry.multiplicity < 1)
        throw std::invalid_argument("weight multiplicity must be positive");
      merged[entry.weight] += entry.multiplicity;
      total += entry.multiplicity;
    }
    if (total != rank_)
      throw std::invalid_argument("weight multiplicities at " + point +
                                  " sum to " + std::to_string(total) +
                                  ", expected rank " + std::to_string(rank_));
    // a point with nothing but weight zero carries no parabolic data
    if (merged.size() == 1 && merged.begin()->first.is_zero())
      continue;
    PointWeights normalized;
    for (const auto &[weight, multiplicity] : merged)
      normalized.push_back(Entry{weight, multiplicity});
    profile_.emplace(point, std::move(normalized));
  }
}

Rational par_deg(const ParabolicLineBundle &line) {
  Rational total(line.deg);
  for (const auto &[point, weight] : line.weights)
    total += weight.value();
  return total;
}

Rational par_deg(const SplitParabolicBundle &bundle) {
  Rational total = 0;
  for (const auto &line : bundle.summands)
    total += par_deg(line);
  return total;
}

Rational par_deg(const WeightProfile &profile) {
  Rational total(profile.deg());
  for (const auto &[point, entries] : profile.profile())
    for (const auto &entry : entries)
      total += entry.weight.value() * entry.multiplicity;
  return total;
}

Rational par_mu(const ParabolicLineBundle &line) { return par_deg(line); }

Rational par_mu(const SplitParabolicBundle &bundle) {
  Rational mu = par_deg(bundle) / bundle.rank();
  return mu;
}

Rational par_mu(const WeightProfile &profile) {
  Rational mu = par_deg(profile) / profile.rank();
  return mu;
}

WeightProfile direct_image_structure(const MonodromyCover &cover) {
  const int d = cover.degree();
  const std::int64_t deg = (1 - static_cast<std::int64_t>(genus_of_Y(cover))) -
                           static_cast<std::int64_t>(d) *
                               (1 - static_cast<std::int64_t>(cover.base_genus()));
  std::map<PointId, WeightProfile::PointWeights> profile;
  for (const auto &bp : cover.branch()) {
    WeightProfile::PointWeights entries;
    for (const auto &cycle : cycles(bp.monodromy)) {
      const auto len = static_cast<std::int64_t>(cycle.size());
      for (std::int64_t j = 0; j < len; ++j)
        entries.push_back({Weight(make_rational(j, len)), 1});
    }
    profile.emplace(bp.point, std::move(entries));
  }
  WeightProfile result(d, deg, std::move(profile));
  if (par_deg(result) != 0)
    throw SelfCheckError("direct image parabolic degree is not zero");
  return result;
}

WeightProfile dual(const WeightProfile &profile) {
  std::int64_t positive_entries = 0;
  std::map<PointId, WeightProfile::PointWeights> flipped;
  for (const auto &[point, entries] : profile.profile()) {
    WeightProfile::PointWeights out;
    for (const auto &entry : entries) {
      if (!entry.weight.is_zero())
        positive_entries += entry.multiplicity;
      out.push_back({entry.weight.dual(), entry.multiplicity});
    }
    flipped.emplace(point, std::move(out));
  }
  return WeightProfile(profile.rank(), -profile.deg() - positive_entries,
                       std::move(flipped));
}

ParabolicLineBundle tensor_line(const ParabolicLineBundle &a,
                                const ParabolicLineBundle &b) {
  if (a.curve != b.curve)
    throw std::invalid_argument("tensor of line bundles on different curves");
  std::int64_t deg = a.deg + b.deg;
  std::map<PointId, Weight> weights = a.weights;
  for (const auto &[point, weight] : b.weights) {
    auto it = weights.find(point);
    if (it == weights.end()) {
      weights.emplace(point, weight);
      continue;
    }
    Rational sum = it->second.value() + weight.value();
    deg += to_int64(floor_of(sum));
    Rational frac = fractional_part(sum);
    if (frac == 0)
      weights.erase(it);
    else
      it->second = Weight(std::move(frac));
  }
  return ParabolicLineBundle::make(deg, std::move(weights), a.curve);
}

ParabolicLineBundle pullback_line(const MonodromyCover &cover,
                                  const ParabolicLineBundle &line) {
  if (line.curve != CurveTag::base_curve)
    throw std::invalid_argument("pullback expects a bundle on the base curve");
  std::int64_t deg = static_cast<std::int64_t>(cover.degree()) * line.deg;
  std::map<PointId, Weight> weights;
  for (const auto &[point, weight] : line.weights) {
    for (const FiberPoint &fp : fiber_over(cover, point)) {
      Rational scaled = weight.value() * fp.multiplicity;
      deg += to_int64(floor_of(scaled));
      Rational frac = fractional_part(scaled);
      if (frac != 0)
        weights.emplace(fiber_label(fp), Weight(std::move(frac)));
    }
  }
  return ParabolicLineBundle::make(deg, std::move(weights),
                                   CurveTag::covering_curve);
}

SplitParabolicBundle pullback_split(const MonodromyCover &cover,
                                    const SplitParabolicBundle &bundle) {
  std::vector<ParabolicLineBundle> pulled;
  for (const auto &line : bundle.summands)
    pulled.push_back(pullback_line(cover, line));
  return SplitParabolicBundle::make(std::move(pulled));
}

WeightProfile to_profile(const SplitParabolicBundle &bundle) {
  std::int64_t deg = 0;
  std::set<PointId> points;
  for (const auto &line : bundle.summands) {
    deg += line.deg;
    for (const auto &[point, weight] : line.weights)
      points.insert(point);
  }
  std::map<PointId, WeightProfile::PointWeights> profile;
  for (const PointId &point : points) {
    WeightProfile::PointWeights entries;
    for (const auto &line : bundle.summands) {
      auto it = line.weights.find(point);
      entries.push_back({it == line.weights.end() ? Weight() : it->second, 1});
    }
    profile.emplace(point, std::move(entries));
  }
  return WeightProfile(bundle.rank(), deg, std::move(profile));
}

namespace {

bool weight_allowed(const Weight &weight, const PointId &point,
                    const OrbifoldStructure &orbifold) {
  if (weight.is_zero())
    return true;
  const auto mark = orbifold.order_at(point);
  if (!mark)
    return false;
  Rational scaled = weight.value() * *mark;
  return scaled.get_den() == 1;
}

} // namespace

bool weights_divisible(const WeightProfile &profile,
                       const OrbifoldStructure &orbifold) {
  for (const auto &[point, entries] : profile.profile())
    for (const auto &entry : entries)
      if (!weight_allowed(entry.weight, point, orbifold))
        return false;
  return true;
}

bool weights_divisible(const SplitParabolicBundle &bundle,
                       const OrbifoldStructure &orbifold) {
  for (const auto &line : bundle.summands)
    for (const auto &[point, weight] : line.weights)
      if (!weight_allowed(weight, point, orbifold))
        return false;
  return true;
}

} // namespace parcover
