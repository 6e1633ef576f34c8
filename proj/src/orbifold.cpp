#include "parcover/orbifold.hpp"

#include <numeric>
#include <string>

namespace parcover {

std::optional<std::int64_t>
OrbifoldStructure::order_at(const PointId &point) const {
  auto it = marked.find(point);
  if (it == marked.end())
    return std::nullopt;
  return it->second;
}

IntermediateCoverReport describe_intermediate_cover(
    const BlockSystem &system, const MonodromyCover &cover,
    const OrbifoldStructure &orbifold) {
  IntermediateCoverReport report{system, system.block_count(), true, {}};
  for (const auto &bp : cover.branch()) {
    BlockAction action = action_on_blocks(bp.monodromy, system);
    const auto mark = orbifold.order_at(bp.point);
    for (int len : action.orbit_lengths) {
      const bool allowed = mark ? (*mark % len == 0) : (len == 1);
      if (!allowed)
        report.etale = false;
    }
    report.ramification.emplace(bp.point, std::move(action.orbit_lengths));
  }
  return report;
}

bool is_orbifold_etale(const BlockSystem &system, const MonodromyCover &cover,
                       const OrbifoldStructure &orbifold) {
  return describe_intermediate_cover(system, cover, orbifold).etale;
}

std::vector<IntermediateCoverReport>
intermediate_covers(const MonodromyCover &cover,
                    const OrbifoldStructure &orbifold, int degree_cap) {
  std::vector<IntermediateCoverReport> reports;
  for (const BlockSystem &system :
       all_block_systems(cover.monodromy_generators(), cover.degree(),
                         degree_cap))
    reports.push_back(describe_intermediate_cover(system, cover, orbifold));
  return reports;
}

std::vector<IntermediateCoverReport>
etale_intermediate_covers(const MonodromyCover &cover,
                          const OrbifoldStructure &orbifold, int degree_cap) {
  std::vector<IntermediateCoverReport> etale;
  for (auto &report : intermediate_covers(cover, orbifold, degree_cap))
    if (report.etale)
      etale.push_back(std::move(report));
  return etale;
}

IntermediateCoverReport
maximal_etale_cover(const MonodromyCover &cover,
                    const OrbifoldStructure &orbifold, int degree_cap) {
  const auto etale = etale_intermediate_covers(cover, orbifold, degree_cap);
  // the one-block system is always present
  const IntermediateCoverReport *best = nullptr;
  int ties = 0;
  for (const auto &report : etale) {
    if (!best || report.degree_over_base > best->degree_over_base) {
      best = &report;
      ties = 1;
    } else if (report.degree_over_base == best->degree_over_base) {
      ++ties;
    }
  }
  if (!best || ties != 1)
    throw SelfCheckError(
        "uniqueness of the maximal etale intermediate cover violated");
  for (const auto &report : etale)
    if (!best->system.refines(report.system))
      throw SelfCheckError("maximal etale system does not refine the etale "
                           "system with " +
                           std::to_string(report.degree_over_base) + " blocks");
  return *best;
}

int rank_of_canonical_subbundle(const MonodromyCover &cover,
                                const OrbifoldStructure &orbifold,
                                int degree_cap) {
  return maximal_etale_cover(cover, orbifold, degree_cap).degree_over_base;
}

StabilityVerdict stability_verdict(const MonodromyCover &cover,
                                   const OrbifoldStructure &orbifold,
                                   int degree_cap) {
  IntermediateCoverReport maximal =
      maximal_etale_cover(cover, orbifold, degree_cap);
  const int rank = maximal.degree_over_base;
  if (rank == 1)
    return StabilityVerdict{Verdict::preserved, rank, std::nullopt};
  return StabilityVerdict{Verdict::not_preserved, rank, std::move(maximal)};
}

bool coprime_hypothesis_holds(const MonodromyCover &cover,
                              const OrbifoldStructure &orbifold) {
  for (const auto &[point, order] : orbifold.marked)
    for (int multiplicity : ramification_profile(cover, point))
      if (std::gcd(order, static_cast<std::int64_t>(multiplicity)) != 1)
        return false;
  return true;
}

} // namespace parcover
