#include "parcover/cover.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "parcover/errors.hpp"

namespace parcover {

MonodromyCover::MonodromyCover(int degree, int base_genus,
                               std::vector<BranchPoint> branch,
                               std::vector<Permutation> handles)
    : degree_(degree), base_genus_(base_genus), branch_(std::move(branch)),
      handles_(std::move(handles)) {
  if (degree_ < 1)
    throw std::invalid_argument("cover degree must be positive");
  if (base_genus_ < 0)
    throw std::invalid_argument("base genus must be nonnegative");
}

std::vector<Permutation> MonodromyCover::monodromy_generators() const {
  std::vector<Permutation> gens = handles_;
  for (const auto &bp : branch_)
    gens.push_back(bp.monodromy);
  return gens;
}

const Permutation *MonodromyCover::branch_monodromy(const PointId &point) const {
  for (const auto &bp : branch_)
    if (bp.point == point)
      return &bp.monodromy;
  return nullptr;
}

ValidationReport validate_cover(const MonodromyCover &cover) {
  ValidationReport report;
  const int d = cover.degree();

  bool degrees_ok = true;
  for (const auto &h : cover.handles())
    degrees_ok = degrees_ok && h.degree() == d;
  for (const auto &bp : cover.branch())
    degrees_ok = degrees_ok && bp.monodromy.degree() == d;
  if (!degrees_ok)
    report.errors.push_back("degree mismatch: every permutation must act on " +
                            std::to_string(d) + " points");

  if (static_cast<int>(cover.handles().size()) != 2 * cover.base_genus())
    report.errors.push_back(
        "handle count must be 2*base_genus = " +
        std::to_string(2 * cover.base_genus()) + ", got " +
        std::to_string(cover.handles().size()));

  std::set<PointId> labels;
  for (const auto &bp : cover.branch()) {
    if (bp.point.empty())
      report.errors.push_back("empty branch point label");
    else if (!labels.insert(bp.point).second)
      report.errors.push_back("duplicate branch point label: " + bp.point);
  }

  // the remaining checks need permutations of one common degree
  if (!degrees_ok)
    return report;

  for (const auto &bp : cover.branch())
    if (bp.monodromy.is_identity())
      report.errors.push_back("identity permutation listed as branch point: " +
                              bp.point);

  Permutation product(d);
  const auto &handles = cover.handles();
  for (std::size_t i = 0; i + 1 < handles.size(); i += 2)
    product = compose(product, commutator(handles[i], handles[i + 1]));
  for (const auto &bp : cover.branch())
    product = compose(product, bp.monodromy);
  if (!product.is_identity())
    report.errors.push_back(
        "product relation fails: commutators times branch permutations is not "
        "the identity");

  if (!is_transitive(cover.monodromy_generators(), d))
    report.errors.push_back(
        "action not transitive (covering curve is reducible)");

  return report;
}

std::vector<PointId> branch_locus(const MonodromyCover &cover) {
  std::vector<PointId> locus;
  for (const auto &bp : cover.branch())
    locus.push_back(bp.point);
  return locus;
}

std::vector<int> ramification_profile(const MonodromyCover &cover,
                                      const PointId &point) {
  if (const Permutation *sigma = cover.branch_monodromy(point))
    return cycle_type(*sigma);
  return std::vector<int>(cover.degree(), 1);
}

int genus_of_Y(const MonodromyCover &cover) {
  long long total_ramification = 0;
  for (const auto &bp : cover.branch())
    for (int len : cycle_type(bp.monodromy))
      total_ramification += len - 1;
  const long long rhs =
      static_cast<long long>(cover.degree()) * (2LL * cover.base_genus() - 2) +
      total_ramification;
  if ((rhs + 2) % 2 != 0 || rhs + 2 < 0)
    throw SelfCheckError("non-integral or negative genus (corrupted cover data)");
  return static_cast<int>((rhs + 2) / 2);
}

std::vector<FiberPoint> fiber_over(const MonodromyCover &cover,
                                   const PointId &point) {
  const Permutation *sigma = cover.branch_monodromy(point);
  const Permutation identity(cover.degree());
  const auto cycle_list = cycles(sigma ? *sigma : identity);
  std::vector<FiberPoint> fiber;
  for (std::size_t c = 0; c < cycle_list.size(); ++c)
    fiber.push_back(FiberPoint{point, static_cast<int>(c),
                               static_cast<int>(cycle_list[c].size())});
  return fiber;
}

PointId fiber_label(const FiberPoint &fp) {
  return fp.base + "#" + std::to_string(fp.cycle_index);
}

} // namespace parcover
