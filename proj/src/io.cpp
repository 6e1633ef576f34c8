#include "parcover/io.hpp"

#include <limits>
#include <set>
#include <string>
#include <utility>

namespace parcover {

using nlohmann::json;

namespace {

void require_object(const json &value, const std::string &what) {
  if (!value.is_object())
    throw DocumentError(what + " must be an object");
}

const json &require_field(const json &obj, const char *key,
                          const std::string &what) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw DocumentError(what + " is missing the \"" + key + "\" field");
  return *it;
}

std::int64_t require_int(const json &value, const std::string &what) {
  if (!value.is_number_integer())
    throw DocumentError(what + " must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw DocumentError(what + " is out of range");
  return value.get<std::int64_t>();
}

std::string require_label(const json &value, const std::string &what) {
  if (!value.is_string() || value.get<std::string>().empty())
    throw DocumentError(what + " must be a nonempty string");
  return value.get<std::string>();
}

const json &require_array(const json &value, const std::string &what) {
  if (!value.is_array())
    throw DocumentError(what + " must be an array");
  return value;
}

void reject_unknown_keys(const json &obj, std::set<std::string> allowed,
                         const std::string &what) {
  for (const auto &[key, value] : obj.items())
    if (!allowed.count(key))
      throw DocumentError(what + " has unknown field \"" + key + "\"");
}

Permutation permutation_from_cycles_json(const json &value, int degree,
                                         const std::string &what) {
  const json &cycle_list = require_array(value, what);
  std::vector<std::vector<int>> cycles;
  for (const auto &cycle_json : cycle_list) {
    const json &entries = require_array(cycle_json, what + ": each cycle");
    std::vector<int> cycle;
    for (const auto &entry : entries) {
      const std::int64_t v = require_int(entry, what + ": cycle entry");
      cycle.push_back(static_cast<int>(v));
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const std::invalid_argument &e) {
    throw DocumentError(what + ": " + e.what());
  }
}

json cycles_to_json(const Permutation &p) {
  json out = json::array();
  for (const auto &cycle : cycles(p)) {
    if (cycle.size() < 2)
      continue;
    out.push_back(cycle);
  }
  return out;
}

} // namespace

MonodromyCover cover_from_json(const json &doc) {
  require_object(doc, "cover document");
  reject_unknown_keys(doc, {"degree", "base_genus", "branch", "handles"},
                      "cover document");
  const std::int64_t degree =
      require_int(require_field(doc, "degree", "cover document"), "degree");
  if (degree < 1)
    throw DocumentError("degree must be at least 1");
  if (degree > 64)
    throw DocumentError("degree is unreasonably large");
  const std::int64_t base_genus = require_int(
      require_field(doc, "base_genus", "cover document"), "base_genus");
  if (base_genus < 0)
    throw DocumentError("base_genus must be nonnegative");
  if (base_genus > 1000000)
    throw DocumentError("base_genus is unreasonably large");

  std::vector<BranchPoint> branch;
  if (auto it = doc.find("branch"); it != doc.end()) {
    int index = 0;
    for (const auto &entry : require_array(*it, "branch")) {
      const std::string where = "branch[" + std::to_string(index++) + "]";
      require_object(entry, where);
      reject_unknown_keys(entry, {"point", "perm"}, where);
      PointId point =
          require_label(require_field(entry, "point", where), where + ".point");
      Permutation sigma = permutation_from_cycles_json(
          require_field(entry, "perm", where), static_cast<int>(degree),
          where + ".perm");
      branch.push_back(BranchPoint{std::move(point), std::move(sigma)});
    }
  }

  std::vector<Permutation> handles;
  if (auto it = doc.find("handles"); it != doc.end()) {
    int index = 0;
    for (const auto &entry : require_array(*it, "handles")) {
      const std::string where = "handles[" + std::to_string(index++) + "]";
      handles.push_back(permutation_from_cycles_json(
          entry, static_cast<int>(degree), where));
    }
  }

  return MonodromyCover(static_cast<int>(degree), static_cast<int>(base_genus),
                        std::move(branch), std::move(handles));
}

json cover_to_json(const MonodromyCover &cover) {
  json branch = json::array();
  for (const auto &bp : cover.branch())
    branch.push_back(
        {{"point", bp.point}, {"perm", cycles_to_json(bp.monodromy)}});
  json doc = {{"degree", cover.degree()},
              {"base_genus", cover.base_genus()},
              {"branch", std::move(branch)}};
  if (!cover.handles().empty()) {
    json handles = json::array();
    for (const auto &h : cover.handles())
      handles.push_back(cycles_to_json(h));
    doc["handles"] = std::move(handles);
  }
  return doc;
}

OrbifoldStructure orbifold_from_json(const json &doc) {
  require_object(doc, "orbifold document");
  reject_unknown_keys(doc, {"marked"}, "orbifold document");
  OrbifoldStructure orbifold;
  if (auto it = doc.find("marked"); it != doc.end()) {
    int index = 0;
    for (const auto &entry : require_array(*it, "marked")) {
      const std::string where = "marked[" + std::to_string(index++) + "]";
      require_object(entry, where);
      reject_unknown_keys(entry, {"point", "N"}, where);
      PointId point =
          require_label(require_field(entry, "point", where), where + ".point");
      const std::int64_t order =
          require_int(require_field(entry, "N", where), where + ".N");
      if (order < 1)
        throw DocumentError(where + ".N must be at least 1");
      if (!orbifold.marked.emplace(std::move(point), order).second)
        throw DocumentError(where + ": duplicate marked point");
    }
  }
  return orbifold;
}

json orbifold_to_json(const OrbifoldStructure &orbifold) {
  json marked = json::array();
  for (const auto &[point, order] : orbifold.marked)
    marked.push_back({{"point", point}, {"N", order}});
  return json{{"marked", std::move(marked)}};
}

namespace {

ParabolicLineBundle line_from_json(const json &value, const std::string &what) {
  require_object(value, what);
  reject_unknown_keys(value, {"deg", "weights"}, what);
  const std::int64_t deg =
      require_int(require_field(value, "deg", what), what + ".deg");
  // keeps degree arithmetic (scaling by the covering degree, floor twists)
  // comfortably inside 64 bits
  if (deg > (std::int64_t{1} << 40) || deg < -(std::int64_t{1} << 40))
    throw DocumentError(what + ".deg is unreasonably large");
  std::map<PointId, Weight> weights;
  if (auto it = value.find("weights"); it != value.end()) {
    int index = 0;
    for (const auto &entry : require_array(*it, what + ".weights")) {
      const std::string where = what + ".weights[" + std::to_string(index++) + "]";
      require_object(entry, where);
      reject_unknown_keys(entry, {"point", "num", "den"}, where);
      PointId point =
          require_label(require_field(entry, "point", where), where + ".point");
      const std::int64_t num =
          require_int(require_field(entry, "num", where), where + ".num");
      const std::int64_t den =
          require_int(require_field(entry, "den", where), where + ".den");
      if (den < 1)
        throw DocumentError(where + ".den must be at least 1");
      if (num < 0 || num >= den)
        throw DocumentError(where + ": weight must satisfy 0 <= num/den < 1");
      if (weights.count(point))
        throw DocumentError(where + ": duplicate weight point " + point);
      weights.emplace(std::move(point), Weight::reduced_from(num, den));
    }
  }
  return ParabolicLineBundle::make(deg, std::move(weights),
                                   CurveTag::base_curve);
}

json line_to_json(const ParabolicLineBundle &line) {
  json weights = json::array();
  for (const auto &[point, weight] : line.weights)
    weights.push_back({{"point", point},
                       {"num", to_int64(weight.value().get_num())},
                       {"den", to_int64(weight.value().get_den())}});
  return json{{"deg", line.deg}, {"weights", std::move(weights)}};
}

} // namespace

BundleDocument bundle_from_json(const json &doc) {
  require_object(doc, "bundle document");
  const bool has_line = doc.contains("line");
  const bool has_split = doc.contains("split");
  if (has_line == has_split)
    throw DocumentError(
        "bundle document must have exactly one of \"line\" or \"split\"");
  reject_unknown_keys(doc, {"line", "split"}, "bundle document");
  if (has_line)
    return line_from_json(doc.at("line"), "line");
  std::vector<ParabolicLineBundle> summands;
  int index = 0;
  for (const auto &entry : require_array(doc.at("split"), "split"))
    summands.push_back(
        line_from_json(entry, "split[" + std::to_string(index++) + "]"));
  if (summands.empty())
    throw DocumentError("split bundle needs at least one summand");
  return SplitParabolicBundle::make(std::move(summands));
}

json bundle_to_json(const ParabolicLineBundle &line) {
  return json{{"line", line_to_json(line)}};
}

json bundle_to_json(const SplitParabolicBundle &bundle) {
  json summands = json::array();
  for (const auto &line : bundle.summands)
    summands.push_back(line_to_json(line));
  return json{{"split", std::move(summands)}};
}

json bundle_to_json(const BundleDocument &bundle) {
  return std::visit([](const auto &b) { return bundle_to_json(b); }, bundle);
}

json rational_to_json(const Rational &value) {
  return json{{"num", to_int64(value.get_num())},
              {"den", to_int64(value.get_den())}};
}

json profile_to_json(const WeightProfile &profile) {
  json points = json::array();
  for (const auto &[point, entries] : profile.profile()) {
    json weights = json::array();
    for (const auto &entry : entries) {
      json w = rational_to_json(entry.weight.value());
      w["multiplicity"] = entry.multiplicity;
      weights.push_back(std::move(w));
    }
    points.push_back({{"point", point}, {"weights", std::move(weights)}});
  }
  return json{{"rank", profile.rank()},
              {"deg", profile.deg()},
              {"profile", std::move(points)}};
}

json block_system_to_json(const BlockSystem &system) {
  return json{{"count", system.block_count()}, {"blocks", system.blocks()}};
}

json report_to_json(const IntermediateCoverReport &report) {
  json ramification = json::array();
  for (const auto &[point, lengths] : report.ramification)
    ramification.push_back({{"point", point}, {"orbit_lengths", lengths}});
  return json{{"degree_over_base", report.degree_over_base},
              {"etale", report.etale},
              {"blocks", report.system.blocks()},
              {"ramification", std::move(ramification)}};
}

} // namespace parcover
