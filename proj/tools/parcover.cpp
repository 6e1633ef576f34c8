// Command-line front end: reads cover/orbifold/bundle documents, runs the
// analyses and prints text or JSON reports.
//
// Exit codes: 0 success, 1 semantic invalid, 2 parse error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "parcover/io.hpp"
#include "parcover/orbifold.hpp"
#include "parcover/parabolic.hpp"

namespace {

using nlohmann::json;
using namespace parcover;

// A validated-input failure; distinct from document parse errors.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string &path) {
  if (path == "-")
    return json::parse(std::cin);
  std::ifstream in(path);
  if (!in)
    throw DocumentError("cannot open " + path);
  return json::parse(in);
}

MonodromyCover load_cover(const std::string &path) {
  return cover_from_json(read_json(path));
}

MonodromyCover load_valid_cover(const std::string &path) {
  MonodromyCover cover = load_cover(path);
  const ValidationReport report = validate_cover(cover);
  if (!report.ok()) {
    std::string message = "invalid cover";
    for (const auto &error : report.errors)
      message += "\n  " + error;
    throw SemanticError(message);
  }
  return cover;
}

OrbifoldStructure load_orbifold(const std::string &path) {
  if (path.empty())
    return OrbifoldStructure{};
  return orbifold_from_json(read_json(path));
}

std::string rational_str(const Rational &value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string blocks_str(const BlockSystem &system) {
  std::ostringstream out;
  out << '{';
  const auto blocks = system.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b)
      out << " | ";
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      out << (i ? " " : "") << blocks[b][i];
  }
  out << '}';
  return out.str();
}

std::string lengths_str(const std::vector<int> &lengths) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < lengths.size(); ++i)
    out << (i ? " " : "") << lengths[i];
  out << ']';
  return out.str();
}

void print_cover_header(const MonodromyCover &cover) {
  std::cout << "cover: degree " << cover.degree() << " over a base of genus "
            << cover.base_genus();
  if (cover.branch().empty()) {
    std::cout << ", unramified\n";
    return;
  }
  std::cout << ", branched over";
  bool first = true;
  for (const auto &bp : cover.branch()) {
    std::cout << (first ? " " : ", ") << bp.point;
    first = false;
  }
  std::cout << '\n';
}

int cmd_validate(const std::string &input, const std::string &format) {
  const MonodromyCover cover = load_cover(input);
  const ValidationReport report = validate_cover(cover);
  if (!report.ok()) {
    if (format == "json") {
      std::cout << json{{"valid", false}, {"errors", report.errors}}.dump(2)
                << '\n';
    } else {
      std::cout << "invalid cover:\n";
      for (const auto &error : report.errors)
        std::cout << "  " << error << '\n';
    }
    return 1;
  }
  if (format == "json") {
    std::cout << cover_to_json(cover).dump(2) << '\n';
  } else {
    print_cover_header(cover);
    for (const auto &bp : cover.branch())
      std::cout << "  " << bp.point << ": multiplicities "
                << lengths_str(cycle_type(bp.monodromy)) << ", monodromy "
                << to_cycle_string(bp.monodromy) << '\n';
    std::cout << "genus of the covering curve: " << genus_of_Y(cover) << '\n';
    std::cout << "canonical form:\n" << cover_to_json(cover).dump(2) << '\n';
  }
  return 0;
}

void print_report_line(const IntermediateCoverReport &report) {
  std::cout << "  degree " << report.degree_over_base << ": "
            << blocks_str(report.system);
  if (!report.ramification.empty()) {
    std::cout << "; orbit lengths";
    for (const auto &[point, lengths] : report.ramification)
      std::cout << " " << point << " " << lengths_str(lengths);
  }
  std::cout << (report.etale ? "" : " (not etale)") << '\n';
}

int cmd_analyze(const std::string &input, const std::string &orbifold_path,
                int max_degree, bool list_blocks, const std::string &format) {
  const MonodromyCover cover = load_valid_cover(input);
  const OrbifoldStructure orbifold = load_orbifold(orbifold_path);

  const auto reports = intermediate_covers(cover, orbifold, max_degree);
  std::vector<IntermediateCoverReport> etale;
  for (const auto &report : reports)
    if (report.etale)
      etale.push_back(report);
  const StabilityVerdict verdict = stability_verdict(cover, orbifold, max_degree);
  const bool coprime = coprime_hypothesis_holds(cover, orbifold);
  const char *verdict_str =
      verdict.verdict == Verdict::preserved ? "PRESERVED" : "NOT_PRESERVED";

  if (format == "json") {
    json etale_json = json::array();
    for (const auto &report : etale)
      etale_json.push_back(report_to_json(report));
    json out = {{"degree", cover.degree()},
                {"base_genus", cover.base_genus()},
                {"orbifold", orbifold_to_json(orbifold)},
                {"rank_of_F", verdict.rank},
                {"verdict", verdict_str},
                {"coprime_hypothesis", coprime},
                {"etale_covers", std::move(etale_json)},
                {"witness", verdict.witness ? report_to_json(*verdict.witness)
                                            : json(nullptr)}};
    if (list_blocks) {
      json all = json::array();
      for (const auto &report : reports)
        all.push_back(report_to_json(report));
      out["block_systems"] = std::move(all);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  print_cover_header(cover);
  if (orbifold.marked.empty()) {
    std::cout << "orbifold marks: none\n";
  } else {
    std::cout << "orbifold marks:";
    for (const auto &[point, order] : orbifold.marked)
      std::cout << " N(" << point << ") = " << order;
    std::cout << '\n';
  }
  if (list_blocks) {
    std::cout << "block systems of the monodromy action: " << reports.size()
              << '\n';
    for (const auto &report : reports)
      print_report_line(report);
  }
  std::cout << "etale intermediate covers: " << etale.size() << " of "
            << reports.size() << " block systems\n";
  for (const auto &report : etale)
    print_report_line(report);
  std::cout << "rank of the canonical subbundle F: " << verdict.rank << '\n';
  std::cout << "coprime hypothesis (gcd(N, multiplicity) = 1 at every mark): "
            << (coprime ? "holds" : "does not hold") << '\n';
  if (verdict.verdict == Verdict::preserved) {
    std::cout << "verdict: PRESERVED -- rank F = 1, pullback keeps every "
                 "stable parabolic bundle with weights in (1/N)Z stable\n";
  } else {
    std::cout << "verdict: NOT_PRESERVED -- rank F = " << verdict.rank
              << " > 1, some stable parabolic bundle with weights in (1/N)Z "
                 "pulls back to an unstable bundle\n";
    std::cout << "witness: intermediate cover of degree "
              << verdict.witness->degree_over_base << ", blocks "
              << blocks_str(verdict.witness->system) << '\n';
  }
  return 0;
}

int cmd_direct_image(const std::string &input, const std::string &format) {
  const MonodromyCover cover = load_valid_cover(input);
  const WeightProfile profile = direct_image_structure(cover);
  const Rational degree = par_deg(profile);

  if (format == "json") {
    json out = profile_to_json(profile);
    out["par_deg"] = rational_to_json(degree);
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "direct image of the structure sheaf: rank " << profile.rank()
            << ", degree " << profile.deg() << '\n';
  for (const auto &[point, entries] : profile.profile()) {
    std::cout << "weights at " << point << ":";
    for (const auto &entry : entries)
      std::cout << " " << rational_str(entry.weight.value()) << " (x"
                << entry.multiplicity << ")";
    std::cout << '\n';
  }
  std::cout << "parabolic degree: " << rational_str(degree) << " (verified)\n";
  return 0;
}

int cmd_pullback(const std::string &input, const std::string &bundle_path,
                 const std::string &format) {
  const MonodromyCover cover = load_valid_cover(input);
  if (bundle_path.empty())
    throw SemanticError("pullback needs --bundle <path>");
  const BundleDocument bundle = bundle_from_json(read_json(bundle_path));

  const Rational base_par_deg =
      std::visit([](const auto &b) { return par_deg(b); }, bundle);
  const BundleDocument pulled = std::visit(
      [&cover](const auto &b) -> BundleDocument {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>,
                                     ParabolicLineBundle>)
          return pullback_line(cover, b);
        else
          return pullback_split(cover, b);
      },
      bundle);
  const Rational pulled_par_deg =
      std::visit([](const auto &b) { return par_deg(b); }, pulled);
  Rational expected = base_par_deg * cover.degree();
  if (pulled_par_deg != expected)
    throw SelfCheckError("pullback parabolic degree does not scale by the "
                         "covering degree");

  if (format == "json") {
    json out = {{"degree", cover.degree()},
                {"pullback", bundle_to_json(pulled)},
                {"par_deg_pullback", rational_to_json(pulled_par_deg)},
                {"par_deg_base", rational_to_json(base_par_deg)},
                {"scaling_identity_holds", true}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "pullback along a degree-" << cover.degree() << " cover\n";
  const auto print_line = [](const ParabolicLineBundle &line) {
    std::cout << "  deg " << line.deg;
    if (line.weights.empty()) {
      std::cout << ", no weights\n";
      return;
    }
    std::cout << ", weights:";
    for (const auto &[point, weight] : line.weights)
      std::cout << " " << point << " -> " << rational_str(weight.value());
    std::cout << '\n';
  };
  if (const auto *line = std::get_if<ParabolicLineBundle>(&pulled)) {
    print_line(*line);
  } else {
    const auto &split = std::get<SplitParabolicBundle>(pulled);
    std::cout << "direct sum of " << split.summands.size() << " line bundles\n";
    for (const auto &line : split.summands)
      print_line(line);
  }
  std::cout << "par-deg identity: " << cover.degree() << " * "
            << rational_str(base_par_deg) << " = "
            << rational_str(pulled_par_deg) << " (confirmed)\n";
  return 0;
}

int cmd_blocks(const std::string &input, const std::string &orbifold_path,
               int max_degree, const std::string &format) {
  const MonodromyCover cover = load_valid_cover(input);
  const OrbifoldStructure orbifold = load_orbifold(orbifold_path);
  const auto reports = intermediate_covers(cover, orbifold, max_degree);

  if (format == "json") {
    json systems = json::array();
    for (const auto &report : reports)
      systems.push_back(report_to_json(report));
    std::cout << json{{"degree", cover.degree()},
                      {"block_systems", std::move(systems)}}
                     .dump(2)
              << '\n';
    return 0;
  }

  print_cover_header(cover);
  std::cout << "block systems of the monodromy action: " << reports.size()
            << '\n';
  for (const auto &report : reports)
    print_report_line(report);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact analysis of parabolic bundle stability under pullback "
               "along branched covers of curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input = "-";
  std::string orbifold_path;
  std::string bundle_path;
  std::string format = "text";
  int max_degree = kDefaultDegreeCap;
  app.add_option("--input", input, "cover document path, or - for stdin");
  app.add_option("--orbifold", orbifold_path, "orbifold document path");
  app.add_option("--bundle", bundle_path, "bundle document path");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", max_degree,
                 "cap for block system enumeration")
      ->check(CLI::PositiveNumber);

  auto *validate = app.add_subcommand(
      "validate", "check a cover document and echo its canonical form");
  auto *analyze = app.add_subcommand(
      "analyze", "rank of the canonical subbundle and stability verdict");
  bool list_blocks = false;
  analyze->add_flag("--list-blocks", list_blocks,
                    "also list every block system");
  auto *direct_image = app.add_subcommand(
      "direct-image",
      "parabolic structure of the direct image of the structure sheaf");
  auto *pullback = app.add_subcommand(
      "pullback", "pull a parabolic bundle back along the cover");
  auto *blocks = app.add_subcommand(
      "blocks", "list the block systems of the monodromy action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed())
      return cmd_validate(input, format);
    if (analyze->parsed())
      return cmd_analyze(input, orbifold_path, max_degree, list_blocks, format);
    if (direct_image->parsed())
      return cmd_direct_image(input, format);
    if (pullback->parsed())
      return cmd_pullback(input, bundle_path, format);
    if (blocks->parsed())
      return cmd_blocks(input, orbifold_path, max_degree, format);
  } catch (const DocumentError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DegreeCapError &e) {
    std::cerr << e.what() << " (raise --max-degree to override)" << '\n';
    return 3;
  } catch (const SemanticError &e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
