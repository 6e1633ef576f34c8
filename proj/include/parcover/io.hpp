#ifndef PARCOVER_IO_HPP
#define PARCOVER_IO_HPP

#include <stdexcept>
#include <variant>

#include <json.hpp>

#include "parcover/cover.hpp"
#include "parcover/orbifold.hpp"
#include "parcover/parabolic.hpp"

namespace parcover {

// Structural problem with an input document (wrong type, bad cycle, value
// out of range). Distinct from semantic validation, which is reported by
// validate_cover.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cover documents:
//   {"degree": 6, "base_genus": 0,
//    "branch": [{"point": "0", "perm": [[0,1,2,3,4,5]]}, ...],
//    "handles": [[[0,1]], ...]}            (handles optional)
// Permutations are lists of 0-based cycles with fixed points omitted;
// branch order is the product-relation order.
MonodromyCover cover_from_json(const nlohmann::json &doc);
nlohmann::json cover_to_json(const MonodromyCover &cover);

// Orbifold documents: {"marked": [{"point": "0", "N": 2}, ...]}
OrbifoldStructure orbifold_from_json(const nlohmann::json &doc);
nlohmann::json orbifold_to_json(const OrbifoldStructure &orbifold);

// Bundle documents, weights as exact fractions 0 <= num/den < 1:
//   {"line": {"deg": 0, "weights": [{"point": "0", "num": 1, "den": 3}]}}
//   {"split": [{"deg": 0, "weights": [...]}, ...]}
using BundleDocument = std::variant<ParabolicLineBundle, SplitParabolicBundle>;

BundleDocument bundle_from_json(const nlohmann::json &doc);
nlohmann::json bundle_to_json(const ParabolicLineBundle &line);
nlohmann::json bundle_to_json(const SplitParabolicBundle &bundle);
nlohmann::json bundle_to_json(const BundleDocument &bundle);

// {"num": ..., "den": ...}
nlohmann::json rational_to_json(const Rational &value);

nlohmann::json profile_to_json(const WeightProfile &profile);
nlohmann::json block_system_to_json(const BlockSystem &system);
nlohmann::json report_to_json(const IntermediateCoverReport &report);

} // namespace parcover

#endif
