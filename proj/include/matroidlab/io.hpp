#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "matroidlab/bc_complex.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/ordering.hpp"
#include "matroidlab/search.hpp"

namespace matroidlab {

struct MatroidDocument {
  Matroid matroid;
  std::optional<Ordering> ordering;
};

/// Accepts {"type": "column"|"graphic"|"uniform"|"circuits", ...} with an
/// optional "ordering" array of labels. Throws Errc::Parse.
MatroidDocument matroid_from_json(const nlohmann::json& j);
MatroidDocument read_matroid(const std::string& text);
nlohmann::json matroid_to_json(const Matroid& m, const std::optional<Ordering>& ordering = std::nullopt);

nlohmann::json to_json(const FhVectors& fh);
nlohmann::json to_json(const NbcReport& rep, bool timing = false);
nlohmann::json to_json(const SearchReport& rep, bool timing = false);
nlohmann::json to_json(const Matroid& m, const ThetaSystem& theta, const LsopValidation& check);

}  // namespace matroidlab
