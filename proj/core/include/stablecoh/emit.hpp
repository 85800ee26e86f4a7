#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablecoh/report.hpp"
#include "stablecoh/stablering.hpp"

namespace stablecoh {

enum class Format { text, json, csv, latex };
std::optional<Format> format_from_string(const std::string& name);

// One emittable result: metadata plus a rectangular table.  `columns` carries
// the schema in emission order (alphabetical, matching JSON key order); every
// row must have exactly those keys.  `notes` only shows up in text output.
struct Payload {
  std::string check;
  ParamList params;
  std::string status;
  std::vector<std::string> columns;
  std::vector<std::map<std::string, Value>> data;
  std::optional<StableWindow> window;
  std::vector<std::string> notes;
};

// Render the payload.  JSON objects have the fixed shape
// {check, data, params, status, window}; CSV is the data table with a header
// row matching the JSON row keys; LaTeX renders degree/rank tables as a dense
// one-row tabular and anything else as a tabular with a header.
std::string emit(Format format, const Payload& payload);

}  // namespace stablecoh
