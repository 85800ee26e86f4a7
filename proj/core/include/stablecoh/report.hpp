#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stablecoh/intpoly.hpp"

namespace stablecoh {

// Scalar cell for parameter lists and table rows.
using Value = std::variant<long long, std::string, bool, Coeff>;
std::string value_str(const Value& v);

using ParamList = std::vector<std::pair<std::string, Value>>;
std::string params_str(const ParamList& params);

enum class CheckStatus { pass, fail, unsupported };
const char* status_name(CheckStatus s);

// Outcome of one named verification sweep.  elapsed_ms stays in memory only:
// emitted output must be byte-identical across runs.
struct VerificationReport {
  std::string check;
  ParamList params;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;  // always set when status == fail
  double elapsed_ms = 0.0;
};

bool report_order(const VerificationReport& a, const VerificationReport& b);

// 0 when nothing failed, 1 otherwise (unsupported does not fail a run).
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace stablecoh
