#include "stablecoh/report.hpp"

#include <sstream>

namespace stablecoh {

std::string value_str(const Value& v) {
  if (auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<Coeff>(v).str();
}

std::string params_str(const ParamList& params) {
  std::ostringstream os;
  bool first = true;
  for (auto& [key, v] : params) {
    if (!first) os << " ";
    first = false;
    os << key << "=" << value_str(v);
  }
  return os.str();
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unsupported: return "unsupported";
  }
  return "?";
}

bool report_order(const VerificationReport& a, const VerificationReport& b) {
  if (a.check != b.check) return a.check < b.check;
  return a.params < b.params;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports)
    if (r.status == CheckStatus::fail) return 1;
  return 0;
}

}  // namespace stablecoh
