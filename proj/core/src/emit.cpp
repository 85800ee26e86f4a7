#include "stablecoh/emit.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stablecoh {

namespace {

nlohmann::json json_of_value(const Value& v) {
  if (auto* i = std::get_if<long long>(&v)) return *i;
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  if (auto* b = std::get_if<bool>(&v)) return *b;
  const Coeff& c = std::get<Coeff>(v);
  // exact integers only: JSON numbers while they fit, decimal strings beyond
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

std::string emit_json(const Payload& p) {
  nlohmann::json root;
  root["check"] = p.check;
  nlohmann::json params = nlohmann::json::object();
  for (auto& [key, v] : p.params) params[key] = json_of_value(v);
  root["params"] = params;
  root["status"] = p.status;
  nlohmann::json data = nlohmann::json::array();
  for (auto& row : p.data) {
    nlohmann::json jrow = nlohmann::json::object();
    for (auto& [key, v] : row) jrow[key] = json_of_value(v);
    data.push_back(std::move(jrow));
  }
  root["data"] = data;
  if (p.window)
    root["window"] = {{"bound", p.window->bound}, {"hypothesis_ok", p.window->hypothesis_ok}};
  else
    root["window"] = nullptr;
  return root.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_csv(const Payload& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(p.columns[i]);
  os << "\n";
  for (auto& row : p.data) {
    for (size_t i = 0; i < p.columns.size(); ++i)
      os << (i ? "," : "") << csv_escape(value_str(row.at(p.columns[i])));
    os << "\n";
  }
  return os.str();
}

std::string latex_escape(const std::string& field) {
  std::string out;
  for (char ch : field) {
    if (ch == '_' || ch == '%' || ch == '&' || ch == '#') out += '\\';
    if (ch == '^') {
      out += "\\^{}";
      continue;
    }
    out += ch;
  }
  return out;
}

// degree/rank-shaped tables render as papers print Betti tables: one dense row
bool dense_shape(const Payload& p, std::string* value_key) {
  if (p.columns == std::vector<std::string>{"degree", "rank"}) {
    *value_key = "rank";
    return true;
  }
  if (p.columns == std::vector<std::string>{"coefficient", "degree"}) {
    *value_key = "coefficient";
    return true;
  }
  return false;
}

std::string emit_latex(const Payload& p) {
  std::ostringstream os;
  std::string value_key;
  if (dense_shape(p, &value_key)) {
    std::map<long long, std::string> by_degree;
    long long max_degree = 0;
    for (auto& row : p.data) {
      long long deg = std::get<long long>(row.at("degree"));
      by_degree[deg] = value_str(row.at(value_key));
      max_degree = std::max(max_degree, deg);
    }
    size_t width = p.data.empty() ? 1 : static_cast<size_t>(max_degree) + 1;
    os << "\\begin{tabular}{*{" << width << "}{r}}\n";
    for (size_t deg = 0; deg < width; ++deg) {
      auto it = by_degree.find(static_cast<long long>(deg));
      os << (deg ? " & " : "") << (it == by_degree.end() ? "0" : it->second);
    }
    os << " \\\\\n\\end{tabular}\n";
    return os.str();
  }
  os << "\\begin{tabular}{" << std::string(std::max<size_t>(p.columns.size(), 1), 'l') << "}\n";
  for (size_t i = 0; i < p.columns.size(); ++i)
    os << (i ? " & " : "") << latex_escape(p.columns[i]);
  os << " \\\\\n\\hline\n";
  for (auto& row : p.data) {
    for (size_t i = 0; i < p.columns.size(); ++i)
      os << (i ? " & " : "") << latex_escape(value_str(row.at(p.columns[i])));
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string emit_text(const Payload& p) {
  std::ostringstream os;
  os << "# check: " << p.check << "\n";
  if (!p.params.empty()) os << "# params: " << params_str(p.params) << "\n";
  os << "# status: " << p.status << "\n";
  if (p.window)
    os << "# window: bound=" << p.window->bound
       << " hypothesis_ok=" << (p.window->hypothesis_ok ? "true" : "false") << "\n";
  for (auto& note : p.notes) os << "# " << note << "\n";
  if (p.data.empty()) {
    os << "(no entries)\n";
    return os.str();
  }
  std::vector<size_t> widths;
  for (auto& col : p.columns) widths.push_back(col.size());
  for (auto& row : p.data)
    for (size_t i = 0; i < p.columns.size(); ++i)
      widths[i] = std::max(widths[i], value_str(row.at(p.columns[i])).size());
  auto pad = [&](const std::string& s, size_t i) {
    std::string out = s;
    if (i + 1 < widths.size()) out += std::string(widths[i] - s.size() + 2, ' ');
    return out;
  };
  for (size_t i = 0; i < p.columns.size(); ++i) os << pad(p.columns[i], i);
  os << "\n";
  for (auto& row : p.data) {
    for (size_t i = 0; i < p.columns.size(); ++i)
      os << pad(value_str(row.at(p.columns[i])), i);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::optional<Format> format_from_string(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  return std::nullopt;
}

std::string emit(Format format, const Payload& p) {
  for (auto& row : p.data) {
    if (row.size() != p.columns.size())
      throw std::logic_error("emit: row does not match the declared columns");
    for (auto& col : p.columns)
      if (!row.count(col)) throw std::logic_error("emit: row missing column " + col);
  }
  switch (format) {
    case Format::text: return emit_text(p);
    case Format::json: return emit_json(p);
    case Format::csv: return emit_csv(p);
    case Format::latex: return emit_latex(p);
  }
  throw std::logic_error("emit: unknown format");
}

}  // namespace stablecoh
