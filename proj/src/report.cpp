#include "report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bdom::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line + "\n";
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::json:
      return report.json.dump(2) + "\n";
    case Format::text: {
      std::string s = report.text;
      if (!s.empty() && s.back() != '\n') s += '\n';
      return s;
    }
    case Format::csv: {
      if (!report.csv_header.empty()) {
        std::string s = join_csv(report.csv_header);
        for (const auto& row : report.csv_rows) s += join_csv(row);
        return s;
      }
      std::vector<std::string> header, row;
      for (const auto& [key, value] : report.json.items()) {
        if (value.is_structured()) continue;
        header.push_back(key);
        row.push_back(scalar_text(value));
      }
      return join_csv(header) + join_csv(row);
    }
  }
  return {};
}

std::string reception_grid(const FiniteGraph& g, const std::vector<std::int64_t>& receptions,
                           const std::vector<int>& broadcasts) {
  const auto cell = [&](int v) {
    std::string s = std::to_string(receptions[static_cast<std::size_t>(v)]);
    if (std::binary_search(broadcasts.begin(), broadcasts.end(), v)) s += '*';
    return s;
  };
  std::ostringstream out;
  const int n = g.vertex_count();
  const std::size_t dim = n > 0 ? g.label(0).size() : 0;
  if (dim != 1 && dim != 2) {
    for (int v = 0; v < n; ++v) out << format_label(g.label(v)) << ' ' << cell(v) << '\n';
    return out.str();
  }

  std::map<std::pair<int, int>, int> at;  // (y, x) -> vertex
  int min_x = g.label(0)[0], max_x = min_x;
  int min_y = dim == 2 ? g.label(0)[1] : 0, max_y = min_y;
  for (int v = 0; v < n; ++v) {
    const int x = g.label(v)[0];
    const int y = dim == 2 ? g.label(v)[1] : 0;
    at[{y, x}] = v;
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  std::size_t width = 3;
  for (int v = 0; v < n; ++v) width = std::max(width, cell(v).size() + 1);

  out << pad_left("y\\x", 4);
  for (int x = min_x; x <= max_x; ++x) out << pad_left(std::to_string(x), width);
  out << '\n';
  for (int y = max_y; y >= min_y; --y) {
    out << pad_left(dim == 2 ? std::to_string(y) : "", 4);
    for (int x = min_x; x <= max_x; ++x) {
      const auto it = at.find({y, x});
      out << pad_left(it == at.end() ? "." : cell(it->second), width);
    }
    out << '\n';
  }
  return out.str();
}

std::string tower_table_text(const ReceptionProfile& profile) {
  std::size_t width = 2;
  for (auto v : profile.receptions) width = std::max(width, std::to_string(v).size() + 1);
  width = std::max(width, std::to_string(profile.receptions.size()).size() + 1);
  std::ostringstream out;
  out << pad_left("", 4) << " |";
  for (std::size_t i = 0; i < profile.receptions.size(); ++i) out << pad_left(std::to_string(i), width);
  out << '\n' << std::string(6 + width * profile.receptions.size(), '-') << '\n';
  for (const auto& row : profile.rows) {
    out << pad_left(std::to_string(row.y), 4) << " |";
    for (auto v : row.values) out << pad_left(std::to_string(v), width);
    out << '\n';
  }
  out << std::string(6 + width * profile.receptions.size(), '-') << '\n';
  out << pad_left("Sum", 4) << " |";
  for (auto v : profile.receptions) out << pad_left(std::to_string(v), width);
  out << '\n';
  return out.str();
}

}  // namespace bdom::cli
