#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bdom/graph.hpp"
#include "bdom/pattern_engine.hpp"

namespace bdom::cli {

enum class Format { text, json, csv };

/// One command's output in all three encodings; csv_header may be left empty
/// to fall back to the top-level scalar fields of `json`.
struct Report {
  nlohmann::ordered_json json = nlohmann::ordered_json::object();
  std::string text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = 0;
};

std::string render(const Report& report, Format format);

std::string csv_escape(const std::string& field);

/// Receptions laid out on the x/y plane for 2D labels (y grows upward,
/// broadcasts marked with '*'); one line per vertex otherwise.
std::string reception_grid(const FiniteGraph& g, const std::vector<std::int64_t>& receptions,
                           const std::vector<int>& broadcasts);

/// Rows y = t-1 .. -(t-1) and a Sum row, columns 0..d-1.
std::string tower_table_text(const ReceptionProfile& profile);

}  // namespace bdom::cli
