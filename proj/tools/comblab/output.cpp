#include "output.hpp"

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "comblab/errors.hpp"

namespace comblab::cli {

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw InternalError("table row has " + std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(cells));
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void Table::write(std::ostream& out, Format format) const {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << csv_escape(columns_[i]);
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = row[i];
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void emit(const Table& table, Format format, const std::string& out_path, const RunManifest& manifest) {
  nlohmann::ordered_json m;
  m["command"] = manifest.command;
  m["arguments"] = manifest.arguments;
  m["seed"] = manifest.seed;
  m["version"] = manifest.version;
  m["wall_seconds"] = manifest.seconds;

  if (out_path.empty()) {
    table.write(std::cout, format);
    std::cout.flush();
    std::cerr << m.dump() << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  table.write(out, format);
  std::ofstream mf(out_path + ".manifest.json");
  if (!mf) throw UsageError("cannot open manifest file '" + out_path + ".manifest.json'");
  mf << m.dump(2) << '\n';
}

}  // namespace comblab::cli
