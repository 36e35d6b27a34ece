#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace comblab::cli {

enum class Format { csv, json };

// Rows of string cells under a fixed header. CSV and JSON carry the same
// fields; JSON is an array of objects keyed by column name.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells);
  void write(std::ostream& out, Format format) const;

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t seed = 0;
  std::string version;
  double seconds = 0.0;
};

// Writes the table to `out_path` (stdout when empty) and the manifest to
// `<out_path>.manifest.json` (stderr when empty).
void emit(const Table& table, Format format, const std::string& out_path, const RunManifest& manifest);

std::string csv_escape(const std::string& cell);

}  // namespace comblab::cli
