#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mrispeech {

/// Header plus numeric rows. Every row has header.size() fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column by header name; throws ParameterError if absent.
  std::vector<double> column(const std::string& name) const;
};

/// Parses a comma-separated file with one header line and numeric rows.
/// Blank lines are skipped. Malformed rows raise ParseError naming the
/// 1-based line number.
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(const std::string& text, const std::string& source = "<memory>");

void write_csv(const CsvTable& table, const std::filesystem::path& path);
std::string format_csv(const CsvTable& table);

}  // namespace mrispeech
