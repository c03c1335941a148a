#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mrispeech::cli {

/// What is needed to repeat a run: the command line, the effective
/// configuration and the SHA-256 of every input file.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json config = nlohmann::json::object();
  std::map<std::string, std::string> input_digests;  // path -> hex digest
  std::optional<std::uint64_t> seed;
  std::string version;
  /// From SOURCE_DATE_EPOCH when set; left empty otherwise so reports
  /// stay byte-identical between runs.
  std::optional<std::string> timestamp;

  void add_input(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

/// ISO-8601 UTC time of SOURCE_DATE_EPOCH, if the variable holds an integer.
std::optional<std::string> source_date_timestamp();

const char* tool_version();

}  // namespace mrispeech::cli
