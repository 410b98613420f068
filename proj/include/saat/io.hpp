#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace saat {

// Shortest round-trip decimal form of a double ("0.1144", "3600", "1e-09").
// Every number that reaches an output file goes through these two overloads
// so that equal values always serialize to equal bytes.
std::string format_number(double value);
std::string format_number(long long value);

// FNV-1a 64-bit digest, reported as 16 lowercase hex digits. Used for input
// fingerprints in run manifests; not a cryptographic hash.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path &path);

// Writes via a sibling ".tmp" file plus rename, so a failed run never leaves
// a partially written artifact at the target path.
void write_file_atomic(const std::filesystem::path &path,
                       std::string_view content);

nlohmann::json load_json_file(const std::filesystem::path &path);

// Splits one CSV line on commas. Fields never contain commas or quotes in
// any schema this toolkit emits, so no quoting rules are needed.
std::vector<std::string> split_csv_line(const std::string &line);

std::vector<std::string> split_lines(const std::string &text);

}  // namespace saat
