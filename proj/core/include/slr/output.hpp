#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "slr/errors.hpp"

namespace slr {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

// FNV-1a 64-bit over raw bytes, as a fixed-width hex string.
std::string fnv1a_hex(const std::string& bytes);

} // namespace slr
