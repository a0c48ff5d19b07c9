#include "slr/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace slr {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for writing: " + path.string());
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw io_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hexd = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hexd[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf, 16);
}

} // namespace slr
