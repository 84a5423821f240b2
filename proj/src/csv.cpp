#include "sgsim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace sgsim {

namespace {
constexpr const char* kChecksumPrefix = "# checksum: fnv1a64:";
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void CsvWriter::line(const std::string& s) {
  content_ += s;
  content_ += '\n';
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  if (header_written_) throw std::logic_error("metadata must precede the column header");
  line("# " + key + ": " + value);
}

void CsvWriter::meta(const std::string& key, std::uint64_t value) {
  meta(key, std::to_string(value));
}

void CsvWriter::meta(const std::string& key, double value) { meta(key, format_double(value)); }

void CsvWriter::header(const std::vector<std::string>& columns) {
  if (header_written_) throw std::logic_error("column header already written");
  if (columns.empty()) throw std::logic_error("column header must not be empty");
  std::string s;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) s += ',';
    s += columns[i];
  }
  line(s);
  arity_ = columns.size();
  header_written_ = true;
}

void CsvWriter::row(const std::vector<double>& values) {
  if (!header_written_) throw std::logic_error("row written before column header");
  if (values.size() != arity_) throw std::logic_error("row arity does not match header");
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_double(values[i]);
  }
  line(s);
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

std::string CsvWriter::finish() const {
  if (!header_written_) throw std::logic_error("table finished without a column header");
  char sum[17];
  std::snprintf(sum, sizeof(sum), "%016llx",
                static_cast<unsigned long long>(fnv1a64(content_)));
  return std::string(kChecksumPrefix) + sum + "\n" + content_;
}

void CsvWriter::finish_to_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << finish();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string verify_table(const std::string& bytes) {
  const std::size_t nl = bytes.find('\n');
  if (nl == std::string::npos) throw std::runtime_error("not a table: no line break found");
  const std::string first = bytes.substr(0, nl);
  const std::string prefix = kChecksumPrefix;
  if (first.rfind(prefix, 0) != 0)
    throw std::runtime_error("missing checksum line (expected '" + prefix + "...')");
  const std::string claimed = first.substr(prefix.size());
  if (claimed.size() != 16 || claimed.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw std::runtime_error("malformed checksum value '" + claimed + "'");
  char actual[17];
  std::snprintf(actual, sizeof(actual), "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(std::string_view(bytes).substr(nl + 1))));
  if (claimed != actual)
    throw std::runtime_error("checksum mismatch: header says " + claimed + ", content hashes to " +
                             actual);
  return claimed;
}

}  // namespace sgsim
