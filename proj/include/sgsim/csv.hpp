#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sgsim {

// shortest round-trip decimal rendering, locale independent
std::string format_double(double x);

std::string read_text_file(const std::string& path);

std::uint64_t fnv1a64(std::string_view bytes);

// CSV tables with a '#'-prefixed provenance header. The first line carries a
// checksum over every byte that follows it, so emitted tables can be
// re-verified after the fact. Output is a pure function of the written
// values (no timestamps, no host details): identical runs serialize to
// byte-identical tables.
class CsvWriter {
 public:
  void meta(const std::string& key, const std::string& value);
  void meta(const std::string& key, std::uint64_t value);
  void meta(const std::string& key, double value);

  void header(const std::vector<std::string>& columns);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);

  // serialized table: checksum line, meta lines, column header, data rows
  std::string finish() const;
  void finish_to_file(const std::string& path) const;

 private:
  void line(const std::string& s);

  std::string content_;
  std::size_t arity_ = 0;
  bool header_written_ = false;
};

// Validates the leading checksum line of a serialized table against the
// bytes that follow it. Throws std::runtime_error describing the problem;
// returns the confirmed checksum in hex on success.
std::string verify_table(const std::string& bytes);

}  // namespace sgsim
