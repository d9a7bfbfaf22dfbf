#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace collabnet::csv {

// RFC 4180 reader: quoted fields, "" escapes, embedded commas and newlines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads one record. Returns false at end of input. `line` receives the
  // 1-based line number the record started on.
  bool next(std::vector<std::string>& fields, int& line);

 private:
  std::istream& in_;
  int line_ = 0;
};

std::string escape(std::string_view field);

// Shortest round-trip decimal form, deterministic across runs.
std::string format_double(double v);

std::vector<std::string> split_pipe(std::string_view s);

}  // namespace collabnet::csv
