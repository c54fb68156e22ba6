#pragma once

// Trace files: `#`-prefixed metadata lines followed by a `t,p1,p2,p3` CSV
// table, or the same content as JSON. Numbers use the shortest decimal
// representation that parses back to the identical double.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trilevel::cli {

enum class TraceFormat { Csv, Json };

TraceFormat parse_format(const std::string& name);  // throws std::invalid_argument
std::string to_string(TraceFormat format);

struct TraceData {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<double> t, p1, p2, p3;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);

void write_csv(const TraceData& data, std::ostream& out);
void write_json(const TraceData& data, std::ostream& out);
void write_trace(const TraceData& data, TraceFormat format, std::ostream& out);

/// Writes to a temporary file next to `path`, then renames it into place.
/// Throws IoError on failure.
void write_trace_file(const TraceData& data, TraceFormat format,
                      const std::filesystem::path& path);

/// Same, for arbitrary text content.
void write_text_file_atomic(const std::string& content, const std::filesystem::path& path);

/// Parses a CSV trace produced by write_csv. Throws IoError.
TraceData read_csv(std::istream& in);
TraceData read_csv_file(const std::filesystem::path& path);

}  // namespace trilevel::cli
