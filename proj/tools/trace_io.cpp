#include "trace_io.hpp"

#include <unistd.h>

#include <array>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trilevel::cli {

namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw IoError("malformed number '" + std::string(text) + "' in trace");
  return value;
}

std::filesystem::path temp_path_for(const std::filesystem::path& path) {
  static std::atomic<unsigned long> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  return tmp;
}

}  // namespace

TraceFormat parse_format(const std::string& name) {
  if (name == "csv") return TraceFormat::Csv;
  if (name == "json") return TraceFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

std::string to_string(TraceFormat format) { return format == TraceFormat::Csv ? "csv" : "json"; }

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw IoError("cannot format number");
  return std::string(buf.data(), ptr);
}

void write_csv(const TraceData& data, std::ostream& out) {
  for (const auto& [key, value] : data.metadata) out << "# " << key << '=' << value << '\n';
  out << "t,p1,p2,p3\n";
  for (std::size_t k = 0; k < data.t.size(); ++k)
    out << format_double(data.t[k]) << ',' << format_double(data.p1[k]) << ','
        << format_double(data.p2[k]) << ',' << format_double(data.p3[k]) << '\n';
}

void write_json(const TraceData& data, std::ostream& out) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : data.metadata) meta[key] = value;
  doc["metadata"] = meta;
  doc["columns"] = {"t", "p1", "p2", "p3"};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < data.t.size(); ++k)
    rows.push_back({data.t[k], data.p1[k], data.p2[k], data.p3[k]});
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

void write_trace(const TraceData& data, TraceFormat format, std::ostream& out) {
  if (format == TraceFormat::Csv)
    write_csv(data, out);
  else
    write_json(data, out);
}

void write_text_file_atomic(const std::string& content, const std::filesystem::path& path) {
  const std::filesystem::path tmp = temp_path_for(path);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move trace into '" + path.string() + "': " + ec.message());
  }
}

void write_trace_file(const TraceData& data, TraceFormat format,
                      const std::filesystem::path& path) {
  std::ostringstream buffer;
  write_trace(data, format, buffer);
  write_text_file_atomic(buffer.str(), path);
}

TraceData read_csv(std::istream& in) {
  TraceData data;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_seen && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw IoError("metadata line without '=': " + line);
      data.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!header_seen) {
      if (line != "t,p1,p2,p3") throw IoError("expected header 't,p1,p2,p3', got '" + line + "'");
      header_seen = true;
      continue;
    }
    std::array<double, 4> row{};
    std::size_t start = 0;
    for (std::size_t col = 0; col < 4; ++col) {
      const std::size_t comma = col < 3 ? line.find(',', start) : line.size();
      if (comma == std::string::npos) throw IoError("row with fewer than 4 columns: " + line);
      row[col] = parse_double(std::string_view(line).substr(start, comma - start));
      start = comma + 1;
    }
    data.t.push_back(row[0]);
    data.p1.push_back(row[1]);
    data.p2.push_back(row[2]);
    data.p3.push_back(row[3]);
  }
  if (!header_seen) throw IoError("trace has no header line");
  return data;
}

TraceData read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_csv(in);
}

}  // namespace trilevel::cli
