#include "rlab/records.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

constexpr const char* kHeader = "quantity,N,k,p,value,c_small,C_k,rho,tol,seed,timestamp";

double parse_double(const std::string& field, int line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw invalid_input("record file line " + std::to_string(line_no) +
                        ": bad numeric field '" + field + "'");
  return v;
}

long long parse_int(const std::string& field, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw invalid_input("record file line " + std::to_string(line_no) +
                        ": bad integer field '" + field + "'");
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string iso_timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void persist(const std::vector<ExperimentRecord>& records, const std::string& path,
             bool append) {
  bool fresh = !append || !std::filesystem::exists(path) ||
               std::filesystem::file_size(path) == 0;
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw invalid_input("cannot open record file for writing: " + path);
  if (fresh) out << kHeader << "\n";
  for (const auto& r : records) {
    out << r.quantity << ',' << r.N << ',' << r.k << ','
        << (r.p ? format_double(*r.p) : std::string()) << ',' << format_double(r.value)
        << ',' << format_double(r.settings.c_small) << ','
        << format_double(r.settings.block_fraction) << ','
        << format_double(r.settings.rho) << ',' << format_double(r.settings.tol) << ','
        << r.settings.seed << ',' << r.timestamp << "\n";
  }
  if (!out) throw invalid_input("write failed for record file: " + path);
}

std::vector<ExperimentRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open record file: " + path);
  std::vector<ExperimentRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line == kHeader) continue;
    auto fields = split_csv(line);
    if (fields.size() != 11)
      throw invalid_input("record file line " + std::to_string(line_no) + ": expected 11 fields, got " +
                          std::to_string(fields.size()));
    ExperimentRecord r;
    r.quantity = fields[0];
    r.N = int(parse_int(fields[1], line_no));
    r.k = int(parse_int(fields[2], line_no));
    if (!fields[3].empty()) r.p = parse_double(fields[3], line_no);
    r.value = parse_double(fields[4], line_no);
    r.settings.c_small = parse_double(fields[5], line_no);
    r.settings.block_fraction = parse_double(fields[6], line_no);
    r.settings.rho = parse_double(fields[7], line_no);
    r.settings.tol = parse_double(fields[8], line_no);
    r.settings.seed = std::uint64_t(parse_int(fields[9], line_no));
    r.timestamp = fields[10];
    records.push_back(std::move(r));
  }
  return records;
}

std::string records_to_json(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << "  {\"quantity\":\"" << r.quantity << "\",\"N\":" << r.N << ",\"k\":" << r.k
        << ",\"p\":" << (r.p ? format_double(*r.p) : "null")
        << ",\"value\":" << format_double(r.value)
        << ",\"c_small\":" << format_double(r.settings.c_small)
        << ",\"C_k\":" << format_double(r.settings.block_fraction)
        << ",\"rho\":" << format_double(r.settings.rho)
        << ",\"tol\":" << format_double(r.settings.tol) << ",\"seed\":" << r.settings.seed
        << ",\"timestamp\":\"" << r.timestamp << "\"}";
    out << (i + 1 < records.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

}  // namespace rlab
