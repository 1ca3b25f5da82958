#include "heseq/reference_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace heseq {

namespace {

// Recorded FNV-1a 64 of the vendored CSV bytes; guards against silent edits
// or corruption of the shipped reference data.
constexpr std::uint64_t kBundledChecksum = 0xf35deb37ffe5e412ull;

constexpr std::string_view kHeaderA = "z,symbol,e_exp_au,source";
constexpr std::string_view kHeaderB = "z,symbol,ie2e_ev,ie1e_ev,source";

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Splits into exactly `fields` comma-separated pieces; the last piece keeps
// any remaining commas (free-text provenance).
std::vector<std::string_view> split_fields(std::string_view line, std::size_t fields, int lineno) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k + 1 < fields; ++k) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos)
      throw validation_error("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(fields) + " comma-separated fields, got '" +
                             std::string(line) + "'");
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  out.push_back(line.substr(start));
  return out;
}

double parse_double_field(std::string_view field, const char* name, int lineno) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v))
    throw validation_error("line " + std::to_string(lineno) + ": field '" + name +
                           "' is not a finite number: '" + std::string(field) + "'");
  return v;
}

int parse_z_field(std::string_view field, int lineno) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw validation_error("line " + std::to_string(lineno) + ": field 'z' is not an integer: '" +
                           std::string(field) + "'");
  return v;
}

void validate_record(const IonRecord& rec, int lineno) {
  const std::string where = lineno > 0 ? "line " + std::to_string(lineno) + ": " : "";
  if (rec.z < 1 || rec.z > 118)
    throw validation_error(where + "z must lie in 1..118, got " + std::to_string(rec.z));
  if (rec.symbol.empty()) throw validation_error(where + "empty symbol");
  if (!std::isfinite(rec.e_exp) || rec.e_exp >= 0.0)
    throw validation_error(where + "e_exp must be negative, got " + std::to_string(rec.e_exp) +
                           " for z = " + std::to_string(rec.z));
  // More bound than the bare hydrogenic core, i.e. positive ionization energy.
  const double core = -0.5 * static_cast<double>(rec.z) * static_cast<double>(rec.z);
  if (rec.e_exp >= core)
    throw validation_error(where + "e_exp = " + std::to_string(rec.e_exp) + " for z = " +
                           std::to_string(rec.z) + " is not below the one-electron bound " +
                           std::to_string(core));
}

}  // namespace

ReferenceSet::ReferenceSet(std::vector<IonRecord> records) : records_(std::move(records)) {
  if (records_.empty()) throw validation_error("reference set is empty");
  std::stable_sort(records_.begin(), records_.end(),
                   [](const IonRecord& a, const IonRecord& b) { return a.z < b.z; });
  for (const auto& rec : records_) validate_record(rec, 0);
  for (std::size_t i = 1; i < records_.size(); ++i)
    if (records_[i].z == records_[i - 1].z)
      throw validation_error("duplicate z = " + std::to_string(records_[i].z) +
                             " in reference set");
}

const IonRecord& ReferenceSet::at_z(int z) const {
  for (const auto& rec : records_)
    if (rec.z == z) return rec;
  throw validation_error("no record with z = " + std::to_string(z) + " in reference set");
}

ReferenceSet parse_reference_csv(std::string_view text, const PhysicalConstants& pc) {
  pc.validate();

  std::vector<IonRecord> records;
  bool header_seen = false;
  bool schema_a = false;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = strip_cr(
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (is_blank_or_comment(line)) continue;

    if (!header_seen) {
      if (line == kHeaderA) {
        schema_a = true;
      } else if (line == kHeaderB) {
        schema_a = false;
      } else {
        throw schema_error("unknown CSV header '" + std::string(line) + "' (expected '" +
                           std::string(kHeaderA) + "' or '" + std::string(kHeaderB) + "')");
      }
      header_seen = true;
      continue;
    }

    IonRecord rec;
    if (schema_a) {
      const auto f = split_fields(line, 4, lineno);
      rec.z = parse_z_field(f[0], lineno);
      rec.symbol = std::string(f[1]);
      rec.e_exp = parse_double_field(f[2], "e_exp_au", lineno);
      rec.source = std::string(f[3]);
    } else {
      const auto f = split_fields(line, 5, lineno);
      rec.z = parse_z_field(f[0], lineno);
      rec.symbol = std::string(f[1]);
      const double ie2e = parse_double_field(f[2], "ie2e_ev", lineno);
      const double ie1e = parse_double_field(f[3], "ie1e_ev", lineno);
      rec.e_exp = -(ie2e + ie1e) / pc.hartree_ev;
      rec.source = std::string(f[4]);
    }
    validate_record(rec, lineno);
    records.push_back(std::move(rec));
  }

  if (!header_seen) throw schema_error("missing CSV header row");
  return ReferenceSet{std::move(records)};
}

std::string serialize_reference_csv(const ReferenceSet& refs) {
  std::ostringstream out;
  out << kHeaderA << '\n';
  char buf[40];
  for (const auto& rec : refs.records()) {
    std::snprintf(buf, sizeof buf, "%.17g", rec.e_exp);
    out << rec.z << ',' << rec.symbol << ',' << buf << ',' << rec.source << '\n';
  }
  return out.str();
}

namespace {

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot open reference file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ReferenceSet load_reference_file(const std::filesystem::path& path, const PhysicalConstants& pc) {
  return parse_reference_csv(read_file_bytes(path), pc);
}

std::filesystem::path bundled_data_path() {
#ifdef HESEQ_BUNDLED_DATA
  return std::filesystem::path{HESEQ_BUNDLED_DATA};
#else
  return std::filesystem::path{"data/he_sequence_nist.csv"};
#endif
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

ReferenceSet bundled_reference(const PhysicalConstants& pc) {
  const auto path = bundled_data_path();
  const std::string bytes = read_file_bytes(path);
  const std::uint64_t sum = fnv1a64(bytes);
  if (sum != kBundledChecksum) {
    char got[24], want[24];
    std::snprintf(got, sizeof got, "0x%016llx", static_cast<unsigned long long>(sum));
    std::snprintf(want, sizeof want, "0x%016llx", static_cast<unsigned long long>(kBundledChecksum));
    throw integrity_error("bundled reference data '" + path.string() + "' failed its checksum (" +
                          got + ", recorded " + want + ")");
  }
  return parse_reference_csv(bytes, pc);
}

}  // namespace heseq
