#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "heseq/constants.hpp"
#include "heseq/types.hpp"

namespace heseq {

// One two-electron system with its experimental total ground-state energy.
struct IonRecord {
  int z = 0;            // integer nuclear charge, 1..118
  std::string symbol;   // e.g. "H-", "He", "Li+"
  double e_exp = 0.0;   // total two-electron energy, Hartree, negative
  std::string source;   // provenance note
};

// Immutable, strictly increasing in z, non-empty.
class ReferenceSet {
public:
  explicit ReferenceSet(std::vector<IonRecord> records);

  const std::vector<IonRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  const IonRecord& at_z(int z) const;  // validation error if absent

private:
  std::vector<IonRecord> records_;
};

// Two accepted CSV schemas, detected from the header row:
//   A: z,symbol,e_exp_au,source          total energy in Hartree
//   B: z,symbol,ie2e_ev,ie1e_ev,source   successive ionization energies in eV,
//      combined as e_exp = -(ie2e_ev + ie1e_ev) / hartree_ev
// '#'-prefixed comment lines are allowed, LF or CRLF, '.' decimal point.
ReferenceSet parse_reference_csv(std::string_view text, const PhysicalConstants& pc = {});

// Schema A emission with round-trip-exact energies.
std::string serialize_reference_csv(const ReferenceSet& refs);

// Parses a user-supplied file (no integrity check).
ReferenceSet load_reference_file(const std::filesystem::path& path,
                                 const PhysicalConstants& pc = {});

// The vendored NIST-derived set covering z = 1..10, integrity-guarded by a
// recorded checksum of the file bytes.
ReferenceSet bundled_reference(const PhysicalConstants& pc = {});

// Default location of the vendored CSV (configured at build time).
std::filesystem::path bundled_data_path();

// FNV-1a 64-bit, used for the vendored-file integrity check.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace heseq
