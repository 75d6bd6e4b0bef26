#pragma once

#include <cstdint>
#include <string>

namespace psi {

inline constexpr const char* kToolVersion = "0.1.0";

// Provenance record attached to every output file.
struct run_manifest {
  std::string config_hash;  // hex FNV-1a of the config bytes
  uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::string subcommand;
  std::string timestamp;  // ISO-8601 UTC

  std::string to_json() const;
};

uint64_t fnv1a64(const std::string& bytes);
std::string hex64(uint64_t v);
std::string iso8601_utc_now();

run_manifest make_manifest(const std::string& config_bytes, uint64_t seed,
                           const std::string& subcommand);

}  // namespace psi
