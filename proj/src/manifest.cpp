#include "psilab/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include <json.hpp>

namespace psi {

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

run_manifest make_manifest(const std::string& config_bytes, uint64_t seed,
                           const std::string& subcommand) {
  run_manifest m;
  m.config_hash = hex64(fnv1a64(config_bytes));
  m.seed = seed;
  m.subcommand = subcommand;
  m.timestamp = iso8601_utc_now();
  return m;
}

std::string run_manifest::to_json() const {
  nlohmann::json j;
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  j["tool_version"] = tool_version;
  j["subcommand"] = subcommand;
  j["timestamp"] = timestamp;
  return j.dump(2);
}

}  // namespace psi
