#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "modrep/cde.hpp"
#include "modrep/characters.hpp"
#include "modrep/group.hpp"
#include "modrep/tower.hpp"

namespace modrep {

inline constexpr const char* kArtifactVersion = "0.1.0";

using Json = nlohmann::json;

/// Input record for a group: either a named family ({"family":"sl2","p":..,
/// "n":..}) or explicit generators ({"modulus":..,"dim":..,"generators":..}).
struct GroupSpec {
  bool is_family = false;
  std::string family;
  std::int64_t p = 0;
  int n = 0;
  std::int64_t modulus = 0;
  int dim = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> generators;

  static GroupSpec parse(const Json& j);
  Json canonical() const;
  FiniteGroup build(std::int64_t cap = 1000000) const;
};

// ---- serialization helpers ------------------------------------------------

/// Integers serialize as JSON numbers while they fit in 2^53-1, as decimal
/// strings beyond that.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
Json cyclotomic_to_json(const Cyclotomic& v);

std::string digest_hex(const std::string& data);

// ---- result cache ----------------------------------------------------------

/// Advisory payload cache; entries are keyed by input digest and written
/// atomically (tmp file + rename). Unreadable entries are recomputed.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::string dir_;
};

/// --cache-dir flag if given, else MODREP_CACHE_DIR, else ~/.cache/modrep.
std::string resolve_cache_dir(const std::optional<std::string>& flag);

// ---- command payloads ------------------------------------------------------

Json payload_chartable(const GroupSpec& spec);
Json payload_brauertable(const GroupSpec& spec, std::int64_t p, int field_degree,
                         std::uint64_t seed);
Json payload_decomp(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed);
Json payload_cartan(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed);
Json payload_blocks(const GroupSpec& spec, std::int64_t p, int field_degree,
                    std::uint64_t seed);
Json payload_tower(std::int64_t p, int depth, int n_max, std::uint64_t seed);

/// "MATRIX:i,j:delta" against one of the expected matrices C1, C2, C3, B.
struct Perturbation {
  std::string matrix;
  size_t row = 0, col = 0;
  std::int64_t delta = 0;
  static Perturbation parse(const std::string& s);
};

/// Reruns the worked example end to end and compares every printed matrix
/// and determinant. The optional perturbation shifts one expected entry (a
/// negative control for the test harness). all_pass reports the outcome.
Json payload_verify_paper_example(std::uint64_t seed,
                                  const std::optional<Perturbation>& perturb,
                                  bool& all_pass);

// ---- envelopes -------------------------------------------------------------

struct Envelope {
  std::string command;
  Json input;
  std::string input_digest;
  Json payload;
  std::int64_t timing_ms = 0;
  bool cache_hit = false;
  Json to_json() const;
};

/// Computes (or fetches) a command payload and wraps it. The cache key is
/// (command, canonical input, artifact version).
Envelope run_command(const std::string& command, const Json& canonical_input,
                     const ResultCache& cache,
                     const std::function<Json()>& compute);

}  // namespace modrep
