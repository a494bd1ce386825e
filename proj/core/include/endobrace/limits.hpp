#pragma once

#include <cstdint>
#include <random>

namespace endobrace {

inline constexpr std::uint64_t kDefaultSeed = 0xB1A5E;

// Exhaustive-vs-sampled switchover points for the |G|^2 / |G|^3 scans.
// Every sampled scan is driven by `seed`, so identical limits give
// identical results.
struct Limits {
  int exhaustive_cap = 64;             // pair/triple scans run in full up to this order
  std::int64_t samples = 1'000'000;    // sampled pairs (oracles) / triples (brace axioms)
  int braid_cap = 16;                  // braid relation checked on all |G|^3 triples up to here
  std::int64_t braid_samples = 100'000;
  int materialize_cap = 512;           // sigma/tau tables are stored up to this order
  int centralizer_cap = 24;            // brute-force centralizer comparison
  int iso_cap = 16;                    // brute-force isomorphism identification
  int assoc_cap = 256;                 // construction-time associativity scan
  std::int64_t assoc_samples = 1'000'000;
  int zoo_order_cap = 8192;
  std::uint64_t seed = kDefaultSeed;
};

// mt19937_64 plus explicit modular reduction: the standard pins the engine's
// output sequence, so streams are identical on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : rng_(seed) {}
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace endobrace
