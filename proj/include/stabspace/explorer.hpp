#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "stabspace/stabilizer.hpp"

// Exhaustive enumeration of small stabilizers with generator phases fixed
// to zero; commutation exponents and everything derived from them ignore
// phases, and any commuting independent phase-0 tuple of valid orders is a
// stabilizer as it stands. Canonical mode walks reduced-row-echelon
// symplectic matrices, so each stabilizer group appears exactly once; raw
// mode walks all k-tuples and deduplicates by the row-reduced row space.

namespace stabspace::explorer {

struct ScanConfig {
    int d = 2;
    int n = 2;
    int k = 1;
    bool canonical = true;
    std::uint64_t budget = 1'000'000'000; // candidates examined
    int jobs = 1;
};

struct ScanReport {
    std::uint64_t candidates = 0; // matrices or tuples examined
    std::uint64_t groups = 0;     // distinct valid stabilizer groups
    std::uint64_t ge_count = 0;
    std::map<int, std::uint64_t> dimk_histogram; // over valid groups
    std::vector<std::string> counterexamples;    // serialized generator sets
    bool truncated = false;
};

// A proven statement failed on a concrete instance; carries the instance.
class TheoremViolation : public std::logic_error {
  public:
    TheoremViolation(const std::string &what_failed, std::string serialized);

    const std::string &serialized_set() const { return set_; }

  private:
    std::string set_;
};

// Work is split into shards (pivot-column combinations in canonical mode)
// whose candidate counts are known upfront; shards run whole or not at
// all, so reports are identical for any job count.
int shard_count(const ScanConfig &config);
std::uint64_t shard_candidates(const ScanConfig &config, int shard);

struct EnumStats {
    std::uint64_t candidates = 0;
    bool truncated = false;
};

EnumStats enumerate_shard(const ScanConfig &config, int shard, const std::function<void(const GeneratorSet &)> &on_valid);
EnumStats enumerate(const ScanConfig &config, const std::function<void(const GeneratorSet &)> &on_valid);

// Checks dim K >= ceil((N-1)/(d-1)) on every genuinely entangled group.
// A k = 2 failure contradicts a proven theorem and throws; k >= 3
// candidates are re-verified through the pairwise commutation route (and
// a dense product-state search when the dimension allows) before being
// recorded as counterexamples.
ScanReport scan_conjecture1(const ScanConfig &config);
ScanReport scan_conjecture1_range(const ScanConfig &config, int shard_begin, int shard_end);

// d = 2 only: checks GE <=> dim K = N-1 over all stabilizers with
// k = 1..N generators; any violation throws.
ScanReport scan_theorem2(int n, std::uint64_t budget = 1'000'000'000, int jobs = 1);

void merge(ScanReport &into, const ScanReport &from);

std::string to_json_string(const ScanReport &report, const std::string &kind, const ScanConfig &config);

} // namespace stabspace::explorer
