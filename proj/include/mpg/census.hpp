#pragma once

// Ground-truth enumeration of M-C4s and M-P10s, and brute-force checkers for
// the counting statements about them. Enumeration never uses the crossing
// graph: every 5-subset of matching edges is tested directly.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

/// All M-P10s sorted lexicographically. `jobs` > 1 splits the subset space
/// by first element across threads; output does not depend on `jobs`.
std::vector<PetersenWitness> enumerate_m_p10(const Mpg& g, int jobs = 1);

/// count[i] = number of M-P10s using matching edge i.
std::vector<int> count_per_edge(const Mpg& g, std::span<const PetersenWitness> witnesses);
std::vector<int> count_per_edge(const Mpg& g);

struct ZhangVerdict {
  bool ok = false;
  int c4_count = 0;
  int p10_count = 0;
};

/// ok iff >= 2 M-C4s or >= 1 M-P10.
ZhangVerdict check_zhang(const Mpg& g);
ZhangVerdict check_zhang(int c4_count, int p10_count);

struct LowerBoundVerdict {
  bool applicable = false;  // n >= 40 and no M-C4
  bool ok = true;           // vacuously true when not applicable
  int n = 0;
  int c4_count = 0;
  int p10_count = 0;
  int bound = 0;  // n/2 - 4
};

LowerBoundVerdict check_lower_bound(const Mpg& g);
LowerBoundVerdict check_lower_bound(const Mpg& g, int c4_count, int p10_count);

enum class ReplaceBranch { SharedWitness, SwapEquivalence, None };

struct ReplaceVerdict {
  bool ok = false;
  ReplaceBranch branch = ReplaceBranch::None;
  std::optional<PetersenWitness> shared;          // branch (i)
  std::optional<std::array<int, 4>> counterexample;  // failing F when !ok
};

/// Either an M-P10 holds both a and b, or for every 4-set F avoiding a, b:
/// F + a is an M-P10 iff F + b is. Throws Error{IndexOutOfRange} if a == b.
ReplaceVerdict check_replace(const Mpg& g, int a, int b);

struct RedrawingVerdict {
  bool ok = true;
  int clause = 0;  // 1 or 2 when violated
  int x = -1;
  int y = -1;
};

/// (i)  x ~ a in H_b  iff  x ~ b in H_a
/// (ii) x ~ y in H_b  iff  |{bx, by, xy} & H_a| is odd
RedrawingVerdict check_redrawing(const Mpg& g, int a, int b);

struct CensusReport {
  std::string instance_id;
  int m = 0;
  std::vector<FourCycle> c4;
  std::vector<PetersenWitness> p10;
  std::vector<int> per_edge;
  bool zhang_ok = false;
  bool lower_bound_applicable = false;
  bool lower_bound_ok = true;
};

CensusReport census(const Mpg& g, int jobs = 1);

// --- scans and sampling ----------------------------------------------------

struct ScanRow {
  std::int64_t instance_index = 0;  // lexicographic rank of sigma
  int c4_count = 0;
  int p10_count = 0;
  int violations = 0;
};

struct ScanViolation {
  std::int64_t instance_index = 0;
  std::string instance_id;
  int edge = -1;  // -1 when not edge specific
  std::string what;
};

struct ScanReport {
  int m = 0;
  std::int64_t instances = 0;
  std::int64_t witness_runs = 0;
  std::int64_t zhang_ok = 0;
  std::vector<ScanRow> rows;
  std::vector<ScanViolation> violations;
};

inline constexpr int kMaxScanM = 8;

/// Every sigma in S_m: check_zhang, and find_p10_through on every edge that
/// lies on all M-C4s (soundness + membership in the census). 3 <= m <= 8,
/// otherwise Error{OutOfScanRange}.
ScanReport exhaustive_scan(int m, int jobs = 1);

/// k-th permutation of {0..m-1} in lexicographic order.
std::vector<int> unrank_permutation(int m, std::int64_t rank);

/// SplitMix64: counter-based, so stream i of seed s is reproducible alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Uniform sigma; with require_c4_free, rejection-samples up to max_attempts
/// draws. Throws Error{ExhaustedAttempts}.
Mpg random_instance(int m, std::uint64_t seed, bool require_c4_free = false,
                    std::int64_t max_attempts = 100000);

}  // namespace mpg
