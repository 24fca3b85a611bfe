#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mstd/fringe.hpp"
#include "mstd/intset.hpp"

namespace mstd {

// Counter-based random stream: the state is a pure function of
// (seed, sample index), so results never depend on how samples are
// distributed across workers.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();

    // True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p);

    // n uniform random bits packed into words (low bits first).
    std::vector<std::uint64_t> bits(std::uint64_t n);

  private:
    std::uint64_t state_;
};

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    std::int64_t r_max = 90;
    double p = 0.5;
    unsigned workers = 1;
};

void validate_search_config(const SearchConfig& cfg);

// Outcome of the randomized log-ratio hunt. wall_time_seconds is excluded
// from the canonical serialization so reports stay byte-for-byte
// reproducible for a fixed (seed, trials, workers).
struct SearchReport {
    SearchConfig config;
    std::optional<double> best_value;
    IntSet best_witness;
    std::uint64_t count_above_threshold = 0;
    std::uint64_t degenerate_skips = 0;
    double wall_time_seconds = 0.0;
};

// Threshold used by count_above_threshold: the previous record ratio.
inline constexpr double kLogRatioThreshold = 1.0208;

// Exhaustion guard for subset scans (2^n-scale enumerations).
inline constexpr std::int64_t kExhaustiveLimit = 24;

// Minimum cardinality over MSTD subsets of [0,n] (translation-anchored at
// min A = 0); nullopt if none exist. Requires n <= 24.
std::optional<std::int64_t> min_mstd_cardinality(std::int64_t n);

// All A with {0,n} in A inside [0,n] such that A and [0,n]\A are both MSTD.
// Requires n <= 24. Ordered by the subset's bitmask value.
std::vector<IntSet> exhaustive_bi_mstd(std::int64_t n);

// Fraction of uniformly random A inside [0,n] that are MSTD; deterministic
// for fixed (seed, trials) regardless of workers. Requires trials >= 1000.
double mstd_density(std::int64_t n, const SearchConfig& cfg);

// log|A+A| / log|A-A|; requires |A| >= 2.
double log_ratio(const IntSet& A);

// True iff the log ratio lies in [3/4, 4/3]; requires |A| >= 2.
bool ruzsa_bound_check(const IntSet& A);

// Builds {0} cup [k+1, n-k-1] cup (n-R) with k = 2*max(R), n = 3k+2 — the
// ambient set whose boundary is the sampled fringe R. Requires 0 in R and
// max R >= 1.
IntSet ratio_candidate(const IntSet& R);

// Random hunt for large log ratios: samples R inside [0, r_max] with 0
// forced and density p, evaluates ratio_candidate(R). Degenerate draws
// (R = {0}) are skipped and counted.
SearchReport search_log_ratio(const SearchConfig& cfg);

// Fraction of uniformly random A inside [0,n] whose |sA-dA| / |sigmaA-deltaA|
// lies strictly inside ((s+d-1)/(s+d), (s+d)/(s+d-1)). Empty draws count as
// outside. Requires trials >= 1000.
double ratio_window_fraction(std::int64_t n, const SdQuad& quad, const SearchConfig& cfg);

// 1 - ((r+1)^3 - (r+1)^2) / 2^(r+2); requires r >= 1.
double ap_probability_bound(std::int64_t r);

// 3*(3/4)^(k/2) / (2 - sqrt(3)); requires k >= 1.
double zhao_sum_bound(std::int64_t k);

// 8*(3/4)^(k+2) + (n+1)*(3/4)^((n-1)/3); requires k >= 1 and n > 2k.
double zhao_diff_bound(std::int64_t k, std::int64_t n);

// 6*(3/4)^(k/2) / (2 - sqrt(3)) = 2 * zhao_sum_bound(k); requires k >= 1.
double bi_rich_bound(std::int64_t k);

// log(5k+4) / log(4k+3) at k = 2r — the method's ceiling on the achievable
// log ratio when fringes are drawn from [0,r]; requires r >= 1.
double bound_2000_check(std::int64_t r);

} // namespace mstd
