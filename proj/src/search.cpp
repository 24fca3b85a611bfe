#include "mstd/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

namespace mstd {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_exhaustive_guard(std::int64_t n) {
    if (n < 0) {
        throw parameter_error("exhaustive scan: n must be nonnegative");
    }
    if (n > kExhaustiveLimit) {
        throw parameter_error("exhaustive scan: n = " + std::to_string(n) +
                              " exceeds the guard " + std::to_string(kExhaustiveLimit));
    }
}

// |A+A| - |A-A| for a subset of [0,63] encoded as a bitmask with bit 0 set.
// Sums and differences both live in [0, 2*top], so top <= 31 keeps every
// intermediate inside one word.
std::int64_t mask_excess(std::uint64_t a) {
    const int top = 63 - std::countl_zero(a);
    std::uint64_t sums = 0;
    std::uint64_t diffs = 0;
    std::uint64_t t = a;
    while (t != 0) {
        const int b = std::countr_zero(t);
        t &= t - 1;
        sums |= a << b;
        diffs |= a << (top - b); // A + (top - A) = A - A shifted by +top
    }
    return std::popcount(sums) - std::popcount(diffs);
}

IntSet mask_to_set(std::uint64_t mask) {
    std::vector<std::int64_t> vals;
    while (mask != 0) {
        vals.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return IntSet::from_values(vals);
}

// Runs fn(trial_index) over [0, trials) on cfg.workers threads. fn must be
// pure per index; determinism comes from the counter-based RNG.
template <typename Fn>
void parallel_trials(std::uint64_t trials, unsigned workers, Fn&& fn) {
    if (workers <= 1 || trials < 2) {
        for (std::uint64_t i = 0; i < trials; ++i) {
            fn(i);
        }
        return;
    }
    const unsigned nthreads = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, trials));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::uint64_t i = t; i < trials; i += nthreads) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

IntSet sample_subset(SampleRng& rng, std::int64_t n) {
    auto words = rng.bits(static_cast<std::uint64_t>(n) + 1);
    return IntSet::from_bits(0, std::move(words));
}

} // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t a = seed;
    std::uint64_t b = index + 0x9e3779b97f4a7c15ULL;
    state_ = splitmix64(a) ^ splitmix64(b);
}

std::uint64_t SampleRng::next() { return splitmix64(state_); }

bool SampleRng::bernoulli(double p) {
    if (p <= 0.0) {
        return false;
    }
    if (p >= 1.0) {
        return true;
    }
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
}

std::vector<std::uint64_t> SampleRng::bits(std::uint64_t n) {
    std::vector<std::uint64_t> out((n + 63) / 64, 0);
    for (auto& w : out) {
        w = next();
    }
    const unsigned tail = static_cast<unsigned>(n % 64);
    if (tail != 0) {
        out.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return out;
}

void validate_search_config(const SearchConfig& cfg) {
    if (cfg.trials < 1) {
        throw parameter_error("search config: trials must be at least 1");
    }
    if (cfg.p < 0.0 || cfg.p > 1.0) {
        throw parameter_error("search config: p must lie in [0,1]");
    }
    if (cfg.workers < 1) {
        throw parameter_error("search config: workers must be at least 1");
    }
    if (cfg.r_max < 0) {
        throw parameter_error("search config: r_max must be nonnegative");
    }
}

std::optional<std::int64_t> min_mstd_cardinality(std::int64_t n) {
    check_exhaustive_guard(n);
    // Anchor min A = 0 (translation invariance): masks with bit 0 set.
    std::optional<std::int64_t> best;
    const std::uint64_t count = std::uint64_t{1} << n; // choices for bits 1..n
    for (std::uint64_t rest = 0; rest < count; ++rest) {
        const std::uint64_t mask = (rest << 1) | 1;
        if (mask_excess(mask) > 0) {
            const std::int64_t card = std::popcount(mask);
            if (!best || card < *best) {
                best = card;
            }
        }
    }
    return best;
}

std::vector<IntSet> exhaustive_bi_mstd(std::int64_t n) {
    check_exhaustive_guard(n);
    std::vector<IntSet> out;
    if (n < 2) {
        return out; // complement of {0,...} in [0,n] cannot support MSTD
    }
    const std::uint64_t full = (std::uint64_t{1} << (n + 1)) - 1;
    const std::uint64_t hi_bit = std::uint64_t{1} << n;
    const std::uint64_t inner = std::uint64_t{1} << (n - 1); // choices for bits 1..n-1
    for (std::uint64_t rest = 0; rest < inner; ++rest) {
        const std::uint64_t mask = (rest << 1) | 1 | hi_bit;
        const std::uint64_t comp = full & ~mask;
        if (comp == 0) {
            continue;
        }
        if (mask_excess(mask) > 0 && mask_excess(comp >> std::countr_zero(comp)) > 0) {
            out.push_back(mask_to_set(mask));
        }
    }
    return out;
}

double mstd_density(std::int64_t n, const SearchConfig& cfg) {
    validate_search_config(cfg);
    if (cfg.trials < 1000) {
        throw parameter_error("mstd_density: trials must be at least 1000");
    }
    if (n < 0) {
        throw parameter_error("mstd_density: n must be nonnegative");
    }
    std::atomic<std::uint64_t> hits{0};
    parallel_trials(cfg.trials, cfg.workers, [&](std::uint64_t i) {
        SampleRng rng(cfg.seed, i);
        const IntSet a = sample_subset(rng, n);
        if (!a.is_empty() && is_mstd(a)) {
            hits.fetch_add(1, std::memory_order_relaxed);
        }
    });
    return static_cast<double>(hits.load()) / static_cast<double>(cfg.trials);
}

double log_ratio(const IntSet& A) {
    if (A.size() < 2) {
        throw parameter_error("log_ratio: set must have at least 2 elements");
    }
    const double sums = static_cast<double>(sumset(A, A).size());
    const double diffs = static_cast<double>(sumset(A, negate(A)).size());
    return std::log(sums) / std::log(diffs);
}

bool ruzsa_bound_check(const IntSet& A) {
    const double r = log_ratio(A);
    return 0.75 <= r && r <= 4.0 / 3.0;
}

IntSet ratio_candidate(const IntSet& R) {
    if (R.is_empty() || !R.contains(0) || R.min() != 0) {
        throw parameter_error("ratio_candidate: R must contain 0 as its minimum");
    }
    if (R.max() < 1) {
        throw parameter_error("ratio_candidate: R = {0} is degenerate");
    }
    const std::int64_t k = 2 * R.max();
    const std::int64_t n = 3 * k + 2;
    std::vector<std::int64_t> vals{0};
    for (std::int64_t v = k + 1; v <= n - k - 1; ++v) {
        vals.push_back(v);
    }
    R.for_each([&](std::int64_t r) { vals.push_back(n - r); });
    return IntSet::from_values(vals);
}

SearchReport search_log_ratio(const SearchConfig& cfg) {
    validate_search_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.config = cfg;

    struct Best {
        double value = 0.0;
        std::uint64_t index = 0;
        bool valid = false;
    };
    struct Partial {
        Best best;
        std::uint64_t above = 0;
        std::uint64_t skips = 0;
    };

    const auto sample_fringe = [&](std::uint64_t i) {
        SampleRng rng(cfg.seed, i);
        std::vector<std::int64_t> vals{0};
        for (std::int64_t v = 1; v <= cfg.r_max; ++v) {
            if (rng.bernoulli(cfg.p)) {
                vals.push_back(v);
            }
        }
        return vals;
    };
    const auto run_range = [&](Partial& part, std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t i = first; i < cfg.trials; i += stride) {
            const auto vals = sample_fringe(i);
            if (vals.size() < 2) {
                ++part.skips;
                continue;
            }
            const double value = log_ratio(ratio_candidate(IntSet::from_values(vals)));
            if (value > kLogRatioThreshold) {
                ++part.above;
            }
            Best& b = part.best;
            if (!b.valid || value > b.value || (value == b.value && i < b.index)) {
                b = Best{value, i, true};
            }
        }
    };

    const unsigned nworkers = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, cfg.workers), cfg.trials));
    std::vector<Partial> partials(nworkers);
    if (nworkers == 1) {
        run_range(partials[0], 0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned t = 0; t < nworkers; ++t) {
            pool.emplace_back(
                [&, t] { run_range(partials[t], t, nworkers); });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // Merge by (value, index): depends only on per-trial results, never on
    // how trials were distributed across workers.
    Best best;
    std::vector<Best> best_per;
    best_per.reserve(partials.size());
    for (const Partial& part : partials) {
        report.count_above_threshold += part.above;
        report.degenerate_skips += part.skips;
        best_per.push_back(part.best);
    }
    for (const Best& b : best_per) {
        if (!b.valid) {
            continue;
        }
        if (!best.valid || b.value > best.value ||
            (b.value == best.value && b.index < best.index)) {
            best = b;
        }
    }
    if (best.valid) {
        report.best_value = best.value;
        // Rebuild the witness from its index (deterministic counter RNG).
        report.best_witness = ratio_candidate(IntSet::from_values(sample_fringe(best.index)));
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double ratio_window_fraction(std::int64_t n, const SdQuad& quad, const SearchConfig& cfg) {
    validate_quad(quad);
    validate_search_config(cfg);
    if (cfg.trials < 1000) {
        throw parameter_error("ratio_window_fraction: trials must be at least 1000");
    }
    if (n < 0) {
        throw parameter_error("ratio_window_fraction: n must be nonnegative");
    }
    const double t = static_cast<double>(quad.s + quad.d);
    const double lo = (t - 1.0) / t;
    const double hi = t / (t - 1.0);
    std::atomic<std::uint64_t> inside{0};
    parallel_trials(cfg.trials, cfg.workers, [&](std::uint64_t i) {
        SampleRng rng(cfg.seed, i);
        const IntSet a = sample_subset(rng, n);
        if (a.is_empty()) {
            return; // no cardinality ratio; counts as outside
        }
        const double big =
            static_cast<double>(signed_combination(a, static_cast<std::uint64_t>(quad.s),
                                                   static_cast<std::uint64_t>(quad.d))
                                    .size());
        const double small =
            static_cast<double>(signed_combination(a, static_cast<std::uint64_t>(quad.sigma),
                                                   static_cast<std::uint64_t>(quad.delta))
                                    .size());
        const double ratio = big / small;
        if (lo < ratio && ratio < hi) {
            inside.fetch_add(1, std::memory_order_relaxed);
        }
    });
    return static_cast<double>(inside.load()) / static_cast<double>(cfg.trials);
}

double ap_probability_bound(std::int64_t r) {
    if (r < 1) {
        throw parameter_error("ap_probability_bound: r must be at least 1");
    }
    const double rp1 = static_cast<double>(r + 1);
    return 1.0 - (rp1 * rp1 * rp1 - rp1 * rp1) / std::exp2(static_cast<double>(r + 2));
}

double zhao_sum_bound(std::int64_t k) {
    if (k < 1) {
        throw parameter_error("zhao_sum_bound: k must be at least 1");
    }
    return 3.0 * std::pow(0.75, static_cast<double>(k) / 2.0) / (2.0 - std::sqrt(3.0));
}

double zhao_diff_bound(std::int64_t k, std::int64_t n) {
    if (k < 1 || n <= 2 * k) {
        throw parameter_error("zhao_diff_bound: need k >= 1 and n > 2k");
    }
    return 8.0 * std::pow(0.75, static_cast<double>(k + 2)) +
           static_cast<double>(n + 1) * std::pow(0.75, static_cast<double>(n - 1) / 3.0);
}

double bi_rich_bound(std::int64_t k) {
    if (k < 1) {
        throw parameter_error("bi_rich_bound: k must be at least 1");
    }
    return 6.0 * std::pow(0.75, static_cast<double>(k) / 2.0) / (2.0 - std::sqrt(3.0));
}

double bound_2000_check(std::int64_t r) {
    if (r < 1) {
        throw parameter_error("bound_2000_check: r must be at least 1");
    }
    const double k = 2.0 * static_cast<double>(r);
    return std::log(5.0 * k + 4.0) / std::log(4.0 * k + 3.0);
}

} // namespace mstd
