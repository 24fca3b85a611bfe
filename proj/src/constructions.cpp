#include "mstd/constructions.hpp"

#include <algorithm>
#include <string>

namespace mstd {

namespace {

IntSet zero_mq_set(std::int64_t m, std::int64_t q) {
    std::vector<std::int64_t> vals;
    for (std::int64_t v = 0; v <= m; ++v) {
        vals.push_back(v);
    }
    vals.push_back(q);
    return IntSet::from_values(vals);
}

// Counts |X cap [0,k]| for each k in 0..limit given the fold X inside [0,limit].
std::vector<std::int64_t> prefix_counts(const IntSet& x, std::int64_t limit) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1, 0);
    std::int64_t running = 0;
    for (std::int64_t k = 0; k <= limit; ++k) {
        if (x.contains(k)) {
            ++running;
        }
        out[static_cast<std::size_t>(k)] = running;
    }
    return out;
}

} // namespace

IntSet zero_mq_kfold(const ZeroMqParams& p, std::int64_t k) {
    if (p.m < 1 || p.q <= 2) {
        throw parameter_error("zero_mq_kfold: need m >= 1 and q > 2");
    }
    if (k < 0) {
        throw parameter_error("zero_mq_kfold: negative fold count");
    }
    if (k == 0) {
        return IntSet{0};
    }
    std::vector<std::int64_t> vals;
    for (std::int64_t i = 0; i <= k; ++i) {
        for (std::int64_t v = i * p.q; v <= i * p.q + (k - i) * p.m; ++v) {
            vals.push_back(v);
        }
    }
    return IntSet::from_values(vals);
}

FringePair kgen_fringe_pair(std::int64_t k) {
    if (k < 1) {
        throw parameter_error("kgen_fringe_pair: k must be positive");
    }
    FringePair fp{IntSet{0}, IntSet{0, 1, 3}, 6 * k};
    for (std::int64_t j = 1; j <= k; ++j) {
        const SdQuad quad{2 * j, 0, j, j};
        if (fringe_excess(fp, quad) <= 0) {
            throw contract_error("kgen_fringe_pair: generation " + std::to_string(j) +
                                 " failed verification");
        }
    }
    return fp;
}

IntSet kgen_set(std::int64_t k) {
    if (k < 1) {
        throw parameter_error("kgen_set: k must be positive");
    }
    const std::int64_t n = 18 * k + 2;
    std::vector<std::int64_t> vals{0};
    for (std::int64_t v = 6 * k + 1; v <= 12 * k + 1; ++v) {
        vals.push_back(v);
    }
    for (std::int64_t r : {0, 1, 3}) {
        vals.push_back(n - r);
    }
    const IntSet A = IntSet::from_values(vals);
    if (static_cast<std::int64_t>(A.size()) != 6 * k + 5 ||
        !contains_interval(sumset(A, A), 6 * k + 1, 30 * k + 3) || !is_k_generational(A, k)) {
        throw contract_error("kgen_set: construction failed self-verification");
    }
    return A;
}

bool is_k_generational(const IntSet& A, std::int64_t k) {
    if (A.is_empty()) {
        throw parameter_error("is_k_generational: empty set");
    }
    if (k < 1) {
        throw parameter_error("is_k_generational: k must be positive");
    }
    IntSet fold = A; // jA, starting at j = 1
    for (std::int64_t j = 1; j <= k; ++j) {
        const IntSet sums = sumset(fold, fold);
        const IntSet diffs = sumset(fold, negate(fold));
        if (sums.size() <= diffs.size()) {
            return false;
        }
        if (j < k) {
            fold = sumset(fold, A);
        }
    }
    return true;
}

FringePair super_kgen_fringe_pair(std::int64_t q) {
    if (q <= 2) {
        throw parameter_error("super_kgen_fringe_pair: q must exceed 2");
    }
    FringePair fp{IntSet{0}, IntSet{0, 1, q}, q * q};
    for (const SdQuad& quad : quadruples(q)) {
        if (fringe_excess(fp, quad) <= 0) {
            throw contract_error("super_kgen_fringe_pair: verification failed");
        }
    }
    return fp;
}

IntSet super_kgen_set(std::int64_t q) {
    if (q <= 2) {
        throw parameter_error("super_kgen_set: q must exceed 2");
    }
    const std::int64_t k = q * q;
    std::vector<std::int64_t> vals{0};
    for (std::int64_t v = k + 1; v <= 2 * k + 2; ++v) {
        vals.push_back(v);
    }
    for (std::int64_t r : {std::int64_t{0}, std::int64_t{1}, q}) {
        vals.push_back(3 * k + 3 - r);
    }
    const IntSet A = IntSet::from_values(vals);
    bool ok = static_cast<std::int64_t>(A.size()) == q * q + 6 &&
              contains_interval(sumset(A, A), k + 1, 5 * k + 5);
    if (ok) {
        for (const SdQuad& quad : quadruples(q)) {
            const IntSet big = signed_combination(A, static_cast<std::uint64_t>(quad.s),
                                                  static_cast<std::uint64_t>(quad.d));
            const IntSet small = signed_combination(A, static_cast<std::uint64_t>(quad.sigma),
                                                    static_cast<std::uint64_t>(quad.delta));
            if (big.size() <= small.size()) {
                ok = false;
                break;
            }
        }
    }
    if (!ok) {
        throw contract_error("super_kgen_set: construction failed self-verification");
    }
    return A;
}

std::vector<SdQuad> quadruples(std::int64_t q_max) {
    if (q_max < 2) {
        throw parameter_error("quadruples: q_max must be at least 2");
    }
    std::vector<SdQuad> out;
    for (std::int64_t t = 2; t <= q_max; ++t) {
        for (std::int64_t s = t; s >= 1; --s) {
            const std::int64_t d = t - s;
            if (d < 0 || d >= s) {
                continue;
            }
            for (std::int64_t sigma = std::min(s - 1, t - 1); sigma >= 1; --sigma) {
                const std::int64_t delta = t - sigma;
                if (d < delta && delta <= sigma) {
                    out.push_back(SdQuad{s, d, sigma, delta});
                }
            }
        }
    }
    return out;
}

IntSet base_expand(const std::vector<IntSet>& sets, std::int64_t k) {
    if (k < 1 || static_cast<std::int64_t>(sets.size()) != k) {
        throw parameter_error("base_expand: need exactly k sets with k >= 1");
    }
    std::int64_t max_elem = 0;
    for (const IntSet& a : sets) {
        if (a.is_empty() || a.min() < 1) {
            throw parameter_error("base_expand: every set must contain only positive integers");
        }
        max_elem = std::max(max_elem, a.max());
    }
    const std::int64_t m = k * max_elem + 1;
    IntSet out = sets[0];
    std::int64_t scale = 1;
    for (std::size_t j = 1; j < sets.size(); ++j) {
        scale *= m;
        out = sumset(out, dilate(sets[j], scale));
    }
    return out;
}

std::vector<std::int64_t> f_scan(const SdQuad& quad, std::int64_t m, std::int64_t q) {
    validate_quad(quad);
    if (m < 1 || q <= (quad.s + quad.d) * m) {
        throw parameter_error("f_scan: need m >= 1 and q > (s+d)*m");
    }
    const IntSet r = zero_mq_set(m, q);
    const std::int64_t limit = quad.s * q;
    const auto counts = [&](std::int64_t c) {
        return prefix_counts(clip(h_fold(r, static_cast<std::uint64_t>(c)), 0, limit), limit);
    };
    const auto cd = counts(quad.d);
    const auto cs = counts(quad.s);
    const auto cdelta = counts(quad.delta);
    const auto csigma = counts(quad.sigma);
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = cd[i] + cs[i] - cdelta[i] - csigma[i];
    }
    return out;
}

std::vector<std::int64_t> g_scan(const SdQuad& quad, std::int64_t m, std::int64_t q) {
    validate_quad(quad);
    if (m < 1 || q <= (quad.s + quad.d) * m) {
        throw parameter_error("g_scan: need m >= 1 and q > (s+d)*m");
    }
    const IntSet l = IntSet::interval(0, m);
    const IntSet r = zero_mq_set(m, q);
    const std::int64_t limit = (quad.s + quad.d) * q;
    const auto counts = [&](std::int64_t a, std::int64_t b) {
        const IntSet s = sumset(h_fold(l, static_cast<std::uint64_t>(a)),
                                h_fold(r, static_cast<std::uint64_t>(b)));
        return prefix_counts(clip(s, 0, limit), limit);
    };
    const auto c1 = counts(quad.s, quad.d);
    const auto c2 = counts(quad.d, quad.s);
    const auto c3 = counts(quad.sigma, quad.delta);
    const auto c4 = counts(quad.delta, quad.sigma);
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = c1[i] + c2[i] - c3[i] - c4[i];
    }
    return out;
}

DiffScanResult find_diff_fringe(std::int64_t x, const SdQuad& quad) {
    validate_quad(quad);
    const std::int64_t m = std::max<std::int64_t>(x < 0 ? -x : x, 1);
    const std::int64_t q = (quad.s + quad.d) * m + 1;
    DiffScanResult res;
    res.target_x = x;
    IntSet l;
    std::int64_t hi = 0;
    if (x >= 0) {
        l = IntSet{0};
        res.profile = f_scan(quad, m, q);
        hi = quad.s * q;
    } else {
        l = IntSet::interval(0, m);
        res.profile = g_scan(quad, m, q);
        hi = (quad.s + quad.d) * q;
    }
    const IntSet r = zero_mq_set(m, q);
    for (std::int64_t k = q - 1; k <= hi; ++k) {
        if (res.profile[static_cast<std::size_t>(k)] == x) {
            res.k_hit = k;
            res.fringe = FringePair{clip(l, 0, k), clip(r, 0, k), k};
            return res;
        }
    }
    // The profile moves by steps of at most 1 from 0 to a value past x, so
    // a hit is guaranteed.
    throw contract_error("find_diff_fringe: scan exhausted without hitting target");
}

FringePair pos_diff_fringe(std::int64_t m, std::int64_t q) {
    if (m < 1 || q <= 2 * m) {
        throw parameter_error("pos_diff_fringe: need m >= 1 and q > 2m");
    }
    FringePair fp{IntSet{0}, zero_mq_set(m, q), 2 * q};
    if (fringe_excess(fp, SdQuad{2, 0, 1, 1}) != m) {
        throw contract_error("pos_diff_fringe: excess is not +m");
    }
    return fp;
}

FringePair neg_diff_fringe(std::int64_t m, std::int64_t q) {
    if (m < 1 || q <= 2 * m) {
        throw parameter_error("neg_diff_fringe: need m >= 1 and q > 2m");
    }
    FringePair fp{IntSet::interval(0, m), zero_mq_set(m, q), 2 * q};
    if (fringe_excess(fp, SdQuad{2, 0, 1, 1}) != -m) {
        throw contract_error("neg_diff_fringe: excess is not -m");
    }
    return fp;
}

IntSet realize_affluent_set(const FringePair& fp, std::optional<std::int64_t> n_opt) {
    validate_fringe_pair(fp);
    const auto attempt = [&](std::int64_t n) -> std::optional<IntSet> {
        if (2 * fp.k >= n) {
            return std::nullopt;
        }
        std::vector<std::int64_t> vals = fp.L.elements();
        for (std::int64_t v = fp.k + 1; v <= n - fp.k - 1; ++v) {
            vals.push_back(v);
        }
        fp.R.for_each([&](std::int64_t r) { vals.push_back(n - r); });
        const IntSet A = IntSet::from_values(vals);
        const RichContext ctx{A, n, fp.k};
        if (is_affluent(ctx) && extract_fringe_pair(ctx) == fp) {
            return A;
        }
        return std::nullopt;
    };
    if (n_opt.has_value()) {
        if (auto A = attempt(*n_opt)) {
            return *A;
        }
        throw realization_error("realize_affluent_set: requested ambient size " +
                                std::to_string(*n_opt) + " does not realize the fringe");
    }
    for (std::int64_t n = 3 * fp.k + 3; n <= 16 * fp.k; n *= 2) {
        if (auto A = attempt(n)) {
            return *A;
        }
    }
    throw realization_error("realize_affluent_set: no ambient size up to the 16k cap "
                            "realizes the fringe");
}

} // namespace mstd
