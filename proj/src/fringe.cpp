#include "mstd/fringe.hpp"

#include <string>

namespace mstd {

namespace {

// |(aL' + bR') cap [0,k]| where a,b are fold counts.
std::int64_t clipped_count(const IntSet& l, const IntSet& r, std::int64_t a, std::int64_t b,
                           std::int64_t k) {
    const IntSet s = sumset(h_fold(l, static_cast<std::uint64_t>(a)),
                            h_fold(r, static_cast<std::uint64_t>(b)));
    return static_cast<std::int64_t>(clip(s, 0, k).size());
}

} // namespace

bool quad_is_valid(const SdQuad& q) {
    return q.s + q.d == q.sigma + q.delta && 0 <= q.d && q.d < q.delta &&
           q.delta <= q.sigma && q.sigma < q.s;
}

void validate_quad(const SdQuad& q) {
    if (!quad_is_valid(q)) {
        throw parameter_error("quadruple (" + std::to_string(q.s) + "," + std::to_string(q.d) +
                              "," + std::to_string(q.sigma) + "," + std::to_string(q.delta) +
                              ") violates s+d = sigma+delta, 0 <= d < delta <= sigma < s");
    }
}

bool fringe_pair_is_valid(const FringePair& fp) {
    if (fp.k < 1 || fp.L.is_empty() || fp.R.is_empty()) {
        return false;
    }
    return fp.L.min() == 0 && fp.R.min() == 0 && fp.L.max() <= fp.k && fp.R.max() <= fp.k &&
           fp.L.contains(0) && fp.R.contains(0);
}

void validate_fringe_pair(const FringePair& fp) {
    if (!fringe_pair_is_valid(fp)) {
        throw parameter_error("malformed fringe pair: need L,R inside [0,k] with 0 in both "
                              "and k >= 1");
    }
}

void validate_rich_context(const RichContext& ctx) {
    if (ctx.A.is_empty() || ctx.A.min() < 0 || ctx.A.max() > ctx.n) {
        throw parameter_error("rich context: A must be a nonempty subset of [0,n]");
    }
    if (ctx.k < 0 || 2 * ctx.k >= ctx.n) {
        throw parameter_error("rich context: fringe width must satisfy 0 <= 2k < n");
    }
}

std::int64_t fringe_excess(const FringePair& fp, const SdQuad& quad) {
    validate_fringe_pair(fp);
    validate_quad(quad);
    return clipped_count(fp.L, fp.R, quad.s, quad.d, fp.k) +
           clipped_count(fp.R, fp.L, quad.s, quad.d, fp.k) -
           clipped_count(fp.L, fp.R, quad.sigma, quad.delta, fp.k) -
           clipped_count(fp.R, fp.L, quad.sigma, quad.delta, fp.k);
}

bool is_generalized_fringe_pair(const FringePair& fp, const SdQuad& quad) {
    return fringe_excess(fp, quad) > 0;
}

bool fringe_pair_leq(const FringePair& fp1, const FringePair& fp2, const SdQuad& quad) {
    validate_fringe_pair(fp1);
    validate_fringe_pair(fp2);
    validate_quad(quad);
    if (fp1.k > fp2.k) {
        return false;
    }
    if (fp1.L != clip(fp2.L, 0, fp1.k) || fp1.R != clip(fp2.R, 0, fp1.k)) {
        return false;
    }
    if (fp1.k == fp2.k) {
        return true;
    }
    const IntSet ldr = sumset(h_fold(fp2.L, static_cast<std::uint64_t>(quad.s)),
                              h_fold(fp2.R, static_cast<std::uint64_t>(quad.d)));
    const IntSet rdl = sumset(h_fold(fp2.R, static_cast<std::uint64_t>(quad.s)),
                              h_fold(fp2.L, static_cast<std::uint64_t>(quad.d)));
    return contains_interval(ldr, fp1.k + 1, fp2.k) &&
           contains_interval(rdl, fp1.k + 1, fp2.k);
}

FringePair extract_fringe_pair(const RichContext& ctx) {
    validate_rich_context(ctx);
    if (!ctx.A.contains(0) || !ctx.A.contains(ctx.n)) {
        throw parameter_error("extract_fringe_pair: set must contain both anchors 0 and n");
    }
    FringePair fp;
    fp.L = clip(ctx.A, 0, ctx.k);
    fp.R = translate(negate(clip(ctx.A, ctx.n - ctx.k, ctx.n)), ctx.n);
    fp.k = ctx.k;
    return fp;
}

bool is_rich(const RichContext& ctx) {
    validate_rich_context(ctx);
    return contains_interval(sumset(ctx.A, ctx.A), ctx.k + 1, 2 * ctx.n - ctx.k - 1);
}

bool is_affluent(const RichContext& ctx) {
    if (!is_rich(ctx)) {
        return false;
    }
    const IntSet diffs = sumset(ctx.A, negate(ctx.A));
    return contains_interval(diffs, -ctx.n + ctx.k + 1, ctx.n - ctx.k - 1);
}

std::optional<std::int64_t> minimal_fringe_k(const IntSet& A, std::int64_t n) {
    if (A.is_empty() || A.min() < 0 || A.max() > n) {
        throw parameter_error("minimal_fringe_k: A must be a nonempty subset of [0,n]");
    }
    if (!A.contains(0) || !A.contains(n)) {
        throw parameter_error("minimal_fringe_k: set must contain both anchors 0 and n");
    }
    const IntSet sums = sumset(A, A);
    for (std::int64_t k = 1; 2 * k < n; ++k) {
        if (contains_interval(sums, k + 1, 2 * n - k - 1)) {
            return k;
        }
    }
    return std::nullopt;
}

bool check_rich_interval(const RichContext& ctx, std::int64_t s, std::int64_t d) {
    if (s < 0 || d < 0 || s + d <= 2) {
        throw contract_error("check_rich_interval: requires s+d > 2");
    }
    if (!is_rich(ctx)) {
        throw contract_error("check_rich_interval: context is not rich");
    }
    const IntSet sd = signed_combination(ctx.A, static_cast<std::uint64_t>(s),
                                         static_cast<std::uint64_t>(d));
    return contains_interval(sd, -d * ctx.n + ctx.k + 1, s * ctx.n - ctx.k - 1);
}

bool is_bi_mstd_fringe_pair(const FringePair& fp) {
    validate_fringe_pair(fp);
    std::vector<std::int64_t> lcomp, rcomp;
    for (std::int64_t v = 0; v <= fp.k; ++v) {
        if (!fp.L.contains(v)) {
            lcomp.push_back(v);
        }
        if (!fp.R.contains(v)) {
            rcomp.push_back(v);
        }
    }
    if (lcomp.empty() || rcomp.empty()) {
        throw parameter_error("is_bi_mstd_fringe_pair: complement of L or R in [0,k] is empty");
    }
    const IntSet Lc = IntSet::from_values(lcomp);
    const IntSet Rc = IntSet::from_values(rcomp);
    const auto cnt = [&](const IntSet& x, const IntSet& y) {
        return static_cast<std::int64_t>(clip(sumset(x, y), 0, fp.k).size());
    };
    const bool direct = cnt(fp.L, fp.L) + cnt(fp.R, fp.R) > 2 * cnt(fp.L, fp.R);
    const bool compl_ = cnt(Lc, Lc) + cnt(Rc, Rc) > 2 * cnt(Lc, Rc);
    return direct && compl_;
}

bool is_bi_rich(const RichContext& ctx) {
    validate_rich_context(ctx);
    std::vector<std::int64_t> comp;
    for (std::int64_t v = 0; v <= ctx.n; ++v) {
        if (!ctx.A.contains(v)) {
            comp.push_back(v);
        }
    }
    if (comp.empty()) {
        throw parameter_error("is_bi_rich: complement of A in [0,n] is empty");
    }
    const IntSet ac = IntSet::from_values(comp);
    return contains_interval(sumset(ctx.A, ctx.A), ctx.k + 1, 2 * ctx.n - ctx.k - 1) &&
           contains_interval(sumset(ac, ac), ctx.k + 1, 2 * ctx.n - ctx.k - 1);
}

bool is_bi_mstd(const IntSet& A) {
    if (A.is_empty()) {
        throw parameter_error("is_bi_mstd: empty set");
    }
    const IntSet comp = complement_in_hull(A);
    if (comp.is_empty()) {
        throw parameter_error("is_bi_mstd: hull complement is empty");
    }
    return is_mstd(A) && is_mstd(comp);
}

} // namespace mstd
