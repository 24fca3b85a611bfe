#include "mstd/intset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace mstd {

namespace {

std::atomic<std::int64_t> g_universe_guard{std::int64_t{1} << 26};

std::size_t words_for_span(std::int64_t span) {
    return static_cast<std::size_t>(span / 64) + 1;
}

void check_span(std::int64_t span, const char* what) {
    if (span > universe_guard()) {
        throw span_error(std::string(what) + ": span " + std::to_string(span) +
                         " exceeds universe guard " + std::to_string(universe_guard()));
    }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw span_error(std::string(what) + ": integer overflow");
    }
    return out;
}

// dst |= src << offset, dst already sized to hold the result.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::uint64_t offset) {
    const std::size_t word = offset / 64;
    const unsigned bit = static_cast<unsigned>(offset % 64);
    if (bit == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[word + i] |= src[i];
        }
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[word + i] |= (src[i] << bit) | carry;
        carry = src[i] >> (64 - bit);
    }
    if (carry != 0) {
        dst[word + src.size()] |= carry;
    }
}

} // namespace

std::int64_t universe_guard() { return g_universe_guard.load(std::memory_order_relaxed); }

void set_universe_guard(std::int64_t bits) {
    if (bits < 64) {
        throw parameter_error("universe guard must be at least 64 bits");
    }
    g_universe_guard.store(bits, std::memory_order_relaxed);
}

IntSet::IntSet(std::initializer_list<std::int64_t> values)
    : IntSet(from_values(std::vector<std::int64_t>(values))) {}

IntSet IntSet::from_values(const std::vector<std::int64_t>& values) {
    IntSet out;
    if (values.empty()) {
        return out;
    }
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const std::int64_t lo = *lo_it;
    check_span(*hi_it - lo, "from_values");
    out.base_ = lo;
    out.words_.assign(words_for_span(*hi_it - lo), 0);
    for (std::int64_t v : values) {
        const std::uint64_t off = static_cast<std::uint64_t>(v - lo);
        out.words_[off / 64] |= std::uint64_t{1} << (off % 64);
    }
    return out;
}

IntSet IntSet::interval(std::int64_t a, std::int64_t b) {
    if (a > b) {
        throw parameter_error("interval: lower bound " + std::to_string(a) +
                              " exceeds upper bound " + std::to_string(b));
    }
    check_span(b - a, "interval");
    IntSet out;
    out.base_ = a;
    out.words_.assign(words_for_span(b - a), 0);
    const std::uint64_t span = static_cast<std::uint64_t>(b - a);
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        const std::uint64_t lo = w * 64;
        if (lo + 63 <= span) {
            out.words_[w] = ~std::uint64_t{0};
        } else {
            out.words_[w] = (span - lo == 63) ? ~std::uint64_t{0}
                                              : ((std::uint64_t{1} << (span - lo + 1)) - 1);
        }
    }
    return out;
}

IntSet IntSet::from_bits(std::int64_t base, std::vector<std::uint64_t> words) {
    IntSet out;
    out.base_ = base;
    out.words_ = std::move(words);
    out.normalize();
    if (!out.is_empty()) {
        check_span(out.span(), "from_bits");
    }
    return out;
}

void IntSet::normalize() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
    if (words_.empty()) {
        base_ = 0;
        return;
    }
    std::size_t lead = 0;
    while (words_[lead] == 0) {
        ++lead;
    }
    const unsigned bit = static_cast<unsigned>(std::countr_zero(words_[lead]));
    const std::uint64_t shift = lead * 64 + bit;
    if (shift == 0) {
        return;
    }
    base_ = checked_add(base_, static_cast<std::int64_t>(shift), "normalize");
    if (bit == 0) {
        words_.erase(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(lead));
        return;
    }
    const std::size_t n = words_.size();
    for (std::size_t i = lead; i < n; ++i) {
        std::uint64_t w = words_[i] >> bit;
        if (i + 1 < n) {
            w |= words_[i + 1] << (64 - bit);
        }
        words_[i - lead] = w;
    }
    words_.resize(n - lead);
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

std::size_t IntSet::size() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::int64_t IntSet::min() const {
    if (is_empty()) {
        throw parameter_error("min of empty set is undefined");
    }
    return base_; // canonical form: bit 0 is set
}

std::int64_t IntSet::max() const {
    if (is_empty()) {
        throw parameter_error("max of empty set is undefined");
    }
    const std::size_t w = words_.size() - 1;
    return base_ + static_cast<std::int64_t>(w * 64 + 63 -
                                             static_cast<unsigned>(std::countl_zero(words_[w])));
}

bool IntSet::contains(std::int64_t v) const {
    if (is_empty() || v < base_) {
        return false;
    }
    const std::uint64_t off = static_cast<std::uint64_t>(v - base_);
    const std::size_t w = off / 64;
    if (w >= words_.size()) {
        return false;
    }
    return (words_[w] >> (off % 64)) & 1;
}

std::vector<std::int64_t> IntSet::elements() const {
    std::vector<std::int64_t> out;
    out.reserve(size());
    for_each([&](std::int64_t v) { out.push_back(v); });
    return out;
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    if (a.is_empty() || b.is_empty()) {
        return IntSet{};
    }
    const std::int64_t span = checked_add(a.span(), b.span(), "sumset");
    check_span(span, "sumset");
    IntSet out;
    const IntSet& drive = a.size() <= b.size() ? a : b;
    const IntSet& other = (&drive == &a) ? b : a;
    std::vector<std::uint64_t> words(words_for_span(span), 0);
    const std::int64_t dmin = drive.min();
    drive.for_each([&](std::int64_t v) {
        or_shifted(words, other.words(), static_cast<std::uint64_t>(v - dmin));
    });
    // min/max sums are always achieved, so the result is already canonical.
    return IntSet::from_bits(checked_add(a.min(), b.min(), "sumset"), std::move(words));
}

IntSet negate(const IntSet& a) {
    if (a.is_empty()) {
        return IntSet{};
    }
    const std::int64_t span = a.span();
    std::vector<std::uint64_t> words(words_for_span(span), 0);
    const std::int64_t amin = a.min();
    a.for_each([&](std::int64_t v) {
        const std::uint64_t off = static_cast<std::uint64_t>(span - (v - amin));
        words[off / 64] |= std::uint64_t{1} << (off % 64);
    });
    return IntSet::from_bits(-a.max(), std::move(words));
}

IntSet dilate(const IntSet& a, std::int64_t c) {
    if (a.is_empty()) {
        return IntSet{};
    }
    if (c == 0) {
        return IntSet{0};
    }
    std::int64_t span = 0;
    if (__builtin_mul_overflow(a.span(), c < 0 ? -c : c, &span)) {
        throw span_error("dilate: integer overflow");
    }
    check_span(span, "dilate");
    std::vector<std::uint64_t> words(words_for_span(span), 0);
    const std::int64_t nbase = c > 0 ? c * a.min() : c * a.max();
    a.for_each([&](std::int64_t v) {
        const std::uint64_t off = static_cast<std::uint64_t>(c * v - nbase);
        words[off / 64] |= std::uint64_t{1} << (off % 64);
    });
    return IntSet::from_bits(nbase, std::move(words));
}

IntSet translate(const IntSet& a, std::int64_t t) {
    if (a.is_empty()) {
        return IntSet{};
    }
    std::vector<std::uint64_t> words = a.words();
    return IntSet::from_bits(checked_add(a.base(), t, "translate"), std::move(words));
}

IntSet h_fold(const IntSet& a, std::uint64_t m) {
    if (m == 0) {
        return IntSet{0};
    }
    if (a.is_empty()) {
        throw parameter_error("h_fold: empty set with positive fold count");
    }
    IntSet result{0};
    IntSet power = a;
    while (m != 0) {
        if (m & 1) {
            result = sumset(result, power);
        }
        m >>= 1;
        if (m != 0) {
            power = sumset(power, power);
        }
    }
    return result;
}

IntSet signed_combination(const IntSet& a, std::uint64_t s, std::uint64_t d) {
    if (s + d < 1) {
        throw parameter_error("signed_combination: s+d must be at least 1");
    }
    if (a.is_empty()) {
        throw parameter_error("signed_combination: empty set");
    }
    if (d == 0) {
        return h_fold(a, s);
    }
    if (s == 0) {
        return negate(h_fold(a, d));
    }
    return sumset(h_fold(a, s), negate(h_fold(a, d)));
}

IntSet complement_in_hull(const IntSet& a) {
    if (a.is_empty()) {
        throw parameter_error("complement_in_hull: hull of empty set is undefined");
    }
    const std::int64_t span = a.span();
    std::vector<std::uint64_t> words(a.words());
    for (auto& w : words) {
        w = ~w;
    }
    // Mask off bits beyond the span in the last word.
    const unsigned last_bit = static_cast<unsigned>(span % 64);
    words.back() &= last_bit == 63 ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << (last_bit + 1)) - 1);
    return IntSet::from_bits(a.min(), std::move(words));
}

std::int64_t sum_diff_excess(const IntSet& a) {
    if (a.is_empty()) {
        throw parameter_error("sum_diff_excess: empty set");
    }
    const IntSet sums = sumset(a, a);
    const IntSet diffs = sumset(a, negate(a));
    return static_cast<std::int64_t>(sums.size()) - static_cast<std::int64_t>(diffs.size());
}

bool is_mstd(const IntSet& a) { return sum_diff_excess(a) > 0; }

bool contains_interval(const IntSet& a, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw parameter_error("contains_interval: lower bound exceeds upper bound");
    }
    if (a.is_empty() || lo < a.min() || hi > a.max()) {
        return false;
    }
    const std::int64_t base = a.base();
    const std::uint64_t off_lo = static_cast<std::uint64_t>(lo - base);
    const std::uint64_t off_hi = static_cast<std::uint64_t>(hi - base);
    const auto& words = a.words();
    for (std::size_t w = off_lo / 64; w <= off_hi / 64; ++w) {
        std::uint64_t need = ~std::uint64_t{0};
        if (w == off_lo / 64) {
            need &= ~std::uint64_t{0} << (off_lo % 64);
        }
        if (w == off_hi / 64) {
            const unsigned b = static_cast<unsigned>(off_hi % 64);
            need &= b == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
        }
        if ((words[w] & need) != need) {
            return false;
        }
    }
    return true;
}

IntSet clip(const IntSet& a, std::int64_t lo, std::int64_t hi) {
    if (lo > hi || a.is_empty() || hi < a.min() || lo > a.max()) {
        return IntSet{};
    }
    const std::int64_t base = a.base();
    const std::int64_t eff_lo = std::max(lo, a.min());
    const std::int64_t eff_hi = std::min(hi, a.max());
    const std::uint64_t off_lo = static_cast<std::uint64_t>(eff_lo - base);
    const std::uint64_t off_hi = static_cast<std::uint64_t>(eff_hi - base);
    std::vector<std::uint64_t> words(a.words().begin(),
                                     a.words().begin() +
                                         static_cast<std::ptrdiff_t>(off_hi / 64) + 1);
    for (std::size_t w = 0; w < off_lo / 64; ++w) {
        words[w] = 0;
    }
    words[off_lo / 64] &= ~std::uint64_t{0} << (off_lo % 64);
    const unsigned b = static_cast<unsigned>(off_hi % 64);
    words[off_hi / 64] &= b == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
    return IntSet::from_bits(base, std::move(words));
}

} // namespace mstd
