#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mstd/errors.hpp"

namespace mstd {

// Finite set of integers stored as an offset plus a packed bit vector.
// Canonical form: for a nonempty set, bit 0 of word 0 is the minimum
// element and the highest set bit is the maximum (no slack words).
// The empty set is the default value (no words).
class IntSet {
  public:
    IntSet() = default;
    IntSet(std::initializer_list<std::int64_t> values);

    static IntSet interval(std::int64_t a, std::int64_t b);
    static IntSet from_values(const std::vector<std::int64_t>& values);
    // Adopts raw words (bit i of word w = membership of base + 64*w + i)
    // and normalizes to canonical form.
    static IntSet from_bits(std::int64_t base, std::vector<std::uint64_t> words);

    bool is_empty() const { return words_.empty(); }
    std::size_t size() const;
    std::int64_t min() const; // throws parameter_error on empty
    std::int64_t max() const; // throws parameter_error on empty
    std::int64_t span() const { return max() - min(); }
    bool contains(std::int64_t v) const;
    std::vector<std::int64_t> elements() const;

    // Calls fn(value) for each element in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                fn(base_ + static_cast<std::int64_t>(w * 64 + static_cast<unsigned>(b)));
            }
        }
    }

    bool operator==(const IntSet& other) const {
        return base_ == other.base_ && words_ == other.words_;
    }
    bool operator!=(const IntSet& other) const { return !(*this == other); }

    std::int64_t base() const { return base_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::int64_t base_ = 0;
    std::vector<std::uint64_t> words_;

    void normalize();
};

// Maximum allowed span (max - min) of any constructed set; default 2^26.
std::int64_t universe_guard();
void set_universe_guard(std::int64_t bits);

// {a+b : a in A, b in B}; empty if either operand is empty.
IntSet sumset(const IntSet& a, const IntSet& b);

// {-a : a in A}
IntSet negate(const IntSet& a);

// {c*a : a in A}; c = 0 collapses a nonempty set to {0}.
IntSet dilate(const IntSet& a, std::int64_t c);

// {a+t : a in A}
IntSet translate(const IntSet& a, std::int64_t t);

// mA = A + ... + A (m copies); 0A = {0}. Computed by binary doubling.
IntSet h_fold(const IntSet& a, std::uint64_t m);

// sA - dA; requires s+d >= 1 and A nonempty.
IntSet signed_combination(const IntSet& a, std::uint64_t s, std::uint64_t d);

// [min A, max A] \ A; requires A nonempty. May be empty.
IntSet complement_in_hull(const IntSet& a);

// |A+A| - |A-A|; requires A nonempty.
std::int64_t sum_diff_excess(const IntSet& a);

// |A+A| > |A-A|; requires A nonempty.
bool is_mstd(const IntSet& a);

// [lo,hi] subset of A; requires lo <= hi.
bool contains_interval(const IntSet& a, std::int64_t lo, std::int64_t hi);

// A restricted to [lo,hi] (helper used throughout the fringe machinery).
IntSet clip(const IntSet& a, std::int64_t lo, std::int64_t hi);

} // namespace mstd
