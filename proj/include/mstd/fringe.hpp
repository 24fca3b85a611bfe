#pragma once

#include <cstdint>
#include <optional>

#include "mstd/intset.hpp"

namespace mstd {

// Comparison quadruple (s, d, sigma, delta) with s+d = sigma+delta and
// 0 <= d < delta <= sigma < s. Parameterizes |sA-dA| vs |sigmaA-deltaA|.
struct SdQuad {
    std::int64_t s = 0;
    std::int64_t d = 0;
    std::int64_t sigma = 0;
    std::int64_t delta = 0;

    bool operator==(const SdQuad&) const = default;
};

bool quad_is_valid(const SdQuad& q);
// Throws parameter_error unless the quadruple constraints hold.
void validate_quad(const SdQuad& q);

// Boundary pair (L, R; k): L, R subsets of [0,k], both containing 0.
struct FringePair {
    IntSet L;
    IntSet R;
    std::int64_t k = 0;

    bool operator==(const FringePair&) const = default;
};

bool fringe_pair_is_valid(const FringePair& fp);
// Throws parameter_error (malformed fringe) unless the invariants hold.
void validate_fringe_pair(const FringePair& fp);

// A set viewed inside the ambient interval [0,n] with fringe width k;
// requires A inside [0,n] and 2k < n.
struct RichContext {
    IntSet A;
    std::int64_t n = 0;
    std::int64_t k = 0;
};

void validate_rich_context(const RichContext& ctx);

// [|(sL+dR) cap [0,k]| + |(sR+dL) cap [0,k]|]
//   - [|(sigmaL+deltaR) cap [0,k]| + |(sigmaR+deltaL) cap [0,k]|]
std::int64_t fringe_excess(const FringePair& fp, const SdQuad& quad);

// fringe_excess > 0.
bool is_generalized_fringe_pair(const FringePair& fp, const SdQuad& quad);

// Partial order: fp1 <= fp2 iff k <= k', L = L' cap [0,k], R = R' cap [0,k],
// and [k+1,k'] is contained in both sL'+dR' and sR'+dL'.
bool fringe_pair_leq(const FringePair& fp1, const FringePair& fp2, const SdQuad& quad);

// (A cap [0,k], n - (A cap [n-k,n]); k). Requires 0 and n in A.
FringePair extract_fringe_pair(const RichContext& ctx);

// [k+1, 2n-k-1] subset of A+A.
bool is_rich(const RichContext& ctx);

// Rich and additionally [-n+k+1, n-k-1] subset of A-A.
bool is_affluent(const RichContext& ctx);

// Smallest k >= 1 with 2k < n such that A is rich at k; nullopt if none.
// Requires A inside [0,n] with 0 and n present.
std::optional<std::int64_t> minimal_fringe_k(const IntSet& A, std::int64_t n);

// Self-test of the rich-set interval law: [-dn+k+1, sn-k-1] subset of sA-dA.
// Requires s+d > 2 and a rich context (contract violations throw).
bool check_rich_interval(const RichContext& ctx, std::int64_t s, std::int64_t d);

// Both |(L+L) cap [0,k]| + |(R+R) cap [0,k]| > 2|(L+R) cap [0,k]| and the same
// for the complements of L and R in [0,k]. Complements must be nonempty.
bool is_bi_mstd_fringe_pair(const FringePair& fp);

// A+A and Ac+Ac both cover [k+1, 2n-k-1], where Ac = [0,n] \ A.
bool is_bi_rich(const RichContext& ctx);

// A and its hull complement are both MSTD. Complement must be nonempty.
bool is_bi_mstd(const IntSet& A);

} // namespace mstd
