#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mstd/fringe.hpp"
#include "mstd/intset.hpp"

namespace mstd {

// Parameters of the two-block right fringe R = [0,m] cup {q}.
struct ZeroMqParams {
    std::int64_t m = 1;
    std::int64_t q = 3;
};

// Result of a difference-target scan: the clipped fringe pair, the index
// where the scan profile hits the target, and the whole profile (indexed
// by k from 0).
struct DiffScanResult {
    FringePair fringe;
    std::int64_t k_hit = 0;
    std::int64_t target_x = 0;
    std::vector<std::int64_t> profile;
};

// k-fold sumset of [0,m] cup {q} by closed form: union over i of
// [i*q, i*q + (k-i)*m]. Equals h_fold([0,m] cup {q}, k).
IntSet zero_mq_kfold(const ZeroMqParams& p, std::int64_t k);

// ({0}, {0,1,3}; 6k), self-verified: for each j in 1..k the pair beats
// the (2j,0,j,j) comparison inside [0,6k].
FringePair kgen_fringe_pair(std::int64_t k);

// {0} cup [6k+1, 12k+1] cup (18k+2 - {0,1,3}); 6k+5 elements, rich, and
// j-fold MSTD for every j in 1..k (self-verified).
IntSet kgen_set(std::int64_t k);

// For every j in 1..k: |(2j)A| > |jA - jA|.
bool is_k_generational(const IntSet& A, std::int64_t k);

// ({0}, {0,1,q}; q^2), self-verified against every quadruple with s+d <= q.
FringePair super_kgen_fringe_pair(std::int64_t q);

// {0} cup [k+1, 2k+2] cup (3k+3 - {0,1,q}) with k = q^2; q^2+6 elements,
// self-verified: middle coverage plus every quadruple with s+d <= q.
IntSet super_kgen_set(std::int64_t q);

// All quadruples with s+d <= q_max, ordered by (s+d asc, s desc, sigma desc).
std::vector<SdQuad> quadruples(std::int64_t q_max);

// C = A1 + m*A2 + ... + m^(k-1)*Ak with m = k*max(union) + 1; requires k
// positive-integer sets. |sC-dC| = prod |sAj-dAj| for all s+d <= k.
IntSet base_expand(const std::vector<IntSet>& sets, std::int64_t k);

// Boundary-count profile f(k) for L={0}, R=[0,m] cup {q}, k = 0..s*q:
// f(k) = |dR cap [0,k]| + |sR cap [0,k]| - |deltaR cap [0,k]| - |sigmaR cap [0,k]|.
// Requires q > (s+d)*m.
std::vector<std::int64_t> f_scan(const SdQuad& quad, std::int64_t m, std::int64_t q);

// Boundary-count profile g(k) for L=[0,m], R=[0,m] cup {q}, k = 0..(s+d)*q:
// g(k) = |(sL+dR) cap| + |(dL+sR) cap| - |(sigmaL+deltaR) cap| - |(deltaL+sigmaR) cap|.
// Requires q > (s+d)*m.
std::vector<std::int64_t> g_scan(const SdQuad& quad, std::int64_t m, std::int64_t q);

// Finds a fringe pair whose excess equals x for the given quadruple, by
// scanning f (x >= 0) or g (x < 0) with m = max(|x|,1), q = (s+d)m + 1.
// The returned fringe is clipped to [0, k_hit].
DiffScanResult find_diff_fringe(std::int64_t x, const SdQuad& quad);

// ({0}, [0,m] cup {q}; 2q) with excess +m, and ([0,m], [0,m] cup {q}; 2q)
// with excess -m, both for the (2,0,1,1) comparison. Require q > 2m.
FringePair pos_diff_fringe(std::int64_t m, std::int64_t q);
FringePair neg_diff_fringe(std::int64_t m, std::int64_t q);

// A = L cup [k+1, n-k-1] cup (n - R); defaults n = 3k+3 and doubles (up to
// 16k) until the result is affluent with fringe pair fp. An explicit n is
// honored as a single attempt.
IntSet realize_affluent_set(const FringePair& fp, std::optional<std::int64_t> n = std::nullopt);

} // namespace mstd
