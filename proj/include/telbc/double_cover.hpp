#ifndef TELBC_DOUBLE_COVER_HPP
#define TELBC_DOUBLE_COVER_HPP

#include "telbc/covering.hpp"
#include "telbc/families.hpp"
#include "telbc/rounding.hpp"
#include "telbc/schedule.hpp"

#include <optional>
#include <span>
#include <vector>

namespace telbc {

/// Rank-level double covering of a rounded ground set: for the j-th largest
/// ground element, the rank of its C-side and D-side element (-1 for none).
struct RankedDoubleCover {
    std::vector<int> c_rank;
    std::vector<int> d_rank;
};

/// Exact decision whether one element of `c_side` plus one element of
/// `d_side` (either may be omitted) can cover each ground element, using
/// every element at most once.
std::optional<RankedDoubleCover> feasible_double_cover_rounded(const RoundedMultiset& ground,
                                                               const RoundedMultiset& c_side,
                                                               const RoundedMultiset& d_side);

/// Stretches a covering by round_prefix(m, p) / round_prefix(m - beta, p)
/// onto [m'] / [m' - beta] with m' = m + ceil(m/p).
DoubleCoverWitness lift_double_cover(const RankedDoubleCover& cover, std::span<const int> ground, int m, int beta,
                                     int p);

/// Compacts a valid witness into smaller prefixes while it stays valid.
DoubleCoverWitness shrink_double_cover(std::span<const int> ground, DoubleCoverWitness witness);

struct DoublePrefixCoverResult {
    int p = 1;
    int rounded_m = 0;
    int lifted_m = 0;
    double guarantee = 1.0;
    DoubleCoverWitness witness;
};

/// Rounding scheme for double prefix covering with p parts.
DoublePrefixCoverResult ptas_double_prefix_cover(std::span<const int> ground, int beta, int p);

/// Schedule on build_k_path(spec) with sources (s, 0) and (t, alpha). A
/// source informed at round alpha first calls in round alpha + 1, so the
/// witness offset must equal alpha: s calls path i at round m - c(i) + 1 and
/// t at round m - d(i) + 1, then every informed vertex forwards.
BroadcastSchedule double_cover_to_schedule(const KPathSpec& spec, const DoubleCoverWitness& witness, Round alpha);

/// Covering offset for a late source informed at round `alpha`.
inline int covering_offset(Round alpha) { return alpha; }

enum class ReductionCase {
    Direct,  // originator is an endpoint
    CaseI,   // far endpoint reached along the originator's own path
    CaseII,  // far endpoint reached from the near endpoint via the shortest other route
};

/// Residual double-source instance left after the forced opening moves from
/// an arbitrary originator. Times in the residual instance start at
/// `prefix_rounds`: the near endpoint is free to call from prefix_rounds + 1
/// and the far endpoint is informed at prefix_rounds + alpha.
struct DoubleSourceInstance {
    KPathSpec residual;                 // remaining paths with internal vertices, no s-t edge
    std::vector<int> residual_paths;    // indices into the original spec
    Round alpha = 0;
    Round prefix_rounds = 0;
    ReductionCase reduction = ReductionCase::Direct;
    bool swapped = false;               // near endpoint is t
    int originator_path = -1;           // path holding the originator, -1 for an endpoint
    int relay_path = -1;                // Case II / Direct route; -1 with a direct edge
    BroadcastSchedule prefix;           // forced calls, full-graph vertex ids
};

DoubleSourceInstance reduce_single_source(const KPathSpec& spec, Vertex originator);

struct KPathBroadcastResult {
    BroadcastSchedule schedule;
    Round rounds = 0;
    int p = 1;
    double guarantee = 1.0;
    DoubleSourceInstance reduction;
};

/// Approximate broadcast on a k-path graph from any vertex.
KPathBroadcastResult kpath_broadcast_ptas(const KPathSpec& spec, Vertex originator, int p);

}  // namespace telbc

#endif
