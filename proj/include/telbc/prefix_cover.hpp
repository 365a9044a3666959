#ifndef TELBC_PREFIX_COVER_HPP
#define TELBC_PREFIX_COVER_HPP

#include "telbc/covering.hpp"
#include "telbc/families.hpp"
#include "telbc/rounding.hpp"
#include "telbc/schedule.hpp"

#include <optional>
#include <span>
#include <vector>

namespace telbc {

/// Covering of a rounded ground multiset by a rounded covering multiset,
/// expressed in ranks: entry j lists the ranks (0 = largest) of the covering
/// elements assigned to the j-th largest ground element.
struct RankedCover {
    std::vector<std::vector<int>> ranks;
};

/// Exact decision whether `cover` (each element used at most once, at most
/// two per ground element) covers `ground`. Searches over counts of each
/// cover value with dominance pruning and a memo on remaining supply.
std::optional<RankedCover> feasible_cover_rounded(const RoundedMultiset& ground, const RoundedMultiset& cover);

/// Stretches a covering by round_prefix(m, p) onto [m + ceil(m/p)] and maps
/// it back onto `ground` (original element order).
CoverWitness lift_cover(const RankedCover& cover, std::span<const int> ground, int m, int p);

/// Tries to fit a valid witness into a smaller prefix by compacting its used
/// numbers downwards; returns the smallest valid variant found.
CoverWitness shrink_cover(std::span<const int> ground, CoverWitness witness);

struct PrefixCoverResult {
    int p = 1;
    int rounded_m = 0;  // smallest m whose rounded prefix covers the rounded ground set
    int lifted_m = 0;   // rounded_m + ceil(rounded_m / p)
    double guarantee = 1.0;
    CoverWitness witness;  // over [witness.m], witness.m <= lifted_m
};

/// Rounding scheme for prefix covering with p parts.
PrefixCoverResult ptas_prefix_cover(std::span<const int> ground, int p);

/// Broadcast schedule on build_k_cycle(spec) from the center realizing a
/// covering: the center calls the arc ends of cycle i at rounds m - x + 1 for
/// each covering number x, and every informed vertex forwards along its arc.
BroadcastSchedule kcycle_cover_to_schedule(const KCycleSpec& spec, const CoverWitness& witness);

struct KCycleBroadcastResult {
    BroadcastSchedule schedule;
    Round rounds = 0;
    int p = 1;
    double guarantee = 1.0;
};

/// Approximate broadcast on a k-cycle graph from any vertex. A non-center
/// originator first reaches the center along its shorter arc while sending
/// the other way too; the center then finishes the originator's cycle and
/// runs the covering scheme on the other cycles.
KCycleBroadcastResult kcycle_broadcast_ptas(const KCycleSpec& spec, Vertex originator, int p);

}  // namespace telbc

#endif
