#ifndef TELBC_ROUNDING_HPP
#define TELBC_ROUNDING_HPP

#include <span>
#include <vector>

namespace telbc {

/// One part of a rounded multiset: `count` copies of the part maximum.
struct RoundedPart {
    int value = 0;
    int count = 0;
    bool operator==(const RoundedPart&) const = default;
};

/// A multiset sorted non-increasingly, cut into consecutive parts of
/// ceil(|S|/p) elements (the last part takes the remainder), with every
/// element replaced by its part maximum. Empty trailing parts are dropped.
struct RoundedMultiset {
    std::vector<RoundedPart> parts;
    int origin_size = 0;
    int p = 1;

    /// Rounded elements, non-increasing.
    std::vector<int> values() const;
    int support() const { return static_cast<int>(parts.size()); }
};

/// ceil(count / p)
int part_size(int count, int p);

RoundedMultiset round_multiset(std::span<const int> values, int p);

/// Rounding of the prefix set [m] = {m, m-1, ..., 1}; empty when m <= 0.
RoundedMultiset round_prefix(int m, int p);

/// Value given to the element of rank `rank` (0 = largest) of [m] when a
/// covering by round_prefix(m, p) is stretched onto [m + ceil(m/p)].
inline int lifted_value(int rank, int m, int p) { return m + part_size(m, p) - rank; }

/// Smallest number of parts with (1 + 2/p)(1 + 1/p) guarantee target, i.e. ceil(3 / eps^2).
int parts_for_epsilon(double epsilon);

/// Guarantee factors implied by p.
inline double prefix_cover_factor(int p) { return (1.0 + 2.0 / p) * (1.0 + 1.0 / p); }
inline double double_cover_factor(int p) { return (1.0 + 1.0 / p) * (1.0 + 1.0 / p); }

}  // namespace telbc

#endif
