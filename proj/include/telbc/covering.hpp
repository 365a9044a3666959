#ifndef TELBC_COVERING_HPP
#define TELBC_COVERING_HPP

#include <span>
#include <string>
#include <vector>

namespace telbc {

/// A prefix covering of a ground multiset by the numbers [m]. Entry i of
/// `assignment` lists the one or two numbers covering ground element i;
/// `unused` holds the rest of [m].
struct CoverWitness {
    int m = 0;
    std::vector<std::vector<int>> assignment;
    std::vector<int> unused;
};

/// A double prefix covering: c[i] in {0} u [m], d[i] in {0} u [m - beta],
/// positive values injective on each side, c[i] + d[i] >= ground[i].
struct DoubleCoverWitness {
    int m = 0;
    int beta = 0;
    std::vector<int> c;
    std::vector<int> d;
};

/// Empty string if `w` is a valid prefix covering of `ground`, otherwise the first problem found.
std::string check_cover(std::span<const int> ground, const CoverWitness& w);
inline bool is_valid_cover(std::span<const int> ground, const CoverWitness& w) {
    return check_cover(ground, w).empty();
}

std::string check_double_cover(std::span<const int> ground, const DoubleCoverWitness& w);
inline bool is_valid_double_cover(std::span<const int> ground, const DoubleCoverWitness& w) {
    return check_double_cover(ground, w).empty();
}

/// Exact minimum m for prefix covering, with a witness. Depth-first over the
/// ground elements in descending order; intended for small instances.
CoverWitness exact_prefix_cover(std::span<const int> ground);

/// Exact minimum m for double prefix covering with offset `beta`.
DoubleCoverWitness exact_double_prefix_cover(std::span<const int> ground, int beta);

/// Smallest m admitting injective single numbers c[i] >= ground[i].
int single_number_cover(std::span<const int> ground);

}  // namespace telbc

#endif
