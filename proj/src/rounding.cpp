#include "telbc/rounding.hpp"

#include "telbc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace telbc {

int part_size(int count, int p) {
    return count <= 0 ? 0 : (count + p - 1) / p;
}

std::vector<int> RoundedMultiset::values() const {
    std::vector<int> out;
    out.reserve(origin_size);
    for (const auto& part : parts)
        out.insert(out.end(), part.count, part.value);
    return out;
}

RoundedMultiset round_multiset(std::span<const int> values, int p) {
    if (p < 1)
        throw InvalidInput("rounding needs p >= 1");
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    RoundedMultiset out;
    out.p = p;
    out.origin_size = static_cast<int>(sorted.size());
    const int size = part_size(out.origin_size, p);
    for (int start = 0, part = 0; start < out.origin_size && part < p; ++part) {
        // the last part takes whatever remains
        int count = part + 1 == p ? out.origin_size - start : std::min(size, out.origin_size - start);
        out.parts.push_back({sorted[start], count});
        start += count;
    }
    return out;
}

RoundedMultiset round_prefix(int m, int p) {
    std::vector<int> prefix;
    for (int x = m; x >= 1; --x)
        prefix.push_back(x);
    return round_multiset(prefix, p);
}

int parts_for_epsilon(double epsilon) {
    if (!(epsilon > 0))
        throw InvalidInput("epsilon must be positive");
    return std::max(1, static_cast<int>(std::ceil(3.0 / (epsilon * epsilon) - 1e-12)));
}

}  // namespace telbc
