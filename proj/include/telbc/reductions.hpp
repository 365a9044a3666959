#ifndef TELBC_REDUCTIONS_HPP
#define TELBC_REDUCTIONS_HPP

#include "telbc/families.hpp"
#include "telbc/schedule.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace telbc {

/// A schedule handed to certificate extraction misses the tight target.
class NotTight : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// W with sum(W) + m(m+1) = m e.
struct RN3DMInstance {
    std::vector<int> w;
    int e = 0;

    /// Checks positivity and the divisibility condition, derives e.
    static RN3DMInstance make(std::vector<int> w);
    int m() const { return static_cast<int>(w.size()); }
};

/// C with sum(C) = m(2m+1). Even elements are allowed but make it a no-instance.
struct EvenOddInstance {
    std::vector<int> c;

    static EvenOddInstance make(std::vector<int> c);
    int m() const { return static_cast<int>(c.size()); }
    bool all_odd() const;
};

/// lambda and mu, 1-based values, one entry per element of W.
struct RN3DMCertificate {
    std::vector<int> lambda;
    std::vector<int> mu;
    bool operator==(const RN3DMCertificate&) const = default;
};

/// alpha over the evens and beta over the odds of [2m], one entry per element of C.
struct EvenOddCertificate {
    std::vector<int> alpha;
    std::vector<int> beta;
    bool operator==(const EvenOddCertificate&) const = default;
};

bool verify_rn3dm(const RN3DMInstance& inst, const RN3DMCertificate& cert);
bool verify_evenodd(const EvenOddInstance& inst, const EvenOddCertificate& cert);

/// c_i = 2e - 2w_i - 1, element order kept.
EvenOddInstance rn3dm_to_evenodd(const RN3DMInstance& inst);
EvenOddCertificate rn3dm_certificate_to_evenodd(const RN3DMCertificate& cert);
RN3DMCertificate evenodd_certificate_to_rn3dm(const EvenOddCertificate& cert);

/// Broadcasting instance produced by a reduction: source s, decide rounds <= target.
template <class Family>
struct ReducedInstance {
    Family spec;
    Vertex source = 0;
    Round target = 0;
};

/// k-cycle with cycle lengths C around the source, target 2m.
ReducedInstance<KCycleSpec> evenodd_to_kcycle(const EvenOddInstance& inst);
/// k-path with path lengths e - w_i plus an s-t edge, source s, target m + 1.
ReducedInstance<KPathSpec> rn3dm_to_kpath(const RN3DMInstance& inst);

/// The center calls the front of cycle i at 2m - alpha(i) + 1 and its back
/// at 2m - beta(i) + 1; every informed vertex forwards along its arc.
BroadcastSchedule certificate_to_schedule(const EvenOddInstance& inst, const EvenOddCertificate& cert);
/// s calls t in round 1, then s and t enter path j at rounds m + 2 - lambda(j)
/// and m + 2 - mu(j).
BroadcastSchedule certificate_to_schedule(const RN3DMInstance& inst, const RN3DMCertificate& cert);

/// Reads the certificate off a schedule meeting the target. The schedule is
/// first compacted so every vertex calls as early as possible. Throws
/// NotTight when the completion exceeds the target.
EvenOddCertificate schedule_to_certificate(const EvenOddInstance& inst, const BroadcastSchedule& schedule);
RN3DMCertificate schedule_to_certificate(const RN3DMInstance& inst, const BroadcastSchedule& schedule);

/// Exhaustive search over lambda in lexicographic order (mu is forced), m <= 7.
std::optional<RN3DMCertificate> solve_rn3dm_small(const RN3DMInstance& inst);
std::optional<EvenOddCertificate> solve_evenodd_small(const EvenOddInstance& inst);

/// Most vertices informed by round i on a reduced k-cycle / k-path instance.
long long kcycle_count_bound(int round);
long long kpath_count_bound(int round);

/// First round whose informed count exceeds `bound`, or -1.
int first_count_violation(const std::vector<int>& profile, long long (*bound)(int));

/// Planted yes-instances: random permutations and e, values at most `cap`.
RN3DMInstance generate_rn3dm(int m, std::uint64_t seed, int cap);
EvenOddInstance generate_evenodd(int m, std::uint64_t seed);

}  // namespace telbc

#endif
