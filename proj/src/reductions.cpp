#include "telbc/reductions.hpp"

#include "telbc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace telbc {

namespace {

bool is_permutation_of(std::vector<int> values, std::vector<int> ground) {
    std::sort(values.begin(), values.end());
    std::sort(ground.begin(), ground.end());
    return values == ground;
}

std::vector<int> range_step(int first, int last, int step) {
    std::vector<int> out;
    for (int v = first; v <= last; v += step)
        out.push_back(v);
    return out;
}

// Each internal vertex is charged to the neighbor of `hub` that starts its branch.
std::vector<Vertex> branch_roots(int n, const BroadcastSchedule& schedule, std::span<const Vertex> hubs) {
    std::vector<Vertex> parent(n, -1);
    for (const auto& c : schedule.calls)
        parent[c.callee] = c.caller;
    auto is_hub = [&](Vertex v) { return std::find(hubs.begin(), hubs.end(), v) != hubs.end(); };
    std::vector<Vertex> root(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (is_hub(v))
            continue;
        Vertex u = v;
        while (parent[u] >= 0 && !is_hub(parent[u]))
            u = parent[u];
        root[v] = u;
    }
    return root;
}

void chain_calls(BroadcastSchedule& sched, Vertex from, Round first, std::span<const Vertex> arc) {
    Round r = first;
    for (Vertex v : arc) {
        sched.calls.push_back({r++, from, v});
        from = v;
    }
}

}  // namespace

RN3DMInstance RN3DMInstance::make(std::vector<int> w) {
    if (w.empty())
        throw InvalidInput("RN3DM instance is empty");
    long long sum = 0;
    for (int v : w) {
        if (v < 1)
            throw InvalidInput("RN3DM values must be positive");
        sum += v;
    }
    const long long m = static_cast<long long>(w.size());
    const long long total = sum + m * (m + 1);
    if (total % m != 0)
        throw InvalidInput("sum(W) + m(m+1) = " + std::to_string(total) + " is not divisible by m = " +
                           std::to_string(m));
    RN3DMInstance inst;
    inst.w = std::move(w);
    inst.e = static_cast<int>(total / m);
    return inst;
}

EvenOddInstance EvenOddInstance::make(std::vector<int> c) {
    if (c.empty())
        throw InvalidInput("Even-Odd instance is empty");
    long long sum = 0;
    for (int v : c) {
        if (v < 1)
            throw InvalidInput("Even-Odd values must be positive");
        sum += v;
    }
    const long long m = static_cast<long long>(c.size());
    if (sum != m * (2 * m + 1))
        throw InvalidInput("sum(C) = " + std::to_string(sum) + ", expected m(2m+1) = " +
                           std::to_string(m * (2 * m + 1)));
    EvenOddInstance inst;
    inst.c = std::move(c);
    return inst;
}

bool EvenOddInstance::all_odd() const {
    return std::all_of(c.begin(), c.end(), [](int v) { return v % 2 == 1; });
}

bool verify_rn3dm(const RN3DMInstance& inst, const RN3DMCertificate& cert) {
    const int m = inst.m();
    if (static_cast<int>(cert.lambda.size()) != m || static_cast<int>(cert.mu.size()) != m)
        throw InvalidInput("certificate size does not match the instance");
    const auto ground = range_step(1, m, 1);
    if (!is_permutation_of(cert.lambda, ground) || !is_permutation_of(cert.mu, ground))
        return false;
    for (int i = 0; i < m; ++i)
        if (cert.lambda[i] + cert.mu[i] + inst.w[i] != inst.e)
            return false;
    return true;
}

bool verify_evenodd(const EvenOddInstance& inst, const EvenOddCertificate& cert) {
    const int m = inst.m();
    if (static_cast<int>(cert.alpha.size()) != m || static_cast<int>(cert.beta.size()) != m)
        throw InvalidInput("certificate size does not match the instance");
    if (!is_permutation_of(cert.alpha, range_step(2, 2 * m, 2)) ||
        !is_permutation_of(cert.beta, range_step(1, 2 * m - 1, 2)))
        return false;
    for (int i = 0; i < m; ++i)
        if (cert.alpha[i] + cert.beta[i] != inst.c[i])
            return false;
    return true;
}

EvenOddInstance rn3dm_to_evenodd(const RN3DMInstance& inst) {
    std::vector<int> c;
    for (int w : inst.w) {
        if (w >= inst.e)
            throw InvalidInput("w = " + std::to_string(w) + " >= e = " + std::to_string(inst.e) +
                               " leaves no room for lambda + mu");
        c.push_back(2 * inst.e - 2 * w - 1);
    }
    return EvenOddInstance::make(std::move(c));
}

EvenOddCertificate rn3dm_certificate_to_evenodd(const RN3DMCertificate& cert) {
    EvenOddCertificate out;
    for (int l : cert.lambda)
        out.alpha.push_back(2 * l);
    for (int u : cert.mu)
        out.beta.push_back(2 * u - 1);
    return out;
}

RN3DMCertificate evenodd_certificate_to_rn3dm(const EvenOddCertificate& cert) {
    RN3DMCertificate out;
    for (int a : cert.alpha)
        out.lambda.push_back(a / 2);
    for (int b : cert.beta)
        out.mu.push_back((b + 1) / 2);
    return out;
}

ReducedInstance<KCycleSpec> evenodd_to_kcycle(const EvenOddInstance& inst) {
    ReducedInstance<KCycleSpec> out;
    out.spec.lengths = inst.c;
    out.spec.validate();
    out.source = 0;
    out.target = 2 * inst.m();
    return out;
}

ReducedInstance<KPathSpec> rn3dm_to_kpath(const RN3DMInstance& inst) {
    ReducedInstance<KPathSpec> out;
    for (int w : inst.w)
        out.spec.lengths.push_back(inst.e - w);
    out.spec.st_edge = true;
    out.spec.validate();
    out.source = 0;
    out.target = inst.m() + 1;
    return out;
}

BroadcastSchedule certificate_to_schedule(const EvenOddInstance& inst, const EvenOddCertificate& cert) {
    if (!verify_evenodd(inst, cert))
        throw InvalidInput("certificate does not solve the Even-Odd instance");
    const auto built = build_k_cycle(evenodd_to_kcycle(inst).spec);
    const int m = inst.m();
    BroadcastSchedule sched;
    sched.sources = {{built.center, 0}};
    for (int i = 0; i < m; ++i) {
        const auto& arc = built.cycles[i];
        const int a = cert.alpha[i];
        chain_calls(sched, built.center, 2 * m - a + 1, std::span(arc).first(a));
        std::vector<Vertex> back(arc.rbegin(), arc.rend() - a);
        chain_calls(sched, built.center, 2 * m - cert.beta[i] + 1, back);
    }
    sched.normalize();
    return sched;
}

BroadcastSchedule certificate_to_schedule(const RN3DMInstance& inst, const RN3DMCertificate& cert) {
    if (!verify_rn3dm(inst, cert))
        throw InvalidInput("certificate does not solve the RN3DM instance");
    const auto built = build_k_path(rn3dm_to_kpath(inst).spec);
    const int m = inst.m();
    BroadcastSchedule sched;
    sched.sources = {{built.s, 0}};
    sched.calls.push_back({1, built.s, built.t});
    for (int j = 0; j < m; ++j) {
        const auto& path = built.paths[j];
        const int l = cert.lambda[j];
        chain_calls(sched, built.s, m + 2 - l, std::span(path).first(l));
        std::vector<Vertex> back(path.rbegin(), path.rend() - l);
        chain_calls(sched, built.t, m + 2 - cert.mu[j], back);
    }
    sched.normalize();
    return sched;
}

EvenOddCertificate schedule_to_certificate(const EvenOddInstance& inst, const BroadcastSchedule& schedule) {
    const auto reduced = evenodd_to_kcycle(inst);
    const auto built = build_k_cycle(reduced.spec);
    const Round done = validate_schedule(built.graph, schedule);
    if (done > reduced.target)
        throw NotTight("schedule completes in " + std::to_string(done) + " rounds, target is " +
                       std::to_string(reduced.target));
    const auto tight = compact_schedule(built.graph, schedule);
    const Vertex hubs[] = {built.center};
    const auto root = branch_roots(built.graph.size(), tight, hubs);
    EvenOddCertificate cert;
    for (const auto& arc : built.cycles) {
        int front = 0;
        for (Vertex v : arc)
            front += root[v] == arc.front();
        const int back = static_cast<int>(arc.size()) - front;
        cert.alpha.push_back(front % 2 == 0 ? front : back);
        cert.beta.push_back(front % 2 == 0 ? back : front);
    }
    return cert;
}

RN3DMCertificate schedule_to_certificate(const RN3DMInstance& inst, const BroadcastSchedule& schedule) {
    const auto reduced = rn3dm_to_kpath(inst);
    const auto built = build_k_path(reduced.spec);
    const Round done = validate_schedule(built.graph, schedule);
    if (done > reduced.target)
        throw NotTight("schedule completes in " + std::to_string(done) + " rounds, target is " +
                       std::to_string(reduced.target));
    const auto tight = compact_schedule(built.graph, schedule);
    std::vector<Vertex> parent(built.graph.size(), -1);
    for (const auto& c : tight.calls)
        parent[c.callee] = c.caller;
    const Vertex hubs[] = {built.s, built.t};
    const auto root = branch_roots(built.graph.size(), tight, hubs);
    RN3DMCertificate cert;
    for (const auto& path : built.paths) {
        int from_s = 0;
        for (Vertex v : path)
            from_s += parent[root[v]] == built.s;
        cert.lambda.push_back(from_s);
        cert.mu.push_back(static_cast<int>(path.size()) - from_s);
    }
    return cert;
}

std::optional<RN3DMCertificate> solve_rn3dm_small(const RN3DMInstance& inst) {
    const int m = inst.m();
    if (m > 7)
        throw InstanceTooLarge("RN3DM enumeration is limited to m <= 7, got " + std::to_string(m));
    RN3DMCertificate cert;
    cert.lambda = range_step(1, m, 1);
    cert.mu.resize(m);
    do {
        for (int i = 0; i < m; ++i)
            cert.mu[i] = inst.e - inst.w[i] - cert.lambda[i];
        if (verify_rn3dm(inst, cert))
            return cert;
    } while (std::next_permutation(cert.lambda.begin(), cert.lambda.end()));
    return std::nullopt;
}

std::optional<EvenOddCertificate> solve_evenodd_small(const EvenOddInstance& inst) {
    const int m = inst.m();
    if (m > 7)
        throw InstanceTooLarge("Even-Odd enumeration is limited to m <= 7, got " + std::to_string(m));
    if (!inst.all_odd())
        return std::nullopt;
    EvenOddCertificate cert;
    cert.alpha = range_step(2, 2 * m, 2);
    cert.beta.resize(m);
    do {
        for (int i = 0; i < m; ++i)
            cert.beta[i] = inst.c[i] - cert.alpha[i];
        if (verify_evenodd(inst, cert))
            return cert;
    } while (std::next_permutation(cert.alpha.begin(), cert.alpha.end()));
    return std::nullopt;
}

long long kcycle_count_bound(int round) { return 1 + static_cast<long long>(round) * (round + 1) / 2; }

long long kpath_count_bound(int round) {
    return round == 0 ? 1 : static_cast<long long>(round) * (round - 1) + 2;
}

int first_count_violation(const std::vector<int>& profile, long long (*bound)(int)) {
    for (int i = 0; i < static_cast<int>(profile.size()); ++i)
        if (profile[i] > bound(i))
            return i;
    return -1;
}

RN3DMInstance generate_rn3dm(int m, std::uint64_t seed, int cap) {
    if (m < 1)
        throw InvalidInput("m must be positive");
    if (cap < 2 * m - 1)
        throw InvalidInput("cap must be at least 2m - 1");
    std::mt19937_64 rng(seed);
    std::vector<int> lambda = range_step(1, m, 1);
    std::vector<int> mu = lambda;
    std::shuffle(lambda.begin(), lambda.end(), rng);
    std::shuffle(mu.begin(), mu.end(), rng);
    // w_i = e - lambda - mu lies in [e - 2m, e - 2]
    std::uniform_int_distribution<int> pick_e(2 * m + 1, cap + 2);
    const int e = pick_e(rng);
    std::vector<int> w;
    for (int i = 0; i < m; ++i)
        w.push_back(e - lambda[i] - mu[i]);
    return RN3DMInstance::make(std::move(w));
}

EvenOddInstance generate_evenodd(int m, std::uint64_t seed) {
    if (m < 1)
        throw InvalidInput("m must be positive");
    std::mt19937_64 rng(seed);
    auto alpha = range_step(2, 2 * m, 2);
    auto beta = range_step(1, 2 * m - 1, 2);
    std::shuffle(alpha.begin(), alpha.end(), rng);
    std::shuffle(beta.begin(), beta.end(), rng);
    std::vector<int> c;
    for (int i = 0; i < m; ++i)
        c.push_back(alpha[i] + beta[i]);
    return EvenOddInstance::make(std::move(c));
}

}  // namespace telbc
