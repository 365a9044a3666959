// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "support.hpp"

#include "telbc/bandwidth_dp.hpp"
#include "telbc/double_cover.hpp"
#include "telbc/io.hpp"
#include "telbc/oracle.hpp"
#include "telbc/prefix_cover.hpp"
#include "telbc/reductions.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace telbc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

Outcome worked_examples() {
    Outcome o;
    const std::vector<int> s{13, 8, 7, 6};
    const int pc = exact_prefix_cover(s).m;
    const int dpc = exact_double_prefix_cover(std::vector<int>{8, 4, 4, 2}, 2).m;
    const std::vector<int> ex1{123, 67, 65, 45, 43, 43, 43, 18, 12, 12, 10, 6, 4, 4, 1, 1};
    const auto rounded = round_multiset(ex1, 4).values();
    const std::vector<int> expect{123, 123, 123, 123, 43, 43, 43, 43, 12, 12, 12, 12, 4, 4, 4, 4};
    o.pass = pc == 8 && dpc == 5 && rounded == expect;
    o.detail = "prefix cover " + std::to_string(pc) + ", double cover " + std::to_string(dpc) + ", rounded {" +
               join(rounded) + "}";
    return o;
}

Outcome reduction_examples() {
    Outcome o;
    auto w = RN3DMInstance::make({1, 3, 4, 4});
    auto c = rn3dm_to_evenodd(w);
    auto sample2 = EvenOddInstance::make({7, 7, 9, 13});
    auto kc = evenodd_to_kcycle(sample2);
    const int n2 = build_k_cycle(kc.spec).graph.size();
    const Round r2 =
        validate_schedule(build_k_cycle(kc.spec).graph, certificate_to_schedule(sample2, {{4, 6, 2, 8}, {3, 1, 7, 5}}));
    auto kp = rn3dm_to_kpath(w);
    const auto g3 = build_k_path(kp.spec).graph;
    const Round r3 = validate_schedule(g3, certificate_to_schedule(w, {{4, 1, 3, 2}, {3, 4, 1, 2}}));
    o.pass = c.c == std::vector<int>{13, 9, 7, 7} && n2 == 37 && r2 == 8 && kc.target == 8 && g3.size() == 22 &&
             r3 == 5 && kp.target == 5;
    o.detail = "C={" + join(c.c) + "}, k-cycle n=" + std::to_string(n2) + " at " + std::to_string(r2) +
               ", k-path n=" + std::to_string(g3.size()) + " at " + std::to_string(r3);
    return o;
}

Outcome covering_equivalence() {
    Outcome o;
    std::mt19937_64 rng(101);
    int cycle_trials = 0, cycle_bad = 0;
    for (; cycle_trials < 200; ++cycle_trials) {
        auto spec = testing::random_kcycle(rng, 18);
        const int oracle = exact_broadcast_time(build_k_cycle(spec).graph, 0).rounds;
        cycle_bad += oracle != exact_prefix_cover(spec.lengths).m;
    }
    int path_trials = 0, path_bad = 0;
    for (int specs = 0; specs < 100; ++specs) {
        auto spec = testing::random_kpath(rng, 16);
        const auto g = build_k_path(spec).graph;
        const int dst = g.distances_from(0)[1];
        for (int alpha = 0; alpha <= dst; ++alpha, ++path_trials) {
            const int oracle = exact_broadcast_time_multi(g, {{0, 0}, {1, alpha}}).rounds;
            const int cover = exact_double_prefix_cover(spec.lengths, covering_offset(alpha)).m;
            path_bad += oracle != std::max(alpha, cover);
        }
    }
    o.pass = cycle_bad == 0 && path_bad == 0;
    o.detail = std::to_string(cycle_bad) + "/" + std::to_string(cycle_trials) + " k-cycle mismatches, " +
               std::to_string(path_bad) + "/" + std::to_string(path_trials) + " k-path (spec, alpha) mismatches";
    return o;
}

struct CoverCase {
    std::vector<int> s;
    int beta;
};

std::vector<CoverCase> covering_sweep() {
    std::mt19937_64 rng(202);
    std::vector<CoverCase> out;
    for (int i = 0; i < 200; ++i)
        out.push_back({testing::random_multiset(rng, 8, 30), testing::uniform(rng, 0, 5)});
    return out;
}

Outcome ptas_guarantee() {
    Outcome o;
    int runs = 0, bad = 0;
    double worst_single = 0, worst_double = 0;
    for (const auto& cc : covering_sweep()) {
        const double opt = exact_prefix_cover(cc.s).m;
        const double dopt = exact_double_prefix_cover(cc.s, cc.beta).m;
        for (int p = 2; p <= 4; ++p, ++runs) {
            auto a = ptas_prefix_cover(cc.s, p);
            auto b = ptas_double_prefix_cover(cc.s, cc.beta, p);
            const double ra = a.witness.m / opt;
            const double rb = b.witness.m / dopt;
            worst_single = std::max(worst_single, ra / prefix_cover_factor(p));
            worst_double = std::max(worst_double, rb / double_cover_factor(p));
            bad += !is_valid_cover(cc.s, a.witness) || ra > prefix_cover_factor(p) + 1e-12;
            bad += !is_valid_double_cover(cc.s, b.witness) || rb > double_cover_factor(p) + 1e-12;
        }
    }
    o.pass = bad == 0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d violations in %d runs x 2; worst ratio/factor %.3f single, %.3f double", bad,
                  runs, worst_single, worst_double);
    o.detail = buf;
    return o;
}

Outcome rounding_bounds() {
    Outcome o;
    int checked = 0, bad = 0;
    for (const auto& cc : covering_sweep()) {
        const int size = static_cast<int>(cc.s.size());
        const int opt = exact_prefix_cover(cc.s).m;
        const int dopt = exact_double_prefix_cover(cc.s, cc.beta).m;
        for (int p = 2; p <= 4; ++p) {
            const auto r = round_multiset(cc.s, p).values();
            bad += exact_prefix_cover(r).m > opt + 2 * part_size(size, p);
            bad += exact_double_prefix_cover(r, cc.beta).m > dopt + part_size(size, p);
            checked += 2;
        }
    }
    o.pass = bad == 0;
    o.detail = std::to_string(bad) + " violations in " + std::to_string(checked) + " checks";
    return o;
}

Outcome bandwidth_exactness() {
    Outcome o;
    std::mt19937_64 rng(303);
    int trials = 0, bad = 0, crossing = 0;
    for (; trials < 100; ++trials) {
        auto og = testing::random_low_bandwidth(rng, 14);
        const Vertex s = testing::uniform(rng, 0, og.graph.size() - 1);
        auto dp = dp_broadcast_general_source(og.graph, og.ordering, og.k, s);
        crossing += dp.cross_source_edges;
        bad += dp.rounds != exact_broadcast_time(og.graph, s).rounds ||
               validate_schedule(og.graph, dp.schedule) != dp.rounds;
    }
    o.pass = bad == 0;
    o.detail = std::to_string(bad) + "/" + std::to_string(trials) + " mismatches (" + std::to_string(crossing) +
               " with edges across the source)";
    return o;
}

Outcome tree_exactness() {
    Outcome o;
    std::mt19937_64 rng(404);
    int trials = 0, bad = 0;
    for (; trials < 200; ++trials) {
        auto t = testing::random_tree(rng, testing::uniform(rng, 1, 14));
        const Vertex s = testing::uniform(rng, 0, t.size() - 1);
        bad += tree_broadcast_time(t, s).rounds != exact_broadcast_time(t, s).rounds;
    }
    o.pass = bad == 0;
    o.detail = std::to_string(bad) + "/" + std::to_string(trials) + " mismatches";
    return o;
}

Outcome counting_bounds() {
    Outcome o;
    int schedules = 0, bad = 0;
    auto check = [&](const Graph& g, const BroadcastSchedule& sched, long long (*bound)(int)) {
        ++schedules;
        bad += first_count_violation(informed_count_profile(g.size(), sched), bound) != -1;
    };
    // every all-odd Even-Odd instance with m <= 2, every RN3DM instance with m <= 3 and values <= 2m + 1
    for (int m = 1; m <= 2; ++m) {
        const int total = m * (2 * m + 1);
        for (int a = 3; a <= total; a += 2) {
            std::vector<int> c{a};
            if (m == 2)
                c.push_back(total - a);
            if (std::accumulate(c.begin(), c.end(), 0) != total || c.back() < 3 || c.back() % 2 == 0)
                continue;
            auto red = evenodd_to_kcycle(EvenOddInstance::make(c));
            auto g = build_k_cycle(red.spec).graph;
            check(g, exact_broadcast_time(g, 0).schedule, kcycle_count_bound);
        }
    }
    for (int m = 1; m <= 3; ++m) {
        std::vector<int> w(m, 1);
        for (;;) {
            const long long total = std::accumulate(w.begin(), w.end(), 0LL) + m * (m + 1);
            if (total % m == 0) {
                auto inst = RN3DMInstance::make(w);
                if (*std::max_element(w.begin(), w.end()) < inst.e) {
                    auto red = rn3dm_to_kpath(inst);
                    auto g = build_k_path(red.spec).graph;
                    check(g, exact_broadcast_time(g, 0).schedule, kpath_count_bound);
                    if (auto cert = solve_rn3dm_small(inst))
                        check(g, certificate_to_schedule(inst, *cert), kpath_count_bound);
                }
            }
            int i = 0;
            while (i < m && ++w[i] > 2 * m + 1)
                w[i++] = 1;
            if (i == m)
                break;
        }
    }
    o.pass = bad == 0 && schedules > 0;
    o.detail = std::to_string(bad) + " violations over " + std::to_string(schedules) + " schedules";
    return o;
}

struct Shell {
    fs::path dir;
    std::string exe;

    int run(const std::string& args, std::string* out = nullptr) const {
        const auto capture = dir / "stdout.txt";
        const std::string cmd = "\"" + exe + "\" " + args + " > \"" + capture.string() + "\" 2> \"" +
                                (dir / "stderr.txt").string() + "\"";
        const int status = std::system(cmd.c_str());
        if (out) {
            std::ifstream in(capture);
            std::stringstream ss;
            ss << in.rdbuf();
            *out = ss.str();
        }
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    std::string path(const std::string& name) const { return "\"" + (dir / name).string() + "\""; }
};

int first_int(const std::string& text) { return std::atoi(text.c_str()); }

Outcome cli_pipeline() {
    Outcome o;
    Shell sh{fs::temp_directory_path() / ("telbc_acceptance_" + std::to_string(::getpid())), TELBC_CLI};
    fs::create_directories(sh.dir);
    std::string out;
    int failures = 0;
    auto step = [&](const std::string& args, std::string* text = nullptr) {
        const int code = sh.run(args, text);
        if (code != 0) {
            ++failures;
            o.detail += "[exit " + std::to_string(code) + ": " + args.substr(0, 40) + "] ";
        }
    };

    step("generate rn3dm --values 1,3,4,4 -o " + sh.path("w.json"));
    step("reduce " + sh.path("w.json") + " --to evenodd -o " + sh.path("c.json"));
    step("reduce " + sh.path("c.json") + " --to kcycle -o " + sh.path("sample2.json") + " --target-out " +
         sh.path("sample2.target.json"));
    step("solve " + sh.path("sample2.json") + " --algo kcycle-ptas --no-header -o " + sh.path("sample2.sched.json"));
    step("validate " + sh.path("sample2.json") + " " + sh.path("sample2.sched.json"), &out);
    const int sample2 = first_int(out);
    const int target2 = read_target((sh.dir / "sample2.target.json").string());

    step("reduce " + sh.path("w.json") + " --to kpath -o " + sh.path("sample3.json") + " --target-out " +
         sh.path("sample3.target.json"));
    step("solve " + sh.path("sample3.json") + " --algo kpath-ptas --no-header -o " + sh.path("sample3.sched.json"));
    step("validate " + sh.path("sample3.json") + " " + sh.path("sample3.sched.json"), &out);
    const int sample3 = first_int(out);
    const int target3 = read_target((sh.dir / "sample3.target.json").string());

    // the same seed twice must give byte-identical corpora and CSV
    std::string csv[2];
    for (int run = 0; run < 2; ++run) {
        const auto corpus = sh.dir / ("corpus" + std::to_string(run));
        fs::create_directories(corpus);
        for (int i = 0; i < 4; ++i)
            step("generate kcycle --count 3 --max-length 5 --seed " + std::to_string(7 + i) + " -o \"" +
                 (corpus / ("kc" + std::to_string(i) + ".json")).string() + "\"");
        step("bench \"" + corpus.string() + "\" --algos oracle,kcycle-ptas --p 3 --repeat 2 --no-timing", &csv[run]);
    }
    const bool stable = !csv[0].empty() && csv[0] == csv[1];

    o.pass = failures == 0 && sample2 == 8 && target2 == 8 && sample3 == 5 && target3 == 5 && stable;
    o.detail += "k-cycle " + std::to_string(sample2) + "/" + std::to_string(target2) + ", k-path " +
                std::to_string(sample3) + "/" + std::to_string(target3) + ", CSV " + (stable ? "stable" : "differs");
    fs::remove_all(sh.dir);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked-example goldens", 1, worked_examples},
        {2, "reduction goldens", 1, reduction_examples},
        {3, "covering-broadcast equivalence", 300, covering_equivalence},
        {4, "PTAS guarantee sweep", 300, ptas_guarantee},
        {5, "rounding bounds", 300, rounding_bounds},
        {6, "bandwidth DP exactness", 600, bandwidth_exactness},
        {7, "tree solver exactness", 120, tree_exactness},
        {8, "counting-bound validators", 300, counting_bounds},
        {9, "end-to-end CLI", 300, cli_pipeline},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = o.pass && secs <= c.limit_seconds;
        failed += !ok;
        std::printf("%s %d %s: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), secs, c.limit_seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
