#include "telbc/bandwidth_dp.hpp"
#include "telbc/double_cover.hpp"
#include "telbc/io.hpp"
#include "telbc/oracle.hpp"
#include "telbc/prefix_cover.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace telbc;
namespace fs = std::filesystem;

namespace {

enum Exit { Ok = 0, ValidationFailed = 1, Usage = 2, CapExceeded = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const char* kCsvHeader = "instance,algo,epsilon,p,k,rounds,lower_bound,oracle,ratio,ms";

struct SolveOptions {
    std::string algo = "oracle";
    double epsilon = 0.5;
    int p = 0;  // 0: derived from epsilon
    int k = 0;  // 0: achieved bandwidth of the ordering
    int source = -1;
    bool with_oracle = false;
    bool timing = true;
};

struct RunRecord {
    std::string instance;
    std::string algo;
    std::string epsilon, p, k;
    std::string rounds;
    std::string lower_bound;
    std::string oracle;
    std::string ratio;
    std::string ms;
    BroadcastSchedule schedule;

    std::string csv() const {
        std::ostringstream out;
        out << instance << ',' << algo << ',' << epsilon << ',' << p << ',' << k << ',' << rounds << ','
            << lower_bound << ',' << oracle << ',' << ratio << ',' << ms;
        return out.str();
    }
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Vertex default_source(const Instance& inst) {
    (void)inst;
    return 0;  // k-cycle center, k-path s, vertex 0 otherwise
}

int effective_p(const SolveOptions& opt) { return opt.p > 0 ? opt.p : parts_for_epsilon(opt.epsilon); }

RunRecord solve(const Instance& inst, const std::string& id, const SolveOptions& opt) {
    const Graph g = instance_graph(inst);
    require_connected(g);
    const Vertex source = opt.source >= 0 ? opt.source : default_source(inst);
    if (!g.contains(source))
        throw InvalidInput("source " + std::to_string(source) + " is not a vertex");

    RunRecord rec;
    rec.instance = id;
    rec.algo = opt.algo;
    const auto start = std::chrono::steady_clock::now();
    if (opt.algo == "oracle") {
        rec.schedule = exact_broadcast_time(g, source).schedule;
    } else if (opt.algo == "tree") {
        rec.schedule = tree_broadcast_time(g, source).schedule;
    } else if (opt.algo == "kcycle-ptas" || opt.algo == "kpath-ptas") {
        const int p = effective_p(opt);
        rec.p = std::to_string(p);
        if (opt.p == 0)
            rec.epsilon = fixed(opt.epsilon, 4);
        if (opt.algo == "kcycle-ptas") {
            auto* spec = std::get_if<KCycleSpec>(&inst);
            if (!spec)
                throw UsageError("kcycle-ptas needs a kcycle instance, got " + instance_type(inst));
            rec.schedule = kcycle_broadcast_ptas(*spec, source, p).schedule;
        } else {
            auto* spec = std::get_if<KPathSpec>(&inst);
            if (!spec)
                throw UsageError("kpath-ptas needs a kpath instance, got " + instance_type(inst));
            rec.schedule = kpath_broadcast_ptas(*spec, source, p).schedule;
        }
    } else if (opt.algo == "bandwidth-dp") {
        std::vector<Vertex> ordering;
        auto* general = std::get_if<GeneralInstance>(&inst);
        if (general && general->ordering)
            ordering = *general->ordering;
        else
            ordering = cuthill_mckee_ordering(g);
        const int achieved = ordering_bandwidth(g, ordering);
        const int k = opt.k > 0 ? opt.k : std::max(1, achieved);
        if (achieved > k)
            throw InvalidInput("ordering has bandwidth " + std::to_string(achieved) + " > k = " + std::to_string(k));
        rec.k = std::to_string(k);
        rec.schedule = dp_broadcast_general_source(g, ordering, k, source).schedule;
    } else {
        throw UsageError("unknown algorithm '" + opt.algo + "'");
    }
    const auto stop = std::chrono::steady_clock::now();
    const Round rounds = validate_schedule(g, rec.schedule);
    rec.rounds = std::to_string(rounds);
    rec.lower_bound = std::to_string(broadcast_lower_bound(g, source));
    rec.ms = opt.timing ? fixed(std::chrono::duration<double, std::milli>(stop - start).count(), 3) : "0";
    if (opt.with_oracle) {
        const Round best = opt.algo == "oracle" ? rounds : exact_broadcast_time(g, source).rounds;
        rec.oracle = std::to_string(best);
        rec.ratio = fixed(best > 0 ? static_cast<double>(rounds) / best : 1.0, 4);
    }
    return rec;
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + text);
        }
    }
    if (out.empty())
        throw UsageError("empty integer list");
    return out;
}

void emit_json(const std::string& out, const nlohmann::json& j) {
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out, j);
}

struct GenerateOptions {
    std::string family;
    std::string lengths;
    bool st_edge = false;
    std::string sizes;
    int count = 3;
    int max_length = 6;
    int n = 10;
    int k = 2;
    double density = 0.5;
    int m = 4;
    int cap = 0;
    std::string values;
    std::uint64_t seed = 1;
    std::string out;
};

std::vector<int> random_lengths(std::mt19937_64& rng, int count, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<int> out(count);
    for (int& v : out)
        v = pick(rng);
    return out;
}

Instance generate(const GenerateOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const auto& f = opt.family;
    if (f == "kcycle") {
        KCycleSpec s{opt.lengths.empty() ? random_lengths(rng, opt.count, 2, std::max(2, opt.max_length))
                                         : parse_list(opt.lengths)};
        s.validate();
        return s;
    }
    if (f == "kpath") {
        KPathSpec s{opt.lengths.empty() ? random_lengths(rng, opt.count, 1, std::max(1, opt.max_length))
                                        : parse_list(opt.lengths),
                    opt.st_edge};
        s.validate();
        return s;
    }
    if (f == "necklace") {
        auto sizes = opt.sizes.empty() ? random_lengths(rng, opt.count, 3, std::max(3, opt.max_length))
                                       : parse_list(opt.sizes);
        return GeneralInstance{make_necklace(sizes), necklace_ordering(sizes)};
    }
    if (f == "random-bandwidth") {
        if (opt.n < 1 || opt.k < 1)
            throw UsageError("random-bandwidth needs n >= 1 and k >= 1");
        std::vector<Vertex> ordering(opt.n);
        std::iota(ordering.begin(), ordering.end(), 0);
        std::shuffle(ordering.begin(), ordering.end(), rng);
        std::bernoulli_distribution keep(opt.density);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < opt.n; ++i)
            for (int j = i + 1; j <= std::min(opt.n - 1, i + opt.k); ++j)
                if (j == i + 1 || keep(rng))
                    edges.emplace_back(ordering[i], ordering[j]);
        return GeneralInstance{Graph(opt.n, std::move(edges)), ordering};
    }
    if (f == "rn3dm")
        return opt.values.empty() ? generate_rn3dm(opt.m, opt.seed, opt.cap > 0 ? opt.cap : 4 * opt.m)
                                  : RN3DMInstance::make(parse_list(opt.values));
    if (f == "evenodd")
        return opt.values.empty() ? generate_evenodd(opt.m, opt.seed) : EvenOddInstance::make(parse_list(opt.values));
    throw UsageError("unknown family '" + f + "'");
}

struct ReduceOptions {
    std::string input;
    std::string to;
    std::string out;
    std::string target_out;
    std::string certificate;
    std::string schedule_out;
};

int reduce(const ReduceOptions& opt) {
    const Instance inst = read_instance(opt.input);
    Instance result;
    Round target = -1;
    std::optional<BroadcastSchedule> certified;
    std::optional<nlohmann::json> cert_json;
    if (!opt.certificate.empty())
        cert_json = read_json_file(opt.certificate);

    auto rn3dm_cert = [&](const nlohmann::json& j) {
        return RN3DMCertificate{j.at("lambda").get<std::vector<int>>(), j.at("mu").get<std::vector<int>>()};
    };
    auto evenodd_cert = [&](const nlohmann::json& j) {
        return EvenOddCertificate{j.at("alpha").get<std::vector<int>>(), j.at("beta").get<std::vector<int>>()};
    };

    if (auto* w = std::get_if<RN3DMInstance>(&inst)) {
        if (opt.to == "evenodd") {
            result = rn3dm_to_evenodd(*w);
        } else if (opt.to == "kpath") {
            auto red = rn3dm_to_kpath(*w);
            result = red.spec;
            target = red.target;
            if (cert_json)
                certified = certificate_to_schedule(*w, rn3dm_cert(*cert_json));
        } else if (opt.to == "kcycle") {
            auto c = rn3dm_to_evenodd(*w);
            auto red = evenodd_to_kcycle(c);
            result = red.spec;
            target = red.target;
            if (cert_json)
                certified = certificate_to_schedule(c, rn3dm_certificate_to_evenodd(rn3dm_cert(*cert_json)));
        } else {
            throw UsageError("rn3dm reduces to evenodd, kcycle or kpath, not '" + opt.to + "'");
        }
    } else if (auto* c = std::get_if<EvenOddInstance>(&inst)) {
        if (opt.to != "kcycle")
            throw UsageError("evenodd reduces to kcycle only, not '" + opt.to + "'");
        auto red = evenodd_to_kcycle(*c);
        result = red.spec;
        target = red.target;
        if (cert_json)
            certified = certificate_to_schedule(*c, evenodd_cert(*cert_json));
    } else {
        throw UsageError("cannot reduce a '" + instance_type(inst) + "' instance");
    }

    emit_json(opt.out, instance_to_json(result));
    if (target >= 0 && !opt.target_out.empty())
        write_json_file(opt.target_out, {{"target", target}});
    if (certified && !opt.schedule_out.empty())
        write_json_file(opt.schedule_out, schedule_to_json(*certified));
    if (target >= 0) {
        const Graph g = instance_graph(result);
        std::cerr << "n=" << g.size() << " target=" << target << '\n';
    }
    return Ok;
}

struct BenchOptions {
    std::string corpus;
    std::string algos = "oracle";
    int repeat = 1;
    SolveOptions solve;
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int bench(const BenchOptions& opt) {
    if (!fs::is_directory(opt.corpus))
        throw UsageError("not a directory: " + opt.corpus);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    const auto algos = split_names(opt.algos);
    const bool with_oracle = std::find(algos.begin(), algos.end(), "oracle") != algos.end();

    std::cout << kCsvHeader << '\n';
    for (const auto& file : files) {
        const std::string id = file.stem().string();
        std::optional<Instance> inst;
        std::string load_error;
        try {
            inst = read_instance(file.string());
        } catch (const std::exception& e) {
            load_error = "error:invalid";
        }
        for (const auto& algo : algos) {
            for (int r = 0; r < opt.repeat; ++r) {
                SolveOptions so = opt.solve;
                so.algo = algo;
                so.with_oracle = with_oracle;
                RunRecord rec;
                rec.instance = id;
                rec.algo = algo;
                if (!inst) {
                    rec.rounds = load_error;
                } else {
                    try {
                        rec = solve(*inst, id, so);
                    } catch (const InstanceTooLarge&) {
                        rec.rounds = "error:cap";
                    } catch (const BudgetExceeded&) {
                        rec.rounds = "error:budget";
                    } catch (const UsageError&) {
                        rec.rounds = "error:incompatible";
                    } catch (const std::exception&) {
                        rec.rounds = "error:invalid";
                    }
                }
                std::cout << rec.csv() << '\n';
            }
        }
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Telephone broadcasting solvers for k-cycle, k-path and bounded-bandwidth graphs"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* cmd_gen = app.add_subcommand(
        "generate",
        "Write an instance. kcycle/kpath: --lengths, or --count lengths uniform in [2|1, --max-length]. "
        "necklace: --sizes, or --count sizes uniform in [3, --max-length]. random-bandwidth: random "
        "ordering of --n vertices, consecutive positions always joined, other pairs within --k kept with "
        "probability --density. rn3dm: planted yes-instance from uniform permutations, e uniform in "
        "[2m+1, cap+2]. evenodd: planted from uniform permutations of the evens and odds of [2m].");
    cmd_gen->add_option("family", gen.family, "kcycle|kpath|necklace|random-bandwidth|rn3dm|evenodd")->required();
    cmd_gen->add_option("--lengths", gen.lengths, "comma-separated path or cycle lengths");
    cmd_gen->add_flag("--st-edge", gen.st_edge, "add a direct s-t edge");
    cmd_gen->add_option("--sizes", gen.sizes, "necklace cycle sizes");
    cmd_gen->add_option("--count", gen.count, "number of random cycles or paths");
    cmd_gen->add_option("--max-length", gen.max_length, "largest random length");
    cmd_gen->add_option("--n", gen.n, "vertices");
    cmd_gen->add_option("--k", gen.k, "bandwidth");
    cmd_gen->add_option("--density", gen.density, "edge probability")->check(CLI::Range(0.0, 1.0));
    cmd_gen->add_option("--m", gen.m, "RN3DM / Even-Odd size");
    cmd_gen->add_option("--cap", gen.cap, "largest RN3DM value (default 4m)");
    cmd_gen->add_option("--values", gen.values, "explicit W or C for rn3dm/evenodd");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    cmd_gen->add_option("-o,--out", gen.out, "output file (default stdout)");

    std::string solve_input;
    std::string solve_out;
    bool solve_no_header = false;
    SolveOptions sopt;
    auto* cmd_solve = app.add_subcommand("solve", "Solve a broadcasting instance and print a CSV record");
    cmd_solve->add_option("instance", solve_input)->required();
    cmd_solve->add_option("--algo", sopt.algo, "oracle|tree|kcycle-ptas|kpath-ptas|bandwidth-dp");
    cmd_solve->add_option("--epsilon", sopt.epsilon, "accuracy, p = ceil(3/eps^2)");
    cmd_solve->add_option("--p", sopt.p, "number of rounding parts, overrides --epsilon");
    cmd_solve->add_option("--k", sopt.k, "bandwidth for bandwidth-dp");
    cmd_solve->add_option("--source", sopt.source, "originator (default 0)");
    cmd_solve->add_flag("--with-oracle", sopt.with_oracle, "also run the exact search");
    cmd_solve->add_option("-o,--out", solve_out, "schedule output file");
    cmd_solve->add_flag("--no-header", solve_no_header);
    bool solve_no_timing = false;
    cmd_solve->add_flag("--no-timing", solve_no_timing, "report 0 ms");

    std::string val_instance, val_schedule;
    auto* cmd_val = app.add_subcommand("validate", "Check a schedule and print its completion round");
    cmd_val->add_option("instance", val_instance)->required();
    cmd_val->add_option("schedule", val_schedule)->required();

    ReduceOptions ropt;
    auto* cmd_red = app.add_subcommand("reduce", "Map an rn3dm/evenodd instance to a broadcasting instance");
    cmd_red->add_option("instance", ropt.input)->required();
    cmd_red->add_option("--to", ropt.to, "evenodd|kcycle|kpath")->required();
    cmd_red->add_option("-o,--out", ropt.out, "reduced instance (default stdout)");
    cmd_red->add_option("--target-out", ropt.target_out, "target round side file");
    cmd_red->add_option("--certificate", ropt.certificate, "certificate file ({lambda,mu} or {alpha,beta})");
    cmd_red->add_option("--schedule-out", ropt.schedule_out, "schedule built from the certificate");

    BenchOptions bopt;
    bool bench_no_timing = false;
    auto* cmd_bench = app.add_subcommand("bench", "Run algorithms over a directory of instances");
    cmd_bench->add_option("corpus", bopt.corpus)->required();
    cmd_bench->add_option("--algos", bopt.algos, "comma-separated algorithms");
    cmd_bench->add_option("--repeat", bopt.repeat)->check(CLI::PositiveNumber);
    cmd_bench->add_option("--epsilon", bopt.solve.epsilon);
    cmd_bench->add_option("--p", bopt.solve.p);
    cmd_bench->add_option("--k", bopt.solve.k);
    cmd_bench->add_flag("--no-timing", bench_no_timing, "report 0 ms for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    try {
        if (*cmd_gen) {
            emit_json(gen.out, instance_to_json(generate(gen)));
        } else if (*cmd_solve) {
            sopt.timing = !solve_no_timing;
            const auto inst = read_instance(solve_input);
            const auto rec = solve(inst, fs::path(solve_input).stem().string(), sopt);
            if (!solve_out.empty())
                write_json_file(solve_out, schedule_to_json(rec.schedule));
            if (!solve_no_header)
                std::cout << kCsvHeader << '\n';
            std::cout << rec.csv() << '\n';
        } else if (*cmd_val) {
            const Graph g = instance_graph(read_instance(val_instance));
            try {
                std::cout << validate_schedule(g, read_schedule(val_schedule)) << '\n';
            } catch (const ScheduleError& e) {
                std::cerr << to_string(e.fault()) << ": " << e.what() << '\n';
                return ValidationFailed;
            }
        } else if (*cmd_red) {
            return reduce(ropt);
        } else if (*cmd_bench) {
            bopt.solve.timing = !bench_no_timing;
            return bench(bopt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return Usage;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return CapExceeded;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return CapExceeded;
    } catch (const ScheduleError& e) {
        std::cerr << to_string(e.fault()) << ": " << e.what() << '\n';
        return ValidationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ValidationFailed;
    }
    return Ok;
}
