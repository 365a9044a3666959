#include "telbc/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace telbc;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir = fs::temp_directory_path() / ("telbc_cli_" + std::to_string(::getpid()));
    Workspace() { fs::create_directories(dir); }
    ~Workspace() { fs::remove_all(dir); }

    std::string file(const std::string& name) const { return (dir / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(file(name)) << text; }

    // exit code; stdout in `out`
    int run(const std::string& args, std::string& out) const {
        const std::string cmd = std::string("\"") + TELBC_CLI + "\" " + args + " > \"" + file("out.txt") +
                                "\" 2> \"" + file("err.txt") + "\"";
        const int status = std::system(cmd.c_str());
        std::ifstream in(file("out.txt"));
        std::stringstream ss;
        ss << in.rdbuf();
        out = ss.str();
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    std::string err() const {
        std::ifstream in(file("err.txt"));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::string cell(const std::string& row, int index) {
    std::stringstream in(row);
    std::string item;
    for (int i = 0; i <= index; ++i)
        std::getline(in, item, ',');
    return item;
}

}  // namespace

TEST_CASE("generate writes loadable instances") {
    Workspace ws;
    std::string out;
    REQUIRE(ws.run("generate kcycle --lengths 7,7,9,13 -o " + ws.file("sample2.json"), out) == 0);
    CHECK(std::get<KCycleSpec>(read_instance(ws.file("sample2.json"))).lengths == std::vector<int>{7, 7, 9, 13});
    REQUIRE(ws.run("generate kpath --lengths 7,5,4,4 --st-edge -o " + ws.file("sample3.json"), out) == 0);
    CHECK(std::get<KPathSpec>(read_instance(ws.file("sample3.json"))).st_edge);
    REQUIRE(ws.run("generate rn3dm --m 4 --seed 1 -o " + ws.file("w.json"), out) == 0);
    CHECK(std::get<RN3DMInstance>(read_instance(ws.file("w.json"))).m() == 4);

    std::string a, b;
    ws.run("generate random-bandwidth --n 12 --k 2 --seed 5", a);
    ws.run("generate random-bandwidth --n 12 --k 2 --seed 5", b);
    CHECK(a == b);
    CHECK(ws.run("generate blob", out) == 2);
    CHECK(ws.run("generate kcycle --lengths 1,4", out) == 1);
}

TEST_CASE("solve prints a record and writes a valid schedule") {
    Workspace ws;
    std::string out;
    ws.write("bow.json", R"({"type":"kcycle","lengths":[2,2]})");
    REQUIRE(ws.run("solve " + ws.file("bow.json") + " --algo oracle -o " + ws.file("bow.sched.json"), out) == 0);
    auto rows = lines(out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "instance,algo,epsilon,p,k,rounds,lower_bound,oracle,ratio,ms");
    CHECK(cell(rows[1], 5) == "3");
    REQUIRE(ws.run("validate " + ws.file("bow.json") + " " + ws.file("bow.sched.json"), out) == 0);
    CHECK(out == "3\n");

    ws.write("sample3.json", R"({"type":"kpath","lengths":[7,5,4,4],"st_edge":true})");
    REQUIRE(ws.run("solve " + ws.file("sample3.json") + " --algo kpath-ptas --epsilon 0.5 --no-header", out) == 0);
    CHECK(cell(out, 3) == "12");
    CHECK(std::stoi(cell(out, 5)) <= 7);

    ws.write("path6.json", R"({"type":"general","n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5]]})");
    REQUIRE(ws.run("solve " + ws.file("path6.json") + " --algo bandwidth-dp --k 1 --with-oracle --no-header", out) ==
            0);
    CHECK(cell(out, 4) == "1");
    CHECK(cell(out, 5) == "5");
    CHECK(cell(out, 7) == "5");
    CHECK(cell(out, 8) == "1.0000");

    CHECK(ws.run("solve " + ws.file("path6.json") + " --algo kcycle-ptas", out) == 2);
    CHECK(ws.run("solve " + ws.file("path6.json") + " --algo magic", out) == 2);
    ws.write("big.json", R"({"type":"kcycle","lengths":[7,7,9,13]})");
    CHECK(ws.run("solve " + ws.file("big.json") + " --algo oracle", out) == 3);
}

TEST_CASE("validate reports the first violation") {
    Workspace ws;
    std::string out;
    ws.write("p3.json", R"({"type":"general","n":3,"edges":[[0,1],[1,2]]})");
    ws.write("bad.json", R"({"sources":[{"v":0,"release":0}],"calls":[{"round":1,"caller":0,"callee":2},
                             {"round":2,"caller":2,"callee":1}]})");
    CHECK(ws.run("validate " + ws.file("p3.json") + " " + ws.file("bad.json"), out) == 1);
    CHECK(ws.err().find("NonEdgeCall") != std::string::npos);
    CHECK(ws.run("validate " + ws.file("p3.json"), out) == 2);
}

TEST_CASE("reduce emits instances and targets") {
    Workspace ws;
    std::string out;
    ws.write("w.json", R"({"type":"rn3dm","w":[1,3,4,4]})");
    ws.write("cert.json", R"({"lambda":[4,1,3,2],"mu":[3,4,1,2]})");
    REQUIRE(ws.run("reduce " + ws.file("w.json") + " --to kpath -o " + ws.file("kp.json") + " --target-out " +
                       ws.file("t.json") + " --certificate " + ws.file("cert.json") + " --schedule-out " +
                       ws.file("s.json"),
                   out) == 0);
    CHECK(read_target(ws.file("t.json")) == 5);
    CHECK(instance_graph(read_instance(ws.file("kp.json"))).size() == 22);
    REQUIRE(ws.run("validate " + ws.file("kp.json") + " " + ws.file("s.json"), out) == 0);
    CHECK(out == "5\n");

    REQUIRE(ws.run("reduce " + ws.file("w.json") + " --to evenodd", out) == 0);
    CHECK(std::get<EvenOddInstance>(instance_from_json(nlohmann::json::parse(out))).c ==
          std::vector<int>{13, 9, 7, 7});

    ws.write("c.json", R"({"type":"evenodd","c":[7,7,9,13]})");
    REQUIRE(ws.run("reduce " + ws.file("c.json") + " --to kcycle -o " + ws.file("kc.json") + " --target-out " +
                       ws.file("t2.json"),
                   out) == 0);
    CHECK(read_target(ws.file("t2.json")) == 8);
    CHECK(instance_graph(read_instance(ws.file("kc.json"))).size() == 37);

    CHECK(ws.run("reduce " + ws.file("c.json") + " --to kpath", out) == 2);
    CHECK(ws.run("reduce " + ws.file("kc.json") + " --to kcycle", out) == 2);
}

TEST_CASE("bench is deterministic") {
    Workspace ws;
    std::string out;
    fs::create_directories(ws.dir / "empty");
    REQUIRE(ws.run("bench " + ws.file("empty") + " --algos oracle", out) == 0);
    CHECK(out == "instance,algo,epsilon,p,k,rounds,lower_bound,oracle,ratio,ms\n");

    fs::create_directories(ws.dir / "corpus");
    for (int i = 0; i < 20; ++i)
        REQUIRE(ws.run("generate kcycle --count 3 --max-length 5 --seed " + std::to_string(i) + " -o " +
                           (ws.dir / "corpus" / ("k" + std::to_string(100 + i) + ".json")).string(),
                       out) == 0);
    ws.write("corpus/zz_bad.json", R"({"type":"kcycle","lengths":[1]})");
    REQUIRE(ws.run("bench " + ws.file("corpus") + " --algos oracle,kcycle-ptas --p 3 --repeat 3 --no-timing", out) ==
            0);
    auto rows = lines(out);
    CHECK(rows.size() == 1 + 21 * 2 * 3);
    const double factor = (1 + 2.0 / 3) * (1 + 1.0 / 3);
    for (std::size_t r = 1; r + 2 < rows.size(); r += 3) {
        CHECK(rows[r] == rows[r + 1]);
        CHECK(rows[r] == rows[r + 2]);
        if (cell(rows[r], 1) == "kcycle-ptas" && cell(rows[r], 8) != "")
            CHECK(std::stod(cell(rows[r], 8)) <= factor + 1e-9);
    }
    CHECK(cell(rows.back(), 5) == "error:invalid");
    std::string again;
    ws.run("bench " + ws.file("corpus") + " --algos oracle,kcycle-ptas --p 3 --repeat 3 --no-timing", again);
    CHECK(out == again);
}
