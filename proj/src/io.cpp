#include "telbc/io.hpp"

#include <fstream>

namespace telbc {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* name) {
    if (!j.contains(name))
        throw InvalidInput(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad field '") + name + "': " + e.what());
    }
}

struct ToJson {
    json operator()(const KCycleSpec& s) const { return {{"type", "kcycle"}, {"lengths", s.lengths}}; }
    json operator()(const KPathSpec& s) const {
        return {{"type", "kpath"}, {"lengths", s.lengths}, {"st_edge", s.st_edge}};
    }
    json operator()(const GeneralInstance& g) const {
        json edges = json::array();
        for (auto [u, v] : g.graph.edges())
            edges.push_back({u, v});
        json out = {{"type", "general"}, {"n", g.graph.size()}, {"edges", edges}};
        if (g.ordering)
            out["ordering"] = *g.ordering;
        return out;
    }
    json operator()(const RN3DMInstance& r) const { return {{"type", "rn3dm"}, {"w", r.w}}; }
    json operator()(const EvenOddInstance& e) const { return {{"type", "evenodd"}, {"c", e.c}}; }
};

}  // namespace

std::string instance_type(const Instance& inst) { return instance_to_json(inst)["type"].get<std::string>(); }

Instance instance_from_json(const json& j) {
    if (!j.is_object())
        throw InvalidInput("instance must be a JSON object");
    const auto type = field<std::string>(j, "type");
    if (type == "kcycle") {
        KCycleSpec s{field<std::vector<int>>(j, "lengths")};
        s.validate();
        return s;
    }
    if (type == "kpath") {
        KPathSpec s;
        s.lengths = field<std::vector<int>>(j, "lengths");
        s.st_edge = j.contains("st_edge") ? field<bool>(j, "st_edge") : false;
        s.validate();
        return s;
    }
    if (type == "general") {
        GeneralInstance g;
        g.graph = Graph(field<int>(j, "n"), field<std::vector<std::pair<Vertex, Vertex>>>(j, "edges"));
        if (j.contains("ordering")) {
            g.ordering = field<std::vector<Vertex>>(j, "ordering");
            ordering_bandwidth(g.graph, *g.ordering);  // permutation check
        }
        return g;
    }
    if (type == "rn3dm")
        return RN3DMInstance::make(field<std::vector<int>>(j, "w"));
    if (type == "evenodd")
        return EvenOddInstance::make(field<std::vector<int>>(j, "c"));
    throw InvalidInput("unknown instance type '" + type + "'");
}

json instance_to_json(const Instance& inst) { return std::visit(ToJson{}, inst); }

Graph instance_graph(const Instance& inst) {
    if (auto* s = std::get_if<KCycleSpec>(&inst))
        return build_k_cycle(*s).graph;
    if (auto* s = std::get_if<KPathSpec>(&inst))
        return build_k_path(*s).graph;
    if (auto* g = std::get_if<GeneralInstance>(&inst))
        return g->graph;
    throw InvalidInput("'" + instance_type(inst) + "' is not a broadcasting instance");
}

BroadcastSchedule schedule_from_json(const json& j) {
    if (!j.is_object())
        throw InvalidInput("schedule must be a JSON object");
    BroadcastSchedule s;
    for (const auto& src : field<json>(j, "sources"))
        s.sources.push_back({field<int>(src, "v"), src.contains("release") ? field<int>(src, "release") : 0});
    for (const auto& c : field<json>(j, "calls"))
        s.calls.push_back({field<int>(c, "round"), field<int>(c, "caller"), field<int>(c, "callee")});
    return s;
}

json schedule_to_json(const BroadcastSchedule& schedule) {
    BroadcastSchedule sorted = schedule;
    sorted.normalize();
    json sources = json::array();
    for (const auto& s : sorted.sources)
        sources.push_back({{"v", s.v}, {"release", s.release}});
    json calls = json::array();
    for (const auto& c : sorted.calls)
        calls.push_back({{"round", c.round}, {"caller", c.caller}, {"callee", c.callee}});
    return {{"sources", sources}, {"calls", calls}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path);
    out << j.dump(2) << '\n';
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

BroadcastSchedule read_schedule(const std::string& path) { return schedule_from_json(read_json_file(path)); }

Round read_target(const std::string& path) { return field<int>(read_json_file(path), "target"); }

}  // namespace telbc
