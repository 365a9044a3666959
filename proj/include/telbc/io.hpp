#ifndef TELBC_IO_HPP
#define TELBC_IO_HPP

#include "telbc/families.hpp"
#include "telbc/reductions.hpp"
#include "telbc/schedule.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace telbc {

struct GeneralInstance {
    Graph graph;
    std::optional<std::vector<Vertex>> ordering;
};

using Instance = std::variant<KCycleSpec, KPathSpec, GeneralInstance, RN3DMInstance, EvenOddInstance>;

/// "kcycle", "kpath", "general", "rn3dm" or "evenodd".
std::string instance_type(const Instance& inst);

/// Throws InvalidInput on unknown types, missing fields or invalid contents.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

/// Graph of a broadcasting instance; InvalidInput for rn3dm/evenodd.
Graph instance_graph(const Instance& inst);

BroadcastSchedule schedule_from_json(const nlohmann::json& j);
/// Calls in ascending round order.
nlohmann::json schedule_to_json(const BroadcastSchedule& schedule);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

Instance read_instance(const std::string& path);
BroadcastSchedule read_schedule(const std::string& path);
Round read_target(const std::string& path);

}  // namespace telbc

#endif
