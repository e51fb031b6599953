#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tempsep/errors.hpp"
#include "tempsep/temporal_graph.hpp"

namespace tempsep {

// A temporal graph file, optionally carrying an `st <s> <z> <k>` instance line.
struct LoadedInstance {
    TemporalGraph graph;
    std::optional<Vertex> s;
    std::optional<Vertex> z;
    std::optional<int> k;

    bool has_terminals() const { return s && z && k; }
    SeparationInstance instance() const;  // throws if the st line is missing
};

// Line-oriented text format:
//   tg <n> <tau>
//   <u> <v> <t>          (one time-edge per line)
//   st <s> <z> <k>       (optional instance line)
// Blank lines and `#` comments are ignored. Throws ParseError with the line.
LoadedInstance parse_temporal_text(std::istream& in);
LoadedInstance parse_temporal_text(const std::string& text);
std::string emit_temporal_text(const LoadedInstance& li);

// Structurally equivalent JSON rendering:
//   {"n":..,"tau":..,"edges":[[u,v,t],...],"s":..,"z":..,"k":..}
LoadedInstance parse_temporal_json(const std::string& text);
std::string emit_temporal_json(const LoadedInstance& li);

// Reads a file; a leading '{' selects the JSON parser.
LoadedInstance load_instance_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Static graph edge list:
//   sg <n>
//   <u> <v>
StaticGraph parse_static_text(std::istream& in);
StaticGraph parse_static_text(const std::string& text);
std::string emit_static_text(const StaticGraph& g);

inline LoadedInstance as_loaded(const TemporalGraph& g) { return LoadedInstance{g, {}, {}, {}}; }
inline LoadedInstance as_loaded(const SeparationInstance& inst) {
    return LoadedInstance{inst.graph, inst.s, inst.z, inst.k};
}

}  // namespace tempsep
