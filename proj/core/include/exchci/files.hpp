#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <exchci/graph.hpp>
#include <exchci/ground.hpp>
#include <exchci/model.hpp>
#include <exchci/table.hpp>

namespace exchci {

// Model files:
//   ground <vector|network> n=<int>
//   stmt {<set>} ; {<set>} ; {<set>}
// Sets are comma-separated element tokens (vector: integers; network: a-b
// with a < b); the empty set is written {}.  '#' starts a comment.  Parsing
// decomposes general statements into their elementary expansions; printing
// emits the sorted elementary statements, so print(parse(print(m))) is
// byte-identical to print(m).
IndependenceModel read_model(std::istream& in);
IndependenceModel read_model_file(const std::string& path);
void write_model(std::ostream& out, const IndependenceModel& m);
std::string model_to_string(const IndependenceModel& m);

// Distribution files:
//   dist <vector|network> n=<int>     followed by    p <bits> <prob>
//   orbits network n=<int>            followed by    w <bits> <weight>
// A state string has one character per ground element, position k (from the
// left) holding element k; states not listed have probability zero.  Orbit
// lines accept any representative state; listing two representatives of the
// same orbit is an error.
JointTable read_table(std::istream& in);
JointTable read_table_file(const std::string& path);
void write_table(std::ostream& out, const JointTable& t);
std::string table_to_string(const JointTable& t);

// Which reader a file expects, decided by its first keyword.
enum class FileKind { Model, Table };
FileKind detect_file_kind(const std::string& path);

// DOT export: a digraph whose undirected edges carry dir=none, bidirected
// edges dir=both, and arrows point forward.  Output order is deterministic.
std::string to_dot(const MixedGraph& g);

// "<family>:<n>" graph syntax, e.g. "L-:5".
MixedGraph parse_graph_spec(std::string_view spec);

// Element-set syntax: "a,b,c", "{a,b,c}", "{}" or "" over a ground set.
VarSet parse_set(const GroundSet& ground, std::string_view token);

}  // namespace exchci
