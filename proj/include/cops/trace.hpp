#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cops/game.hpp"
#include "cops/graph.hpp"

namespace cops {

// Trace files are JSON Lines:
//
//   {"params": {...}, "generator": "grid", "labels": {...}}
//   {"round": 0, "cops": ["(0,0)"], "robber_path": ["(-7,0)"], "visits": 0, "status": "running"}
//   ...
//   {"outcome": {"status": "robber_survives", "round": 200, "visits": 200, ...}}
//
// Vertices are written with the generator's encoding: "(x,y)" on the grid,
// "(x,rail)" on the ladder, "x" on the line, "^" plus child digits on trees.
// Keys are emitted in sorted order so equal traces are byte-identical.

void write_jsonl(std::ostream& out, const GraphOracle& g, const Trace& trace);
std::string to_jsonl(const GraphOracle& g, const Trace& trace);

/// Generator id from a trace header line, without decoding vertices.
std::string trace_generator(std::istream& in);

/// Parses a trace with vertices decoded by `g`. Throws TraceError.
Trace read_jsonl(std::istream& in, const GraphOracle& g);

/// Reads a trace file, rebuilding its generator from the header.
Trace load_trace(const std::filesystem::path& file);

}  // namespace cops
