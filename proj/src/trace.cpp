#include "cops/trace.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cops/errors.hpp"
#include "cops/generators.hpp"

namespace cops {
namespace {

using nlohmann::json;

json encode_all(const GraphOracle& g, const std::vector<Vertex>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(g.encode(v));
  return arr;
}

Vertex decode_one(const GraphOracle& g, const json& j) {
  if (!j.is_string()) throw TraceError("vertex must be encoded as a string");
  auto v = g.decode(j.get<std::string>());
  if (!v) throw TraceError("cannot decode vertex '" + j.get<std::string>() + "' for " + g.id());
  return *v;
}

std::vector<Vertex> decode_all(const GraphOracle& g, const json& j) {
  if (!j.is_array()) throw TraceError("expected a vertex list");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decode_one(g, e));
  return out;
}

json params_json(const GraphOracle& g, const GameParams& p) {
  return json{{"k", p.k},           {"s_c", p.s_c},
              {"rho", p.rho},       {"s_r", p.s_r},
              {"R", p.R},           {"v0", g.encode(p.v0)},
              {"variant", to_string(p.variant)},
              {"horizon", p.horizon}, {"visit_quota", p.visit_quota},
              {"order", p.order}};
}

GameParams params_from(const GraphOracle& g, const json& j) {
  GameParams p;
  p.k = j.at("k").get<std::uint32_t>();
  p.s_c = j.at("s_c").get<std::uint64_t>();
  p.rho = j.at("rho").get<std::uint64_t>();
  p.s_r = j.at("s_r").get<std::uint64_t>();
  p.R = j.at("R").get<std::uint64_t>();
  p.v0 = decode_one(g, j.at("v0"));
  p.variant = parse_variant(j.at("variant").get<std::string>());
  p.horizon = j.at("horizon").get<std::uint32_t>();
  p.visit_quota = j.at("visit_quota").get<std::uint32_t>();
  p.order = j.at("order").get<std::vector<std::string>>();
  return p;
}

json outcome_json(const Outcome& o) {
  return json{{"status", to_string(o.status)}, {"round", o.round},     {"visits", o.visits},
              {"offender", to_string(o.offender)}, {"reason", o.reason}, {"detail", o.detail}};
}

Outcome outcome_from(const json& j) {
  Outcome o;
  o.status = parse_status(j.at("status").get<std::string>());
  o.round = j.at("round").get<std::uint32_t>();
  o.visits = j.at("visits").get<std::uint32_t>();
  o.offender = parse_side(j.at("offender").get<std::string>());
  o.reason = j.at("reason").get<std::string>();
  o.detail = j.at("detail").get<std::string>();
  return o;
}

json parse_line(const std::string& line, std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw TraceError("trace line " + std::to_string(lineno) + ": " + e.what());
  }
}

}  // namespace

void write_jsonl(std::ostream& out, const GraphOracle& g, const Trace& trace) {
  out << json{{"generator", trace.generator},
              {"params", params_json(g, trace.params)},
              {"labels", trace.labels}}
             .dump()
      << '\n';
  for (const auto& r : trace.rounds) {
    out << json{{"round", r.round},
                {"cops", encode_all(g, r.cops)},
                {"robber_path", encode_all(g, r.robber_path)},
                {"visits", r.visits},
                {"status", to_string(r.status)}}
               .dump()
        << '\n';
  }
  out << json{{"outcome", outcome_json(trace.outcome)}}.dump() << '\n';
}

std::string to_jsonl(const GraphOracle& g, const Trace& trace) {
  std::ostringstream out;
  write_jsonl(out, g, trace);
  return out.str();
}

std::string trace_generator(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw TraceError("empty trace");
  const json header = parse_line(line, 1);
  if (!header.contains("generator")) throw TraceError("trace header lacks a generator");
  return header.at("generator").get<std::string>();
}

Trace read_jsonl(std::istream& in, const GraphOracle& g) {
  Trace trace;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  bool have_outcome = false;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (have_outcome) throw TraceError("records after the outcome line");
      const json j = parse_line(line, lineno);
      if (!have_header) {
        trace.generator = j.at("generator").get<std::string>();
        trace.params = params_from(g, j.at("params"));
        trace.labels = j.at("labels").get<std::map<std::string, std::string>>();
        have_header = true;
      } else if (j.contains("outcome")) {
        trace.outcome = outcome_from(j.at("outcome"));
        have_outcome = true;
      } else {
        RoundRecord r;
        r.round = j.at("round").get<std::uint32_t>();
        r.cops = decode_all(g, j.at("cops"));
        r.robber_path = decode_all(g, j.at("robber_path"));
        r.visits = j.at("visits").get<std::uint32_t>();
        r.status = parse_status(j.at("status").get<std::string>());
        trace.rounds.push_back(std::move(r));
      }
    }
  } catch (const json::exception& e) {
    throw TraceError("trace line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!have_header) throw TraceError("trace has no header line");
  if (!have_outcome) throw TraceError("trace has no outcome line");
  return trace;
}

Trace load_trace(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw TraceError("cannot open " + file.string());
  const Arena arena = make_arena(trace_generator(in));
  in.clear();
  in.seekg(0);
  return read_jsonl(in, arena.graph);
}

}  // namespace cops
