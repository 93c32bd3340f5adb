#pragma once

#include <charconv>
#include <sstream>

#include "flowsched/network.hpp"

namespace flowsched {

/// Syntactic error with a 1-based line/column position and what was expected.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string expected)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              expected),
        line(line),
        column(column),
        expected(std::move(expected)) {}
  int line;
  int column;
  std::string expected;
};

namespace io_detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
};

inline bool next_line(Cursor& c, std::string& out, int& line_no, int& indent) {
  while (c.pos < c.text.size()) {
    std::size_t end = c.text.find('\n', c.pos);
    if (end == std::string::npos) end = c.text.size();
    std::string raw = c.text.substr(c.pos, end - c.pos);
    int this_line = c.line;
    c.pos = end + 1;
    ++c.line;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (raw[first] == 'c' && (first + 1 >= raw.size() || raw[first + 1] == ' ')) continue;
    out = raw;
    line_no = this_line;
    indent = static_cast<int>(first) + 1;
    return true;
  }
  return false;
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

inline Value parse_int(const std::string& s, int line, int col, const char* what) {
  Value v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, col, std::string("integer ") + what + ", got '" + s + "'");
  return v;
}

}  // namespace io_detail

/// Instance file format (line oriented, DIMACS inspired):
///   c <comment>
///   p msp <num-nodes> <num-arcs> <T>
///   n <id> source|sink|node
///   a <arc-id> <tail> <head> <capacity> <jobs>
/// where <jobs> is the multiplicity m_a (0 = no job on the arc).
inline Instance parse_instance(const std::string& text) {
  io_detail::Cursor cur{text};
  std::string line;
  int line_no = 0, col = 1;

  if (!io_detail::next_line(cur, line, line_no, col))
    throw ParseError(1, 1, "MissingHeader: 'p msp <nodes> <arcs> <T>'");
  auto header = io_detail::split_fields(line);
  if (header.size() != 5 || header[0] != "p" || header[1] != "msp")
    throw ParseError(line_no, col, "MissingHeader: 'p msp <nodes> <arcs> <T>'");
  const Value want_nodes = io_detail::parse_int(header[2], line_no, col, "node count");
  const Value want_arcs = io_detail::parse_int(header[3], line_no, col, "arc count");
  const Value horizon = io_detail::parse_int(header[4], line_no, col, "horizon");

  Instance inst;
  inst.horizon = static_cast<int>(horizon);
  bool have_source = false, have_sink = false;
  std::set<std::string> arc_ids;

  while (io_detail::next_line(cur, line, line_no, col)) {
    auto f = io_detail::split_fields(line);
    if (f[0] == "n") {
      if (f.size() != 3) throw ParseError(line_no, col, "'n <id> source|sink|node'");
      if (!inst.network.nodes.insert(f[1]).second)
        throw ParseError(line_no, col, "unique node id, '" + f[1] + "' repeats");
      if (f[2] == "source") {
        if (have_source) throw ParseError(line_no, col, "a single source");
        inst.network.source = f[1];
        have_source = true;
      } else if (f[2] == "sink") {
        if (have_sink) throw ParseError(line_no, col, "a single sink");
        inst.network.sink = f[1];
        have_sink = true;
      } else if (f[2] != "node") {
        throw ParseError(line_no, col, "node role source|sink|node, got '" + f[2] + "'");
      }
    } else if (f[0] == "a") {
      if (f.size() != 6)
        throw ParseError(line_no, col, "'a <arc-id> <tail> <head> <capacity> <jobs>'");
      if (!arc_ids.insert(f[1]).second)
        throw ParseError(line_no, col, "DuplicateArcId: '" + f[1] + "'");
      Value cap = io_detail::parse_int(f[4], line_no, col, "capacity");
      Value jobs = io_detail::parse_int(f[5], line_no, col, "job multiplicity");
      inst.network.arcs.push_back({f[1], f[2], f[3], cap});
      if (jobs > 0) inst.jobs[f[1]] = static_cast<int>(jobs);
    } else {
      throw ParseError(line_no, col, "line starting with 'n' or 'a', got '" + f[0] + "'");
    }
  }

  if (!have_source) throw ParseError(line_no, col, "a source node declaration");
  if (!have_sink) throw ParseError(line_no, col, "a sink node declaration");
  if (static_cast<Value>(inst.network.nodes.size()) != want_nodes)
    throw ParseError(line_no, col,
                     std::to_string(want_nodes) + " node declarations, got " +
                         std::to_string(inst.network.nodes.size()));
  if (static_cast<Value>(inst.network.arcs.size()) != want_arcs)
    throw ParseError(line_no, col,
                     std::to_string(want_arcs) + " arc declarations, got " +
                         std::to_string(inst.network.arcs.size()));
  return inst;
}

/// Canonical emission: nodes sorted by id, arcs in stored order. Parsing the
/// emitted text reproduces the instance.
inline std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p msp " << inst.network.nodes.size() << ' ' << inst.network.arcs.size() << ' '
      << inst.horizon << '\n';
  for (const std::string& n : inst.network.nodes) {
    const char* role =
        n == inst.network.source ? "source" : (n == inst.network.sink ? "sink" : "node");
    out << "n " << n << ' ' << role << '\n';
  }
  for (const Arc& a : inst.network.arcs) {
    auto it = inst.jobs.find(a.id);
    out << "a " << a.id << ' ' << a.tail << ' ' << a.head << ' ' << a.capacity << ' '
        << (it == inst.jobs.end() ? 0 : it->second) << '\n';
  }
  return out.str();
}

/// Schedule file format: one line per job arc, 'j <arc-id> <period>...'.
inline Schedule parse_schedule(const std::string& text) {
  io_detail::Cursor cur{text};
  Schedule sched;
  std::string line;
  int line_no = 0, col = 1;
  while (io_detail::next_line(cur, line, line_no, col)) {
    auto f = io_detail::split_fields(line);
    if (f[0] != "j" || f.size() < 3)
      throw ParseError(line_no, col, "'j <arc-id> <period>...'");
    std::set<int> periods;
    for (std::size_t i = 2; i < f.size(); ++i)
      periods.insert(static_cast<int>(io_detail::parse_int(f[i], line_no, col, "period")));
    if (!sched.outages.emplace(f[1], std::move(periods)).second)
      throw ParseError(line_no, col, "one line per arc, '" + f[1] + "' repeats");
  }
  return sched;
}

inline std::string emit_schedule(const Schedule& sched) {
  std::ostringstream out;
  for (const auto& [id, periods] : sched.outages) {
    out << "j " << id;
    for (int p : periods) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

}  // namespace flowsched
