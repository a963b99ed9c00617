#include <exchci/files.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace exchci {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    std::size_t start = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

int parse_count(std::string_view token, int line) {
  if (token.substr(0, 2) != "n=") fail_line(line, "expected n=<int>");
  int v = 0;
  auto digits = token.substr(2);
  if (digits.empty() || digits.size() > 2) fail_line(line, "bad element count");
  for (char c : digits) {
    if (c < '0' || c > '9') fail_line(line, "bad element count");
    v = v * 10 + (c - '0');
  }
  return v;
}

GroundSet parse_ground(std::string_view kindWord, std::string_view nWord, int line) {
  const int n = parse_count(nWord, line);
  try {
    if (kindWord == "vector") return GroundSet::vector_of(n);
    if (kindWord == "network") return GroundSet::network_on(n);
  } catch (const std::exception& e) {
    fail_line(line, e.what());
  }
  fail_line(line, "ground kind must be vector or network");
}

// Reads the next content line (comments stripped, blanks skipped).
bool next_content_line(std::istream& in, std::string& raw, int& line) {
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (!trim(raw).empty()) return true;
  }
  return false;
}

std::string format_prob(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

VarSet parse_set(const GroundSet& ground, std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '{') {
    if (token.back() != '}') throw std::invalid_argument("unbalanced braces in set");
    token = trim(token.substr(1, token.size() - 2));
  }
  VarSet out;
  if (token.empty()) return out;
  for (auto part : split(token, ',')) {
    part = trim(part);
    auto e = ground.parse_element(part);
    if (!e) {
      throw std::invalid_argument("unknown element '" + std::string(part) + "'");
    }
    out = out.with(*e);
  }
  return out;
}

IndependenceModel read_model(std::istream& in) {
  std::string raw;
  int line = 0;
  if (!next_content_line(in, raw, line)) {
    throw std::invalid_argument("empty model file");
  }
  auto head = words(raw);
  if (head.size() != 3 || head[0] != "ground") {
    fail_line(line, "expected 'ground <vector|network> n=<int>'");
  }
  GroundSet ground = parse_ground(head[1], head[2], line);
  IndependenceModel m(ground);
  while (next_content_line(in, raw, line)) {
    std::string_view body = trim(raw);
    if (body.substr(0, 4) != "stmt") fail_line(line, "expected 'stmt {A} ; {B} ; {C}'");
    body = trim(body.substr(4));
    auto parts = split(body, ';');
    if (parts.size() != 3) fail_line(line, "statement needs three ';'-separated sets");
    try {
      VarSet a = parse_set(ground, parts[0]);
      VarSet b = parse_set(ground, parts[1]);
      VarSet c = parse_set(ground, parts[2]);
      m.insert(Statement(a, b, c));
    } catch (const std::invalid_argument& e) {
      fail_line(line, e.what());
    }
  }
  return m;
}

IndependenceModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_model(in);
}

void write_model(std::ostream& out, const IndependenceModel& m) {
  const GroundSet& g = m.ground();
  out << "ground" << ' ' << (g.kind() == GroundKind::Vector ? "vector" : "network")
      << ' ' << "n=" << g.nodes() << '\n';
  for (const Statement& st : m.statements()) {
    out << "stmt " << g.set_name(st.a) << " ; " << g.set_name(st.b) << " ; "
        << g.set_name(st.c) << '\n';
  }
}

std::string model_to_string(const IndependenceModel& m) {
  std::ostringstream os;
  write_model(os, m);
  return os.str();
}

namespace {

std::uint32_t parse_state(std::string_view bits, const GroundSet& g, int line) {
  if (static_cast<int>(bits.size()) != g.size()) {
    fail_line(line, "state string must have one character per element");
  }
  std::uint32_t state = 0;
  for (int k = 0; k < g.size(); ++k) {
    if (bits[k] == '1') {
      state |= std::uint32_t{1} << k;
    } else if (bits[k] != '0') {
      fail_line(line, "state characters must be 0 or 1");
    }
  }
  return state;
}

std::string state_string(std::uint32_t state, int width) {
  std::string out(width, '0');
  for (int k = 0; k < width; ++k) {
    if (state >> k & 1u) out[k] = '1';
  }
  return out;
}

double parse_prob(std::string_view token, int line) {
  try {
    std::size_t used = 0;
    std::string text(token);
    double v = std::stod(text, &used);
    if (used != text.size()) fail_line(line, "bad probability value");
    return v;
  } catch (const std::invalid_argument&) {
    fail_line(line, "bad probability value");
  } catch (const std::out_of_range&) {
    fail_line(line, "probability out of range");
  }
}

}  // namespace

JointTable read_table(std::istream& in) {
  std::string raw;
  int line = 0;
  if (!next_content_line(in, raw, line)) {
    throw std::invalid_argument("empty distribution file");
  }
  auto head = words(raw);
  if (head.size() != 3 || (head[0] != "dist" && head[0] != "orbits")) {
    fail_line(line, "expected 'dist <vector|network> n=<int>' or 'orbits network n=<int>'");
  }
  const bool orbits = head[0] == "orbits";
  if (orbits && head[1] != "network") fail_line(line, "orbit files require a network ground");
  GroundSet ground = parse_ground(head[1], head[2], line);
  if (ground.size() > 22) {
    throw std::length_error("table width beyond 22 elements");
  }

  if (!orbits) {
    std::vector<double> probs(std::size_t{1} << ground.size(), 0.0);
    std::vector<bool> seen(probs.size(), false);
    while (next_content_line(in, raw, line)) {
      auto toks = words(raw);
      if (toks.size() != 3 || toks[0] != "p") fail_line(line, "expected 'p <state> <prob>'");
      std::uint32_t state = parse_state(toks[1], ground, line);
      if (seen[state]) fail_line(line, "duplicate state " + std::string(toks[1]));
      seen[state] = true;
      probs[state] = parse_prob(toks[2], line);
    }
    return JointTable::full(ground, std::move(probs));
  }

  OrbitWeighting w{ground, {}};
  std::map<std::uint32_t, int> first_line;
  while (next_content_line(in, raw, line)) {
    auto toks = words(raw);
    if (toks.size() != 3 || toks[0] != "w") fail_line(line, "expected 'w <state> <weight>'");
    std::uint32_t state = parse_state(toks[1], ground, line);
    std::uint32_t canon = canonical_state(ground, state);
    auto it = first_line.find(canon);
    if (it != first_line.end()) {
      fail_line(line, "duplicate orbit (canonical state " +
                          state_string(canon, ground.size()) + ", first given on line " +
                          std::to_string(it->second) + ")");
    }
    first_line.emplace(canon, line);
    w.weights[canon] = parse_prob(toks[2], line);
  }
  return table_from_orbits(w);
}

JointTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_table(in);
}

void write_table(std::ostream& out, const JointTable& t) {
  const GroundSet& g = t.ground();
  if (t.support() != g.all()) {
    throw std::invalid_argument("only full-support tables can be serialized; compact or reground first");
  }
  out << "dist" << ' ' << (g.kind() == GroundKind::Vector ? "vector" : "network")
      << ' ' << "n=" << g.nodes() << '\n';
  for (std::uint32_t state = 0; state < t.probs().size(); ++state) {
    double p = t.probs()[state];
    if (p > 0.0) {
      out << "p " << state_string(state, g.size()) << ' ' << format_prob(p) << '\n';
    }
  }
}

std::string table_to_string(const JointTable& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

FileKind detect_file_kind(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::string raw;
  int line = 0;
  if (!next_content_line(in, raw, line)) {
    throw std::invalid_argument("empty file '" + path + "'");
  }
  auto toks = words(raw);
  if (!toks.empty() && toks[0] == "ground") return FileKind::Model;
  if (!toks.empty() && (toks[0] == "dist" || toks[0] == "orbits")) return FileKind::Table;
  throw std::invalid_argument("line 1: unknown file header");
}

std::string to_dot(const MixedGraph& g) {
  const GroundSet& gr = g.ground();
  std::ostringstream os;
  os << "digraph G {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < gr.size(); ++v) {
    os << "  \"" << gr.element_name(v) << "\";\n";
  }
  for (int u = 0; u < gr.size(); ++u) {
    for (int v = u + 1; v < gr.size(); ++v) {
      if (!g.adjacent(u, v)) continue;
      if (g.line(u, v)) {
        os << "  \"" << gr.element_name(u) << "\" -> \"" << gr.element_name(v)
           << "\" [dir=none];\n";
      } else if (g.arc(u, v)) {
        os << "  \"" << gr.element_name(u) << "\" -> \"" << gr.element_name(v)
           << "\" [dir=both];\n";
      } else if (g.arrow(u, v)) {
        os << "  \"" << gr.element_name(u) << "\" -> \"" << gr.element_name(v)
           << "\";\n";
      } else {
        os << "  \"" << gr.element_name(v) << "\" -> \"" << gr.element_name(u)
           << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

MixedGraph parse_graph_spec(std::string_view spec) {
  auto colon = spec.rfind(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("graph spec must look like '<family>:<n>'");
  }
  auto fam = family_from_name(trim(spec.substr(0, colon)));
  if (!fam) {
    throw std::invalid_argument("unknown graph family '" +
                                std::string(trim(spec.substr(0, colon))) + "'");
  }
  auto digits = trim(spec.substr(colon + 1));
  if (digits.empty() || digits.size() > 2) throw std::invalid_argument("bad node count in graph spec");
  int n = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad node count in graph spec");
    n = n * 10 + (c - '0');
  }
  return family_graph(*fam, n);
}

}  // namespace exchci
