#include "ranklab/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

namespace ranklab {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

VertexId make_vertex(const Token& t, std::size_t line) {
  try {
    return VertexId(t.text);
  } catch (const InvalidInput& e) {
    throw ParseError(line, t.column, e.what());
  }
}

}  // namespace

BipartiteInstance parse_instance(std::string_view text) {
  enum class Expect { offline, online, edges } expect = Expect::offline;
  std::vector<VertexId> offline;
  std::vector<VertexId> online;
  std::map<VertexId, bool> is_online;  // every declared vertex
  EdgeSet edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& keyword = tokens.front();

    auto declare = [&](std::vector<VertexId>& party, bool online_party) {
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        VertexId v = make_vertex(tokens[k], line_no);
        auto [it, fresh] = is_online.emplace(v, online_party);
        if (!fresh) {
          const char* where = it->second == online_party ? "twice in the same order" : "in both parties";
          throw ParseError(line_no, tokens[k].column, "vertex '" + v.name() + "' is declared " + where);
        }
        party.push_back(std::move(v));
      }
    };

    switch (expect) {
      case Expect::offline:
        if (keyword.text != "offline") {
          throw ParseError(line_no, keyword.column, "expected 'offline' record, got '" + std::string(keyword.text) + "'");
        }
        declare(offline, false);
        expect = Expect::online;
        break;
      case Expect::online:
        if (keyword.text != "online") {
          throw ParseError(line_no, keyword.column, "expected 'online' record, got '" + std::string(keyword.text) + "'");
        }
        declare(online, true);
        expect = Expect::edges;
        break;
      case Expect::edges: {
        if (keyword.text != "edge") {
          throw ParseError(line_no, keyword.column, "expected 'edge' record, got '" + std::string(keyword.text) + "'");
        }
        if (tokens.size() != 3) {
          const std::size_t col = tokens.size() > 3 ? tokens[3].column : keyword.column;
          throw ParseError(line_no, col, "malformed edge: expected 'edge <online> <offline>'");
        }
        bool side[2] = {false, false};
        VertexId ends[2] = {make_vertex(tokens[1], line_no), make_vertex(tokens[2], line_no)};
        for (int k = 0; k < 2; ++k) {
          auto it = is_online.find(ends[k]);
          if (it == is_online.end()) {
            throw ParseError(line_no, tokens[k + 1].column, "unknown endpoint '" + ends[k].name() + "'");
          }
          side[k] = it->second;
        }
        if (side[0] == side[1]) {
          throw ParseError(line_no, tokens[2].column,
                           std::string("edge is not bipartite: both endpoints are ") + (side[0] ? "online" : "offline"));
        }
        if (!side[0]) {
          throw ParseError(line_no, tokens[1].column, "edge must list the online endpoint first");
        }
        if (!edges.emplace(ends[0], ends[1]).second) {
          throw ParseError(line_no, keyword.column, "duplicate edge " + ends[0].name() + " " + ends[1].name());
        }
        break;
      }
    }
  }
  if (expect != Expect::edges) {
    throw ParseError(line_no + 1, 1, expect == Expect::offline ? "missing 'offline' record" : "missing 'online' record");
  }
  return BipartiteInstance(Graph(std::move(edges)), Permutation(std::move(offline)), Permutation(std::move(online)));
}

std::string serialize_instance(const BipartiteInstance& inst) {
  std::ostringstream os;
  os << "offline";
  for (const auto& v : inst.sigma()) os << ' ' << v;
  os << "\nonline";
  for (const auto& u : inst.pi()) os << ' ' << u;
  os << '\n';
  for (const auto& u : inst.pi()) {
    for (const auto& v : inst.sigma()) {
      if (inst.graph().has_edge(u, v)) os << "edge " << u << ' ' << v << '\n';
    }
  }
  return os.str();
}

BipartiteInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const BipartiteInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write instance file " + path.string());
  out << serialize_instance(inst);
}

std::string fingerprint(const BipartiteInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string format_matching(const BipartiteInstance& inst, const Matching& m) {
  std::ostringstream os;
  std::vector<const VertexId*> free_online;
  for (const auto& u : inst.pi()) {
    if (auto v = m.partner(u)) {
      os << "edge " << u << ' ' << *v << '\n';
    } else {
      free_online.push_back(&u);
    }
  }
  os << "size " << m.size() << '\n';
  os << "unmatched-online";
  for (const auto* u : free_online) os << ' ' << *u;
  os << "\nunmatched-offline";
  for (const auto& v : inst.sigma()) {
    if (!m.covers(v)) os << ' ' << v;
  }
  os << '\n';
  return os.str();
}

}  // namespace ranklab
