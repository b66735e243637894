#include "ranklab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ranklab/error.hpp"

namespace ranklab {

namespace {

bool is_token_byte(unsigned char c) { return c > 0x20 && c != 0x7f && c != '#'; }

}  // namespace

VertexId::VertexId(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw InvalidInput("vertex name must not be empty");
  for (unsigned char c : name_) {
    if (!is_token_byte(c)) {
      throw InvalidInput("vertex name '" + name_ + "' contains whitespace, '#' or a control byte");
    }
  }
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.name(); }

Edge::Edge(VertexId a, VertexId b) : first_(std::move(a)), second_(std::move(b)) {
  if (first_ == second_) throw InvalidInput("edge needs two distinct endpoints, got " + first_.name() + " twice");
  if (second_ < first_) std::swap(first_, second_);
}

const VertexId& Edge::other(const VertexId& v) const {
  if (v == first_) return second_;
  if (v == second_) return first_;
  throw NotAMember(v.name() + " is not an endpoint of the edge");
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.first() << ',' << e.second() << '}';
}

VertexSet vertices_of(const EdgeSet& edges) {
  VertexSet out;
  for (const auto& e : edges) {
    out.insert(e.first());
    out.insert(e.second());
  }
  return out;
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  if (a == b) return false;
  return edges_.count(Edge(a, b)) != 0;
}

Matching::Matching(EdgeSet edges) : edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (!partners_.emplace(e.first(), e.second()).second || !partners_.emplace(e.second(), e.first()).second) {
      std::ostringstream msg;
      msg << "not a matching: edge " << e << " shares an endpoint with another edge";
      throw InvalidInput(msg.str());
    }
  }
}

std::optional<VertexId> Matching::partner(const VertexId& v) const {
  auto it = partners_.find(v);
  if (it == partners_.end()) return std::nullopt;
  return it->second;
}

VertexSet Matching::vertices() const {
  VertexSet out;
  for (const auto& [v, _] : partners_) out.insert(v);
  return out;
}

VertexPath::VertexPath(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  VertexSet seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw InvalidInput("path visits " + v.name() + " twice");
  }
}

VertexPath::VertexPath(std::initializer_list<std::string_view> names)
    : VertexPath([&] {
        std::vector<VertexId> vs;
        for (auto n : names) vs.emplace_back(n);
        return vs;
      }()) {}

std::vector<Edge> VertexPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

EdgeSet VertexPath::edge_set() const {
  auto es = edges();
  return EdgeSet(es.begin(), es.end());
}

VertexPath VertexPath::reversed() const {
  return VertexPath(std::vector<VertexId>(vertices_.rbegin(), vertices_.rend()));
}

std::ostream& operator<<(std::ostream& os, const VertexPath& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p.vertices()[i];
  }
  return os << ']';
}

std::string to_string(const VertexPath& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

VertexSet neighbors(const Graph& g, const VertexId& v) {
  VertexSet out;
  for (const auto& e : g) {
    if (e.contains(v)) out.insert(e.other(v));
  }
  return out;
}

bool is_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right) {
  for (const auto& e : g) {
    const bool a_left = left.count(e.first()) != 0;
    const bool a_right = right.count(e.first()) != 0;
    const bool b_left = left.count(e.second()) != 0;
    const bool b_right = right.count(e.second()) != 0;
    if (!(a_left || a_right) || !(b_left || b_right)) return false;
    // {a,b} must be contained in neither party.
    if (a_left && b_left) return false;
    if (a_right && b_right) return false;
  }
  return true;
}

bool is_matching(const EdgeSet& m) {
  VertexSet seen;
  for (const auto& e : m) {
    if (!seen.insert(e.first()).second || !seen.insert(e.second()).second) return false;
  }
  return true;
}

bool is_subset(const EdgeSet& sub, const EdgeSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  if (!is_subset(m.edges(), g.edges())) throw PreconditionError("is_maximal_matching: matching is not a subset of the graph");
  for (const auto& e : g) {
    if (!m.covers(e.first()) && !m.covers(e.second())) return false;
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_subset(m.edges(), g.edges()) && m.vertices() == g.vertices();
}

std::optional<VertexId> partner(const Matching& m, const VertexId& v) { return m.partner(v); }

Graph remove_vertices(const Graph& g, const VertexSet& xs) {
  EdgeSet kept;
  for (const auto& e : g) {
    if (!xs.count(e.first()) && !xs.count(e.second())) kept.insert(e);
  }
  return Graph(std::move(kept));
}

Matching remove_vertices(const Matching& m, const VertexSet& xs) {
  EdgeSet kept;
  for (const auto& e : m) {
    if (!xs.count(e.first()) && !xs.count(e.second())) kept.insert(e);
  }
  return Matching(std::move(kept));
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_path(const Graph& g, const VertexPath& p) {
  if (p.size() == 1) return g.vertices().count(p.front()) != 0;
  for (const auto& e : p.edges()) {
    if (!g.contains(e)) return false;
  }
  return true;
}

bool is_alternating_path(const VertexPath& p, const EdgeSet& e) {
  const auto edges = p.edges();
  auto phase_holds = [&](bool first_in) {
    bool want = first_in;
    for (const auto& edge : edges) {
      if ((e.count(edge) != 0) != want) return false;
      want = !want;
    }
    return true;
  };
  return phase_holds(false) || phase_holds(true);
}

bool is_augmenting_path(const VertexPath& p, const Matching& m) {
  if (p.size() < 2) return false;
  if (m.covers(p.front()) || m.covers(p.back())) return false;
  return is_alternating_path(p, m.edges());
}

namespace {

// Colour 0 goes to the least vertex of every component.
std::map<VertexId, int> two_colouring(const Graph& g) {
  std::map<VertexId, VertexSet> adjacency;
  for (const auto& e : g) {
    adjacency[e.first()].insert(e.second());
    adjacency[e.second()].insert(e.first());
  }
  std::map<VertexId, int> colour;
  for (const auto& [start, _] : adjacency) {
    if (colour.count(start)) continue;
    colour[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (const auto& y : adjacency[x]) {
        auto it = colour.find(y);
        if (it == colour.end()) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (it->second == colour[x]) {
          throw InvalidInput("find_augmenting_path: graph is not bipartite (odd cycle through " + y.name() + ")");
        }
      }
    }
  }
  return colour;
}

}  // namespace

std::optional<VertexPath> find_augmenting_path(const Graph& g, const Matching& m) {
  const auto colour = two_colouring(g);
  std::map<VertexId, VertexSet> adjacency;
  for (const auto& e : g) {
    adjacency[e.first()].insert(e.second());
    adjacency[e.second()].insert(e.first());
  }

  // BFS over colour-0 vertices; parent links alternate free edge / matched edge.
  std::map<VertexId, VertexId> parent;
  VertexSet visited;
  std::deque<VertexId> queue;
  for (const auto& [v, c] : colour) {
    if (c == 0 && !m.covers(v)) {
      queue.push_back(v);
      visited.insert(v);
    }
  }
  while (!queue.empty()) {
    VertexId left = queue.front();
    queue.pop_front();
    for (const auto& right : adjacency[left]) {
      if (visited.count(right)) continue;
      if (m.contains(Edge(left, right))) continue;
      visited.insert(right);
      parent.emplace(right, left);
      auto mate = m.partner(right);
      if (!mate) {
        std::vector<VertexId> rev{right};
        VertexId cur = right;
        while (parent.count(cur)) {
          cur = parent.at(cur);
          rev.push_back(cur);
        }
        std::reverse(rev.begin(), rev.end());
        return VertexPath(std::move(rev));
      }
      if (!visited.count(*mate)) {
        visited.insert(*mate);
        parent.emplace(*mate, right);
        queue.push_back(*mate);
      }
    }
  }
  return std::nullopt;
}

Matching augment(const Matching& m, const VertexPath& p) {
  if (!is_augmenting_path(p, m)) throw PreconditionError("augment: path " + to_string(p) + " is not augmenting");
  return Matching(symmetric_difference(m.edges(), p.edge_set()));
}

Matching max_card_matching(const Graph& g) {
  Matching m;
  while (auto p = find_augmenting_path(g, m)) m = augment(m, *p);
  return m;
}

Graph make_perfect_matching(const Graph& g, const Matching& m) {
  Graph current = g;
  for (;;) {
    const auto vs = current.vertices();
    auto it = std::find_if(vs.begin(), vs.end(), [&](const VertexId& x) { return !m.covers(x); });
    if (it == vs.end()) return current;
    current = remove_vertices(current, VertexSet{*it});
  }
}

}  // namespace ranklab
