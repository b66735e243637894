#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ranklab {

// Printable, whitespace-free vertex token. The total order exists only so
// that iteration is deterministic; no algorithm breaks ties with it.
class VertexId {
 public:
  explicit VertexId(std::string name);
  explicit VertexId(std::string_view name) : VertexId(std::string(name)) {}
  explicit VertexId(const char* name) : VertexId(std::string(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

using VertexSet = std::set<VertexId>;

// Unordered pair of two distinct vertices, stored normalized.
class Edge {
 public:
  Edge(VertexId a, VertexId b);
  Edge(std::string_view a, std::string_view b) : Edge(VertexId(a), VertexId(b)) {}

  const VertexId& first() const noexcept { return first_; }
  const VertexId& second() const noexcept { return second_; }
  bool contains(const VertexId& v) const noexcept { return v == first_ || v == second_; }
  bool intersects(const Edge& other) const noexcept {
    return contains(other.first_) || contains(other.second_);
  }
  // Endpoint that is not `v`; `v` must be an endpoint.
  const VertexId& other(const VertexId& v) const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  VertexId first_;
  VertexId second_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

using EdgeSet = std::set<Edge>;

VertexSet vertices_of(const EdgeSet& edges);

class Graph {
 public:
  Graph() = default;
  explicit Graph(EdgeSet edges) : edges_(std::move(edges)) {}
  Graph(std::initializer_list<Edge> edges) : edges_(edges) {}

  const EdgeSet& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(const Edge& e) const { return edges_.count(e) != 0; }
  bool has_edge(const VertexId& a, const VertexId& b) const;
  VertexSet vertices() const { return vertices_of(edges_); }

  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  EdgeSet edges_;
};

// Pairwise-disjoint edge set with partner lookup.
class Matching {
 public:
  Matching() = default;
  // Throws InvalidInput when two edges share an endpoint.
  explicit Matching(EdgeSet edges);
  Matching(std::initializer_list<Edge> edges) : Matching(EdgeSet(edges)) {}

  const EdgeSet& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(const Edge& e) const { return edges_.count(e) != 0; }
  bool covers(const VertexId& v) const { return partners_.count(v) != 0; }
  std::optional<VertexId> partner(const VertexId& v) const;
  VertexSet vertices() const;

  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  EdgeSet edges_;
  std::map<VertexId, VertexId> partners_;
};

// Ordered sequence of distinct vertices.
class VertexPath {
 public:
  VertexPath() = default;
  explicit VertexPath(std::vector<VertexId> vertices);
  VertexPath(std::initializer_list<std::string_view> names);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const VertexId& front() const { return vertices_.front(); }
  const VertexId& back() const { return vertices_.back(); }

  // Consecutive pairs; length size()-1, empty for paths of length <= 1.
  std::vector<Edge> edges() const;
  EdgeSet edge_set() const;
  VertexPath reversed() const;

  friend bool operator==(const VertexPath&, const VertexPath&) = default;

 private:
  std::vector<VertexId> vertices_;
};

std::ostream& operator<<(std::ostream& os, const VertexPath& p);
std::string to_string(const VertexPath& p);

VertexSet neighbors(const Graph& g, const VertexId& v);

bool is_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right);

bool is_matching(const EdgeSet& m);

bool is_subset(const EdgeSet& sub, const EdgeSet& super);

// Throws PreconditionError when m is not a subset of g.
bool is_maximal_matching(const Graph& g, const Matching& m);

// V(m) == V(g) and m is a subset of g.
bool is_perfect_matching(const Graph& g, const Matching& m);

std::optional<VertexId> partner(const Matching& m, const VertexId& v);

Graph remove_vertices(const Graph& g, const VertexSet& xs);
Matching remove_vertices(const Matching& m, const VertexSet& xs);

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

// Every consecutive edge pair of p lies in g.
bool is_path(const Graph& g, const VertexPath& p);

// Membership in `e` flips at every edge of p, starting from either phase.
bool is_alternating_path(const VertexPath& p, const EdgeSet& e);

bool is_augmenting_path(const VertexPath& p, const Matching& m);

// Alternating BFS from the free vertices of one colour class, ascending
// vertex order. Requires m to be a matching inside a bipartite g; throws
// InvalidInput when g has an odd cycle.
std::optional<VertexPath> find_augmenting_path(const Graph& g, const Matching& m);

// m xor edges(p); p must be augmenting w.r.t. m.
Matching augment(const Matching& m, const VertexPath& p);

Matching max_card_matching(const Graph& g);

// Repeatedly drops the least vertex of g not covered by m.
Graph make_perfect_matching(const Graph& g, const Matching& m);

}  // namespace ranklab
