#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collabnet/types.hpp"

namespace collabnet {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct Neighbor {
  NodeId id;
  double weight;
  std::int32_t edge;  // index into CollabGraph::edges()
};

struct PathResult {
  NodeId source = kNoNode;
  NodeId target = kNoNode;
  std::optional<int> hops;     // empty when target is unreachable
  std::vector<NodeId> nodes;   // hops + 1 entries when reachable
  bool reachable() const { return hops.has_value(); }
};

// Undirected weighted collaboration graph over actors and directors.
// One node per distinct canonical person name; an edge weight is the sum of
// votes_norm over all films the pair shares. Pairs whose accumulated weight
// is zero get no edge. Immutable after construction; queries are thread-safe.
class CollabGraph {
 public:
  struct Edge {
    NodeId u, v;  // u < v
    double weight;
    std::vector<std::int32_t> films;  // indices into the film list passed to the builder
  };

  CollabGraph() = default;

  int node_count() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(NodeId v) const { return names_[static_cast<size_t>(v)]; }
  bool is_actor(NodeId v) const { return (roles_[static_cast<size_t>(v)] & kActor) != 0; }
  bool is_director(NodeId v) const { return (roles_[static_cast<size_t>(v)] & kDirector) != 0; }

  // Lookup by canonical name.
  std::optional<NodeId> find(std::string_view name) const;

  std::span<const Neighbor> neighbors(NodeId v) const {
    return adj_[static_cast<size_t>(v)];
  }
  int degree(NodeId v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  double strength(NodeId v) const { return strength_[static_cast<size_t>(v)]; }

  // 0 when no edge exists.
  double edge_weight(NodeId u, NodeId v) const;

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  static constexpr std::uint8_t kActor = 1;
  static constexpr std::uint8_t kDirector = 2;

  friend CollabGraph build_graph(const std::vector<FilmRecord>& films);

  std::vector<std::string> names_;
  std::vector<std::uint8_t> roles_;
  std::vector<std::vector<Neighbor>> adj_;  // sorted by neighbor id
  std::vector<double> strength_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, NodeId> index_;
};

// Requires preprocessed films (votes_norm present). Node ids follow first
// appearance order (cast in billing order, then directors, film by film), so
// the same film list always produces the same graph.
CollabGraph build_graph(const std::vector<FilmRecord>& films);

// Canonical shortest paths from one source to every node: BFS hop counts;
// among equal-hop paths the one maximizing the product of edge weights wins,
// remaining ties go to the lexicographically smallest node sequence.
class ShortestPathTree {
 public:
  ShortestPathTree(const CollabGraph& g, NodeId source);

  NodeId source() const { return source_; }
  bool reachable(NodeId v) const { return dist_[static_cast<size_t>(v)] >= 0; }
  int hops(NodeId v) const { return dist_[static_cast<size_t>(v)]; }
  // Product of edge weights along the canonical path (1.0 at the source).
  double weight_product(NodeId v) const { return prod_[static_cast<size_t>(v)]; }
  NodeId predecessor(NodeId v) const { return pred_[static_cast<size_t>(v)]; }

  PathResult path_to(NodeId target) const;

 private:
  NodeId source_;
  std::vector<int> dist_;     // -1 unreachable
  std::vector<double> prod_;
  std::vector<NodeId> pred_;
};

PathResult shortest_path(const CollabGraph& g, NodeId source, NodeId target);

// Average local clustering coefficient; nodes of degree < 2 contribute 0.
double clustering_coefficient(const CollabGraph& g);

struct PathLengthStats {
  double value = 0;             // mean hops over unordered pairs in the LCC
  std::int64_t pair_count = 0;
  int lcc_size = 0;
};

// Mean hop distance within the largest connected component.
// Throws AnalysisError on a graph without edges.
PathLengthStats average_path_length(const CollabGraph& g);

struct DegreeDistribution {
  std::vector<std::pair<int, int>> histogram;  // (degree, node count), degree ascending
  // Least-squares slope of ln(count) vs ln(degree) over degrees >= 1;
  // absent with fewer than two histogram points.
  std::optional<double> loglog_slope;
};

DegreeDistribution degree_distribution(const CollabGraph& g);

// Component sizes in descending order.
std::vector<int> component_sizes(const CollabGraph& g);

void write_edge_list_csv(const CollabGraph& g, std::ostream& out);
void write_node_table_csv(const CollabGraph& g, std::ostream& out);

}  // namespace collabnet
