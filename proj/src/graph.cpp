#include "collabnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

#include "collabnet/csv.hpp"

namespace collabnet {

std::optional<NodeId> CollabGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double CollabGraph::edge_weight(NodeId u, NodeId v) const {
  const auto& nbrs = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.id < id; });
  if (it == nbrs.end() || it->id != v) return 0.0;
  return it->weight;
}

CollabGraph build_graph(const std::vector<FilmRecord>& films) {
  CollabGraph g;

  auto intern = [&g](const std::string& name, std::uint8_t role) -> NodeId {
    auto [it, inserted] = g.index_.try_emplace(name, static_cast<NodeId>(g.names_.size()));
    if (inserted) {
      g.names_.push_back(name);
      g.roles_.push_back(0);
    }
    g.roles_[static_cast<size_t>(it->second)] |= role;
    return it->second;
  };

  struct Accum {
    double weight = 0;
    std::vector<std::int32_t> films;
  };
  std::map<std::pair<NodeId, NodeId>, Accum> pairs;

  std::vector<NodeId> cast;
  for (std::int32_t fi = 0; fi < static_cast<std::int32_t>(films.size()); ++fi) {
    const FilmRecord& film = films[static_cast<size_t>(fi)];
    if (!film.votes_norm) throw AnalysisError("build_graph: film '" + film.title + "' lacks votes_norm");

    cast.clear();
    for (const std::string& actor : film.actors) {
      NodeId id = intern(actor, 1);
      if (std::find(cast.begin(), cast.end(), id) == cast.end()) cast.push_back(id);
    }
    for (const std::string& director : film.directors) {
      NodeId id = intern(director, 2);
      if (std::find(cast.begin(), cast.end(), id) == cast.end()) cast.push_back(id);
    }

    double w = *film.votes_norm;
    for (size_t i = 0; i < cast.size(); ++i) {
      for (size_t j = i + 1; j < cast.size(); ++j) {
        NodeId a = std::min(cast[i], cast[j]);
        NodeId b = std::max(cast[i], cast[j]);
        Accum& acc = pairs[{a, b}];
        acc.weight += w;
        acc.films.push_back(fi);
      }
    }
  }

  g.adj_.resize(g.names_.size());
  g.strength_.assign(g.names_.size(), 0.0);
  for (auto& [key, acc] : pairs) {
    if (acc.weight <= 0) continue;  // pairs sharing only zero-strength films get no edge
    auto edge_index = static_cast<std::int32_t>(g.edges_.size());
    g.adj_[static_cast<size_t>(key.first)].push_back({key.second, acc.weight, edge_index});
    g.adj_[static_cast<size_t>(key.second)].push_back({key.first, acc.weight, edge_index});
    g.strength_[static_cast<size_t>(key.first)] += acc.weight;
    g.strength_[static_cast<size_t>(key.second)] += acc.weight;
    g.edges_.push_back({key.first, key.second, acc.weight, std::move(acc.films)});
  }
  for (auto& nbrs : g.adj_)
    std::sort(nbrs.begin(), nbrs.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  return g;
}

ShortestPathTree::ShortestPathTree(const CollabGraph& g, NodeId source) : source_(source) {
  auto n = static_cast<size_t>(g.node_count());
  dist_.assign(n, -1);
  prod_.assign(n, 0.0);
  pred_.assign(n, kNoNode);

  // Level-synchronous BFS. Each level is decided from the fully ranked
  // previous level, which keeps the product/lexicographic tie-breaking total.
  std::vector<int> lex_rank(n, 0);
  std::vector<NodeId> level{source};
  std::vector<NodeId> next;
  dist_[static_cast<size_t>(source)] = 0;
  prod_[static_cast<size_t>(source)] = 1.0;

  int depth = 0;
  while (!level.empty()) {
    ++depth;
    next.clear();
    for (NodeId u : level) {
      for (const Neighbor& nb : g.neighbors(u)) {
        if (dist_[static_cast<size_t>(nb.id)] == -1) {
          dist_[static_cast<size_t>(nb.id)] = depth;
          next.push_back(nb.id);
        }
      }
    }
    for (NodeId v : next) {
      double best_prod = -1.0;
      NodeId best_pred = kNoNode;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (dist_[static_cast<size_t>(nb.id)] != depth - 1) continue;
        double cand = prod_[static_cast<size_t>(nb.id)] * nb.weight;
        if (cand > best_prod ||
            (cand == best_prod && lex_rank[static_cast<size_t>(nb.id)] <
                                      lex_rank[static_cast<size_t>(best_pred)])) {
          best_prod = cand;
          best_pred = nb.id;
        }
      }
      prod_[static_cast<size_t>(v)] = best_prod;
      pred_[static_cast<size_t>(v)] = best_pred;
    }
    // Rank this level by canonical-path lexicographic order: paths share the
    // predecessor's ordering and end with the node itself.
    std::sort(next.begin(), next.end(), [&](NodeId a, NodeId b) {
      int ra = lex_rank[static_cast<size_t>(pred_[static_cast<size_t>(a)])];
      int rb = lex_rank[static_cast<size_t>(pred_[static_cast<size_t>(b)])];
      if (ra != rb) return ra < rb;
      return a < b;
    });
    for (size_t i = 0; i < next.size(); ++i) lex_rank[static_cast<size_t>(next[i])] = static_cast<int>(i);
    std::swap(level, next);
  }
}

PathResult ShortestPathTree::path_to(NodeId target) const {
  PathResult result;
  result.source = source_;
  result.target = target;
  if (dist_[static_cast<size_t>(target)] < 0) return result;
  result.hops = dist_[static_cast<size_t>(target)];
  result.nodes.resize(static_cast<size_t>(*result.hops) + 1);
  NodeId v = target;
  for (size_t i = result.nodes.size(); i-- > 0;) {
    result.nodes[i] = v;
    v = pred_[static_cast<size_t>(v)];
  }
  return result;
}

PathResult shortest_path(const CollabGraph& g, NodeId source, NodeId target) {
  return ShortestPathTree(g, source).path_to(target);
}

namespace {

// Plain hop-count BFS; fills dist with -1 for unreachable nodes.
void bfs_hops(const CollabGraph& g, NodeId source, std::vector<int>& dist,
              std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(source);
  dist[static_cast<size_t>(source)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    int du = dist[static_cast<size_t>(u)];
    for (const Neighbor& nb : g.neighbors(u)) {
      if (dist[static_cast<size_t>(nb.id)] == -1) {
        dist[static_cast<size_t>(nb.id)] = du + 1;
        queue.push_back(nb.id);
      }
    }
  }
}

std::vector<int> component_of(const CollabGraph& g) {
  auto n = static_cast<size_t>(g.node_count());
  std::vector<int> comp(n, -1);
  std::vector<NodeId> stack;
  int next_comp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next_comp;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (comp[static_cast<size_t>(nb.id)] == -1) {
          comp[static_cast<size_t>(nb.id)] = next_comp;
          stack.push_back(nb.id);
        }
      }
    }
    ++next_comp;
  }
  return comp;
}

}  // namespace

double clustering_coefficient(const CollabGraph& g) {
  int n = g.node_count();
  if (n == 0) throw AnalysisError("clustering_coefficient: empty graph");

  // Per-node coefficients land in a vector and are summed serially, so the
  // result does not depend on the thread count.
  std::vector<double> local(static_cast<size_t>(n), 0.0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    auto deg = static_cast<int>(nbrs.size());
    if (deg < 2) continue;
    long long links = 0;
    for (const Neighbor& a : nbrs) {
      // count sorted-adjacency intersections; each neighbor-neighbor edge
      // is met twice below, once from each endpoint
      auto other = g.neighbors(a.id);
      auto it = other.begin();
      auto jt = nbrs.begin();
      while (it != other.end() && jt != nbrs.end()) {
        if (it->id < jt->id) ++it;
        else if (jt->id < it->id) ++jt;
        else {
          ++links;
          ++it;
          ++jt;
        }
      }
    }
    local[static_cast<size_t>(v)] =
        static_cast<double>(links) / (static_cast<double>(deg) * (deg - 1));
  }
  double sum = std::accumulate(local.begin(), local.end(), 0.0);
  return sum / n;
}

PathLengthStats average_path_length(const CollabGraph& g) {
  if (g.node_count() == 0) throw AnalysisError("average_path_length: empty graph");
  if (g.edge_count() == 0) throw AnalysisError("average_path_length: graph has no edges");

  std::vector<int> comp = component_of(g);
  int num_comps = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> sizes(static_cast<size_t>(num_comps), 0);
  for (int c : comp) ++sizes[static_cast<size_t>(c)];
  int lcc = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<NodeId> members;
  for (int v = 0; v < g.node_count(); ++v)
    if (comp[static_cast<size_t>(v)] == lcc) members.push_back(v);

  auto m = static_cast<int>(members.size());
  std::vector<std::int64_t> row_sums(static_cast<size_t>(m), 0);
#pragma omp parallel
  {
    std::vector<int> dist(static_cast<size_t>(g.node_count()));
    std::vector<NodeId> queue;
    queue.reserve(static_cast<size_t>(g.node_count()));
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < m; ++i) {
      bfs_hops(g, members[static_cast<size_t>(i)], dist, queue);
      std::int64_t sum = 0;
      for (NodeId v : members) sum += dist[static_cast<size_t>(v)];
      row_sums[static_cast<size_t>(i)] = sum;
    }
  }
  std::int64_t total = std::accumulate(row_sums.begin(), row_sums.end(), std::int64_t{0});

  PathLengthStats stats;
  stats.lcc_size = m;
  stats.pair_count = static_cast<std::int64_t>(m) * (m - 1) / 2;
  stats.value = static_cast<double>(total) / 2.0 / static_cast<double>(stats.pair_count);
  return stats;
}

DegreeDistribution degree_distribution(const CollabGraph& g) {
  std::map<int, int> counts;
  for (int v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];

  DegreeDistribution dd;
  for (auto [degree, count] : counts) dd.histogram.emplace_back(degree, count);

  // least squares on (ln degree, ln count), degree-0 bin excluded
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int pts = 0;
  for (auto [degree, count] : counts) {
    if (degree < 1) continue;
    double x = std::log(static_cast<double>(degree));
    double y = std::log(static_cast<double>(count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++pts;
  }
  double denom = pts * sxx - sx * sx;
  if (pts >= 2 && denom != 0) dd.loglog_slope = (pts * sxy - sx * sy) / denom;
  return dd;
}

std::vector<int> component_sizes(const CollabGraph& g) {
  if (g.node_count() == 0) return {};
  std::vector<int> comp = component_of(g);
  int num_comps = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> sizes(static_cast<size_t>(num_comps), 0);
  for (int c : comp) ++sizes[static_cast<size_t>(c)];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

void write_edge_list_csv(const CollabGraph& g, std::ostream& out) {
  out << "node_a,node_b,weight\n";
  for (const CollabGraph::Edge& e : g.edges())
    out << e.u << ',' << e.v << ',' << csv::format_double(e.weight) << '\n';
}

void write_node_table_csv(const CollabGraph& g, std::ostream& out) {
  out << "id,name,roles\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << v << ',' << csv::escape(g.name(v)) << ',';
    if (g.is_actor(v) && g.is_director(v)) out << "actor|director";
    else if (g.is_director(v)) out << "director";
    else out << "actor";
    out << '\n';
  }
}

}  // namespace collabnet
