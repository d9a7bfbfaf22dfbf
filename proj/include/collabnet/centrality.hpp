#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collabnet/graph.hpp"
#include "collabnet/types.hpp"

namespace collabnet {

enum class Metric { Degree, Closeness, Pagerank };

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

struct ScoreParams {
  std::optional<double> alpha;
  std::optional<double> damping;
  std::optional<double> tolerance;
  std::optional<int> max_iterations;
};

struct ScoreTable {
  Metric metric = Metric::Degree;
  ScoreParams params;
  std::vector<double> scores;  // indexed by NodeId
};

// score(v) = deg(v) / max degree, unweighted. Throws on an edgeless graph.
ScoreTable degree_centrality(const CollabGraph& g);

// Wasserman-Faust closeness: (n_reach / sum of hop distances) scaled by
// n_reach / (V - 1). On a connected graph this is (V - 1) / sum d(u, v).
// Isolated nodes score 0.
ScoreTable closeness_centrality(const CollabGraph& g);

// Restart distribution for personalized PageRank. Per film, the role at
// billing index i contributes votes_norm * alpha^i; directors sit at index 0.
// A node's raw weight is the mean contribution over its film credits; the
// vector is normalized to sum 1. alpha must lie in (0,1).
std::vector<double> build_personalization(const CollabGraph& g, const std::vector<FilmRecord>& films,
                                          double alpha, bool include_directors = true);

// Power iteration on x <- damping * W x + (1 - damping) * p with W the
// column-normalized edge-weight transition matrix; degree-0 nodes redistribute
// their mass through p. Converges when the L1 step change drops below
// tolerance, otherwise throws ConvergenceError carrying the residual.
ScoreTable personalized_pagerank(const CollabGraph& g, const std::vector<double>& personalization,
                                 double damping = 0.85, double tolerance = 1e-9,
                                 int max_iterations = 200);

// Descending by score, ties broken by NodeId ascending; k saturates.
std::vector<std::pair<NodeId, double>> top_k(const ScoreTable& table, int k);

void write_scores_csv(const CollabGraph& g, const ScoreTable& table, std::ostream& out,
                      std::optional<int> limit = std::nullopt);

}  // namespace collabnet
