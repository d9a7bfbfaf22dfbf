#include "collabnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "collabnet/csv.hpp"

namespace collabnet {

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Degree: return "degree";
    case Metric::Closeness: return "closeness";
    case Metric::Pagerank: return "pagerank";
  }
  return "?";
}

std::optional<Metric> metric_from_name(std::string_view name) {
  if (name == "degree") return Metric::Degree;
  if (name == "closeness") return Metric::Closeness;
  if (name == "pagerank") return Metric::Pagerank;
  return std::nullopt;
}

ScoreTable degree_centrality(const CollabGraph& g) {
  if (g.edge_count() == 0) throw AnalysisError("degree_centrality: graph has no edges");
  int n = g.node_count();
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));

  ScoreTable table;
  table.metric = Metric::Degree;
  table.scores.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    table.scores[static_cast<size_t>(v)] = static_cast<double>(g.degree(v)) / max_deg;
  return table;
}

ScoreTable closeness_centrality(const CollabGraph& g) {
  int n = g.node_count();
  if (n < 2) throw AnalysisError("closeness_centrality: need at least 2 nodes");

  ScoreTable table;
  table.metric = Metric::Closeness;
  table.scores.assign(static_cast<size_t>(n), 0.0);

#pragma omp parallel
  {
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<NodeId> queue;
    queue.reserve(static_cast<size_t>(n));
#pragma omp for schedule(dynamic, 16)
    for (int v = 0; v < n; ++v) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      queue.push_back(v);
      dist[static_cast<size_t>(v)] = 0;
      std::int64_t sum = 0;
      int reach = 0;
      for (size_t head = 0; head < queue.size(); ++head) {
        NodeId u = queue[head];
        for (const Neighbor& nb : g.neighbors(u)) {
          if (dist[static_cast<size_t>(nb.id)] == -1) {
            dist[static_cast<size_t>(nb.id)] = dist[static_cast<size_t>(u)] + 1;
            sum += dist[static_cast<size_t>(nb.id)];
            ++reach;
            queue.push_back(nb.id);
          }
        }
      }
      if (reach > 0)
        table.scores[static_cast<size_t>(v)] =
            (static_cast<double>(reach) / sum) * (static_cast<double>(reach) / (n - 1));
    }
  }
  return table;
}

std::vector<double> build_personalization(const CollabGraph& g, const std::vector<FilmRecord>& films,
                                          double alpha, bool include_directors) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw AnalysisError("build_personalization: alpha must be in (0,1)");

  auto n = static_cast<size_t>(g.node_count());
  std::vector<double> sum(n, 0.0);
  std::vector<int> credits(n, 0);
  std::vector<std::pair<NodeId, double>> contributions;

  for (const FilmRecord& film : films) {
    if (!film.votes_norm)
      throw AnalysisError("build_personalization: film '" + film.title + "' lacks votes_norm");
    contributions.clear();
    // one credit per person per film; a director credit wins index 0
    for (size_t i = 0; i < film.actors.size(); ++i) {
      if (auto id = g.find(film.actors[i])) {
        double w = *film.votes_norm * std::pow(alpha, static_cast<double>(i));
        auto it = std::find_if(contributions.begin(), contributions.end(),
                               [&](const auto& c) { return c.first == *id; });
        if (it == contributions.end()) contributions.emplace_back(*id, w);
      }
    }
    if (include_directors) {
      for (const std::string& director : film.directors) {
        if (auto id = g.find(director)) {
          auto it = std::find_if(contributions.begin(), contributions.end(),
                                 [&](const auto& c) { return c.first == *id; });
          if (it == contributions.end()) contributions.emplace_back(*id, *film.votes_norm);
          else it->second = *film.votes_norm;  // alpha^0
        }
      }
    }
    for (auto [id, w] : contributions) {
      sum[static_cast<size_t>(id)] += w;
      credits[static_cast<size_t>(id)] += 1;
    }
  }

  std::vector<double> p(n, 0.0);
  double total = 0;
  for (size_t v = 0; v < n; ++v) {
    if (credits[v] > 0) p[v] = sum[v] / credits[v];
    total += p[v];
  }
  if (total <= 0) throw AnalysisError("build_personalization: zero total weight");
  for (double& x : p) x /= total;
  return p;
}

ScoreTable personalized_pagerank(const CollabGraph& g, const std::vector<double>& personalization,
                                 double damping, double tolerance, int max_iterations) {
  int n = g.node_count();
  if (personalization.size() != static_cast<size_t>(n))
    throw AnalysisError("personalized_pagerank: personalization size mismatch");
  if (!(damping > 0.0 && damping < 1.0))
    throw AnalysisError("personalized_pagerank: damping must be in (0,1)");

  const std::vector<double>& p = personalization;
  std::vector<double> x(p);
  std::vector<double> next(static_cast<size_t>(n), 0.0);

  double residual = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    // dangling mass: nodes without edges restart through p
    double dangling = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += x[static_cast<size_t>(v)];

#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
      double acc = 0;
      for (const Neighbor& nb : g.neighbors(v))
        acc += x[static_cast<size_t>(nb.id)] * nb.weight / g.strength(nb.id);
      next[static_cast<size_t>(v)] =
          damping * (acc + dangling * p[static_cast<size_t>(v)]) +
          (1.0 - damping) * p[static_cast<size_t>(v)];
    }

    residual = 0;
    for (int v = 0; v < n; ++v)
      residual += std::abs(next[static_cast<size_t>(v)] - x[static_cast<size_t>(v)]);
    x.swap(next);
    if (residual < tolerance) {
      ScoreTable table;
      table.metric = Metric::Pagerank;
      table.params.damping = damping;
      table.params.tolerance = tolerance;
      table.params.max_iterations = max_iterations;
      table.scores = std::move(x);
      return table;
    }
  }
  throw ConvergenceError("personalized_pagerank: no convergence after " +
                             std::to_string(max_iterations) + " iterations",
                         residual);
}

std::vector<std::pair<NodeId, double>> top_k(const ScoreTable& table, int k) {
  if (k < 1) throw AnalysisError("top_k: k must be >= 1");
  std::vector<std::pair<NodeId, double>> order;
  order.reserve(table.scores.size());
  for (size_t v = 0; v < table.scores.size(); ++v)
    order.emplace_back(static_cast<NodeId>(v), table.scores[v]);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (order.size() > static_cast<size_t>(k)) order.resize(static_cast<size_t>(k));
  return order;
}

void write_scores_csv(const CollabGraph& g, const ScoreTable& table, std::ostream& out,
                      std::optional<int> limit) {
  std::string params;
  if (table.params.alpha) params += "alpha=" + csv::format_double(*table.params.alpha);
  if (table.params.damping) {
    if (!params.empty()) params += ';';
    params += "damping=" + csv::format_double(*table.params.damping);
  }
  if (table.params.tolerance) {
    if (!params.empty()) params += ';';
    params += "tolerance=" + csv::format_double(*table.params.tolerance);
  }
  if (table.params.max_iterations) {
    if (!params.empty()) params += ';';
    params += "max_iterations=" + std::to_string(*table.params.max_iterations);
  }

  out << "rank,name,score,metric,params\n";
  auto ranking = top_k(table, limit ? *limit : static_cast<int>(std::max<size_t>(table.scores.size(), 1)));
  int rank = 0;
  for (auto [id, score] : ranking) {
    out << ++rank << ',' << csv::escape(g.name(id)) << ',' << csv::format_double(score) << ','
        << metric_name(table.metric) << ',' << params << '\n';
  }
}

}  // namespace collabnet
