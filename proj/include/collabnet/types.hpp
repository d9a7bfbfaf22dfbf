#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace collabnet {

struct YearRange {
  int first = 0;
  int last = 0;
  bool contains(int year) const { return year >= first && year <= last; }
};

// One film row after parsing. Billing order is preserved: actors[0] is the lead.
struct FilmRecord {
  std::string title;
  int year = 0;
  std::vector<std::string> actors;
  std::vector<std::string> directors;
  std::optional<double> imdb_rating;
  std::optional<double> imdb_votes;  // integral in source data; median imputation can introduce halves
  std::optional<double> votes_norm;  // set by normalize_votes, in [0,1]
};

struct RelationRecord {
  std::string star_name;
  bool is_related = false;
  std::string related_star_name;  // non-empty iff is_related
};

struct PreprocessConfig {
  int actor_cap = 10;
  YearRange graph_window{1990, 2014};
  YearRange cohort_window{2015, 2019};
  // When set, votes are capped at this quantile before normalization.
  std::optional<double> winsorize_quantile;
};

struct ParseIssue {
  int line = 0;  // 1-based source line for CSV, record index for JSON
  std::string message;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::vector<ParseIssue> errors;  // row/record-level problems, collected
  std::vector<std::string> warnings;
};

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : AnalysisError {
  ConvergenceError(const std::string& what, double residual_)
      : AnalysisError(what), residual(residual_) {}
  double residual;
};

}  // namespace collabnet
