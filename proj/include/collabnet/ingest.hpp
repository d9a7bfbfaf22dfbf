#pragma once

#include <iosfwd>

#include "collabnet/types.hpp"

namespace collabnet {

enum class FilmFormat { Csv, Json };

// Films CSV: header row required with columns title, year, actors, directors,
// imdb_rating, imdb_votes (any order, extra columns ignored). actors and
// directors are pipe-delimited ordered lists, index order = billing order.
// Films JSON: array of objects with the same keys; actors/directors are
// arrays of strings and may also be given as pipe-delimited strings.
// Malformed rows are collected as errors, not fatal; an unreadable or
// header-less source throws IngestError.
ParseResult<FilmRecord> parse_films(std::istream& in, FilmFormat format);

// Relations file: JSON array (or line-delimited JSON) of objects with keys
// "star name", "is related" (1/0 or true/false), "related star name".
// Records violating the RelationRecord invariants become record-level errors;
// duplicate star names keep the first record and warn.
ParseResult<RelationRecord> parse_relations(std::istream& in);

// Drops records whose actor list is empty.
std::vector<FilmRecord> drop_missing_actors(std::vector<FilmRecord> films);

std::vector<FilmRecord> filter_window(const std::vector<FilmRecord>& films, YearRange window);

// Replaces missing imdb_votes with the median of the non-missing values
// (even count: mean of the two central values). Throws IngestError when
// every record is missing votes.
std::vector<FilmRecord> impute_votes(std::vector<FilmRecord> films);

// Caps votes at the given quantile (lower nearest-rank order statistic).
// Requires votes already imputed.
std::vector<FilmRecord> winsorize_votes(std::vector<FilmRecord> films, double quantile);

// Min-max scaling of votes over the given film set into votes_norm.
// Degenerate case max == min maps every film to 1.0 so each collaboration
// keeps positive strength.
std::vector<FilmRecord> normalize_votes(std::vector<FilmRecord> films);

// Truncates each actor list to its first `cap` entries, keeping order.
std::vector<FilmRecord> apply_actor_cap(std::vector<FilmRecord> films, int cap);

// drop -> impute -> (winsorize) -> normalize -> cap over one window's films.
std::vector<FilmRecord> preprocess(std::vector<FilmRecord> films, const PreprocessConfig& config);

}  // namespace collabnet
