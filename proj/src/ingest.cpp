#include "collabnet/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <string>

#include "collabnet/csv.hpp"
#include "collabnet/names.hpp"
#include "json.hpp"

namespace collabnet {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool parse_int(const std::string& s, int& out) {
  try {
    size_t pos = 0;
    out = std::stoi(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_real(const std::string& s, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size() && std::isfinite(out);
  } catch (...) {
    return false;
  }
}

std::vector<std::string> parse_name_list(const std::string& cell) {
  std::vector<std::string> names;
  for (const std::string& part : csv::split_pipe(cell)) {
    std::string name = canonical_name(part);
    if (!name.empty()) names.push_back(std::move(name));
  }
  return names;
}

// Missing numeric cells are empty strings or NA-ish placeholders.
bool cell_missing(const std::string& s) {
  return s.empty() || s == "NA" || s == "N/A" || s == "nan" || s == "NaN" || s == "null";
}

ParseResult<FilmRecord> parse_films_csv(std::istream& in) {
  ParseResult<FilmRecord> result;
  csv::Reader reader(in);
  std::vector<std::string> fields;
  int line = 0;

  if (!reader.next(fields, line)) throw IngestError("films: empty input");

  std::map<std::string, size_t> columns;
  for (size_t i = 0; i < fields.size(); ++i) columns[lower(canonical_name(fields[i]))] = i;
  for (const char* required : {"title", "year", "actors", "directors", "imdb_rating", "imdb_votes"})
    if (!columns.count(required))
      throw IngestError(std::string("films: missing column '") + required + "' in header");

  auto cell = [&](const char* name) -> const std::string& { return fields[columns.at(name)]; };

  while (reader.next(fields, line)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() < columns.size()) {
      result.errors.push_back({line, "wrong field count"});
      continue;
    }
    FilmRecord film;
    film.title = canonical_name(cell("title"));
    if (!parse_int(cell("year"), film.year)) {
      result.errors.push_back({line, "unparseable year '" + cell("year") + "'"});
      continue;
    }
    film.actors = parse_name_list(cell("actors"));
    film.directors = parse_name_list(cell("directors"));

    const std::string& rating = cell("imdb_rating");
    if (!cell_missing(rating)) {
      double value = 0;
      if (!parse_real(rating, value) || value < 0 || value > 10) {
        result.errors.push_back({line, "bad imdb_rating '" + rating + "'"});
        continue;
      }
      film.imdb_rating = value;
    }
    const std::string& votes = cell("imdb_votes");
    if (!cell_missing(votes)) {
      double value = 0;
      if (!parse_real(votes, value) || value < 0) {
        result.errors.push_back({line, "bad imdb_votes '" + votes + "'"});
        continue;
      }
      film.imdb_votes = value;
    }
    result.records.push_back(std::move(film));
  }
  return result;
}

std::vector<std::string> json_name_list(const json& value) {
  if (value.is_string()) return parse_name_list(value.get<std::string>());
  std::vector<std::string> names;
  if (value.is_array()) {
    for (const json& item : value) {
      if (!item.is_string()) continue;
      std::string name = canonical_name(item.get<std::string>());
      if (!name.empty()) names.push_back(std::move(name));
    }
  }
  return names;
}

ParseResult<FilmRecord> parse_films_json(std::istream& in) {
  ParseResult<FilmRecord> result;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IngestError(std::string("films: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw IngestError("films: JSON input must be an array");

  int index = 0;
  for (const json& item : doc) {
    ++index;
    if (!item.is_object()) {
      result.errors.push_back({index, "not an object"});
      continue;
    }
    FilmRecord film;
    film.title = canonical_name(item.value("title", std::string()));
    if (!item.contains("year") || !item["year"].is_number_integer()) {
      result.errors.push_back({index, "missing or non-integer year"});
      continue;
    }
    film.year = item["year"].get<int>();
    if (item.contains("actors")) film.actors = json_name_list(item["actors"]);
    if (item.contains("directors")) film.directors = json_name_list(item["directors"]);
    if (item.contains("imdb_rating") && item["imdb_rating"].is_number()) {
      double value = item["imdb_rating"].get<double>();
      if (value < 0 || value > 10) {
        result.errors.push_back({index, "imdb_rating out of range"});
        continue;
      }
      film.imdb_rating = value;
    }
    if (item.contains("imdb_votes") && item["imdb_votes"].is_number()) {
      double value = item["imdb_votes"].get<double>();
      if (value < 0) {
        result.errors.push_back({index, "negative imdb_votes"});
        continue;
      }
      film.imdb_votes = value;
    }
    result.records.push_back(std::move(film));
  }
  return result;
}

bool relation_flag(const json& value, bool& out) {
  if (value.is_boolean()) {
    out = value.get<bool>();
    return true;
  }
  if (value.is_number_integer()) {
    int v = value.get<int>();
    if (v != 0 && v != 1) return false;
    out = v == 1;
    return true;
  }
  if (value.is_string()) {
    const std::string& s = value.get_ref<const std::string&>();
    if (s == "1" || s == "true") out = true;
    else if (s == "0" || s == "false") out = false;
    else return false;
    return true;
  }
  return false;
}

void parse_relation_object(const json& item, int index, ParseResult<RelationRecord>& result,
                           std::set<std::string>& seen) {
  if (!item.is_object()) {
    result.errors.push_back({index, "not an object"});
    return;
  }
  if (!item.contains("star name") || !item["star name"].is_string()) {
    result.errors.push_back({index, "missing \"star name\""});
    return;
  }
  RelationRecord rec;
  rec.star_name = canonical_name(item["star name"].get<std::string>());
  if (rec.star_name.empty()) {
    result.errors.push_back({index, "empty \"star name\""});
    return;
  }
  if (!item.contains("is related") || !relation_flag(item["is related"], rec.is_related)) {
    result.errors.push_back({index, "missing or invalid \"is related\" for " + rec.star_name});
    return;
  }
  if (item.contains("related star name") && item["related star name"].is_string())
    rec.related_star_name = canonical_name(item["related star name"].get<std::string>());

  if (rec.is_related && rec.related_star_name.empty()) {
    result.errors.push_back({index, "related record without related star name: " + rec.star_name});
    return;
  }
  if (!rec.is_related && !rec.related_star_name.empty()) {
    result.errors.push_back({index, "unrelated record carries related star name: " + rec.star_name});
    return;
  }
  if (!seen.insert(rec.star_name).second) {
    result.warnings.push_back("duplicate star name '" + rec.star_name + "': keeping first record");
    return;
  }
  result.records.push_back(std::move(rec));
}

}  // namespace

ParseResult<FilmRecord> parse_films(std::istream& in, FilmFormat format) {
  if (!in) throw IngestError("films: unreadable source");
  return format == FilmFormat::Csv ? parse_films_csv(in) : parse_films_json(in);
}

ParseResult<RelationRecord> parse_relations(std::istream& in) {
  if (!in) throw IngestError("relations: unreadable source");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw IngestError("relations: empty input");

  ParseResult<RelationRecord> result;
  std::set<std::string> seen;
  if (text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw IngestError(std::string("relations: invalid JSON: ") + e.what());
    }
    int index = 0;
    for (const json& item : doc) parse_relation_object(item, ++index, result, seen);
  } else {
    // line-delimited JSON
    size_t pos = 0;
    int index = 0;
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string lineText = text.substr(pos, end - pos);
      pos = end + 1;
      ++index;
      if (lineText.find_first_not_of(" \t\r") == std::string::npos) continue;
      json item = json::parse(lineText, nullptr, false);
      if (item.is_discarded()) {
        result.errors.push_back({index, "invalid JSON line"});
        continue;
      }
      parse_relation_object(item, index, result, seen);
    }
  }
  return result;
}

std::vector<FilmRecord> drop_missing_actors(std::vector<FilmRecord> films) {
  std::erase_if(films, [](const FilmRecord& f) { return f.actors.empty(); });
  return films;
}

std::vector<FilmRecord> filter_window(const std::vector<FilmRecord>& films, YearRange window) {
  std::vector<FilmRecord> out;
  for (const FilmRecord& f : films)
    if (window.contains(f.year)) out.push_back(f);
  return out;
}

std::vector<FilmRecord> impute_votes(std::vector<FilmRecord> films) {
  std::vector<double> votes;
  for (const FilmRecord& f : films)
    if (f.imdb_votes) votes.push_back(*f.imdb_votes);
  if (votes.empty()) throw IngestError("impute_votes: every record is missing imdb_votes");

  std::sort(votes.begin(), votes.end());
  size_t n = votes.size();
  double median = n % 2 == 1 ? votes[n / 2] : (votes[n / 2 - 1] + votes[n / 2]) / 2.0;

  for (FilmRecord& f : films)
    if (!f.imdb_votes) f.imdb_votes = median;
  return films;
}

std::vector<FilmRecord> winsorize_votes(std::vector<FilmRecord> films, double quantile) {
  if (quantile < 0 || quantile > 1) throw IngestError("winsorize: quantile must be in [0,1]");
  std::vector<double> votes;
  for (const FilmRecord& f : films)
    if (f.imdb_votes) votes.push_back(*f.imdb_votes);
  if (votes.empty()) return films;

  std::sort(votes.begin(), votes.end());
  // Lower nearest-rank quantile; keeps the cap a realized value, so applying
  // the winsorization twice equals applying it once.
  size_t lo = static_cast<size_t>(quantile * static_cast<double>(votes.size() - 1));
  double cap = votes[lo];

  for (FilmRecord& f : films)
    if (f.imdb_votes && *f.imdb_votes > cap) f.imdb_votes = cap;
  return films;
}

std::vector<FilmRecord> normalize_votes(std::vector<FilmRecord> films) {
  double lo = 0, hi = 0;
  bool any = false;
  for (const FilmRecord& f : films) {
    if (!f.imdb_votes) throw IngestError("normalize_votes: votes not imputed");
    if (!any) {
      lo = hi = *f.imdb_votes;
      any = true;
    } else {
      lo = std::min(lo, *f.imdb_votes);
      hi = std::max(hi, *f.imdb_votes);
    }
  }
  for (FilmRecord& f : films)
    f.votes_norm = hi > lo ? (*f.imdb_votes - lo) / (hi - lo) : 1.0;
  return films;
}

std::vector<FilmRecord> apply_actor_cap(std::vector<FilmRecord> films, int cap) {
  if (cap < 1) throw IngestError("actor cap must be >= 1");
  for (FilmRecord& f : films)
    if (f.actors.size() > static_cast<size_t>(cap)) f.actors.resize(static_cast<size_t>(cap));
  return films;
}

std::vector<FilmRecord> preprocess(std::vector<FilmRecord> films, const PreprocessConfig& config) {
  films = drop_missing_actors(std::move(films));
  if (films.empty()) return films;
  films = impute_votes(std::move(films));
  if (config.winsorize_quantile) films = winsorize_votes(std::move(films), *config.winsorize_quantile);
  films = normalize_votes(std::move(films));
  films = apply_actor_cap(std::move(films), config.actor_cap);
  return films;
}

}  // namespace collabnet
