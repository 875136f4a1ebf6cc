#pragma once

// Machine-readable views of results: JSON objects (keys sorted by construction) and
// flat tables rendered as aligned text or RFC 4180 CSV.

#include "pdell/classify.hpp"
#include "pdell/cmorders.hpp"
#include "pdell/surface.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace pdell {

using Json = nlohmann::json;

Json to_json(const TorsionVector& v);
Json to_json(const ProjLine& l);
Json to_json(const AlphaMap& a);
Json to_json(const Recipe& r);
Json to_json(const ClassifyOutcome& o);
Json to_json(const IsotropicLineStats& s);
Json to_json(const RealizeWitness& w);
/// {n, d, r, candidates: [{a1, b1, nu1, a2, b2, nu2}...], verdict}; "dropped" appears only for ablations.
Json to_json(const SmoothnessReport& r);
Json to_json(const Degree2Entry& e);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table degree2_table(const std::vector<Degree2Entry>& entries);
Table recipe_table(const std::vector<Recipe>& recipes);

std::string csv_escape(const std::string& field);
std::string render_csv(const Table& t);
std::string render_plain(const Table& t);

} // namespace pdell
