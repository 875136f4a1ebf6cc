#include "pdell/report.hpp"

#include <algorithm>
#include <sstream>

namespace pdell {

Json to_json(const TorsionVector& v) { return Json::array({v.coords[0], v.coords[1], v.coords[2], v.coords[3]}); }

Json to_json(const ProjLine& l) {
    return {{"basis", Json::array({to_json(l.basis(0)), to_json(l.basis(1))})},
            {"isotropic", is_isotropic(l)},
            {"p", l.modulus()}};
}

Json to_json(const AlphaMap& a) {
    const auto& e = a.entries();
    return {{"matrix", Json::array({Json::array({e[0], e[1]}), Json::array({e[2], e[3]})})},
            {"antisymplectic", is_antisymplectic(a)},
            {"det", a.determinant()}};
}

Json to_json(const Recipe& r) {
    return {{"kind", to_string(r.kind)}, {"p", r.p},   {"d", r.d},
            {"m", r.m},                  {"nu", r.nu}, {"deg_phi", r.deg_phi},
            {"deg_phi_prime", r.deg_phi_prime}};
}

Json to_json(const ClassifyOutcome& o) {
    Json j{{"outcome", to_string(o.kind)}};
    if (o.kind == ClassifyOutcome::Kind::Invalid) j["reason"] = o.reason;
    if (o.kind == ClassifyOutcome::Kind::Recipes) {
        j["recipes"] = Json::array();
        for (const auto& r : o.recipes) j["recipes"].push_back(to_json(r));
    }
    return j;
}

Json to_json(const IsotropicLineStats& s) {
    return {{"total", s.total},
            {"through_any_point", s.through_any_point},
            {"meeting_isotropic_line", s.meeting_isotropic_line},
            {"meeting_non_isotropic_line", s.meeting_non_isotropic_line}};
}

Json to_json(const RealizeWitness& w) {
    Json j{{"recipe", to_json(w.recipe)},
           {"t", to_json(w.t)},
           {"t_position", {{"r", to_string(w.position.rel_r)}, {"s", to_string(w.position.rel_s)}}},
           {"count", w.count}};
    if (w.v) j["v"] = to_json(w.v->representative());
    if (w.sample) {
        j["sample"] = {{"line", to_json(w.sample->line)}, {"alpha", to_json(w.sample->alpha)}};
        j["sample_meet_order"] = w.sample_meet_order;
    }
    return j;
}

Json to_json(const SmoothnessReport& r) {
    Json cands = Json::array();
    for (const auto& c : r.candidates)
        cands.push_back({{"a1", c.a1}, {"b1", c.b1}, {"nu1", c.nu1}, {"a2", c.a2}, {"b2", c.b2}, {"nu2", c.nu2}});
    Json j{{"n", r.n}, {"d", r.d}, {"r", r.r}, {"candidates", cands}, {"verdict", r.smooth() ? "smooth" : "not_smooth"}};
    if (!r.dropped.empty()) {
        j["dropped"] = Json::array();
        for (auto c : r.dropped) j["dropped"].push_back(to_string(c));
    }
    return j;
}

Json to_json(const Degree2Entry& e) {
    return {{"order", e.order.name},
            {"xi_description", describe(e.xi)},
            {"trace", e.xi.trace},
            {"m", e.m}};
}

Table degree2_table(const std::vector<Degree2Entry>& entries) {
    Table t{{"order", "xi_description", "trace", "m"}, {}};
    for (const auto& e : entries)
        t.rows.push_back({e.order.name, describe(e.xi), std::to_string(e.xi.trace), std::to_string(e.m)});
    return t;
}

Table recipe_table(const std::vector<Recipe>& recipes) {
    Table t{{"kind", "p", "d", "m", "nu", "deg_phi", "deg_phi_prime"}, {}};
    for (const auto& r : recipes)
        t.rows.push_back({std::string(to_string(r.kind)), std::to_string(r.p), std::to_string(r.d),
                          std::to_string(r.m), std::to_string(r.nu), std::to_string(r.deg_phi),
                          std::to_string(r.deg_phi_prime)});
    return t;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
        os << "\r\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
}

std::string render_plain(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    grow(t.header);
    for (const auto& row : t.rows) grow(row);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text += "  ";
            text += cells[i];
            if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
}

} // namespace pdell
