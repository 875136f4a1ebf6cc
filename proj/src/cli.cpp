#include "pdell/cli.hpp"

#include "pdell/report.hpp"

#include "CLI11.hpp"

#include <map>
#include <optional>

namespace pdell {

namespace {

enum class Format { Plain, Csv, Json };

struct Emitter {
    Format format;
    std::ostream& out;

    void operator()(const Json& j, const Table& t) const {
        switch (format) {
        case Format::Json: out << j.dump(2) << '\n'; break;
        case Format::Csv: out << render_csv(t); break;
        case Format::Plain: out << render_plain(t); break;
        }
    }
};

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
    err << Json{{"code", code}, {"message", message}}.dump() << '\n';
}

Table key_values(const std::vector<std::pair<std::string, std::string>>& kv) {
    Table t{{"key", "value"}, {}};
    for (const auto& [k, v] : kv) t.rows.push_back({k, v});
    return t;
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::string vec_str(const TorsionVector& v) { return v.to_string(); }

int command_geom(const Emitter& emit, std::int64_t p_raw, bool stats, bool list, std::uint32_t bound) {
    const Prime p(p_raw);
    if (list) {
        const auto lines = enumerate_lines(p, bound);
        Json j{{"p", p.value()}, {"lines", Json::array()}};
        Table t{{"index", "basis0", "basis1", "isotropic"}, {}};
        for (std::size_t i = 0; i < lines.size(); ++i) {
            j["lines"].push_back(to_json(lines[i]));
            t.rows.push_back({std::to_string(i), vec_str(lines[i].basis(0)), vec_str(lines[i].basis(1)),
                              is_isotropic(lines[i]) ? "true" : "false"});
        }
        emit(j, t);
        return kExitOk;
    }
    Json j{{"p", p.value()}, {"points", point_count(p)}, {"lines", line_count(p)}};
    std::vector<std::pair<std::string, std::string>> kv{
        {"p", str(p.value())}, {"points", std::to_string(point_count(p))}, {"lines", std::to_string(line_count(p))}};
    if (stats) {
        const auto s = isotropic_line_stats(p, bound);
        j["isotropic"] = to_json(s);
        kv.push_back({"isotropic_total", std::to_string(s.total)});
        kv.push_back({"isotropic_through_any_point", std::to_string(s.through_any_point)});
        kv.push_back({"isotropic_meeting_isotropic_line", std::to_string(s.meeting_isotropic_line)});
        kv.push_back({"isotropic_meeting_non_isotropic_line", std::to_string(s.meeting_non_isotropic_line)});
    }
    emit(j, key_values(kv));
    return kExitOk;
}

int command_antisym(const Emitter& emit, std::int64_t p_raw, bool list, std::uint32_t bound) {
    const Prime p(p_raw);
    const auto maps = enumerate_antisymplectic(p, bound);
    if (list) {
        Json j{{"p", p.value()}, {"count", maps.size()}, {"maps", Json::array()}};
        Table t{{"a", "b", "c", "d", "det"}, {}};
        for (const auto& m : maps) {
            j["maps"].push_back(to_json(m));
            const auto& e = m.entries();
            t.rows.push_back({str(e[0]), str(e[1]), str(e[2]), str(e[3]), str(m.determinant())});
        }
        emit(j, t);
    } else {
        emit(Json{{"p", p.value()}, {"count", maps.size()}},
             key_values({{"p", str(p.value())}, {"count", std::to_string(maps.size())}}));
    }
    return maps.empty() ? kExitEmpty : kExitOk;
}

int emit_outcome(const Emitter& emit, std::ostream& err, const ClassifyOutcome& o) {
    if (o.kind == ClassifyOutcome::Kind::Invalid) {
        report_error(err, "InvalidArgument", o.reason);
        return kExitInvalidInput;
    }
    Table t = recipe_table(o.recipes);
    if (o.kind == ClassifyOutcome::Kind::Trivial) t = key_values({{"outcome", "trivial"}});
    emit(to_json(o), t);
    return kExitOk;
}

int command_bitri_all(const Emitter& emit) {
    Json j = Json::array();
    Table t{{"m", "outcome", "kind", "deg_phi", "deg_phi_prime", "nu"}, {}};
    for (std::int64_t m = 1; m <= 6; ++m) {
        const auto o = classify_bitri(m);
        Json row = to_json(o);
        row["m"] = m;
        j.push_back(row);
        if (o.kind == ClassifyOutcome::Kind::Recipes) {
            for (const auto& r : o.recipes)
                t.rows.push_back({str(m), "recipes", std::string(to_string(r.kind)), str(r.deg_phi),
                                  str(r.deg_phi_prime), str(r.nu)});
        } else {
            t.rows.push_back({str(m), std::string(to_string(o.kind)), "", "", "", ""});
        }
    }
    emit(j, t);
    return kExitOk;
}

int command_construct(const Emitter& emit, const std::string& example, std::int64_t p_raw, const IsogenyDatum& iso,
                      const std::string& scenario_name, const std::string& side_name, bool witness) {
    const Prime p(p_raw);
    const std::map<std::string, ExampleKind> kinds{
        {"ex1", ExampleKind::Ex1}, {"exp", ExampleKind::ExP}, {"exp2", ExampleKind::ExP2}};
    const auto recipe = recipe_from_degrees(kinds.at(example), p.value(), iso);

    std::optional<Side> side;
    if (side_name == "r") side = Side::R;
    if (side_name == "s") side = Side::S;
    const std::map<std::string, Scenario> scenarios{{"both-odd", Scenario::BothOdd},
                                                    {"both-even", Scenario::BothEven},
                                                    {"equal", Scenario::EqualLine},
                                                    {"coplanar", Scenario::CoplanarDistinct}};
    const RealizeWitness w =
        scenario_name.empty() ? realize(recipe) : realize(recipe, scenarios.at(scenario_name), side);

    if (witness) {
        std::vector<std::pair<std::string, std::string>> kv{
            {"kind", std::string(to_string(recipe.kind))},
            {"count", std::to_string(w.count)},
            {"t", w.t.to_string()},
            {"t_rel_r", std::string(to_string(w.position.rel_r))},
            {"t_rel_s", std::string(to_string(w.position.rel_s))}};
        if (w.v) kv.push_back({"v", w.v->to_string()});
        if (w.sample) {
            kv.push_back({"sample_H", w.sample->line.to_string()});
            kv.push_back({"sample_alpha", w.sample->alpha.to_string()});
            kv.push_back({"sample_meet_order", str(w.sample_meet_order)});
        }
        emit(to_json(w), key_values(kv));
    } else {
        emit(Json{{"recipe", to_json(recipe)}, {"count", w.count}},
             key_values({{"kind", std::string(to_string(recipe.kind))}, {"count", std::to_string(w.count)}}));
    }
    return w.count == 0 ? kExitEmpty : kExitOk;
}

int command_smooth(const Emitter& emit, std::int64_t n, std::int64_t d, bool witness,
                   const std::vector<std::string>& drop) {
    std::vector<Constraint> dropped;
    for (const auto& name : drop) {
        bool found = false;
        for (auto c : {Constraint::GraphIntersection, Constraint::Degree, Constraint::Fibers, Constraint::Divisibility})
            if (to_string(c) == name) {
                dropped.push_back(c);
                found = true;
            }
        if (!found) throw Error(ErrorCode::InvalidArgument, "unknown constraint family " + name);
    }
    const auto report = smoothness_certificate(n, d, dropped);
    Json j = to_json(report);
    Table t;
    if (witness) {
        t.header = {"a1", "b1", "nu1", "a2", "b2", "nu2"};
        for (const auto& c : report.candidates)
            t.rows.push_back({str(c.a1), str(c.b1), str(c.nu1), str(c.a2), str(c.b2), str(c.nu2)});
    } else {
        t = key_values({{"n", str(n)},
                        {"d", str(d)},
                        {"r", str(report.r)},
                        {"candidates", std::to_string(report.candidates.size())},
                        {"verdict", report.smooth() ? "smooth" : "not_smooth"}});
        j.erase("candidates");
        j["candidates"] = report.candidates.size();
    }
    emit(j, t);
    return report.smooth() ? kExitOk : kExitEmpty;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete data of (p,d)-elliptic configurations on genus-2 curves", "pdell"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();

    std::int64_t p = 0, d = 0, m = 0, n = 0;
    std::uint32_t bound = kDefaultEnumerationBound;

    auto* geom = app.add_subcommand("geom", "Points, lines and isotropic lines of P^3(F_p)");
    bool stats = false, list = false;
    geom->add_option("--p", p, "Prime")->required();
    geom->add_flag("--stats", stats, "Exhaustive isotropic-line census");
    geom->add_flag("--list", list, "List every line");
    geom->add_option("--bound", bound, "Largest prime accepted")->capture_default_str();

    auto* antisym = app.add_subcommand("antisym", "Anti-symplectic isomorphisms E[p] -> E'[p]");
    bool count_flag = false, list_maps = false;
    antisym->add_option("--p", p, "Prime")->required();
    auto* count_opt = antisym->add_flag("--count", count_flag, "Print the count (default)");
    antisym->add_flag("--list", list_maps, "List every map")->excludes(count_opt);
    antisym->add_option("--bound", bound, "Largest prime accepted")->capture_default_str();

    auto* cls = app.add_subcommand("classify", "Constructions realizing twisting number m");
    cls->add_option("--p", p, "Prime")->required();
    cls->add_option("--d", d, "Degree of the second map")->required();
    cls->add_option("--m", m, "Twisting number")->required();

    auto* bitri = app.add_subcommand("bitri", "Bi-tri-elliptic classification");
    bool all = false;
    auto* m_opt = bitri->add_option("--m", m, "Twisting number");
    auto* all_opt = bitri->add_flag("--all", all, "Every m from 1 to 6");
    m_opt->excludes(all_opt);
    bitri->require_option(1);

    auto* construct = app.add_subcommand("construct", "Torsion-level realization of a construction");
    std::string example, scenario, side;
    IsogenyDatum iso;
    bool want_count = false, want_witness = false;
    construct->add_option("--example", example, "ex1, exp or exp2")
        ->required()
        ->check(CLI::IsMember({"ex1", "exp", "exp2"}));
    construct->add_option("--p", p, "Prime")->required();
    construct->add_option("--deg-phi", iso.deg_phi, "deg(phi: F -> E)")->required();
    construct->add_option("--deg-phi-prime", iso.deg_phi_prime, "deg(phi': F -> E')")->required();
    construct->add_option("--scenario", scenario, "both-odd, both-even, equal or coplanar")
        ->check(CLI::IsMember({"both-odd", "both-even", "equal", "coplanar"}));
    construct->add_option("--side", side, "Line (r or s) that t equals or meets in asymmetric scenarios")
        ->check(CLI::IsMember({"r", "s"}));
    auto* c_opt = construct->add_flag("--count", want_count, "Print the number of admissible H (default)");
    construct->add_flag("--witness", want_witness, "Print t, the witness point and one H")->excludes(c_opt);

    auto* endos = app.add_subcommand("endos", "Degree-2 endomorphisms and their twisting numbers");
    bool table_flag = false;
    endos->add_flag("--table", table_flag, "Print the table (default)");

    auto* smooth = app.add_subcommand("smooth", "Smoothness certificate for the m = 1 construction");
    bool smooth_witness = false;
    std::vector<std::string> drop;
    smooth->add_option("--n", n, "Degree of the first map")->required();
    smooth->add_option("--d", d, "Degree of the second map")->required();
    smooth->add_flag("--witness", smooth_witness, "List surviving candidate tuples");
    smooth->add_option("--drop", drop, "Constraint families to drop: C2, C3, C45, C6");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "InvalidArgument", e.what());
        return kExitInvalidInput;
    }

    const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Plain;
    const Emitter emit{format, out};

    try {
        if (geom->parsed()) return command_geom(emit, p, stats, list, bound);
        if (antisym->parsed()) return command_antisym(emit, p, list_maps, bound);
        if (cls->parsed()) return emit_outcome(emit, err, classify(p, d, m));
        if (bitri->parsed()) return all ? command_bitri_all(emit) : emit_outcome(emit, err, classify_bitri(m));
        if (construct->parsed()) return command_construct(emit, example, p, iso, scenario, side, want_witness);
        if (endos->parsed()) {
            const auto entries = enumerate_degree2();
            Json j = Json::array();
            for (const auto& e : entries) j.push_back(to_json(e));
            emit(j, degree2_table(entries));
            return kExitOk;
        }
        if (smooth->parsed()) return command_smooth(emit, n, d, smooth_witness, drop);
    } catch (const Error& e) {
        report_error(err, to_string(e.code()), e.what());
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

} // namespace pdell
