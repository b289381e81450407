#include "arcknot/chord.hpp"
#include "arcknot/diagram.hpp"
#include "arcknot/error.hpp"
#include "arcknot/io.hpp"
#include "arcknot/knotting.hpp"
#include "arcknot/sample.hpp"
#include "arcknot/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace arcknot;
using nlohmann::json;

namespace {

struct Options {
    std::string arc_path;
    std::string direction;
    std::string svg_path;
    std::vector<std::string> groups{"S3", "D4", "A4"};
    std::vector<std::string> group_files;
    std::string table_path;
    bool pair = false;
    bool reduce = false;
    bool verdicts = false;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    bool json = false;
};

json probability_json(const KnottingProbability& p) {
    json types = json::array();
    const char* names[] = {"I", "II", "III", "IV"};
    for (std::size_t i = 0; i < 4; ++i) {
        const TypeProbability& t = p.types[i];
        types.push_back({{"type", names[i]},
                         {"lower", to_string(t.lower)},
                         {"upper", to_string(t.upper)},
                         {"vacuous", t.vacuous},
                         {"total", t.total},
                         {"knotted", t.knotted},
                         {"unknotted", t.unknotted}});
    }
    return {{"text", to_string(p)}, {"types", types}};
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

OracleConfig oracle_from(const Options& o) {
    OracleConfig cfg;
    cfg.reduce = o.reduce;
    for (const auto& g : o.groups)
        if (!g.empty()) cfg.groups.push_back(group_by_name(g));
    for (const auto& entry : o.group_files) {
        auto eq = entry.find('=');
        std::string name = eq == std::string::npos ? entry : entry.substr(0, eq);
        std::string path = eq == std::string::npos ? entry : entry.substr(eq + 1);
        cfg.groups.push_back(parse_group_table(name, read_file(path)));
    }
    if (!o.table_path.empty()) cfg.table = ClassificationTable::parse(read_file(o.table_path));
    return cfg;
}

int cmd_project(const Options& o) {
    ArcAnalysis analysis(load_arc(o.arc_path));
    Direction u = parse_direction(o.direction);
    Direction c = analysis.canonical_direction(u);
    CanonicalCode code = canonical_code(build_diagram(project(analysis.arc(), c)));
    if (!o.svg_path.empty()) write_file(o.svg_path, render_svg(project(analysis.arc(), c)));
    emit(o, {{"direction", to_string(c.vec())}, {"code", code.text}}, code.text);
    return 0;
}

int cmd_trace(const Options& o) {
    SpatialArc arc = load_arc(o.arc_path);
    TraceSet t = trace_set(arc);
    std::string text;
    json circles = json::array(), cones = json::array();
    for (const auto& c : t.circles) {
        text += c.to_string() + "\n";
        circles.push_back(c.to_string());
    }
    for (const auto& q : t.cones) {
        text += "cone " + q.to_string() + "\n";
        cones.push_back(q.to_string());
    }
    emit(o, {{"circles", circles}, {"cones", cones}}, text);
    return 0;
}

int cmd_region(const Options& o) {
    SpatialArc arc = load_arc(o.arc_path);
    TraceSet t = trace_set(arc);
    Direction u = parse_direction(o.direction);
    TraceHits hits = trace_hits(t, u);
    if (hits.empty()) {
        std::string fp = sign_vector(t, u).to_string();
        emit(o, {{"fingerprint", fp}}, fp + "\n");
        return 0;
    }
    std::string text = "on circles:";
    for (auto i : hits.circles) text += " " + std::to_string(i);
    text += "\non cones:";
    for (auto i : hits.cones) text += " " + std::to_string(i);
    emit(o, {{"on_circles", hits.circles}, {"on_cones", hits.cones}}, text + "\n");
    return 0;
}

ChordDiagram chord_for(const Options& o) {
    ArcAnalysis analysis(load_arc(o.arc_path));
    ChordDiagram c = chord_diagram_of(diagram_for(analysis, parse_direction(o.direction)));
    if (o.reduce) c = reduce_clean_chord(c).diagram;
    return c;
}

int cmd_chord(const Options& o) {
    ChordCode code = chord_code(chord_for(o));
    emit(o, {{"code", code.text}}, code.text);
    return 0;
}

int cmd_adjoints(const Options& o) {
    json items = json::array();
    std::string text;
    for (const AdjointDiagram& a : enumerate_adjoints(chord_for(o))) {
        ChordCode code = chord_code(a.combined());
        text += to_string(a.type) + " " + std::to_string(a.index) + " " + inline_code(code) + "\n";
        items.push_back({{"type", to_string(a.type)}, {"index", a.index}, {"code", code.text}});
    }
    emit(o, {{"adjoints", items}}, text);
    return 0;
}

int cmd_prob(const Options& o) {
    OracleConfig cfg = oracle_from(o);
    SpatialArc arc = load_arc(o.arc_path);
    Direction u = parse_direction(o.direction);
    if (o.pair) {
        ProbabilityPair p = probability_pair(arc, u, cfg);
        std::string text = "forward: " + to_string(p.forward) + "\nreverse: " + to_string(p.reverse) +
                           "\naverage: " + to_string(p.average()) + "\n";
        emit(o,
             {{"forward", probability_json(p.forward)},
              {"reverse", probability_json(p.reverse)},
              {"average", probability_json(p.average())}},
             text);
        return 0;
    }
    auto verdicts = classify_adjoints(diagram_for(ArcAnalysis(arc), u), cfg);
    KnottingProbability p = probability_from(verdicts);
    std::string text = to_string(p) + "\n";
    json j = probability_json(p);
    if (o.verdicts) {
        json items = json::array();
        for (const auto& v : verdicts) {
            std::string line = to_string(v.adjoint.type) + " " + std::to_string(v.adjoint.index) + " " +
                               to_string(v.verdict.kind) + " " + v.verdict.provenance;
            if (!v.verdict.witness_group.empty())
                line += " " + v.verdict.witness_group + ":" + std::to_string(v.verdict.witness_count);
            text += line + " " + code_hash(v.code) + "\n";
            items.push_back({{"type", to_string(v.adjoint.type)},
                             {"index", v.adjoint.index},
                             {"verdict", to_string(v.verdict.kind)},
                             {"provenance", v.verdict.provenance},
                             {"witness_group", v.verdict.witness_group},
                             {"witness_count", v.verdict.witness_count},
                             {"hash", code_hash(v.code)}});
        }
        j["verdicts"] = items;
    }
    emit(o, j, text);
    return 0;
}

int cmd_sample(const Options& o) {
    ArcAnalysis analysis(load_arc(o.arc_path));
    SampleReport r = sample_report(analysis, o.count, o.seed);
    json codes = json::array();
    for (const auto& c : r.distinct_codes) codes.push_back(c.text);
    emit(o,
         {{"samples", r.samples},
          {"circles", r.circle_count},
          {"cones", r.cone_count},
          {"bound", r.bound},
          {"regions", r.codes_by_region.size()},
          {"stable", r.stable},
          {"codes", codes}},
         r.to_string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arcknot: canonical arc diagrams and knotting probabilities of polygonal arcs"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print reports as JSON");

    auto arc_opt = [&](CLI::App* s) { s->add_option("--arc", o.arc_path, "Arc JSON file")->required(); };
    auto dir_opt = [&](CLI::App* s) { s->add_option("--dir", o.direction, "Direction \"x,y,z\"")->required(); };
    auto reduce_opt = [&](CLI::App* s) { s->add_flag("--reduce", o.reduce, "Reduce clean chords first"); };

    auto* project = app.add_subcommand("project", "Print the canonical arc diagram code");
    arc_opt(project);
    dir_opt(project);
    project->add_option("--svg", o.svg_path, "Also write an SVG drawing");

    auto* trace = app.add_subcommand("trace", "Print the trace circles and cones");
    arc_opt(trace);

    auto* region = app.add_subcommand("region", "Print the region fingerprint of a direction");
    arc_opt(region);
    dir_opt(region);

    auto* chord = app.add_subcommand("chord", "Print the chord diagram code");
    arc_opt(chord);
    dir_opt(chord);
    reduce_opt(chord);

    auto* adjoints = app.add_subcommand("adjoints", "Print one line per adjoint chord diagram");
    arc_opt(adjoints);
    dir_opt(adjoints);
    reduce_opt(adjoints);

    auto* prob = app.add_subcommand("prob", "Print the knotting probability quadruple");
    arc_opt(prob);
    dir_opt(prob);
    reduce_opt(prob);
    prob->add_option("--groups", o.groups, "Groups to try (S3, D4, A4, Z<n>, trivial)")->delimiter(',');
    prob->add_option("--group-file", o.group_files, "Extra group as name=path to a multiplication table");
    prob->add_option("--table", o.table_path, "Classification table");
    prob->add_flag("--pair", o.pair, "Also evaluate the reversed arc");
    prob->add_flag("--verdicts", o.verdicts, "List every adjoint verdict");

    auto* sample = app.add_subcommand("sample", "Sample directions and group canonical codes by region");
    arc_opt(sample);
    sample->add_option("--count", o.count, "Number of directions")->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "Random seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*project) return cmd_project(o);
        if (*trace) return cmd_trace(o);
        if (*region) return cmd_region(o);
        if (*chord) return cmd_chord(o);
        if (*adjoints) return cmd_adjoints(o);
        if (*prob) return cmd_prob(o);
        if (*sample) return cmd_sample(o);
    } catch (const Error& e) {
        std::cerr << "error " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Io ? 3 : 2;
    }
    return 1;
}
