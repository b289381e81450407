#include "arcknot/diagram.hpp"
#include "arcknot/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

namespace arcknot {

ProjectionScene project(const SpatialArc& arc, const Direction& u) {
    GenericityReport report = validate_generic(arc, u);
    if (!report.pass) {
        std::string w;
        for (auto i : report.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
        throw Error(ErrorKind::NotGeneric,
                    "projection not generic: " + std::string(to_string(report.failure_kind)) + " [" + w + "]");
    }
    auto [b1, b2] = plane_basis(u.vec());
    ProjectionScene scene{u, b1, b2, project_points(arc.vertices(), u.vec()), {}};
    for (const Vec3& p : arc.vertices()) scene.depths.push_back(dot(u.vec(), p));
    return scene;
}

ArcDiagram::ArcDiagram(std::vector<Visit> visits, std::vector<int> signs, std::size_t outer_dart)
    : visits_(std::move(visits)), signs_(std::move(signs)), outer_dart_(outer_dart) {}

std::array<std::size_t, 4> ArcDiagram::rotation(std::size_t c) const {
    std::size_t over_event = 0, under_event = 0;
    for (std::size_t k = 0; k < visits_.size(); ++k) {
        if (visits_[k].crossing != c) continue;
        (visits_[k].over ? over_event : under_event) = k + 1;
    }
    std::size_t oo = 2 * over_event, oi = 2 * (over_event - 1) + 1;
    std::size_t uo = 2 * under_event, ui = 2 * (under_event - 1) + 1;
    if (signs_[c] > 0) return {oo, uo, oi, ui};
    return {oo, ui, oi, uo};
}

std::size_t ArcDiagram::ccw_prev(std::size_t d) const {
    // Event at which dart d sits.
    std::size_t event = (d % 2 == 0) ? d / 2 : d / 2 + 1;
    if (event == 0 || event == visits_.size() + 1) return d;
    auto rot = rotation(visits_[event - 1].crossing);
    for (int i = 0; i < 4; ++i)
        if (rot[i] == d) return rot[(i + 3) % 4];
    throw Error(ErrorKind::Internal, "dart missing from its rotation");
}

std::size_t ArcDiagram::face_next(std::size_t d) const { return ccw_prev(twin(d)); }

std::vector<std::size_t> ArcDiagram::face_ids() const {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> id(dart_count(), none);
    std::size_t next_id = 0;
    for (std::size_t d = 0; d < id.size(); ++d) {
        if (id[d] != none) continue;
        for (std::size_t x = d; id[x] == none; x = face_next(x)) id[x] = next_id;
        ++next_id;
    }
    return id;
}

std::size_t ArcDiagram::face_count() const {
    auto ids = face_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

namespace {

// Position of v in the counterclockwise sweep starting at f: class then tiebreak.
int sweep_class(const Vec2& f, const Vec2& v) {
    int c = sgn(cross2(f, v));
    if (c == 0) return dot2(f, v) > 0 ? 0 : 2;
    return c > 0 ? 1 : 3;
}

bool sweep_less(const Vec2& f, const Vec2& p, const Vec2& q) {
    int cp = sweep_class(f, p), cq = sweep_class(f, q);
    if (cp != cq) return cp < cq;
    return cross2(p, q) > 0;
}

struct RawCrossing {
    std::size_t over_edge, under_edge;
    int sign;
};

}  // namespace

ArcDiagram build_diagram(const ProjectionScene& scene) {
    const auto& p = scene.points;
    const auto& h = scene.depths;
    const std::size_t m = p.size() - 1;

    // (parameter along edge, raw crossing id, over?) per edge.
    std::vector<std::vector<std::tuple<Rat, std::size_t, bool>>> along(m);
    std::vector<RawCrossing> raw;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            int o1 = orient2(p[i], p[i + 1], p[j]);
            int o2 = orient2(p[i], p[i + 1], p[j + 1]);
            int o3 = orient2(p[j], p[j + 1], p[i]);
            int o4 = orient2(p[j], p[j + 1], p[i + 1]);
            if (o1 * o2 >= 0 || o3 * o4 >= 0) continue;
            Vec2 di = p[i + 1] - p[i], dj = p[j + 1] - p[j];
            Rat den = cross2(di, dj);
            Rat t = cross2(p[j] - p[i], dj) / den;
            Rat s = cross2(p[j] - p[i], di) / den;
            Rat depth_i = h[i] + t * (h[i + 1] - h[i]);
            Rat depth_j = h[j] + s * (h[j + 1] - h[j]);
            if (depth_i == depth_j) throw Error(ErrorKind::Internal, "edges meet in space");
            bool i_over = depth_i > depth_j;
            const Vec2& over_dir = i_over ? di : dj;
            const Vec2& under_dir = i_over ? dj : di;
            std::size_t id = raw.size();
            raw.push_back({i_over ? i : j, i_over ? j : i, sgn(cross2(over_dir, under_dir))});
            along[i].emplace_back(t, id, i_over);
            along[j].emplace_back(s, id, !i_over);
        }
    }

    std::vector<std::size_t> renumber(raw.size(), std::numeric_limits<std::size_t>::max());
    std::vector<Visit> visits;
    std::vector<int> signs;
    std::vector<std::size_t> visits_before(m + 1, 0);
    for (std::size_t e = 0; e < m; ++e) {
        visits_before[e] = visits.size();
        auto& list = along[e];
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
        for (const auto& [t, id, over] : list) {
            if (renumber[id] == std::numeric_limits<std::size_t>::max()) {
                renumber[id] = signs.size();
                signs.push_back(raw[id].sign);
            }
            visits.push_back({renumber[id], over});
        }
    }
    visits_before[m] = visits.size();

    // Outer face: at the lowest of the leftmost image vertices the direction
    // (-1, 0) points into the unbounded face.
    std::size_t k = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i].x < p[k].x || (p[i].x == p[k].x && p[i].y < p[k].y)) k = i;
    const std::size_t n = signs.size();
    std::size_t outer;
    if (k == 0) {
        outer = 0;
    } else if (k == m) {
        outer = 2 * (2 * n) + 1;
    } else {
        std::size_t edge = visits_before[k];
        Vec2 back = p[k - 1] - p[k];
        Vec2 fwd = p[k + 1] - p[k];
        Vec2 west{Rat(-1), Rat(0)};
        bool left = sweep_less(fwd, west, back);
        outer = left ? 2 * edge : 2 * edge + 1;
    }
    return ArcDiagram(std::move(visits), std::move(signs), outer);
}

CanonicalCode canonical_code(const ArcDiagram& d) {
    std::ostringstream out;
    const std::size_t n = d.crossing_count();
    out << "ARCDIAG 1 n=" << n << "\n";
    out << "strand:";
    for (const Visit& v : d.visits())
        out << ' ' << (v.crossing + 1) << (v.over ? 'O' : 'U') << (d.signs()[v.crossing] > 0 ? '+' : '-');
    out << "\n";
    for (std::size_t c = 0; c < n; ++c) {
        auto rot = d.rotation(c);
        auto least = std::min_element(rot.begin(), rot.end()) - rot.begin();
        out << "rot " << (c + 1) << ":";
        for (int i = 0; i < 4; ++i) out << ' ' << rot[(least + i) % 4];
        out << "\n";
    }
    out << "outer: " << d.outer_face() << "\n";
    return {out.str()};
}

std::string strand_tokens(const CanonicalCode& code) {
    auto pos = code.text.find("strand:");
    if (pos == std::string::npos) return {};
    auto end = code.text.find('\n', pos);
    std::string line = code.text.substr(pos + 7, end - pos - 7);
    if (!line.empty() && line.front() == ' ') line.erase(0, 1);
    return line;
}

ArcDiagram decode(const CanonicalCode& code) {
    auto bad = [](const std::string& why) -> Error {
        return Error(ErrorKind::Parse, "bad diagram code: " + why);
    };
    std::istringstream in(code.text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("ARCDIAG 1 n=", 0) != 0) throw bad("header");
    std::size_t n = std::stoul(line.substr(12));
    if (!std::getline(in, line) || line.rfind("strand:", 0) != 0) throw bad("strand line");
    std::istringstream toks(line.substr(7));
    std::vector<Visit> visits;
    std::vector<int> signs(n, 0);
    std::string tok;
    while (toks >> tok) {
        if (tok.size() < 3) throw bad("token " + tok);
        char s = tok.back(), ou = tok[tok.size() - 2];
        std::size_t id = std::stoul(tok.substr(0, tok.size() - 2));
        if (id < 1 || id > n || (ou != 'O' && ou != 'U') || (s != '+' && s != '-')) throw bad("token " + tok);
        visits.push_back({id - 1, ou == 'O'});
        signs[id - 1] = s == '+' ? 1 : -1;
    }
    if (visits.size() != 2 * n) throw bad("strand length");
    std::size_t outer_face = 0;
    bool have_outer = false;
    while (std::getline(in, line)) {
        if (line.rfind("outer: ", 0) == 0) {
            outer_face = std::stoul(line.substr(7));
            have_outer = true;
        }
    }
    if (!have_outer) throw bad("outer line");
    ArcDiagram probe(visits, signs, 0);
    auto ids = probe.face_ids();
    auto it = std::find(ids.begin(), ids.end(), outer_face);
    if (it == ids.end()) throw bad("outer face id");
    ArcDiagram out(std::move(visits), std::move(signs), static_cast<std::size_t>(it - ids.begin()));
    if (canonical_code(out) != code) throw bad("not in canonical form");
    return out;
}

ArcDiagram mirror(const ArcDiagram& d) {
    std::vector<Visit> visits = d.visits();
    for (Visit& v : visits) v.over = !v.over;
    return ArcDiagram(std::move(visits), d.signs(), ArcDiagram::twin(d.outer_dart()));
}

ArcDiagram reverse_strand(const ArcDiagram& d) {
    const std::size_t n = d.crossing_count();
    std::vector<Visit> visits(d.visits().rbegin(), d.visits().rend());
    std::vector<std::size_t> renumber(n, std::numeric_limits<std::size_t>::max());
    std::vector<int> signs;
    for (Visit& v : visits) {
        if (renumber[v.crossing] == std::numeric_limits<std::size_t>::max()) {
            renumber[v.crossing] = signs.size();
            signs.push_back(d.signs()[v.crossing]);
        }
        v.crossing = renumber[v.crossing];
    }
    // Edge j becomes edge 2n - j with the roles of its two darts swapped.
    std::size_t old = d.outer_dart();
    std::size_t edge = 2 * n - old / 2;
    std::size_t outer = (old % 2 == 0) ? 2 * edge + 1 : 2 * edge;
    return ArcDiagram(std::move(visits), std::move(signs), outer);
}

bool is_inbound_diagram(const ArcDiagram& d) {
    auto ids = d.face_ids();
    return ids[d.start_dart()] == ids[d.end_dart()];
}

bool is_inbound_projection(const SpatialArc& arc, const Direction& u) {
    std::vector<Vec2> p = project_points(arc.vertices(), u.vec());
    auto lift = [](const Vec2& q) { return Vec3(q.x, q.y, Rat(0)); };
    const Vec3 a = lift(p.front()), b = lift(p.back());
    if (a == b) return true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Vec3 c = lift(p[i]), d = lift(p[i + 1]);
        if (c == d) return false;
        auto hit = segment_overlap(a, b, c, d);
        if (!hit) continue;
        if (hit->first != hit->second) return false;
        if (hit->first != 0 && hit->first != 1) return false;
    }
    return true;
}

ArcDiagram diagram_for(const ArcAnalysis& analysis, const Direction& u) {
    Direction c = analysis.canonical_direction(u);
    return build_diagram(project(analysis.arc(), c));
}

CanonicalCode diagram_of(const ArcAnalysis& analysis, const Direction& u) {
    return canonical_code(diagram_for(analysis, u));
}

CanonicalCode diagram_of(const SpatialArc& arc, const Direction& u) {
    return diagram_of(ArcAnalysis(arc), u);
}

std::string render_svg(const ProjectionScene& scene) {
    const auto& p = scene.points;
    const std::size_t m = p.size() - 1;
    std::vector<std::pair<double, double>> pts;
    for (const Vec2& q : p) pts.emplace_back(q.x.get_d(), -q.y.get_d());
    double minx = pts[0].first, maxx = minx, miny = pts[0].second, maxy = miny;
    for (auto [x, y] : pts) {
        minx = std::min(minx, x), maxx = std::max(maxx, x);
        miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    double gap = 0.03 * span;

    // Under-crossing parameters per edge.
    std::vector<std::vector<double>> cuts(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            int o1 = orient2(p[i], p[i + 1], p[j]), o2 = orient2(p[i], p[i + 1], p[j + 1]);
            int o3 = orient2(p[j], p[j + 1], p[i]), o4 = orient2(p[j], p[j + 1], p[i + 1]);
            if (o1 * o2 >= 0 || o3 * o4 >= 0) continue;
            Vec2 di = p[i + 1] - p[i], dj = p[j + 1] - p[j];
            Rat den = cross2(di, dj);
            Rat t = cross2(p[j] - p[i], dj) / den;
            Rat s = cross2(p[j] - p[i], di) / den;
            Rat hi = scene.depths[i] + t * (scene.depths[i + 1] - scene.depths[i]);
            Rat hj = scene.depths[j] + s * (scene.depths[j + 1] - scene.depths[j]);
            if (hi < hj) cuts[i].push_back(t.get_d());
            else cuts[j].push_back(s.get_d());
        }
    }

    std::ostringstream out;
    double pad = 0.1 * span;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - pad) << ' ' << (miny - pad) << ' '
        << (maxx - minx + 2 * pad) << ' ' << (maxy - miny + 2 * pad) << "\">\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << 0.01 * span << "\" stroke-linecap=\"round\">\n";
    for (std::size_t i = 0; i < m; ++i) {
        auto [x0, y0] = pts[i];
        auto [x1, y1] = pts[i + 1];
        double len = std::max(std::hypot(x1 - x0, y1 - y0), 1e-12);
        double half = gap / len;
        std::sort(cuts[i].begin(), cuts[i].end());
        double from = 0;
        auto seg = [&](double a, double b) {
            if (b <= a) return;
            out << "<line x1=\"" << x0 + a * (x1 - x0) << "\" y1=\"" << y0 + a * (y1 - y0) << "\" x2=\""
                << x0 + b * (x1 - x0) << "\" y2=\"" << y0 + b * (y1 - y0) << "\"/>\n";
        };
        for (double c : cuts[i]) {
            seg(from, c - half);
            from = c + half;
        }
        seg(from, 1.0);
    }
    out << "</g>\n";
    out << "<circle cx=\"" << pts.front().first << "\" cy=\"" << pts.front().second << "\" r=\"" << 0.015 * span
        << "\" fill=\"green\"/>\n";
    out << "<circle cx=\"" << pts.back().first << "\" cy=\"" << pts.back().second << "\" r=\"" << 0.015 * span
        << "\" fill=\"red\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace arcknot
