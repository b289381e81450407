#include "arcknot/trace.hpp"
#include "arcknot/error.hpp"

#include <algorithm>
#include <map>

namespace arcknot {

namespace {

std::array<Int, 6> integerize(const std::array<Rat, 6>& r) {
    Int l = 1;
    for (const Rat& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::array<Int, 6> c;
    Int g = 0;
    for (int i = 0; i < 6; ++i) {
        c[i] = r[i].get_num() * (l / r[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
    }
    if (g == 0) return c;
    for (Int& v : c) v /= g;
    for (const Int& v : c) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : c) w = -w;
        break;
    }
    return c;
}

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<LineR3> trace_lines(const SpatialArc& arc) {
    std::vector<LineR3> lines;
    auto add = [&](const LineR3& l) {
        for (const LineR3& m : lines)
            if (m.same_set(l)) return;
        lines.push_back(l);
    };
    for (std::size_t i = 0; i < arc.edge_count(); ++i) add(arc.edge_line(i));
    add(arc.front_line());
    return lines;
}

}  // namespace

QuadraticCone::QuadraticCone(std::array<Int, 6> coeffs, std::array<std::size_t, 3> edges)
    : c_(std::move(coeffs)), edges_(edges) {}

Rat QuadraticCone::eval(const Vec3& u) const { return bilinear(u, u); }

Rat QuadraticCone::bilinear(const Vec3& a, const Vec3& b) const {
    Rat r = Rat(c_[0]) * a.x * b.x + Rat(c_[1]) * a.y * b.y + Rat(c_[2]) * a.z * b.z;
    r += Rat(c_[3]) * (a.x * b.y + a.y * b.x) / 2;
    r += Rat(c_[4]) * (a.x * b.z + a.z * b.x) / 2;
    r += Rat(c_[5]) * (a.y * b.z + a.z * b.y) / 2;
    return r;
}

std::string QuadraticCone::to_string() const {
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (i) s += ' ';
        s += c_[i].get_str();
    }
    return s;
}

std::vector<GreatCircleNormal> trace_circles(const SpatialArc& arc) {
    std::vector<GreatCircleNormal> out;
    if (arc.collinear()) return out;
    std::vector<LineR3> lines = trace_lines(arc);
    for (const Vec3& p : arc.vertices())
        for (const LineR3& l : lines)
            if (!l.contains(p)) out.push_back(plane_normal_point_line(p, l));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            LinePairRelation rel = classify_line_pair(lines[i], lines[j]);
            if (rel.kind == LinePairKind::ParallelDistinct)
                out.emplace_back(cross(lines[j].base - lines[i].base, lines[i].dir));
            else if (rel.kind == LinePairKind::Intersecting)
                out.emplace_back(cross(lines[i].dir, lines[j].dir));
        }
    }
    sort_unique(out);
    return out;
}

std::vector<QuadraticCone> trace_cones(const SpatialArc& arc) {
    std::vector<QuadraticCone> out;
    const auto& v = arc.vertices();
    const std::size_t m = arc.edge_count();
    auto apart = [](std::size_t a, std::size_t b) { return a + 1 < b || b + 1 < a; };
    for (std::size_t e = 0; e < m; ++e) {
        const Vec3 de = v[e + 1] - v[e];
        for (std::size_t f = 0; f < m; ++f) {
            if (!apart(e, f)) continue;
            for (std::size_t g = f + 2; g < m; ++g) {
                if (!apart(e, g)) continue;
                const Vec3 df = v[f + 1] - v[f];
                const Vec3 dg = v[g + 1] - v[g];
                // Parameter of the f-crossing along e is N_f(u)/D_f(u) with
                // N_f = u.((a_f - a_e) x d_f) and D_f = u.(d_e x d_f).
                const Vec3 A = cross(v[f] - v[e], df);
                const Vec3 B = cross(de, dg);
                const Vec3 C = cross(v[g] - v[e], dg);
                const Vec3 D = cross(de, df);
                const Rat* a[3] = {&A.x, &A.y, &A.z};
                const Rat* b[3] = {&B.x, &B.y, &B.z};
                const Rat* c[3] = {&C.x, &C.y, &C.z};
                const Rat* d[3] = {&D.x, &D.y, &D.z};
                auto m_ij = [&](int i, int j) -> Rat { return *a[i] * *b[j] - *c[i] * *d[j]; };
                std::array<Rat, 6> q = {m_ij(0, 0),
                                        m_ij(1, 1),
                                        m_ij(2, 2),
                                        m_ij(0, 1) + m_ij(1, 0),
                                        m_ij(0, 2) + m_ij(2, 0),
                                        m_ij(1, 2) + m_ij(2, 1)};
                if (std::all_of(q.begin(), q.end(), [](const Rat& r) { return r == 0; })) continue;
                out.emplace_back(integerize(q), std::array<std::size_t, 3>{e, f, g});
            }
        }
    }
    sort_unique(out);
    return out;
}

TraceSet trace_set(const SpatialArc& arc) { return {trace_circles(arc), trace_cones(arc)}; }

std::string RegionFingerprint::to_string() const {
    std::string s;
    for (auto c : circle_signs) s += c > 0 ? '+' : '-';
    if (!cone_signs.empty()) {
        s += '|';
        for (auto c : cone_signs) s += c > 0 ? '+' : '-';
    }
    return s;
}

TraceHits trace_hits(const TraceSet& trace, const Direction& u) {
    TraceHits hits;
    for (std::size_t i = 0; i < trace.circles.size(); ++i)
        if (dot(trace.circles[i].vec(), u.vec()) == 0) hits.circles.push_back(i);
    for (std::size_t i = 0; i < trace.cones.size(); ++i)
        if (trace.cones[i].eval(u.vec()) == 0) hits.cones.push_back(i);
    return hits;
}

RegionFingerprint sign_vector(const TraceSet& trace, const Direction& u) {
    RegionFingerprint fp;
    fp.circle_signs.reserve(trace.circles.size());
    for (std::size_t i = 0; i < trace.circles.size(); ++i) {
        int s = sgn(dot(trace.circles[i].vec(), u.vec()));
        if (s == 0)
            throw Error(ErrorKind::OnTraceSet, "direction lies on trace circle " + std::to_string(i));
        fp.circle_signs.push_back(static_cast<std::int8_t>(s));
    }
    for (std::size_t i = 0; i < trace.cones.size(); ++i) {
        int s = sgn(trace.cones[i].eval(u.vec()));
        if (s == 0)
            throw Error(ErrorKind::OnTraceSet, "direction lies on trace cone " + std::to_string(i));
        fp.cone_signs.push_back(static_cast<std::int8_t>(s));
    }
    return fp;
}

std::string_view to_string(GenericityFailure f) {
    switch (f) {
        case GenericityFailure::None: return "None";
        case GenericityFailure::EdgeParallel: return "EdgeParallel";
        case GenericityFailure::VertexCollision: return "VertexCollision";
        case GenericityFailure::VertexOnEdge: return "VertexOnEdge";
        case GenericityFailure::TriplePoint: return "TriplePoint";
        case GenericityFailure::OverlappingEdges: return "OverlappingEdges";
        case GenericityFailure::EndpointOnDiagram: return "EndpointOnDiagram";
    }
    return "?";
}

std::pair<Vec3, Vec3> plane_basis(const Vec3& u) {
    Vec3 b1 = cross(Vec3(0, 1, 0), u);
    if (b1.is_zero()) b1 = cross(Vec3(0, 0, 1), u);
    return {b1, cross(u, b1)};
}

std::vector<Vec2> project_points(const std::vector<Vec3>& pts, const Vec3& u) {
    auto [b1, b2] = plane_basis(u);
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const Vec3& p : pts) out.push_back({dot(b1, p), dot(b2, p)});
    return out;
}

namespace {

GenericityReport fail(GenericityFailure kind, std::vector<std::size_t> witness) {
    return {false, kind, std::move(witness)};
}

// p lies on the closed segment [a, b] (a != b).
bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orient2(a, b, p) != 0) return false;
    Rat t = dot2(p - a, b - a);
    return t >= 0 && t <= dot2(b - a, b - a);
}

}  // namespace

GenericityReport validate_generic(const SpatialArc& arc, const Direction& dir) {
    const Vec3& u = dir.vec();
    const auto& v = arc.vertices();
    const std::size_t m = arc.edge_count();

    for (std::size_t i = 0; i < m; ++i)
        if (parallel(v[i + 1] - v[i], u)) return fail(GenericityFailure::EdgeParallel, {i});

    std::vector<Vec2> p = project_points(v, u);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j]) return fail(GenericityFailure::VertexCollision, {i, j});

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (orient2(p[i], p[i + 1], p[j]) != 0 || orient2(p[i], p[i + 1], p[j + 1]) != 0) continue;
            // Collinear images: overlap iff the parameter intervals share more than a point.
            Vec2 d = p[i + 1] - p[i];
            Rat len = dot2(d, d);
            Rat t0 = dot2(p[j] - p[i], d), t1 = dot2(p[j + 1] - p[i], d);
            Rat lo = std::max(std::min(t0, t1), Rat(0));
            Rat hi = std::min(std::max(t0, t1), len);
            if (lo < hi) return fail(GenericityFailure::OverlappingEdges, {i, j});
        }
    }

    for (std::size_t k = 0; k < p.size(); ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (k == i || k == i + 1) continue;
            if (!on_segment(p[k], p[i], p[i + 1])) continue;
            bool endpoint = k == 0 || k + 1 == p.size();
            return fail(endpoint ? GenericityFailure::EndpointOnDiagram : GenericityFailure::VertexOnEdge,
                        {k, i});
        }
    }

    // Proper crossings of non-adjacent edges; a repeated point is a triple point.
    std::map<std::pair<Rat, Rat>, std::size_t> seen;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            int o1 = orient2(p[i], p[i + 1], p[j]);
            int o2 = orient2(p[i], p[i + 1], p[j + 1]);
            int o3 = orient2(p[j], p[j + 1], p[i]);
            int o4 = orient2(p[j], p[j + 1], p[i + 1]);
            if (o1 * o2 >= 0 || o3 * o4 >= 0) continue;
            Vec2 d1 = p[i + 1] - p[i], d2 = p[j + 1] - p[j];
            Rat t = cross2(p[j] - p[i], d2) / cross2(d1, d2);
            std::pair<Rat, Rat> x{p[i].x + t * d1.x, p[i].y + t * d1.y};
            auto [it, inserted] = seen.emplace(x, pairs.size());
            if (!inserted) {
                auto [a, b] = pairs[it->second];
                std::vector<std::size_t> w{a, b, i, j};
                std::sort(w.begin(), w.end());
                w.erase(std::unique(w.begin(), w.end()), w.end());
                return fail(GenericityFailure::TriplePoint, w);
            }
            pairs.emplace_back(i, j);
        }
    }
    return {};
}

Vec3 cayley_rotate(const Vec3& v, const Vec3& k, const Rat& s) {
    Rat kk = dot(k, k);
    return (1 - s * s * kk) * v + (2 * s * s * dot(k, v)) * k + (2 * s) * cross(k, v);
}

namespace {

// |root| > |a_j| / (|a_j| + max_{i>j} |a_i|) for every nonzero root, where a_j
// is the lowest nonzero coefficient. nullopt when there is no nonzero root.
std::optional<Rat> root_lower_bound(const std::vector<Rat>& poly) {
    std::size_t j = 0;
    while (j < poly.size() && poly[j] == 0) ++j;
    if (j == poly.size()) return std::nullopt;
    Rat mx = 0;
    for (std::size_t i = j + 1; i < poly.size(); ++i) mx = std::max(mx, Rat(abs(poly[i])));
    if (mx == 0) return std::nullopt;
    Rat a = abs(poly[j]);
    return Rat(a / (a + mx));
}

}  // namespace

Rat first_gap_parameter(const TraceSet& trace, const Vec3& v, const Vec3& k) {
    const Vec3 w0 = v;
    const Vec3 w1 = Rat(2) * cross(k, v);
    const Vec3 w2 = (2 * dot(k, v)) * k - dot(k, k) * v;
    Rat beta = 1;
    auto consider = [&](const std::vector<Rat>& poly) {
        if (auto b = root_lower_bound(poly); b && *b < beta) beta = *b;
    };
    for (const auto& c : trace.circles) {
        Vec3 n = c.vec();
        consider({dot(n, w0), dot(n, w1), dot(n, w2)});
    }
    for (const auto& q : trace.cones) {
        consider({q.eval(w0), 2 * q.bilinear(w0, w1), q.eval(w1) + 2 * q.bilinear(w0, w2),
                  2 * q.bilinear(w1, w2), q.eval(w2)});
    }
    Rat s = 1;
    while (2 * s > beta) s /= 2;
    return s;
}

ArcAnalysis::ArcAnalysis(SpatialArc arc) : arc_(std::move(arc)), trace_(trace_set(arc_)) {
    if (!arc_.collinear()) frame_ = frame_of(arc_);
}

bool ArcAnalysis::admissible(const Direction& u) const {
    for (const auto& c : trace_.circles)
        if (dot(c.vec(), u.vec()) == 0) return false;
    return validate_generic(arc_, u).pass;
}

Direction ArcAnalysis::latitude_step(const Direction& u) const {
    if (admissible(u)) return u;
    const Vec3& axis = frame_->e_z;
    Rat s = first_gap_parameter(trace_, u.vec(), axis);
    for (int attempt = 0; attempt < 64; ++attempt, s /= 2) {
        Direction cand(primitive(cayley_rotate(u.vec(), axis, s)));
        if (admissible(cand)) return cand;
    }
    throw Error(ErrorKind::Internal, "no admissible direction found along the latitude");
}

Direction ArcAnalysis::upper_canonical(const Direction& dir) const {
    const Frame& f = *frame_;
    const Vec3& u = dir.vec();
    if (dot(u, f.e_z) == 0) {
        // Equator, first half: climb the meridian toward the pole.
        Vec3 k = cross(u, f.e_z);
        Rat s = first_gap_parameter(trace_, u, k);
        while (s * s * dot(k, k) >= 1) s /= 2;
        return latitude_step(Direction(primitive(cayley_rotate(u, k, s))));
    }
    if (parallel(u, f.e_z)) {
        // Pole: descend along the meridian toward +e_x.
        Rat s = first_gap_parameter(trace_, u, f.e_y);
        while (s * s * dot(f.e_y, f.e_y) >= 1) s /= 2;
        return latitude_step(Direction(primitive(cayley_rotate(u, f.e_y, s))));
    }
    return latitude_step(dir);
}

Direction ArcAnalysis::canonical_direction(const Direction& u) const {
    if (!frame_) {
        if (parallel(u.vec(), arc_.front_vector()))
            throw Error(ErrorKind::CollinearDegenerate, "direction is parallel to a collinear arc");
        return u;
    }
    if (admissible(u)) return u;
    const Frame& f = *frame_;
    int z = sgn(dot(u.vec(), f.e_z));
    bool upper = z > 0;
    if (z == 0) {
        int b = sgn(dot(u.vec(), f.e_y));
        upper = b > 0 || (b == 0 && dot(u.vec(), f.e_x) > 0);
    }
    if (upper) return upper_canonical(u);
    return -upper_canonical(-u);
}

Direction canonical_direction(const SpatialArc& arc, const Direction& u) {
    return ArcAnalysis(arc).canonical_direction(u);
}

}  // namespace arcknot
