#include "arcknot/geom.hpp"
#include "arcknot/error.hpp"

#include <algorithm>

namespace arcknot {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
Vec3 operator*(const Rat& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

bool parallel(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }

Vec3 primitive(const Vec3& v) {
    Int l = 1;
    for (const Rat* r : {&v.x, &v.y, &v.z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den().get_mpz_t());
    std::array<Int, 3> c;
    const Rat* comps[3] = {&v.x, &v.y, &v.z};
    Int g = 0;
    for (int i = 0; i < 3; ++i) {
        c[i] = comps[i]->get_num() * (l / comps[i]->get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
    }
    if (g == 0) return v;
    return {Rat(c[0] / g), Rat(c[1] / g), Rat(c[2] / g)};
}

std::string to_string(const Vec3& v) {
    return "(" + to_string(v.x) + "," + to_string(v.y) + "," + to_string(v.z) + ")";
}

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rat dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
int orient2(const Vec2& a, const Vec2& b, const Vec2& c) { return sgn(cross2(b - a, c - a)); }

Direction::Direction(Vec3 v) : v_(std::move(v)) {
    if (v_.is_zero()) throw Error(ErrorKind::Parse, "direction must be nonzero");
}

bool operator==(const Direction& a, const Direction& b) {
    return parallel(a.v_, b.v_) && dot(a.v_, b.v_) > 0;
}

LineR3::LineR3(Vec3 base_, Vec3 dir_) : base(std::move(base_)), dir(std::move(dir_)) {
    if (dir.is_zero()) throw Error(ErrorKind::Internal, "line direction must be nonzero");
}

bool LineR3::contains(const Vec3& p) const { return parallel(p - base, dir); }

bool LineR3::same_set(const LineR3& other) const {
    return parallel(dir, other.dir) && contains(other.base);
}

bool operator==(const LineR3& a, const LineR3& b) {
    return a.same_set(b) && dot(a.dir, b.dir) > 0;
}

GreatCircleNormal::GreatCircleNormal(const Vec3& n) {
    if (n.is_zero()) throw Error(ErrorKind::Internal, "great circle normal must be nonzero");
    Vec3 p = primitive(n);
    c_ = {p.x.get_num(), p.y.get_num(), p.z.get_num()};
    for (const Int& v : c_) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : c_) w = -w;
        break;
    }
}

Vec3 GreatCircleNormal::vec() const { return {Rat(c_[0]), Rat(c_[1]), Rat(c_[2])}; }

std::string GreatCircleNormal::to_string() const {
    return c_[0].get_str() + " " + c_[1].get_str() + " " + c_[2].get_str();
}

LinePairRelation classify_line_pair(const LineR3& l1, const LineR3& l2) {
    Vec3 n = cross(l1.dir, l2.dir);
    Vec3 w = l2.base - l1.base;
    if (n.is_zero()) {
        if (l1.contains(l2.base)) return {LinePairKind::Equal, std::nullopt};
        return {LinePairKind::ParallelDistinct, std::nullopt};
    }
    if (dot(w, n) != 0) return {LinePairKind::Skew, std::nullopt};
    Rat t = dot(cross(w, l2.dir), n) / dot(n, n);
    return {LinePairKind::Intersecting, l1.base + t * l1.dir};
}

GreatCircleNormal plane_normal_point_line(const Vec3& p, const LineR3& l) {
    Vec3 n = cross(p - l.base, l.dir);
    if (n.is_zero()) throw Error(ErrorKind::PointOnLine, "point " + to_string(p) + " lies on the line");
    return GreatCircleNormal(n);
}

std::optional<std::pair<Rat, Rat>> segment_overlap(const Vec3& a, const Vec3& b,
                                                   const Vec3& c, const Vec3& d) {
    Vec3 e = b - a;
    Vec3 f = d - c;
    Vec3 w = c - a;
    Vec3 n = cross(e, f);
    if (!n.is_zero()) {
        if (dot(w, n) != 0) return std::nullopt;
        Rat nn = dot(n, n);
        Rat t = dot(cross(w, f), n) / nn;
        Rat s = dot(cross(w, e), n) / nn;
        if (t < 0 || t > 1 || s < 0 || s > 1) return std::nullopt;
        return std::pair{t, t};
    }
    if (!cross(w, e).is_zero()) return std::nullopt;
    Rat ee = dot(e, e);
    Rat tc = dot(w, e) / ee;
    Rat td = dot(d - a, e) / ee;
    Rat lo = std::max(std::min(tc, td), Rat(0));
    Rat hi = std::min(std::max(tc, td), Rat(1));
    if (lo > hi) return std::nullopt;
    return std::pair{lo, hi};
}

bool segments_intersect(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return segment_overlap(a, b, c, d).has_value();
}

}  // namespace arcknot
