#include "arcknot/rational.hpp"
#include "arcknot/error.hpp"

#include <cctype>

namespace arcknot {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::PointOnLine: return "PointOnLine";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::RepeatedVertex: return "RepeatedVertex";
        case ErrorKind::SelfIntersection: return "SelfIntersection";
        case ErrorKind::ClosedPath: return "ClosedPath";
        case ErrorKind::CollinearArc: return "CollinearArc";
        case ErrorKind::CollinearDegenerate: return "CollinearDegenerate";
        case ErrorKind::OnTraceSet: return "OnTraceSet";
        case ErrorKind::NotGeneric: return "NotGeneric";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::Internal: return "InternalError";
    }
    return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rat out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        Int d{std::string(den)};
        if (d == 0) bad(text);
        out = Rat(Int(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if (!whole.empty() && !all_digits(whole)) bad(text);
        if (!frac.empty() && !all_digits(frac)) bad(text);
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Int w = whole.empty() ? Int(0) : Int(std::string(whole));
        Int f = frac.empty() ? Int(0) : Int(std::string(frac));
        out = Rat(w * scale + f, scale);
    } else {
        if (!all_digits(s)) bad(text);
        out = Rat(Int(std::string(s)));
    }
    out.canonicalize();
    return negative ? Rat(-out) : out;
}

Rat make_rat(const Int& p, const Int& q) {
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rat& r) { return sgn(r); }
int sign(const Int& z) { return sgn(z); }

}  // namespace arcknot
