#include "arcknot/io.hpp"
#include "arcknot/error.hpp"
#include "arcknot/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arcknot {

namespace {

Rat coordinate(const nlohmann::json& v, std::size_t vertex, std::size_t axis) {
    const std::string where = "vertex " + std::to_string(vertex) + ", coordinate " + std::to_string(axis);
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse, where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
    throw Error(ErrorKind::Parse, where + ": expected a rational string");
}

}  // namespace

std::vector<Vec3> parse_arc_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, "arc json: byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorKind::Parse, "arc json: missing \"vertices\" array");
    std::vector<Vec3> out;
    const auto& vs = doc["vertices"];
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_array() || vs[i].size() != 3)
            throw Error(ErrorKind::Parse, "vertex " + std::to_string(i) + ": expected three coordinates");
        out.push_back({coordinate(vs[i][0], i, 0), coordinate(vs[i][1], i, 1), coordinate(vs[i][2], i, 2)});
    }
    return out;
}

std::string arc_to_json(const std::vector<Vec3>& vertices) {
    nlohmann::json vs = nlohmann::json::array();
    for (const Vec3& p : vertices) vs.push_back({to_string(p.x), to_string(p.y), to_string(p.z)});
    return nlohmann::json{{"vertices", vs}}.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

SpatialArc load_arc(const std::string& path) { return validate_arc(parse_arc_json(read_file(path))); }

Direction parse_direction(std::string_view text) {
    std::vector<Rat> parts;
    std::size_t begin = 0;
    for (;;) {
        std::size_t comma = text.find(',', begin);
        std::string_view piece = text.substr(begin, comma == std::string_view::npos ? text.npos : comma - begin);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        parts.push_back(parse_rat(piece));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "direction needs three components: " + std::string(text));
    Vec3 v{parts[0], parts[1], parts[2]};
    if (v.is_zero()) throw Error(ErrorKind::Parse, "direction must be nonzero");
    return Direction(v);
}

}  // namespace arcknot
