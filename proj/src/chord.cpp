#include "arcknot/chord.hpp"
#include "arcknot/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <tuple>
#include <map>
#include <sstream>

namespace arcknot {

std::vector<std::size_t> ChordDiagram::interior_loops() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < loops.size(); ++i)
        if (i != start_loop && i != terminal_loop) out.push_back(i);
    return out;
}

ChordDiagram chord_diagram_of(const ArcDiagram& d) {
    const std::size_t n = d.crossing_count();
    ChordDiagram c;
    c.loops.resize(n + 2);
    c.start_loop = 0;
    c.terminal_loop = n + 1;

    // Over-arcs: chord k runs from `tail` through the loops it passes over.
    // Remember per crossing which chord arrives/leaves underneath and which
    // chord passes over (with the pass index).
    std::vector<std::size_t> under_in(n), under_out(n), over_chord(n), over_pass(n);
    Chord current{c.start_loop, 0, {}};
    for (const Visit& v : d.visits()) {
        std::size_t loop = v.crossing + 1;
        if (v.over) {
            over_chord[v.crossing] = c.chords.size();
            over_pass[v.crossing] = current.passes.size();
            current.passes.push_back({loop, d.signs()[v.crossing]});
        } else {
            current.head = loop;
            under_in[v.crossing] = c.chords.size();
            c.chords.push_back(current);
            under_out[v.crossing] = c.chords.size();
            current = Chord{loop, 0, {}};
        }
    }
    current.head = c.terminal_loop;
    c.chords.push_back(current);

    c.loops[c.start_loop].ports.push_back({Port::Kind::Attach, 0, 0});
    c.loops[c.terminal_loop].ports.push_back({Port::Kind::Attach, c.chords.size() - 1, 1});
    for (std::size_t x = 0; x < n; ++x) {
        Port oo{Port::Kind::PassOut, over_chord[x], over_pass[x]};
        Port oi{Port::Kind::PassIn, over_chord[x], over_pass[x]};
        Port uo{Port::Kind::Attach, under_out[x], 0};
        Port ui{Port::Kind::Attach, under_in[x], 1};
        // Same cyclic order as the darts of the crossing.
        if (d.signs()[x] > 0)
            c.loops[x + 1].ports = {oo, uo, oi, ui};
        else
            c.loops[x + 1].ports = {oo, ui, oi, uo};
    }
    return c;
}

namespace {

std::optional<std::size_t> find_clean_chord(const ChordDiagram& c) {
    for (std::size_t k = 0; k < c.chords.size(); ++k) {
        const Chord& ch = c.chords[k];
        if (!ch.passes.empty() || ch.tail == ch.head) continue;
        bool ends_st = (ch.tail == c.start_loop && ch.head == c.terminal_loop) ||
                       (ch.tail == c.terminal_loop && ch.head == c.start_loop);
        if (ends_st) continue;
        return k;
    }
    return std::nullopt;
}

std::size_t port_position(const Loop& l, const Port& p) {
    auto it = std::find(l.ports.begin(), l.ports.end(), p);
    if (it == l.ports.end()) throw Error(ErrorKind::Internal, "port not found on loop");
    return static_cast<std::size_t>(it - l.ports.begin());
}

// Merges the two ends of clean chord k into one loop and deletes the chord.
ChordDiagram merge_along(const ChordDiagram& c, std::size_t k, ReductionStep& step) {
    const Chord& ch = c.chords[k];
    // Keep o_s / o_t identity if one of the two loops carries it.
    std::size_t keep = ch.tail, drop = ch.head;
    if (drop == c.start_loop || drop == c.terminal_loop) std::swap(keep, drop);
    step = {keep, drop, k};

    const Loop& a = c.loops[keep];
    const Loop& b = c.loops[drop];
    Port pa{Port::Kind::Attach, k, keep == ch.tail ? 0u : 1u};
    Port pb{Port::Kind::Attach, k, keep == ch.tail ? 1u : 0u};
    std::size_t ia = port_position(a, pa), ib = port_position(b, pb);
    Loop merged;
    merged.orientation = a.orientation;
    for (std::size_t i = 1; i < a.ports.size(); ++i) merged.ports.push_back(a.ports[(ia + i) % a.ports.size()]);
    for (std::size_t i = 1; i < b.ports.size(); ++i) merged.ports.push_back(b.ports[(ib + i) % b.ports.size()]);

    auto loop_map = [&](std::size_t l) {
        if (l == drop) l = keep;
        return l > drop ? l - 1 : l;
    };
    auto chord_map = [&](std::size_t x) { return x > k ? x - 1 : x; };

    ChordDiagram out;
    out.start_loop = loop_map(c.start_loop);
    out.terminal_loop = loop_map(c.terminal_loop);
    for (std::size_t l = 0; l < c.loops.size(); ++l) {
        if (l == drop) continue;
        Loop nl = (l == keep) ? merged : c.loops[l];
        for (Port& p : nl.ports) p.chord = chord_map(p.chord);
        out.loops.push_back(std::move(nl));
    }
    for (std::size_t x = 0; x < c.chords.size(); ++x) {
        if (x == k) continue;
        Chord nc = c.chords[x];
        nc.tail = loop_map(nc.tail);
        nc.head = loop_map(nc.head);
        for (ChordPass& p : nc.passes) p.loop = loop_map(p.loop);
        out.chords.push_back(std::move(nc));
    }
    return out;
}

}  // namespace

ReducedChordDiagram reduce_clean_chord(const ChordDiagram& c) {
    ReducedChordDiagram out{c, {}};
    while (auto k = find_clean_chord(out.diagram)) {
        ReductionStep step{};
        out.diagram = merge_along(out.diagram, *k, step);
        out.log.push_back(step);
    }
    return out;
}

namespace {

std::string serialize_from(const ChordDiagram& c, std::optional<std::size_t> root_port) {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    const std::size_t L = c.loops.size();
    std::vector<std::size_t> loop_label(L, none), loop_start(L, 0), chord_label(c.chords.size(), none);
    std::vector<std::size_t> order;  // loops by label
    std::vector<std::size_t> chord_order;
    std::deque<std::size_t> queue;

    // Where each chord end / pass sits: (loop, port position).
    std::map<std::tuple<int, std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> where;
    for (std::size_t l = 0; l < L; ++l)
        for (std::size_t i = 0; i < c.loops[l].ports.size(); ++i) {
            const Port& p = c.loops[l].ports[i];
            where[{static_cast<int>(p.kind), p.chord, p.index}] = {l, i};
        }

    auto discover = [&](std::size_t l, std::size_t start) {
        if (loop_label[l] != none) return;
        loop_label[l] = order.size();
        loop_start[l] = start;
        order.push_back(l);
        queue.push_back(l);
    };
    auto discover_at = [&](Port::Kind kind, std::size_t chord, std::size_t index) {
        auto it = where.find({static_cast<int>(kind), chord, index});
        if (it != where.end()) discover(it->second.first, it->second.second);
    };
    auto touch_chord = [&](std::size_t k) {
        if (chord_label[k] != none) return;
        chord_label[k] = chord_order.size();
        chord_order.push_back(k);
        discover_at(Port::Kind::Attach, k, 0);
        discover_at(Port::Kind::Attach, k, 1);
        for (std::size_t i = 0; i < c.chords[k].passes.size(); ++i) discover_at(Port::Kind::PassIn, k, i);
    };

    discover(c.start_loop, root_port.value_or(0));
    std::vector<std::string> loop_lines(L);
    auto process = [&] {
        while (!queue.empty()) {
            std::size_t l = queue.front();
            queue.pop_front();
            const Loop& loop = c.loops[l];
            std::ostringstream line;
            line << "L" << loop_label[l] << ' '
                 << (l == c.start_loop ? 's' : l == c.terminal_loop ? 't' : '-')
                 << (loop.orientation > 0 ? '+' : '-') << ':';
            for (std::size_t i = 0; i < loop.ports.size(); ++i) {
                const Port& p = loop.ports[(loop_start[l] + i) % loop.ports.size()];
                touch_chord(p.chord);
                switch (p.kind) {
                    case Port::Kind::Attach:
                        line << " a" << chord_label[p.chord] << (p.index ? ".h" : ".t");
                        break;
                    case Port::Kind::PassIn: line << " i" << chord_label[p.chord] << '.' << p.index; break;
                    case Port::Kind::PassOut: line << " o" << chord_label[p.chord] << '.' << p.index; break;
                }
            }
            loop_lines[loop_label[l]] = line.str();
        }
    };
    process();
    // Components not reachable from o_s (never produced by the pipeline).
    for (std::size_t l = 0; l < L; ++l) {
        if (loop_label[l] == none) {
            discover(l, 0);
            process();
        }
    }
    for (std::size_t k = 0; k < c.chords.size(); ++k) touch_chord(k);

    std::ostringstream out;
    out << "CHORD 1 loops=" << L << " chords=" << c.chords.size() << "\n";
    for (const auto& line : loop_lines) out << line << "\n";
    for (std::size_t lab = 0; lab < chord_order.size(); ++lab) {
        const Chord& ch = c.chords[chord_order[lab]];
        out << "C" << lab << ": " << loop_label[ch.tail] << " -> " << loop_label[ch.head];
        for (const ChordPass& p : ch.passes) out << ' ' << loop_label[p.loop] << (p.sign > 0 ? '+' : '-');
        out << "\n";
    }
    return out.str();
}

}  // namespace

ChordCode chord_code(const ChordDiagram& c) {
    const auto& root = c.loops[c.start_loop];
    if (root.ports.empty()) return {serialize_from(c, std::nullopt)};
    std::string best;
    for (std::size_t i = 0; i < root.ports.size(); ++i) {
        std::string s = serialize_from(c, i);
        if (i == 0 || s < best) best = std::move(s);
    }
    return {best};
}

std::string to_string(AdjointType t) {
    switch (t) {
        case AdjointType::I: return "I";
        case AdjointType::II: return "II";
        case AdjointType::III: return "III";
        case AdjointType::IV: return "IV";
    }
    return "?";
}

ChordDiagram AdjointDiagram::combined() const {
    ChordDiagram c = base;
    for (const ExtraChord& e : extra_pair) {
        std::size_t k = c.chords.size();
        c.chords.push_back({e.tail, e.head, {}});
        c.loops[e.tail].ports.push_back({Port::Kind::Attach, k, 0});
        c.loops[e.head].ports.push_back({Port::Kind::Attach, k, 1});
    }
    return c;
}

std::vector<AdjointDiagram> enumerate_adjoints(const ChordDiagram& c) {
    const std::size_t s = c.start_loop, t = c.terminal_loop;
    const auto interior = c.interior_loops();
    std::vector<AdjointDiagram> out;
    std::size_t index = 0;
    auto add = [&](AdjointType type, ExtraChord a, ExtraChord b) {
        if (!out.empty() && out.back().type != type) index = 0;
        out.push_back({c, {a, b}, type, index++});
    };
    add(AdjointType::I, {s, s}, {t, t});
    add(AdjointType::I, {s, s}, {s, t});
    for (std::size_t x : interior) add(AdjointType::II, {s, s}, {t, x});
    for (std::size_t x : interior) add(AdjointType::II, {t, t}, {s, x});
    for (std::size_t x : interior) add(AdjointType::III, {s, t}, {s, x});
    for (std::size_t x : interior)
        for (std::size_t y : interior)
            if (x != y) add(AdjointType::IV, {s, x}, {t, y});
    return out;
}

}  // namespace arcknot
