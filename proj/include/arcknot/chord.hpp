#pragma once

#include "arcknot/diagram.hpp"

#include <array>
#include <string>
#include <vector>

namespace arcknot {

/// A point on a based loop where a chord is attached or passes through.
struct Port {
    enum class Kind { Attach, PassIn, PassOut };
    Kind kind;
    std::size_t chord;
    /// Attach: 0 = chord tail, 1 = chord head. Pass: index into Chord::passes.
    std::size_t index;
    friend bool operator==(const Port&, const Port&) = default;
};

struct Loop {
    std::vector<Port> ports;  // counterclockwise
    int orientation = 1;      // +1 counterclockwise
    friend bool operator==(const Loop&, const Loop&) = default;
};

/// A chord passing through the disk of a based loop; the sign is the
/// exponent of that loop's meridian in the conjugating word.
struct ChordPass {
    std::size_t loop;
    int sign;
    friend bool operator==(const ChordPass&, const ChordPass&) = default;
};

struct Chord {
    std::size_t tail, head;
    std::vector<ChordPass> passes;
    friend bool operator==(const Chord&, const Chord&) = default;
};

/// Based loops joined by chords. Loop start_loop is o_s, terminal_loop is o_t.
struct ChordDiagram {
    std::vector<Loop> loops;
    std::vector<Chord> chords;
    std::size_t start_loop = 0;
    std::size_t terminal_loop = 0;

    /// Loops other than o_s and o_t, ascending.
    std::vector<std::size_t> interior_loops() const;
    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// One based loop per crossing and per endpoint; one chord per over-arc.
///
/// The strand is cut at every under-visit. Each piece becomes a chord from
/// the loop at its beginning (o_s or the crossing where it emerges from
/// under) to the loop at its end (the next under-crossing, or o_t). Where
/// a piece passes over crossing c its chord passes through loop c with the
/// crossing sign as exponent. Loop order: o_s, crossings 1..n, o_t.
ChordDiagram chord_diagram_of(const ArcDiagram& d);

struct ReductionStep {
    std::size_t kept_loop, removed_loop, chord;  // indices before the step
};

struct ReducedChordDiagram {
    ChordDiagram diagram;
    std::vector<ReductionStep> log;
};

/// Merges loop pairs joined by a chord that passes through no loop, until
/// none is left. o_s and o_t are never merged with each other.
ReducedChordDiagram reduce_clean_chord(const ChordDiagram& c);

struct ChordCode {
    std::string text;
    friend bool operator==(const ChordCode&, const ChordCode&) = default;
    friend auto operator<=>(const ChordCode&, const ChordCode&) = default;
};

/// Canonical text form; equal iff isomorphic preserving o_s, o_t and
/// orientations.
ChordCode chord_code(const ChordDiagram& c);

enum class AdjointType { I = 1, II = 2, III = 3, IV = 4 };
std::string to_string(AdjointType t);

/// An additional chord; a self-attaching chord has tail == head.
struct ExtraChord {
    std::size_t tail, head;
    friend bool operator==(const ExtraChord&, const ExtraChord&) = default;
};

struct AdjointDiagram {
    ChordDiagram base;
    std::array<ExtraChord, 2> extra_pair;
    AdjointType type;
    std::size_t index;  // within its type

    /// Base plus the two extra chords, which pass no loop and attach after
    /// the existing ports of their loops.
    ChordDiagram combined() const;
};

/// All n^2+2n+2 adjoints, ordered by type and then by loop indices:
///   I:   {self o_s, self o_t}, {self o_s, o_s-o_t}
///   II:  {self o_s, o_t-c} for each interior c, then {self o_t, o_s-c}
///   III: {o_s-o_t, o_s-c}
///   IV:  {o_s-c, o_t-d} for ordered pairs c != d
std::vector<AdjointDiagram> enumerate_adjoints(const ChordDiagram& c);

}  // namespace arcknot
