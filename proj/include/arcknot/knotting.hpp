#pragma once

#include "arcknot/chord.hpp"
#include "arcknot/group.hpp"
#include "arcknot/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcknot {

/// Generators x_1..x_g; a relator letter k > 0 means x_k, k < 0 means x_{|k|}^-1.
struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<std::vector<int>> relators;
    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Throws Error(Internal) when a letter is out of range or zero.
void check_presentation(const GroupPresentation& p);

/// One generator per loop (loop i is x_{i+1}). A chord from loop a to loop b
/// passing loops c_1..c_r with signs e_1..e_r gives x_b = w^-1 x_a w with
/// w = x_{c_1}^{e_1} ... x_{c_r}^{e_r}, stored as x_b^-1 w^-1 x_a w.
GroupPresentation presentation_of(const ChordDiagram& c);
GroupPresentation presentation_of(const AdjointDiagram& a);

/// Free and cyclic reduction, then repeated elimination of a generator that
/// occurs exactly once in some relator. Preserves the group up to isomorphism.
GroupPresentation simplify(const GroupPresentation& p);

/// Rank of the free part of the abelianization.
std::size_t abelianization_rank(const GroupPresentation& p);

inline constexpr std::size_t default_max_group_order = 512;

/// Number of homomorphisms from the presented group to g.
/// Throws Error(GroupTooLarge) when g.order() > max_order.
std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g,
                         std::size_t max_order = default_max_group_order);

enum class VerdictKind { Knotted, Unknotted, Unknown };
std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    /// "table", "plugin", "hom-count" or "none".
    std::string provenance = "none";
    std::string witness_group;
    std::uint64_t witness_count = 0;
};

/// Lookup from chord codes to classifications.
class ClassificationTable {
public:
    void set(const ChordCode& code, VerdictKind kind);
    std::optional<VerdictKind> find(const ChordCode& code) const;
    std::size_t size() const { return entries_.size(); }

    /// One entry per line: `<key> <knotted|unknotted>`, where the key is
    /// code_hash(code) or inline_code(code). Blank lines and '#' comments
    /// are skipped. Throws Error(Parse) with the line number.
    static ClassificationTable parse(std::string_view text);

private:
    std::map<std::string, VerdictKind> entries_;  // keyed by hash
};

/// "h:" followed by 16 hex digits of the 64-bit FNV-1a hash of the code text.
std::string code_hash(const ChordCode& code);
/// The code text on one line, newlines replaced by '|'.
std::string inline_code(const ChordCode& code);

struct OracleConfig {
    std::vector<FiniteGroup> groups;
    ClassificationTable table;
    /// Consulted after the table and before hom counting.
    std::function<std::optional<Verdict>(const AdjointDiagram&)> plugin;
    std::size_t max_group_order = default_max_group_order;
    /// Enumerate adjoints of the clean-chord reduced diagram instead.
    bool reduce = false;
};

/// S3, D4 and A4, empty table, no plugin.
OracleConfig default_oracle();

Verdict verdict(const AdjointDiagram& a, const OracleConfig& cfg);

struct TypeProbability {
    Rat lower, upper;
    bool vacuous = true;
    std::size_t total = 0, knotted = 0, unknotted = 0;
    friend bool operator==(const TypeProbability&, const TypeProbability&) = default;
};

/// Types I..IV in order.
struct KnottingProbability {
    std::array<TypeProbability, 4> types;
    friend bool operator==(const KnottingProbability&, const KnottingProbability&) = default;
};

/// "(1, [0,1/2], 0, -)": a point value when decided, an interval otherwise,
/// '-' for a vacuous type.
std::string to_string(const KnottingProbability& p);

struct AdjointVerdict {
    AdjointDiagram adjoint;
    ChordCode code;
    Verdict verdict;
};

/// All adjoints of the diagram with their verdicts, in enumeration order.
std::vector<AdjointVerdict> classify_adjoints(const ArcDiagram& d, const OracleConfig& cfg);

KnottingProbability probability_from(const std::vector<AdjointVerdict>& verdicts);
KnottingProbability probability_of_diagram(const ArcDiagram& d, const OracleConfig& cfg);
/// Over the canonical diagram. Throws Error(CollinearDegenerate).
KnottingProbability probability_of_arc(const SpatialArc& arc, const Direction& u, const OracleConfig& cfg);

/// Values for the arc and for the reversed arc.
struct ProbabilityPair {
    KnottingProbability forward, reverse;
    /// Component-wise mean of bounds; vacuous where both are vacuous.
    KnottingProbability average() const;
    bool equal() const { return forward == reverse; }
};

ProbabilityPair probability_pair(const SpatialArc& arc, const Direction& u, const OracleConfig& cfg);

}  // namespace arcknot
