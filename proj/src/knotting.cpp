#include "arcknot/knotting.hpp"
#include "arcknot/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <cstdio>
#include <sstream>
#include <thread>

namespace arcknot {

void check_presentation(const GroupPresentation& p) {
    const int g = static_cast<int>(p.generators);
    for (const auto& r : p.relators)
        for (int k : r)
            if (k == 0 || k > g || k < -g) throw Error(ErrorKind::Internal, "relator letter out of range");
}

GroupPresentation presentation_of(const ChordDiagram& c) {
    GroupPresentation p;
    p.generators = c.loops.size();
    for (const Chord& ch : c.chords) {
        std::vector<int> w;
        for (const ChordPass& pass : ch.passes) w.push_back(pass.sign * static_cast<int>(pass.loop + 1));
        std::vector<int> r{-static_cast<int>(ch.head + 1)};
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
        r.push_back(static_cast<int>(ch.tail + 1));
        r.insert(r.end(), w.begin(), w.end());
        p.relators.push_back(std::move(r));
    }
    return p;
}

GroupPresentation presentation_of(const AdjointDiagram& a) { return presentation_of(a.combined()); }

namespace {

using Word = std::vector<int>;

Word free_reduce(const Word& w) {
    Word out;
    for (int k : w) {
        if (!out.empty() && out.back() == -k)
            out.pop_back();
        else
            out.push_back(k);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
    }
    return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

Word inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

void tidy(GroupPresentation& p) {
    std::vector<Word> kept;
    for (auto& r : p.relators) {
        Word w = cyclic_reduce(r);
        if (!w.empty()) kept.push_back(std::move(w));
    }
    p.relators = std::move(kept);
}

}  // namespace

GroupPresentation simplify(const GroupPresentation& input) {
    check_presentation(input);
    GroupPresentation p = input;
    tidy(p);
    for (;;) {
        bool changed = false;
        for (std::size_t ri = 0; ri < p.relators.size() && !changed; ++ri) {
            const Word& r = p.relators[ri];
            for (std::size_t pos = 0; !changed && pos < r.size(); ++pos) {
                const int gen = std::abs(r[pos]);
                auto occurrences = std::count_if(r.begin(), r.end(), [&](int k) { return std::abs(k) == gen; });
                if (occurrences != 1) continue;
                // r = u x^e v, so x^e = u^-1 v^-1 (cyclically: x^e = (v u)^-1).
                Word vu(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
                vu.insert(vu.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
                Word value = r[pos] > 0 ? inverse(vu) : vu;
                GroupPresentation next;
                next.generators = p.generators - 1;
                auto renumber = [&](int k) {
                    int a = std::abs(k);
                    int m = a > gen ? a - 1 : a;
                    return k > 0 ? m : -m;
                };
                for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
                    if (rj == ri) continue;
                    Word w;
                    for (int k : p.relators[rj]) {
                        if (std::abs(k) == gen) {
                            const Word piece = k > 0 ? value : inverse(value);
                            for (int q : piece) w.push_back(renumber(q));
                        } else {
                            w.push_back(renumber(k));
                        }
                    }
                    next.relators.push_back(std::move(w));
                }
                tidy(next);
                p = std::move(next);
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::sort(p.relators.begin(), p.relators.end());
    p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());
    return p;
}

std::size_t abelianization_rank(const GroupPresentation& p) {
    check_presentation(p);
    const std::size_t g = p.generators;
    std::vector<std::vector<Rat>> m;
    for (const auto& r : p.relators) {
        std::vector<Rat> row(g, 0);
        for (int k : r) row[std::abs(k) - 1] += k > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < g && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < g; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return g - rank;
}

namespace {

class HomCounter {
public:
    HomCounter(const GroupPresentation& p, const FiniteGroup& g) : p_(p), g_(g), value_(p.generators, -1) {
        checks_.resize(p.generators);
        solvers_.assign(p.generators, -1);
        for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
            const Word& r = p.relators[ri];
            if (r.empty()) continue;
            int top = 0;
            for (int k : r) top = std::max(top, std::abs(k));
            const std::size_t depth = static_cast<std::size_t>(top - 1);
            checks_[depth].push_back(ri);
            auto occurrences = std::count_if(r.begin(), r.end(), [&](int k) { return std::abs(k) == top; });
            if (occurrences == 1 && solvers_[depth] < 0) solvers_[depth] = static_cast<int>(ri);
        }
    }

    std::uint64_t run() { return search(0); }

private:
    int letter(int k) const {
        int v = value_[std::abs(k) - 1];
        return k > 0 ? v : g_.inv(v);
    }

    int eval(const Word& w, std::size_t from, std::size_t to) const {
        int acc = g_.identity();
        for (std::size_t i = from; i < to; ++i) acc = g_.mul(acc, letter(w[i]));
        return acc;
    }

    bool consistent(std::size_t depth) const {
        for (std::size_t ri : checks_[depth])
            if (eval(p_.relators[ri], 0, p_.relators[ri].size()) != g_.identity()) return false;
        return true;
    }

    std::uint64_t search(std::size_t depth) {
        if (depth == p_.generators) return 1;
        std::uint64_t total = 0;
        if (solvers_[depth] >= 0) {
            const Word& r = p_.relators[static_cast<std::size_t>(solvers_[depth])];
            const int top = static_cast<int>(depth + 1);
            std::size_t pos = 0;
            while (std::abs(r[pos]) != top) ++pos;
            // u x^e v = 1  =>  x^e = u^-1 v^-1
            int u = eval(r, 0, pos), v = eval(r, pos + 1, r.size());
            int xe = g_.mul(g_.inv(u), g_.inv(v));
            value_[depth] = r[pos] > 0 ? xe : g_.inv(xe);
            if (consistent(depth)) total = search(depth + 1);
        } else {
            for (int x = 0; x < static_cast<int>(g_.order()); ++x) {
                value_[depth] = x;
                if (consistent(depth)) total += search(depth + 1);
            }
        }
        value_[depth] = -1;
        return total;
    }

    const GroupPresentation& p_;
    const FiniteGroup& g_;
    std::vector<int> value_;
    std::vector<std::vector<std::size_t>> checks_;
    std::vector<int> solvers_;
};

}  // namespace

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroup& g, std::size_t max_order) {
    if (g.order() > max_order)
        throw Error(ErrorKind::GroupTooLarge,
                    "group " + g.name() + " of order " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(max_order));
    check_presentation(p);
    return HomCounter(p, g).run();
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Knotted: return "knotted";
        case VerdictKind::Unknotted: return "unknotted";
        case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

std::string code_hash(const ChordCode& code) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : code.text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "h:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string inline_code(const ChordCode& code) {
    std::string s = code.text;
    while (!s.empty() && s.back() == '\n') s.pop_back();
    std::replace(s.begin(), s.end(), '\n', '|');
    return s;
}

void ClassificationTable::set(const ChordCode& code, VerdictKind kind) { entries_[code_hash(code)] = kind; }

std::optional<VerdictKind> ClassificationTable::find(const ChordCode& code) const {
    auto it = entries_.find(code_hash(code));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

ClassificationTable ClassificationTable::parse(std::string_view text) {
    ClassificationTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        line.erase(0, b);
        auto sp = line.find_last_of(" \t");
        if (sp == std::string::npos) throw Error(ErrorKind::Parse, "table line " + std::to_string(lineno) + ": missing verdict");
        std::string key = line.substr(0, sp), word = line.substr(sp + 1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        VerdictKind kind;
        if (word == "knotted")
            kind = VerdictKind::Knotted;
        else if (word == "unknotted")
            kind = VerdictKind::Unknotted;
        else
            throw Error(ErrorKind::Parse, "table line " + std::to_string(lineno) + ": bad verdict '" + word + "'");
        if (key.rfind("h:", 0) == 0 && key.size() == 18) {
            t.entries_[key] = kind;
        } else {
            std::string code = key;
            std::replace(code.begin(), code.end(), '|', '\n');
            t.set(ChordCode{code + "\n"}, kind);
        }
    }
    return t;
}

OracleConfig default_oracle() {
    OracleConfig cfg;
    cfg.groups = {symmetric_group_3(), dihedral_group_4(), alternating_group_4()};
    return cfg;
}

Verdict verdict(const AdjointDiagram& a, const OracleConfig& cfg) {
    const ChordCode code = chord_code(a.combined());
    if (auto hit = cfg.table.find(code)) return {*hit, "table", {}, 0};
    if (cfg.plugin)
        if (auto v = cfg.plugin(a)) return *v;
    const GroupPresentation p = simplify(presentation_of(a));
    for (const FiniteGroup& g : cfg.groups) {
        std::uint64_t n = count_homs(p, g, cfg.max_group_order);
        if (n > g.order()) return {VerdictKind::Knotted, "hom-count", g.name(), n};
    }
    return {};
}

std::vector<AdjointVerdict> classify_adjoints(const ArcDiagram& d, const OracleConfig& cfg) {
    ChordDiagram c = chord_diagram_of(d);
    if (cfg.reduce) c = reduce_clean_chord(c).diagram;
    std::vector<AdjointDiagram> adjoints = enumerate_adjoints(c);
    std::vector<AdjointVerdict> out(adjoints.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < adjoints.size(); i = next++) {
            try {
                out[i] = {adjoints[i], chord_code(adjoints[i].combined()), verdict(adjoints[i], cfg)};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(adjoints.size(), std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

KnottingProbability probability_from(const std::vector<AdjointVerdict>& verdicts) {
    KnottingProbability p;
    for (const AdjointVerdict& v : verdicts) {
        TypeProbability& t = p.types[static_cast<std::size_t>(v.adjoint.type) - 1];
        ++t.total;
        if (v.verdict.kind == VerdictKind::Knotted) ++t.knotted;
        if (v.verdict.kind == VerdictKind::Unknotted) ++t.unknotted;
    }
    for (TypeProbability& t : p.types) {
        t.vacuous = t.total == 0;
        if (t.vacuous) {
            t.lower = t.upper = 0;
            continue;
        }
        t.lower = Rat(static_cast<long>(t.knotted), static_cast<long>(t.total));
        t.upper = Rat(static_cast<long>(t.total - t.unknotted), static_cast<long>(t.total));
        t.lower.canonicalize();
        t.upper.canonicalize();
    }
    return p;
}

KnottingProbability probability_of_diagram(const ArcDiagram& d, const OracleConfig& cfg) {
    return probability_from(classify_adjoints(d, cfg));
}

KnottingProbability probability_of_arc(const SpatialArc& arc, const Direction& u, const OracleConfig& cfg) {
    return probability_of_diagram(diagram_for(ArcAnalysis(arc), u), cfg);
}

std::string to_string(const KnottingProbability& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        const TypeProbability& t = p.types[i];
        if (i) s += ", ";
        if (t.vacuous)
            s += "-";
        else if (t.lower == t.upper)
            s += to_string(t.lower);
        else
            s += "[" + to_string(t.lower) + "," + to_string(t.upper) + "]";
    }
    return s + ")";
}

KnottingProbability ProbabilityPair::average() const {
    KnottingProbability out;
    for (std::size_t i = 0; i < 4; ++i) {
        const TypeProbability &a = forward.types[i], &b = reverse.types[i];
        TypeProbability& t = out.types[i];
        if (a.vacuous || b.vacuous) {
            t = a.vacuous ? b : a;
            continue;
        }
        t.vacuous = false;
        t.lower = (a.lower + b.lower) / 2;
        t.upper = (a.upper + b.upper) / 2;
        t.total = a.total + b.total;
        t.knotted = a.knotted + b.knotted;
        t.unknotted = a.unknotted + b.unknotted;
    }
    return out;
}

ProbabilityPair probability_pair(const SpatialArc& arc, const Direction& u, const OracleConfig& cfg) {
    return {probability_of_arc(arc, u, cfg), probability_of_arc(reverse_arc(arc), u, cfg)};
}

}  // namespace arcknot
