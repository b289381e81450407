#include "arcknot/group.hpp"
#include "arcknot/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arcknot {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw Error(ErrorKind::InvalidGroup, name_ + ": empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidGroup, name_ + ": table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error(ErrorKind::InvalidGroup, name_ + ": entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw Error(ErrorKind::InvalidGroup, name_ + ": no identity");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        if (inverse_[a] < 0) throw Error(ErrorKind::InvalidGroup, name_ + ": element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(ErrorKind::InvalidGroup, name_ + ": not associative");
}

FiniteGroup permutation_group(std::string name, const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) return trivial_group();
    const std::size_t k = generators.front().size();
    std::vector<int> id(k);
    for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<int>(i);
    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(k);  // p then q
        for (std::size_t i = 0; i < k; ++i) r[i] = q[p[i]];
        return r;
    };
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators) {
            auto r = compose(elems[i], g);
            if (index.emplace(r, static_cast<int>(elems.size())).second) elems.push_back(r);
        }
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(std::move(name), std::move(table));
}

FiniteGroup trivial_group() { return FiniteGroup("trivial", {{0}}); }

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidGroup, "Z0 is not finite");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
    return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup symmetric_group_3() { return permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup dihedral_group_4() { return permutation_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}); }

FiniteGroup alternating_group_4() { return permutation_group("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

FiniteGroup group_by_name(std::string_view name) {
    if (name == "S3") return symmetric_group_3();
    if (name == "D4") return dihedral_group_4();
    if (name == "A4") return alternating_group_4();
    if (name == "trivial") return trivial_group();
    if (name.size() > 1 && name[0] == 'Z') {
        std::size_t n = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9') throw Error(ErrorKind::InvalidGroup, "unknown group: " + std::string(name));
            n = n * 10 + static_cast<std::size_t>(ch - '0');
            if (n > 100000) throw Error(ErrorKind::GroupTooLarge, "group too large: " + std::string(name));
        }
        return cyclic_group(n);
    }
    throw Error(ErrorKind::InvalidGroup, "unknown group: " + std::string(name));
}

FiniteGroup parse_group_table(std::string name, std::string_view text) {
    std::vector<int> values;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, name + ": bad table entry '" + tok + "'");
            }
        }
    }
    std::size_t n = 0;
    while (n * n < values.size()) ++n;
    if (n * n != values.size() || n == 0) throw Error(ErrorKind::InvalidGroup, name + ": table is not square");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t i = 0; i < values.size(); ++i) t[i / n][i % n] = values[i];
    return FiniteGroup(std::move(name), std::move(t));
}

}  // namespace arcknot
