#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arcknot {

/// A finite group given by its multiplication table on elements 0..order-1.
class FiniteGroup {
public:
    /// Throws Error(InvalidGroup) unless the table is a group table.
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    const std::string& name() const { return name_; }
    std::size_t order() const { return table_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// Closure of the given permutations (images of 0..k-1) under composition.
FiniteGroup permutation_group(std::string name, const std::vector<std::vector<int>>& generators);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group_3();
FiniteGroup dihedral_group_4();
FiniteGroup alternating_group_4();

/// "S3", "D4", "A4", "trivial" or "Z<n>". Throws Error(InvalidGroup).
FiniteGroup group_by_name(std::string_view name);

/// Whitespace-separated square integer matrix; '#' starts a comment.
FiniteGroup parse_group_table(std::string name, std::string_view text);

}  // namespace arcknot
