#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "crystalkit/multisegment.hpp"

// Semistandard Young tableaux on the alphabet 0..n, realizing the highest
// weight crystal attached to a partition shape, together with the embedding
// into multisegments.

namespace crystalkit {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int boxes() const;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void validate() const;
    std::vector<int> parts_;
};

// Coefficients of the shape's weight in the fundamental-weight basis:
// coefficient i is parts[i] - parts[i+1].  Shapes with more than n rows are
// rejected.
std::vector<int> partition_weight(const Partition& shape, Rank rank);

struct ColumnToken {
    int column = 1;
    BracketSymbol symbol = BracketSymbol::open;
    bool canceled = false;
};

struct ColumnBracketString {
    int index = 1;
    std::vector<ColumnToken> entries;

    int uncanceled_open() const { return count_uncanceled(entries, BracketSymbol::open); }
    int uncanceled_close() const { return count_uncanceled(entries, BracketSymbol::close); }
    std::optional<std::size_t> leftmost_open() const {
        return leftmost_uncanceled(entries, BracketSymbol::open);
    }
    std::optional<std::size_t> rightmost_close() const {
        return rightmost_uncanceled(entries, BracketSymbol::close);
    }
};

// Rows weakly increase, columns strictly increase, entries lie in 0..n.
class Tableau {
public:
    Tableau(Rank rank, std::vector<std::vector<int>> rows);

    Rank rank() const { return rank_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int entry(int row, int col) const;  // 1-based
    // How many entries equal each of 0..n.
    std::vector<int> value_counts() const;

    std::optional<Tableau> f(int i) const;
    std::optional<Tableau> e(int i) const;
    int eps(int i) const;  // uncanceled '('
    int phi(int i) const;  // uncanceled ')'
    // <wt, alpha_i^vee> = #(i-1) - #(i).
    int pairing_value(int i) const;

    // Row r contributes a segment [r, v] for every entry v >= r; entries
    // equal to r-1 contribute nothing.
    Multisegment to_multisegment() const;

    friend auto operator<=>(const Tableau&, const Tableau&) = default;
    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    void validate() const;
    Rank rank_;
    std::vector<std::vector<int>> rows_;
};

// One token per column: ')' when the column contains i-1 but not i, '(' when
// it contains i but not i-1, in column order.
ColumnBracketString column_bracket_string(const Tableau& b, int i);

// Row r filled with r-1; the unique eps-null tableau of the shape.
Tableau highest_weight_tableau(const Partition& shape, Rank rank);

// All semistandard fillings of the shape on 0..n, sorted.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, Rank rank);

}  // namespace crystalkit
