#pragma once

#include <optional>
#include <vector>

#include "crystalkit/multisegment.hpp"

// Lusztig data: exponent vectors along a fixed convex order on the positive
// roots of sl(n+1).  The dictionary with multisegments sends the root [i,j]
// (= alpha_i + ... + alpha_j) to the segment [i,j]; crystal operators act
// through that dictionary except where a native contract pins them directly.

namespace crystalkit {

// [1,1],[1,2],...,[1,n],[2,2],...,[2,n],...,[n,n].
std::vector<Segment> root_order(int n);

// 1-based position of [i,j] in root_order(n).
int root_position(int n, const Segment& s);

class LusztigDatum {
public:
    explicit LusztigDatum(Rank rank);  // all exponents zero
    LusztigDatum(Rank rank, std::vector<int> exponents);

    Rank rank() const { return rank_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int exponent(int position) const;  // 1-based

    // Transported operators.  f at i=1 and eps at i=1 must act on the first
    // exponent natively, and the starred pair at i=n on the last; those
    // contracts are enforced by the verification suites.
    LusztigDatum f(int i) const;
    std::optional<LusztigDatum> e(int i) const;
    LusztigDatum f_star(int i) const;
    std::optional<LusztigDatum> e_star(int i) const;
    int eps(int i) const;
    int eps_star(int i) const;
    // Computed directly from the exponents; agrees with the multisegment
    // weight by construction of the dictionary.
    Weight weight() const;

    friend auto operator<=>(const LusztigDatum&, const LusztigDatum&) = default;
    friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;

private:
    Rank rank_;
    std::vector<int> exponents_;
};

Multisegment to_multisegment(const LusztigDatum& a);
LusztigDatum from_multisegment(const Multisegment& m);

// Drops the first block (the [1,*] exponents); the remainder is a datum of
// rank n-1 because the root order is block-structured.
LusztigDatum block_shift(const LusztigDatum& a);

}  // namespace crystalkit
