#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crystalkit/core.hpp"

// Multisegments: finite multisets of segments [start, end].  A segment
// carries one box per label start..end, and the f_i / e_i (top end) and
// f_i^* / e_i^* (bottom end) operators act through bracket strings.

namespace crystalkit {

struct Segment {
    int start = 1;
    int end = 1;
    int height() const { return end - start + 1; }
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

enum class BracketKind { normal, star };

struct BracketToken {
    Segment segment;
    BracketSymbol symbol = BracketSymbol::open;
    bool canceled = false;
};

// S_i (kind normal, reads segment tops) or S_i^* (kind star, reads segment
// bottoms) with cancellation already applied.
struct BracketString {
    BracketKind kind = BracketKind::normal;
    int index = 1;
    std::vector<BracketToken> entries;

    int uncanceled_open() const { return count_uncanceled(entries, BracketSymbol::open); }
    int uncanceled_close() const { return count_uncanceled(entries, BracketSymbol::close); }
    std::optional<std::size_t> leftmost_open() const {
        return leftmost_uncanceled(entries, BracketSymbol::open);
    }
    std::optional<std::size_t> rightmost_close() const {
        return rightmost_uncanceled(entries, BracketSymbol::close);
    }
};

// Value type; every operation returns a fresh multisegment.  Entries are
// kept canonical: stored multiplicities are always >= 1, so structural
// equality is multiset equality.
class Multisegment {
public:
    explicit Multisegment(Rank rank) : rank_(rank) {}
    Multisegment(Rank rank, std::initializer_list<std::pair<Segment, int>> entries);

    Rank rank() const { return rank_; }
    const std::map<Segment, int>& entries() const { return entries_; }
    int multiplicity(const Segment& s) const;
    // Total number of boxes: sum of height * multiplicity.
    int size() const;
    bool empty() const { return entries_.empty(); }

    Multisegment add(const Segment& s, int count = 1) const;
    Multisegment remove(const Segment& s, int count = 1) const;
    Multisegment replace(const Segment& from, const Segment& to) const;
    // Revalidates every segment against the new rank.
    Multisegment with_rank(Rank r) const;

    Multisegment f(int i) const;
    std::optional<Multisegment> e(int i) const;
    Multisegment f_star(int i) const;
    std::optional<Multisegment> e_star(int i) const;
    int eps(int i) const;
    int eps_star(int i) const;
    int phi(int i) const;
    int phi_star(int i) const;
    Weight weight() const;
    // [start, end] -> [n+1-end, n+1-start]; conjugates f_i into f_{n+1-i}^*.
    Multisegment flip() const;

    friend auto operator<=>(const Multisegment&, const Multisegment&) = default;
    friend bool operator==(const Multisegment&, const Multisegment&) = default;

private:
    void check_segment(const Segment& s) const;
    Rank rank_;
    std::map<Segment, int> entries_;
};

BracketString build_bracket_string(const Multisegment& m, int i, BracketKind kind);

// Uncanceled ')' counts; ur_by_height restricts to tokens whose segment has
// the given height.
int ur(const Multisegment& m, int i);
int ur_star(const Multisegment& m, int i);
int ur_by_height(const Multisegment& m, int j, int h);

// Saito reflection: f_i^L followed by (e_i^*)^max with L = jump_i(m).
Multisegment sigma(const Multisegment& m, int i);

// sigma_n ... sigma_1 applied left to right.
Multisegment sigma_chain(const Multisegment& m);

struct SigmaChainStep {
    int exponent = 0;    // a_k = jump_k of the running element
    Multisegment stage;  // f_k^{a_k} ... f_1^{a_1}(m)
};
struct SigmaChainTrace {
    std::vector<SigmaChainStep> steps;
    Multisegment result;
};
// Same endpoint as sigma_chain, computed as the commuted composition: all
// f-powers first (recording each stage), then every (e_i^*)^max.
SigmaChainTrace sigma_chain_trace(const Multisegment& m);

// Drops [1, j] segments and moves [i, j] to [i-1, j-1]; keeps the rank.
Multisegment shift_down(const Multisegment& m);

}  // namespace crystalkit
