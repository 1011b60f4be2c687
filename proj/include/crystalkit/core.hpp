#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core vocabulary shared by every realization: the rank of sl(n+1), weights
// in simple-root coordinates, the Cartan pairing, and the bracket-matching
// scan that underlies all bracket-rule operators.

namespace crystalkit {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Signals a broken realization, not bad input.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Rank n of sl(n+1).  Operator and coordinate indices run 1..n.
class Rank {
public:
    explicit Rank(int n) : n_(n) {
        if (n < 1) throw ValidationError("rank must be at least 1");
    }
    int n() const { return n_; }
    int positive_roots() const { return n_ * (n_ + 1) / 2; }
    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw UsageError("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    friend auto operator<=>(Rank, Rank) = default;

private:
    int n_;
};

// Weight written in simple-root coordinates: w = sum_i coord(i) * alpha_i.
class Weight {
public:
    explicit Weight(Rank r) : rank_(r), coords_(static_cast<std::size_t>(r.n()), 0) {}
    Weight(Rank r, std::vector<int> coords) : rank_(r), coords_(std::move(coords)) {
        if (coords_.size() != static_cast<std::size_t>(r.n()))
            throw ValidationError("weight needs one coordinate per simple root");
    }
    Rank rank() const { return rank_; }
    int coord(int i) const {
        rank_.check_index(i);
        return coords_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<int>& coords() const { return coords_; }
    Weight plus_alpha(int i, int sign = 1) const {
        rank_.check_index(i);
        Weight w = *this;
        w.coords_[static_cast<std::size_t>(i - 1)] += sign;
        return w;
    }
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    Rank rank_;
    std::vector<int> coords_;
};

// <w, alpha_i^vee> for the type A_n Cartan matrix.
int pairing(const Weight& w, int i);

// phi_i = eps_i + <wt, alpha_i^vee>.  May be negative on B(infinity).
int phi_from_eps(int eps, const Weight& w, int i);

// eps_i + eps_i^* + <wt, alpha_i^vee>.  Nonnegative on any bicrystal
// realization of B(infinity); a negative value means the realization is
// broken, so it is reported as an integrity failure rather than returned.
template <class Elem>
int jump(const Elem& b, int i) {
    int j = b.eps(i) + b.eps_star(i) + pairing(b.weight(), i);
    if (j < 0) throw IntegrityError("negative jump at index " + std::to_string(i));
    return j;
}

enum class BracketSymbol { open, close };

// Left-to-right scan: '(' pushes, ')' cancels the most recent unmatched '('.
// Afterwards every uncanceled ')' precedes every uncanceled '('.
template <class Token>
void cancel_brackets(std::vector<Token>& tokens) {
    std::vector<std::size_t> open_stack;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (tokens[k].symbol == BracketSymbol::open) {
            open_stack.push_back(k);
        } else if (!open_stack.empty()) {
            tokens[open_stack.back()].canceled = true;
            tokens[k].canceled = true;
            open_stack.pop_back();
        }
    }
}

template <class Token>
int count_uncanceled(const std::vector<Token>& tokens, BracketSymbol sym) {
    int c = 0;
    for (const auto& t : tokens)
        if (!t.canceled && t.symbol == sym) ++c;
    return c;
}

template <class Token>
std::optional<std::size_t> leftmost_uncanceled(const std::vector<Token>& tokens,
                                               BracketSymbol sym) {
    for (std::size_t k = 0; k < tokens.size(); ++k)
        if (!tokens[k].canceled && tokens[k].symbol == sym) return k;
    return std::nullopt;
}

template <class Token>
std::optional<std::size_t> rightmost_uncanceled(const std::vector<Token>& tokens,
                                                BracketSymbol sym) {
    for (std::size_t k = tokens.size(); k-- > 0;)
        if (!tokens[k].canceled && tokens[k].symbol == sym) return k;
    return std::nullopt;
}

}  // namespace crystalkit
