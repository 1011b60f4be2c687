#include "crystalkit/pbw.hpp"

namespace crystalkit {

std::vector<Segment> root_order(int n) {
    Rank rank(n);
    std::vector<Segment> order;
    order.reserve(static_cast<std::size_t>(rank.positive_roots()));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) order.push_back({i, j});
    return order;
}

int root_position(int n, const Segment& s) {
    if (s.start < 1 || s.start > s.end || s.end > n)
        throw ValidationError("segment outside the positive roots of rank " +
                              std::to_string(n));
    int before = 0;  // full blocks [r,*] with r < start
    for (int r = 1; r < s.start; ++r) before += n - r + 1;
    return before + (s.end - s.start) + 1;
}

LusztigDatum::LusztigDatum(Rank rank)
    : rank_(rank), exponents_(static_cast<std::size_t>(rank.positive_roots()), 0) {}

LusztigDatum::LusztigDatum(Rank rank, std::vector<int> exponents)
    : rank_(rank), exponents_(std::move(exponents)) {
    if (exponents_.size() != static_cast<std::size_t>(rank.positive_roots()))
        throw ValidationError("expected " + std::to_string(rank.positive_roots()) +
                              " exponents");
    for (int a : exponents_)
        if (a < 0) throw ValidationError("exponents must be nonnegative");
}

int LusztigDatum::exponent(int position) const {
    if (position < 1 || position > static_cast<int>(exponents_.size()))
        throw UsageError("root position out of range");
    return exponents_[static_cast<std::size_t>(position - 1)];
}

Multisegment to_multisegment(const LusztigDatum& a) {
    Multisegment out(a.rank());
    const auto order = root_order(a.rank().n());
    for (std::size_t p = 0; p < order.size(); ++p)
        if (int mult = a.exponents()[p]; mult > 0) out = out.add(order[p], mult);
    return out;
}

LusztigDatum from_multisegment(const Multisegment& m) {
    const int n = m.rank().n();
    std::vector<int> exps(static_cast<std::size_t>(m.rank().positive_roots()), 0);
    for (const auto& [seg, mult] : m.entries())
        exps[static_cast<std::size_t>(root_position(n, seg) - 1)] = mult;
    return LusztigDatum(m.rank(), std::move(exps));
}

LusztigDatum LusztigDatum::f(int i) const {
    return from_multisegment(to_multisegment(*this).f(i));
}

std::optional<LusztigDatum> LusztigDatum::e(int i) const {
    auto r = to_multisegment(*this).e(i);
    if (!r) return std::nullopt;
    return from_multisegment(*r);
}

LusztigDatum LusztigDatum::f_star(int i) const {
    return from_multisegment(to_multisegment(*this).f_star(i));
}

std::optional<LusztigDatum> LusztigDatum::e_star(int i) const {
    auto r = to_multisegment(*this).e_star(i);
    if (!r) return std::nullopt;
    return from_multisegment(*r);
}

int LusztigDatum::eps(int i) const { return to_multisegment(*this).eps(i); }

int LusztigDatum::eps_star(int i) const { return to_multisegment(*this).eps_star(i); }

Weight LusztigDatum::weight() const {
    std::vector<int> coords(static_cast<std::size_t>(rank_.n()), 0);
    const auto order = root_order(rank_.n());
    for (std::size_t p = 0; p < order.size(); ++p)
        for (int v = order[p].start; v <= order[p].end; ++v)
            coords[static_cast<std::size_t>(v - 1)] -= exponents_[p];
    return Weight(rank_, std::move(coords));
}

LusztigDatum block_shift(const LusztigDatum& a) {
    const int n = a.rank().n();
    if (n < 2) throw UsageError("block shift needs rank at least 2");
    std::vector<int> tail(a.exponents().begin() + n, a.exponents().end());
    return LusztigDatum(Rank(n - 1), std::move(tail));
}

}  // namespace crystalkit
