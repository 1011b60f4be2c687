#include "crystalkit/multisegment.hpp"

#include <algorithm>
#include <cassert>

namespace crystalkit {

Multisegment::Multisegment(Rank rank, std::initializer_list<std::pair<Segment, int>> entries)
    : rank_(rank) {
    for (const auto& [seg, mult] : entries) {
        check_segment(seg);
        if (mult < 1) throw ValidationError("multiplicity must be at least 1");
        entries_[seg] += mult;
    }
}

void Multisegment::check_segment(const Segment& s) const {
    if (s.start < 1 || s.start > s.end || s.end > rank_.n())
        throw ValidationError("segment [" + std::to_string(s.start) + "," +
                              std::to_string(s.end) + "] invalid for rank " +
                              std::to_string(rank_.n()));
}

int Multisegment::multiplicity(const Segment& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? 0 : it->second;
}

int Multisegment::size() const {
    int total = 0;
    for (const auto& [seg, mult] : entries_) total += seg.height() * mult;
    return total;
}

Multisegment Multisegment::add(const Segment& s, int count) const {
    check_segment(s);
    if (count < 1) throw UsageError("add needs a positive count");
    Multisegment out = *this;
    out.entries_[s] += count;
    return out;
}

Multisegment Multisegment::remove(const Segment& s, int count) const {
    if (count < 1) throw UsageError("remove needs a positive count");
    auto it = entries_.find(s);
    if (it == entries_.end() || it->second < count)
        throw UsageError("removing more copies than present");
    Multisegment out = *this;
    auto out_it = out.entries_.find(s);
    out_it->second -= count;
    if (out_it->second == 0) out.entries_.erase(out_it);
    return out;
}

Multisegment Multisegment::replace(const Segment& from, const Segment& to) const {
    return remove(from).add(to);
}

Multisegment Multisegment::with_rank(Rank r) const {
    Multisegment out(r);
    for (const auto& [seg, mult] : entries_) {
        out.check_segment(seg);
        out.entries_[seg] = mult;
    }
    return out;
}

BracketString build_bracket_string(const Multisegment& m, int i, BracketKind kind) {
    m.rank().check_index(i);
    struct Group {
        Segment segment;
        BracketSymbol symbol;
        int mult;
    };
    std::vector<Group> groups;
    for (const auto& [seg, mult] : m.entries()) {
        if (kind == BracketKind::normal) {
            if (seg.end == i - 1)
                groups.push_back({seg, BracketSymbol::close, mult});
            else if (seg.end == i)
                groups.push_back({seg, BracketSymbol::open, mult});
        } else {
            if (seg.start == i + 1)
                groups.push_back({seg, BracketSymbol::close, mult});
            else if (seg.start == i)
                groups.push_back({seg, BracketSymbol::open, mult});
        }
    }
    // Height ascending; ties broken by start, descending for S_i and
    // ascending for S_i^*.  No tie between a ')' and a '(' is possible.
    std::sort(groups.begin(), groups.end(), [kind](const Group& a, const Group& b) {
        if (a.segment.height() != b.segment.height())
            return a.segment.height() < b.segment.height();
        return kind == BracketKind::normal ? a.segment.start > b.segment.start
                                           : a.segment.start < b.segment.start;
    });
    BracketString s{kind, i, {}};
    for (const auto& g : groups)
        for (int c = 0; c < g.mult; ++c) s.entries.push_back({g.segment, g.symbol, false});
    cancel_brackets(s.entries);
    return s;
}

Multisegment Multisegment::f(int i) const {
    BracketString s = build_bracket_string(*this, i, BracketKind::normal);
    if (auto k = s.rightmost_close()) {
        Segment seg = s.entries[*k].segment;  // [h, i-1]
        return replace(seg, {seg.start, i});
    }
    return add({i, i});
}

std::optional<Multisegment> Multisegment::e(int i) const {
    BracketString s = build_bracket_string(*this, i, BracketKind::normal);
    auto k = s.leftmost_open();
    if (!k) return std::nullopt;
    Segment seg = s.entries[*k].segment;  // [h, i]
    if (seg.start == i) return remove(seg);
    return replace(seg, {seg.start, i - 1});
}

Multisegment Multisegment::f_star(int i) const {
    BracketString s = build_bracket_string(*this, i, BracketKind::star);
    if (auto k = s.rightmost_close()) {
        Segment seg = s.entries[*k].segment;  // [i+1, j]
        return replace(seg, {i, seg.end});
    }
    return add({i, i});
}

std::optional<Multisegment> Multisegment::e_star(int i) const {
    BracketString s = build_bracket_string(*this, i, BracketKind::star);
    auto k = s.leftmost_open();
    if (!k) return std::nullopt;
    Segment seg = s.entries[*k].segment;  // [i, j]
    if (seg.end == i) return remove(seg);
    return replace(seg, {i + 1, seg.end});
}

int Multisegment::eps(int i) const {
    return build_bracket_string(*this, i, BracketKind::normal).uncanceled_open();
}

int Multisegment::eps_star(int i) const {
    return build_bracket_string(*this, i, BracketKind::star).uncanceled_open();
}

int Multisegment::phi(int i) const { return phi_from_eps(eps(i), weight(), i); }

int Multisegment::phi_star(int i) const { return phi_from_eps(eps_star(i), weight(), i); }

Weight Multisegment::weight() const {
    std::vector<int> coords(static_cast<std::size_t>(rank_.n()), 0);
    for (const auto& [seg, mult] : entries_)
        for (int v = seg.start; v <= seg.end; ++v)
            coords[static_cast<std::size_t>(v - 1)] -= mult;
    return Weight(rank_, std::move(coords));
}

Multisegment Multisegment::flip() const {
    Multisegment out(rank_);
    const int n = rank_.n();
    for (const auto& [seg, mult] : entries_)
        out.entries_[{n + 1 - seg.end, n + 1 - seg.start}] = mult;
    return out;
}

int ur(const Multisegment& m, int i) {
    return build_bracket_string(m, i, BracketKind::normal).uncanceled_close();
}

int ur_star(const Multisegment& m, int i) {
    return build_bracket_string(m, i, BracketKind::star).uncanceled_close();
}

int ur_by_height(const Multisegment& m, int j, int h) {
    if (h < 1) throw UsageError("height must be positive");
    BracketString s = build_bracket_string(m, j, BracketKind::normal);
    int c = 0;
    for (const auto& t : s.entries)
        if (!t.canceled && t.symbol == BracketSymbol::close && t.segment.height() == h) ++c;
    return c;
}

namespace {

Multisegment sigma_with_power(const Multisegment& m, int i, int power) {
    Multisegment cur = m;
    for (int k = 0; k < power; ++k) cur = cur.f(i);
    while (auto next = cur.e_star(i)) cur = std::move(*next);
    return cur;
}

}  // namespace

Multisegment sigma(const Multisegment& m, int i) {
    const int L = jump(m, i);
    Multisegment out = sigma_with_power(m, i, L);
#ifndef NDEBUG
    // Any power >= jump lands on the same element.
    assert(out == sigma_with_power(m, i, L + 1));
#endif
    return out;
}

Multisegment sigma_chain(const Multisegment& m) {
    Multisegment cur = m;
    for (int i = 1; i <= m.rank().n(); ++i) cur = sigma(cur, i);
    return cur;
}

SigmaChainTrace sigma_chain_trace(const Multisegment& m) {
    const int n = m.rank().n();
    SigmaChainTrace trace{{}, m};
    Multisegment cur = m;
    for (int k = 1; k <= n; ++k) {
        int a = jump(cur, k);
        for (int t = 0; t < a; ++t) cur = cur.f(k);
        trace.steps.push_back({a, cur});
    }
    for (int i = 1; i <= n; ++i)
        while (auto next = cur.e_star(i)) cur = std::move(*next);
    trace.result = std::move(cur);
    return trace;
}

Multisegment shift_down(const Multisegment& m) {
    Multisegment out(m.rank());
    for (const auto& [seg, mult] : m.entries())
        if (seg.start >= 2) out = out.add({seg.start - 1, seg.end - 1}, mult);
    return out;
}

}  // namespace crystalkit
