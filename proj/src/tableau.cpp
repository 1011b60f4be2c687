#include "crystalkit/tableau.hpp"

#include <algorithm>
#include <functional>

namespace crystalkit {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

void Partition::validate() const {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw ValidationError("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw ValidationError("partition parts must weakly decrease");
    }
}

int Partition::boxes() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

std::vector<int> partition_weight(const Partition& shape, Rank rank) {
    if (shape.rows() > rank.n())
        throw ValidationError("shape has more than rank-many rows");
    std::vector<int> coeffs(static_cast<std::size_t>(rank.n()), 0);
    const auto& parts = shape.parts();
    for (int i = 0; i < rank.n(); ++i) {
        int cur = i < shape.rows() ? parts[static_cast<std::size_t>(i)] : 0;
        int next = i + 1 < shape.rows() ? parts[static_cast<std::size_t>(i + 1)] : 0;
        coeffs[static_cast<std::size_t>(i)] = cur - next;
    }
    return coeffs;
}

Tableau::Tableau(Rank rank, std::vector<std::vector<int>> rows)
    : rank_(rank), rows_(std::move(rows)) {
    validate();
}

void Tableau::validate() const {
    const int n = rank_.n();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw ValidationError("empty tableau row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw ValidationError("row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 0 || v > n)
                throw ValidationError("entry " + std::to_string(v) + " outside 0.." +
                                      std::to_string(n));
            if (c > 0 && row[c - 1] > v)
                throw ValidationError("rows must weakly increase");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw ValidationError("columns must strictly increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::entry(int row, int col) const {
    if (row < 1 || row > static_cast<int>(rows_.size()))
        throw UsageError("row out of range");
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    if (col < 1 || col > static_cast<int>(r.size())) throw UsageError("column out of range");
    return r[static_cast<std::size_t>(col - 1)];
}

std::vector<int> Tableau::value_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(rank_.n()) + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) ++counts[static_cast<std::size_t>(v)];
    return counts;
}

ColumnBracketString column_bracket_string(const Tableau& b, int i) {
    b.rank().check_index(i);
    ColumnBracketString s{i, {}};
    const auto& rows = b.rows();
    int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 1; c <= width; ++c) {
        bool has_prev = false, has_cur = false;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) < c) break;
            int v = row[static_cast<std::size_t>(c - 1)];
            if (v == i - 1) has_prev = true;
            if (v == i) has_cur = true;
        }
        if (has_prev && !has_cur)
            s.entries.push_back({c, BracketSymbol::close, false});
        else if (has_cur && !has_prev)
            s.entries.push_back({c, BracketSymbol::open, false});
    }
    cancel_brackets(s.entries);
    return s;
}

namespace {

// A column holds at most one copy of each value, so the row is unique.
Tableau with_column_value_changed(const Tableau& b, int column, int from, int to) {
    auto rows = b.rows();
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) < column) break;
        int& v = row[static_cast<std::size_t>(column - 1)];
        if (v == from) {
            v = to;
            return Tableau(b.rank(), std::move(rows));
        }
    }
    throw IntegrityError("bracket token points at a column without its value");
}

}  // namespace

std::optional<Tableau> Tableau::f(int i) const {
    ColumnBracketString s = column_bracket_string(*this, i);
    auto k = s.rightmost_close();
    if (!k) return std::nullopt;
    return with_column_value_changed(*this, s.entries[*k].column, i - 1, i);
}

std::optional<Tableau> Tableau::e(int i) const {
    ColumnBracketString s = column_bracket_string(*this, i);
    auto k = s.leftmost_open();
    if (!k) return std::nullopt;
    return with_column_value_changed(*this, s.entries[*k].column, i, i - 1);
}

int Tableau::eps(int i) const { return column_bracket_string(*this, i).uncanceled_open(); }

int Tableau::phi(int i) const { return column_bracket_string(*this, i).uncanceled_close(); }

int Tableau::pairing_value(int i) const {
    rank_.check_index(i);
    auto counts = value_counts();
    return counts[static_cast<std::size_t>(i - 1)] - counts[static_cast<std::size_t>(i)];
}

Multisegment Tableau::to_multisegment() const {
    Multisegment out(rank_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int row = static_cast<int>(r) + 1;
        for (int v : rows_[r])
            if (v >= row) out = out.add({row, v});
    }
    return out;
}

Tableau highest_weight_tableau(const Partition& shape, Rank rank) {
    if (shape.rows() > rank.n())
        throw ValidationError("shape has more than rank-many rows");
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r)
        rows.emplace_back(static_cast<std::size_t>(shape.parts()[static_cast<std::size_t>(r)]), r);
    return Tableau(rank, std::move(rows));
}

std::vector<Tableau> enumerate_tableaux(const Partition& shape, Rank rank) {
    if (shape.rows() > rank.n())
        throw ValidationError("shape has more than rank-many rows");
    const int n = rank.n();
    const auto& parts = shape.parts();
    std::vector<std::vector<int>> rows;
    for (int p : parts) rows.emplace_back(static_cast<std::size_t>(p), 0);

    std::vector<Tableau> out;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            out.emplace_back(rank, rows);
            return;
        }
        if (c == rows[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 0;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[r][c] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace crystalkit
