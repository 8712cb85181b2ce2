#pragma once

// Classical Robinson-Schensted-Knuth over an arbitrary totally ordered letter
// type. Everything here is a template so the same code runs on plain integers
// and on flagged letters.

#include "lrsk/combinatorics.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace lrsk {

template <class L>
concept OrderedLetter = std::totally_ordered<L> && std::copyable<L>;

template <OrderedLetter L>
struct BiLetter {
    L top;
    L bottom;

    friend bool operator==(const BiLetter&, const BiLetter&) = default;
    friend auto operator<=>(const BiLetter&, const BiLetter&) = default;
};

// Two-row array with lexicographically increasing columns.
template <OrderedLetter L>
class Biword {
public:
    using letter_type = L;
    using column_type = BiLetter<L>;

    Biword() = default;

    // Throws MalformedBiword if the columns are not lexicographically sorted.
    explicit Biword(std::vector<column_type> columns) : columns_(std::move(columns)) {
        if (!std::is_sorted(columns_.begin(), columns_.end()))
            throw MalformedBiword("biword columns are not lexicographically increasing");
    }

    static Biword from_unsorted(std::vector<column_type> columns) {
        std::sort(columns.begin(), columns.end());
        return Biword(std::move(columns));
    }

    const std::vector<column_type>& columns() const noexcept { return columns_; }
    std::size_t size() const noexcept { return columns_.size(); }
    bool empty() const noexcept { return columns_.empty(); }

    std::vector<L> top() const {
        std::vector<L> out;
        out.reserve(columns_.size());
        for (const auto& c : columns_)
            out.push_back(c.top);
        return out;
    }

    std::vector<L> bottom() const {
        std::vector<L> out;
        out.reserve(columns_.size());
        for (const auto& c : columns_)
            out.push_back(c.bottom);
        return out;
    }

    Multiset<L> top_content() const {
        Multiset<L> out;
        for (const auto& c : columns_)
            ++out[c.top];
        return out;
    }

    Multiset<L> bottom_content() const {
        Multiset<L> out;
        for (const auto& c : columns_)
            ++out[c.bottom];
        return out;
    }

    auto operator<=>(const Biword&) const = default;

private:
    std::vector<column_type> columns_;
};

// Finitely supported matrix of nonnegative integers indexed by an ordered set.
// Zero entries are never stored.
template <OrderedLetter I>
class NMatrix {
public:
    using index_type = I;
    using key_type = std::pair<I, I>;

    std::size_t get(const I& i, const I& j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void set(const I& i, const I& j, std::size_t value) {
        if (value == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = value;
    }

    void add(const I& i, const I& j, std::size_t value) {
        if (value != 0)
            entries_[{i, j}] += value;
    }

    const std::map<key_type, std::size_t>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    std::size_t total() const noexcept {
        std::size_t n = 0;
        for (const auto& [key, v] : entries_)
            n += v;
        return n;
    }

    Multiset<I> row_sums() const {
        Multiset<I> out;
        for (const auto& [key, v] : entries_)
            out[key.first] += v;
        return out;
    }

    Multiset<I> col_sums() const {
        Multiset<I> out;
        for (const auto& [key, v] : entries_)
            out[key.second] += v;
        return out;
    }

    NMatrix transpose() const {
        NMatrix out;
        for (const auto& [key, v] : entries_)
            out.set(key.second, key.first, v);
        return out;
    }

    friend bool operator==(const NMatrix&, const NMatrix&) = default;

private:
    std::map<key_type, std::size_t> entries_;
};

// Biletter (i over j) repeated a_ij times; map order is already lexicographic.
template <OrderedLetter I>
Biword<I> biword_from_matrix(const NMatrix<I>& a) {
    std::vector<BiLetter<I>> columns;
    columns.reserve(a.total());
    for (const auto& [key, v] : a.entries())
        columns.insert(columns.end(), v, BiLetter<I>{key.first, key.second});
    return Biword<I>(std::move(columns));
}

template <OrderedLetter I>
NMatrix<I> matrix_from_biword(const Biword<I>& w) {
    NMatrix<I> out;
    for (const auto& c : w.columns())
        out.add(c.top, c.bottom, 1);
    return out;
}

// 1-based cell coordinates.
struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

namespace detail {

// Schensted row insertion on raw rows; returns the new cell (1-based).
template <class L>
Cell bump_into(std::vector<std::vector<L>>& rows, L x) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(std::move(x));
            return {r + 1, row.size()};
        }
        std::swap(*it, x);
    }
    rows.push_back({std::move(x)});
    return {rows.size(), 1};
}

// Reverse of bump_into starting from the corner at the end of row `r` (0-based).
template <class L>
L unbump_from(std::vector<std::vector<L>>& rows, std::size_t r) {
    L y = std::move(rows[r].back());
    rows[r].pop_back();
    if (rows[r].empty())
        rows.pop_back();
    while (r-- > 0) {
        auto& row = rows[r];
        // rightmost entry strictly smaller than y
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(*it, y);
    }
    return y;
}

} // namespace detail

template <class L>
struct InsertResult {
    BasicTableau<L> tableau;
    Cell cell;
};

// Row-inserts x: it replaces the leftmost entry strictly greater than x in the
// first row, and the displaced letter moves down to the next row.
template <OrderedLetter L>
InsertResult<L> row_insert(const BasicTableau<L>& t, L x) {
    auto rows = t.rows();
    Cell cell = detail::bump_into(rows, std::move(x));
    return {BasicTableau<L>(std::move(rows)), cell};
}

template <class L>
struct RskPair {
    BasicTableau<L> insertion;  // P
    BasicTableau<L> recording;  // Q

    friend bool operator==(const RskPair&, const RskPair&) = default;
};

template <OrderedLetter L>
RskPair<L> rsk(const Biword<L>& w) {
    std::vector<std::vector<L>> p_rows;
    std::vector<std::vector<L>> q_rows;
    for (const auto& col : w.columns()) {
        Cell cell = detail::bump_into(p_rows, col.bottom);
        if (cell.row > q_rows.size())
            q_rows.emplace_back();
        q_rows[cell.row - 1].push_back(col.top);
    }
    return {BasicTableau<L>(std::move(p_rows)), BasicTableau<L>(std::move(q_rows))};
}

// Recovers the biword: repeatedly take the largest recording entry (rightmost
// among ties), delete its cell, and reverse-bump out of the insertion tableau.
template <OrderedLetter L>
Biword<L> rsk_inverse(const BasicTableau<L>& p, const BasicTableau<L>& q) {
    if (p.rows().size() != q.rows().size())
        throw ValidationError("insertion and recording tableaux have different shapes");
    for (std::size_t r = 0; r < p.rows().size(); ++r)
        if (p.rows()[r].size() != q.rows()[r].size())
            throw ValidationError("insertion and recording tableaux have different shapes");
    if (!p.is_semistandard())
        throw MalformedTableau("insertion tableau is not semistandard");
    if (!q.is_semistandard())
        throw MalformedTableau("recording tableau is not semistandard");

    auto p_rows = p.rows();
    auto q_rows = q.rows();
    std::vector<BiLetter<L>> columns;
    columns.reserve(p.size());
    while (!q_rows.empty()) {
        // The maximal entries form a horizontal strip; its rightmost cell is
        // the last cell of the highest row holding a maximum.
        std::size_t best = 0;
        for (std::size_t r = 1; r < q_rows.size(); ++r)
            if (q_rows[best].back() < q_rows[r].back())
                best = r;
        L top = std::move(q_rows[best].back());
        q_rows[best].pop_back();
        if (q_rows[best].empty())
            q_rows.erase(q_rows.begin() + static_cast<std::ptrdiff_t>(best));
        L bottom = detail::unbump_from(p_rows, best);
        columns.push_back({std::move(top), std::move(bottom)});
    }
    std::reverse(columns.begin(), columns.end());
    return Biword<L>(std::move(columns));
}

// Ranks the distinct letters: the k-th smallest maps to k.
template <OrderedLetter L>
std::map<L, Part> rank_letters(const std::set<L>& letters) {
    std::map<L, Part> out;
    Part k = 0;
    for (const auto& x : letters)
        out.emplace(x, ++k);
    return out;
}

template <OrderedLetter M, OrderedLetter L>
Biword<M> relabel(const Biword<L>& w, const std::map<L, M>& top_map,
                  const std::map<L, M>& bottom_map) {
    std::vector<BiLetter<M>> columns;
    columns.reserve(w.size());
    for (const auto& c : w.columns())
        columns.push_back({top_map.at(c.top), bottom_map.at(c.bottom)});
    return Biword<M>::from_unsorted(std::move(columns));
}

template <class M, class L>
BasicTableau<M> relabel(const BasicTableau<L>& t, const std::map<L, M>& map) {
    std::vector<std::vector<M>> rows;
    rows.reserve(t.row_count());
    for (const auto& row : t.rows()) {
        auto& out = rows.emplace_back();
        out.reserve(row.size());
        for (const auto& x : row)
            out.push_back(map.at(x));
    }
    return BasicTableau<M>(std::move(rows));
}

template <class K, class V>
std::map<V, K> invert_map(const std::map<K, V>& m) {
    std::map<V, K> out;
    for (const auto& [k, v] : m)
        out.emplace(v, k);
    return out;
}

} // namespace lrsk
