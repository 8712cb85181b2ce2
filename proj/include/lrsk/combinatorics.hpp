#pragma once

#include "lrsk/error.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lrsk {

using Part = std::uint32_t;

// A finite sequence of nonnegative integers, stored without trailing zeros.
// Leading and internal zeros are meaningful and kept.
class Composition {
public:
    Composition() = default;

    // Throws NonCanonicalComposition if the last part is zero.
    explicit Composition(std::vector<Part> parts);

    // Strips trailing zeros instead of rejecting them.
    static Composition canonical(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part weight() const noexcept;

    // 1-based part lookup; parts past the end read as 0.
    Part part(std::size_t t) const noexcept {
        return t >= 1 && t <= parts_.size() ? parts_[t - 1] : 0;
    }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<Part> parts_;
};

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    // Throws InvalidPartition on zero parts or an increase.
    explicit Partition(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part weight() const noexcept;
    Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    Part part(std::size_t t) const noexcept {
        return t >= 1 && t <= parts_.size() ? parts_[t - 1] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Part> parts_;
};

// The letter a_b of the flagged alphabet. Ordered flag-major:
// 1_1 < 2_1 < 3_1 < ... < 1_2 < 2_2 < ... < 1_3 < ...
struct Letter {
    Part value = 1;
    Part flag = 1;

    friend constexpr bool operator==(const Letter&, const Letter&) = default;
    friend constexpr std::strong_ordering operator<=>(const Letter& x, const Letter& y) noexcept {
        if (auto c = x.flag <=> y.flag; c != 0)
            return c;
        return x.value <=> y.value;
    }
};

constexpr std::strong_ordering letter_compare(const Letter& x, const Letter& y) noexcept {
    return x <=> y;
}

// Multiset over an ordered letter type, as letter -> multiplicity with no zero counts.
template <class L>
using Multiset = std::map<L, std::size_t>;

using LetterMultiset = Multiset<Letter>;

// An ell-tuple of compositions. Component b (1-based flag) lives at index b-1.
class MultiComposition {
public:
    MultiComposition() = default;
    explicit MultiComposition(std::vector<Composition> components)
        : components_(std::move(components)) {}

    // All-empty multicomposition of the given level.
    static MultiComposition empty(std::size_t level) {
        return MultiComposition(std::vector<Composition>(level));
    }

    std::size_t level() const noexcept { return components_.size(); }
    const std::vector<Composition>& components() const noexcept { return components_; }
    const Composition& operator[](std::size_t idx) const { return components_.at(idx); }
    Part weight() const noexcept;

    auto operator<=>(const MultiComposition&) const = default;

private:
    std::vector<Composition> components_;
};

class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components)
        : components_(std::move(components)) {}

    static MultiPartition empty(std::size_t level) {
        return MultiPartition(std::vector<Partition>(level));
    }

    std::size_t level() const noexcept { return components_.size(); }
    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t idx) const { return components_.at(idx); }
    Part weight() const noexcept;

    auto operator<=>(const MultiPartition&) const = default;

private:
    std::vector<Partition> components_;
};

// Row-major filling of a Ferrers diagram. The row lengths define the shape and
// must form a partition; the ordering of entries is not checked here.
template <class L>
class BasicTableau {
public:
    using letter_type = L;
    using row_type = std::vector<L>;

    BasicTableau() = default;

    explicit BasicTableau(std::vector<row_type> rows) : rows_(std::move(rows)) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                throw MalformedTableau("tableau row " + std::to_string(r + 1) + " is empty");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw MalformedTableau("tableau row " + std::to_string(r + 1) +
                                       " is longer than the row above it");
        }
    }

    const std::vector<row_type>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& row : rows_)
            n += row.size();
        return n;
    }

    Partition shape() const {
        std::vector<Part> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_)
            parts.push_back(static_cast<Part>(row.size()));
        return Partition(std::move(parts));
    }

    // 0-based cell access.
    const L& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

    bool is_semistandard() const noexcept {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c + 1 < rows_[r].size() && rows_[r][c + 1] < rows_[r][c])
                    return false;
                if (r + 1 < rows_.size() && c < rows_[r + 1].size() &&
                    !(rows_[r][c] < rows_[r + 1][c]))
                    return false;
            }
        }
        return true;
    }

    Multiset<L> content() const {
        Multiset<L> out;
        for (const auto& row : rows_)
            for (const auto& x : row)
                ++out[x];
        return out;
    }

    auto operator<=>(const BasicTableau&) const = default;

private:
    std::vector<row_type> rows_;
};

using Tableau = BasicTableau<Letter>;

// Checks rows against an explicitly given shape, then the semistandard
// inequalities. Throws MalformedTableau when the row lengths do not match.
template <class L>
bool tableau_is_semistandard(const Partition& shape, const std::vector<std::vector<L>>& rows) {
    if (rows.size() != shape.length())
        throw MalformedTableau("tableau has " + std::to_string(rows.size()) +
                               " rows but its shape has " + std::to_string(shape.length()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].size() != shape.parts()[r])
            throw MalformedTableau("tableau row " + std::to_string(r + 1) + " has " +
                                   std::to_string(rows[r].size()) + " cells, shape demands " +
                                   std::to_string(shape.parts()[r]));
    return BasicTableau<L>(rows).is_semistandard();
}

template <class L>
bool tableau_is_semistandard(const BasicTableau<L>& t) noexcept {
    return t.is_semistandard();
}

// An ell-tuple of tableaux over the flagged alphabet.
class Multitableau {
public:
    Multitableau() = default;
    explicit Multitableau(std::vector<Tableau> components)
        : components_(std::move(components)) {}

    static Multitableau empty(std::size_t level) {
        return Multitableau(std::vector<Tableau>(level));
    }

    std::size_t level() const noexcept { return components_.size(); }
    const std::vector<Tableau>& components() const noexcept { return components_; }
    const Tableau& operator[](std::size_t idx) const { return components_.at(idx); }
    std::size_t size() const noexcept;

    MultiPartition shape() const;

    auto operator<=>(const Multitableau&) const = default;

private:
    std::vector<Tableau> components_;
};

// The mu-alphabet: a_b occurs with multiplicity mu^(b)_a.
LetterMultiset mu_alphabet(const MultiComposition& mu);

// The sorted list of letters of mu_alphabet, repeated by multiplicity.
std::vector<Letter> mu_alphabet_letters(const MultiComposition& mu);

// Inverse of mu_alphabet at a fixed level. Throws ValidationError when a
// letter's flag exceeds the level.
MultiComposition multicomposition_from_multiset(const LetterMultiset& letters, std::size_t level);

bool multitableau_check_flagging(const Multitableau& t) noexcept;

// Every component semistandard and the flagging condition holds.
bool multitableau_is_semistandard(const Multitableau& t) noexcept;

MultiComposition multitableau_content(const Multitableau& t);

// Partition with parts at most `bound` -> composition of `bound` with the
// length one more than the partition's (empty when bound is 0).
// Throws BoundViolation when the largest part exceeds `bound`.
Composition partition_to_bounded_composition(const Partition& eta, Part bound);

struct BoundedPartition {
    Part bound = 0;
    Partition eta;

    auto operator<=>(const BoundedPartition&) const = default;
};

// Inverse of partition_to_bounded_composition, via tail sums.
BoundedPartition bounded_composition_to_partition(const Composition& c);

// Throws NonCanonicalComposition when `parts` carries a trailing zero.
BoundedPartition bounded_composition_to_partition(const std::vector<Part>& parts);

std::string to_string(const Letter& x);
std::string to_string(const Composition& c);
std::string to_string(const Partition& p);
std::string to_string(const MultiComposition& mu);
std::string to_string(const MultiPartition& lambda);

std::ostream& operator<<(std::ostream& os, const Letter& x);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const MultiComposition& mu);
std::ostream& operator<<(std::ostream& os, const MultiPartition& lambda);

} // namespace lrsk
