#pragma once

#include "lrsk/combinatorics.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lrsk {

// Position of a scalar entry inside an ell x ell block matrix: block (p,q),
// entry (i,j) of that block. All four coordinates are 1-based.
struct EntryKey {
    std::size_t p = 1;
    std::size_t q = 1;
    std::size_t i = 1;
    std::size_t j = 1;

    friend bool operator==(const EntryKey&, const EntryKey&) = default;
    friend auto operator<=>(const EntryKey&, const EntryKey&) = default;
};

std::string to_string(const EntryKey& k);

// Sparse ell x ell block matrix of nonnegative integers; zeros are not stored.
class BlockNMatrix {
public:
    BlockNMatrix() = default;
    explicit BlockNMatrix(std::size_t level) : level_(level) {}

    std::size_t level() const noexcept { return level_; }
    const std::map<EntryKey, Part>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    Part get(const EntryKey& k) const;

    // Throws ValidationError if k lies outside the ell x ell block grid.
    void set(const EntryKey& k, Part value);

    Part total() const noexcept;

    friend bool operator==(const BlockNMatrix&, const BlockNMatrix&) = default;
    friend auto operator<=>(const BlockNMatrix&, const BlockNMatrix&) = default;

private:
    std::size_t level_ = 0;
    std::map<EntryKey, Part> entries_;
};

// row(A)^(s)_t = sum over q, j of a^(sq)_tj, canonicalized.
MultiComposition block_row_sum(const BlockNMatrix& a);
// col(A)^(s)_t = sum over p, i of a^(ps)_it, canonicalized.
MultiComposition block_col_sum(const BlockNMatrix& a);

// A block matrix whose entries carry partition decorations. The decoration
// at an entry defaults to the empty partition and only nonempty ones are stored.
class ParMatFlat {
public:
    ParMatFlat() = default;
    explicit ParMatFlat(std::size_t level) : matrix_(level) {}

    std::size_t level() const noexcept { return matrix_.level(); }
    const BlockNMatrix& matrix() const noexcept { return matrix_; }
    const std::map<EntryKey, Partition>& decorations() const noexcept { return decorations_; }

    Part value(const EntryKey& k) const { return matrix_.get(k); }
    Partition decoration(const EntryKey& k) const;

    // Stores the entry as given; no bound or flag checks (see validate_parmat).
    void set(const EntryKey& k, Part value, Partition eta = {});

    bool empty() const noexcept { return matrix_.empty() && decorations_.empty(); }

    MultiComposition row_sum() const { return block_row_sum(matrix_); }
    MultiComposition col_sum() const { return block_col_sum(matrix_); }

    friend bool operator==(const ParMatFlat&, const ParMatFlat&) = default;
    friend auto operator<=>(const ParMatFlat&, const ParMatFlat&) = default;

private:
    BlockNMatrix matrix_;
    std::map<EntryKey, Partition> decorations_;
};

// Block matrix of compositions; empty compositions are not stored.
class FlaggedBCM {
public:
    FlaggedBCM() = default;
    explicit FlaggedBCM(std::size_t level) : level_(level) {}

    std::size_t level() const noexcept { return level_; }
    const std::map<EntryKey, Composition>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    Composition get(const EntryKey& k) const;
    void set(const EntryKey& k, Composition c);

    // The block N-matrix of weights |b^(pq)_ij|.
    BlockNMatrix weights() const;

    MultiComposition row_sum() const { return block_row_sum(weights()); }
    MultiComposition col_sum() const { return block_col_sum(weights()); }

    friend bool operator==(const FlaggedBCM&, const FlaggedBCM&) = default;
    friend auto operator<=>(const FlaggedBCM&, const FlaggedBCM&) = default;

private:
    std::size_t level_ = 0;
    std::map<EntryKey, Composition> entries_;
};

struct Violation {
    std::optional<EntryKey> where;
    std::string message;
};

std::string to_string(const Violation& v);

// Checks the bound (largest part <= entry) and flag (length <= min(p,q)-1)
// conditions at every decorated entry. Empty result means valid.
std::vector<Violation> validate_parmat(const ParMatFlat& x);

// As above, plus row(A) = nu and col(A) = mu.
std::vector<Violation> validate_parmat(const ParMatFlat& x, const MultiComposition& nu,
                                       const MultiComposition& mu);

// Checks length(b^(pq)_ij) <= min(p,q) everywhere.
std::vector<Violation> validate_bcm(const FlaggedBCM& x);

std::vector<Violation> validate_bcm(const FlaggedBCM& x, const MultiComposition& nu,
                                    const MultiComposition& mu);

// Throws ValidationError listing every violation, if any.
void require_valid(const std::vector<Violation>& violations, const std::string& what);

} // namespace lrsk
