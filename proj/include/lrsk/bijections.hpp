#pragma once

// The level-ell correspondence, built as three independently usable hops:
//
//   ParMatFlat  <->  FlaggedBCM  <->  FlaggedBiword  <->  TableauPair
//
// psi composes them left to right and psi_inverse right to left.

#include "lrsk/blocks.hpp"
#include "lrsk/combinatorics.hpp"
#include "lrsk/rsk.hpp"

#include <map>
#include <string>
#include <vector>

namespace lrsk {

using LetterBiword = Biword<Letter>;
using LetterBiLetter = BiLetter<Letter>;

// An ell-tuple of biwords over the flagged alphabet. Component t (1-based)
// lives at index t-1.
class FlaggedBiword {
public:
    FlaggedBiword() = default;
    explicit FlaggedBiword(std::vector<LetterBiword> components)
        : components_(std::move(components)) {}

    static FlaggedBiword empty(std::size_t level) {
        return FlaggedBiword(std::vector<LetterBiword>(level));
    }

    std::size_t level() const noexcept { return components_.size(); }
    const std::vector<LetterBiword>& components() const noexcept { return components_; }
    const LetterBiword& operator[](std::size_t idx) const { return components_.at(idx); }
    std::size_t size() const noexcept;

    // Multiset union of the top (resp. bottom) rows as a multicomposition.
    MultiComposition top_content() const;
    MultiComposition bottom_content() const;

    auto operator<=>(const FlaggedBiword&) const = default;

private:
    std::vector<LetterBiword> components_;
};

// Flagging: every letter a_b in component t has b >= t, and b <= level.
std::vector<std::string> flagged_biword_violations(const FlaggedBiword& w);

// Adds the content conditions: tops realize nu, bottoms realize mu.
std::vector<std::string> flagged_biword_violations(const FlaggedBiword& w,
                                                   const MultiComposition& nu,
                                                   const MultiComposition& mu);

// P carries the bottom alphabet (content mu), Q the top alphabet (content nu).
struct TableauPair {
    Multitableau insertion;
    Multitableau recording;

    std::size_t level() const noexcept { return insertion.level(); }

    // Throws if the two shapes differ or a component is not a partition shape.
    MultiPartition shape() const;

    friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

// Equal levels, equal component shapes, semistandard, flagging on both sides.
std::vector<std::string> tableau_pair_violations(const TableauPair& x);

FlaggedBCM parmat_to_bcm(const ParMatFlat& x);
ParMatFlat bcm_to_parmat(const FlaggedBCM& x);

FlaggedBiword bcm_to_biwords(const FlaggedBCM& x);
FlaggedBCM biwords_to_bcm(const FlaggedBiword& w);

TableauPair biwords_to_tableaux(const FlaggedBiword& w);
FlaggedBiword tableaux_to_biwords(const TableauPair& x);

TableauPair psi(const ParMatFlat& x);
ParMatFlat psi_inverse(const TableauPair& x);

// Order-preserving relabeling of one biword component to positive integers:
// the letters of each alphabet whose flag is at least t, ranked from 1.
struct ComponentRelabeling {
    std::map<Letter, Part> top;
    std::map<Letter, Part> bottom;
};

ComponentRelabeling component_relabeling(const MultiComposition& nu, const MultiComposition& mu,
                                         std::size_t t);

struct RelabeledRsk {
    Biword<Part> word;
    RskPair<Part> integer_tableaux;
    RskPair<Letter> tableaux;
};

// Runs classical RSK on the integer relabeling of component t and maps the
// result back. Agrees with rsk(w[t-1]) applied to the letters directly.
RelabeledRsk relabeled_component_rsk(const FlaggedBiword& w, const MultiComposition& nu,
                                     const MultiComposition& mu, std::size_t t);

// Embeddings into a higher level with empty trailing components.
MultiComposition embed_level(const MultiComposition& mu, std::size_t level);
ParMatFlat embed_level(const ParMatFlat& x, std::size_t level);
TableauPair embed_level(const TableauPair& x, std::size_t level);

} // namespace lrsk
