#pragma once

// Brute-force generators for every indexed family. These are oracles for the
// bijection code and deliberately share none of its conversion logic.
//
// All generators are deterministic. Compositions come out by length, then
// lexicographically; partitions in their generation order; multi-objects are ordered by
// the weight split across components first, then component-wise
// lexicographically; matrix-like families follow row-major backtracking with
// smaller entries first.

#include "lrsk/bijections.hpp"
#include "lrsk/blocks.hpp"
#include "lrsk/combinatorics.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lrsk {

// Bounds for exhaustive sweeps. Compositions with internal zeros make the
// family of multicompositions of n infinite, so component length is capped.
struct EnumerationBudget {
    Part max_n = 3;
    std::size_t max_level = 2;
    std::size_t max_length = 3;

    static constexpr Part kMaxN = 10;
    static constexpr std::size_t kMaxLevel = 5;
    static constexpr std::size_t kMaxLength = 10;

    // Throws ValidationError unless every bound is positive and within the
    // guards above.
    void validate() const;

    // Parses "n=4,level=3,length=4"; omitted keys keep their defaults.
    static EnumerationBudget parse(const std::string& spec);

    std::string to_string() const;
};

template <class T>
using Visitor = std::function<void(const T&)>;

// Canonical compositions (no trailing zero) of `weight` with at most
// `max_length` parts.
void for_each_composition(Part weight, std::size_t max_length, const Visitor<Composition>& fn);
std::vector<Composition> enum_compositions(Part weight, std::size_t max_length);

// Partitions with at most `max_length` parts, each at most `max_part`, of any weight.
std::vector<Partition> partitions_in_box(std::size_t max_length, Part max_part);

std::vector<Partition> enum_partitions(Part weight);

std::vector<MultiComposition> enum_multicompositions(Part n, std::size_t level,
                                                     std::size_t max_length);
std::vector<MultiPartition> enum_multipartitions(Part n, std::size_t level);

// Throws ValidationError if nu and mu differ in level or weight.
void for_each_parmat(const MultiComposition& nu, const MultiComposition& mu,
                     const Visitor<ParMatFlat>& fn);
std::vector<ParMatFlat> enum_parmat(const MultiComposition& nu, const MultiComposition& mu);

// Incompatible parameters yield nothing.
void for_each_bcm(const MultiComposition& nu, const MultiComposition& mu,
                  const Visitor<FlaggedBCM>& fn);
std::vector<FlaggedBCM> enum_bcm(const MultiComposition& nu, const MultiComposition& mu);

void for_each_flagged_biword(const MultiComposition& nu, const MultiComposition& mu,
                             const Visitor<FlaggedBiword>& fn);
std::vector<FlaggedBiword> enum_flagged_biwords(const MultiComposition& nu,
                                                const MultiComposition& mu);

// Semistandard flagged multitableaux of shape lambda and content mu.
void for_each_sst(const MultiPartition& lambda, const MultiComposition& mu,
                  const Visitor<Multitableau>& fn);
std::vector<Multitableau> enum_sst(const MultiPartition& lambda, const MultiComposition& mu);

} // namespace lrsk
