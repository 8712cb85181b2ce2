#pragma once

// Exhaustive bijectivity sweep: for every pair of multicompositions within a
// budget, enumerate each family independently and check psi against them.

#include "lrsk/enumerate.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lrsk {

struct CheckTally {
    std::size_t run = 0;
    std::size_t failed = 0;
};

struct SweepReport {
    EnumerationBudget budget;
    std::size_t cells = 0;           // (nu, mu) pairs examined
    std::size_t parmat_elements = 0; // ParMat elements pushed through psi
    std::map<std::string, CheckTally> checks;
    std::vector<std::string> failures; // first kMaxMessages failure messages

    static constexpr std::size_t kMaxMessages = 25;

    bool ok() const noexcept;
    std::size_t failure_count() const noexcept;
    void merge(const SweepReport& other);
};

// Check names used in SweepReport::checks.
namespace checks {
inline constexpr const char* kChainCardinality = "chain_cardinality";
inline constexpr const char* kCardinalityIdentity = "cardinality_identity";
inline constexpr const char* kRoundTrip = "round_trip";
inline constexpr const char* kInjectivity = "injectivity";
inline constexpr const char* kImageCoverage = "image_coverage";
inline constexpr const char* kBcmImage = "bcm_image";
inline constexpr const char* kBiwordImage = "biword_image";
inline constexpr const char* kFlagging = "flagging_and_content";
} // namespace checks

// The multicompositions a sweep ranges over: every one whose components have
// at most `max_length` parts, together with every one whose components have
// no zero parts (those are finite in number for any length).
std::vector<MultiComposition> sweep_domain(Part n, std::size_t level, std::size_t max_length);

// All (nu, mu) cells over sweep_domain at exactly this level and weight.
SweepReport sweep_level(std::size_t level, Part n, std::size_t max_length,
                        unsigned threads = 0);

// Every level 1..max_level and weight 0..max_n.
SweepReport run_sweep(const EnumerationBudget& budget, unsigned threads = 0);

} // namespace lrsk
