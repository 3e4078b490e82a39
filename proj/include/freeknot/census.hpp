#ifndef FREEKNOT_CENSUS_HPP
#define FREEKNOT_CENSUS_HPP

#include "freeknot/diagram.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace freeknot {

inline constexpr std::size_t kDefaultCensusLimit = 8;

struct CensusOptions {
    // Largest chord count accepted; raise it explicitly to go past 8.
    std::size_t max_chords = kDefaultCensusLimit;
};

// (2n-1)!!, the number of perfect matchings on 2n points of a circle.
std::uint64_t pairing_count(std::size_t n);

// Calls `visit` with every pairing of 2n circle points as a single word
// labeled 1..n by first appearance. Throws BudgetExceeded past the limit.
void for_each_pairing(std::size_t n, const std::function<void(const Word&)>& visit,
                      const CensusOptions& options = {});

// All canonically distinct one-component diagrams with exactly n chords,
// sorted by code. census(0) is {G0}.
std::vector<CanonicalCode> census(std::size_t n, const CensusOptions& options = {});

// Same set, as canonical diagrams in the order of census().
std::vector<FramedDiagram> census_diagrams(std::size_t n, const CensusOptions& options = {});

}  // namespace freeknot

#endif  // FREEKNOT_CENSUS_HPP
