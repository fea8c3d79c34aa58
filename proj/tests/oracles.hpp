#pragma once

// Independent brute-force oracles. Nothing here calls the code path it
// is used to check.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hvec/binomial.hpp"
#include "hvec/enumeration.hpp"
#include "hvec/sequences.hpp"

namespace hvec::oracle {

/// Pascal's triangle rows 0..max_n.
std::vector<std::vector<Integer>> pascal_triangle(std::size_t max_n);

/// Every list (top_i, i), (top_{i-1}, i-1), ..., (top_j, j) with strictly
/// decreasing tops, top_j >= j >= 1, whose binomials sum to n.
std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> all_binomial_expansions(std::uint64_t n,
                                                                                         std::uint64_t i);

/// Odometer over every vector (1, r, h_2, ..., h_e) with 1 <= h_d <= cap,
/// filtered by the definitional predicates. Lexicographic order.
void naive_enumerate(const EnumerationSpec& spec, const std::function<void(const Sequence&)>& emit);

/// Definition-level filter used by naive_enumerate.
bool naive_passes(Filter f, const Sequence& h);

}  // namespace hvec::oracle
