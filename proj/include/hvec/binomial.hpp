#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hvec {

/// Exact integer used for every binomial quantity.
using Integer = boost::multiprecision::cpp_int;

/// Entry type of h-vectors and other integer sequences.
using Entry = std::int64_t;

/// C(n, k), exact. Zero when k > n.
Integer binom(const Integer& n, std::uint64_t k);

struct BinomialTerm {
    Integer top;
    std::uint64_t bottom;

    bool operator==(const BinomialTerm&) const = default;
};

/// The i-binomial expansion
///
///     n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j),   n_i > ... > n_j >= j >= 1.
///
/// Terms are stored from the top bottom index `index` downwards.
class BinomialExpansion {
public:
    const std::vector<BinomialTerm>& terms() const noexcept { return terms_; }
    const Integer& value() const noexcept { return value_; }
    std::uint64_t index() const noexcept { return index_; }

    /// Sum of C(top, bottom) over the terms.
    Integer evaluate() const;

    /// Sum of C(top + 1, bottom + 1) over the terms.
    Integer raised() const;

    /// True iff the terms satisfy every invariant of an i-binomial expansion of value().
    bool well_formed() const;

    /// `C(3,2) + C(1,1)`
    std::string to_string() const;

private:
    friend BinomialExpansion expand(const Integer& n, std::uint64_t i);

    std::vector<BinomialTerm> terms_;
    Integer value_;
    std::uint64_t index_ = 0;
};

/// Greedy i-binomial expansion. Requires n >= 1 and i >= 1.
BinomialExpansion expand(const Integer& n, std::uint64_t i);

/// Macaulay's growth bound n^<i>; zero for n = 0. Requires i >= 1.
Integer macaulay_bound(const Integer& n, std::uint64_t i);

/// n^<i> for machine-sized n, saturated at INT64_MAX. Saturation is exact
/// for every comparison against an Entry, which is all the sequence
/// predicates need.
Entry macaulay_bound_saturated(Entry n, std::uint64_t i);

}  // namespace hvec
