#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hvec/sequences.hpp"

namespace hvec {

/// A monomial x_1^{e_1} ... x_r^{e_r}, stored as its exponent vector.
///
/// The built-in ordering is lex with x_1 > x_2 > ... > x_r: exponent
/// vectors compare position by position, a larger exponent on an earlier
/// variable being larger.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents);
    Monomial(std::initializer_list<std::uint32_t> exponents)
        : Monomial(std::vector<std::uint32_t>(exponents)) {}

    static Monomial unit(std::size_t num_variables);

    std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
    std::size_t num_variables() const noexcept { return exponents_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }

    /// x_var * this (0-based var).
    Monomial times(std::size_t var) const;

    /// `x1^2*x3`, 1-based variable indices; the unit renders as `1`.
    std::string to_string() const;

    bool operator==(const Monomial& o) const { return exponents_ == o.exponents_; }
    std::strong_ordering operator<=>(const Monomial& o) const { return exponents_ <=> o.exponents_; }

private:
    std::vector<std::uint32_t> exponents_;
    std::uint64_t degree_ = 0;
};

/// Standard monomials of an artinian monomial quotient R/I, by degree.
///
/// The set is an order ideal: every divisor of a survivor survives, so the
/// non-survivors form the monomial ideal I. Each degree is kept sorted
/// lex-descending (`x1*x2` before `x2^2`). Empty top degrees are dropped.
class SurvivorTable {
public:
    /// Validates that degree 0 is exactly the unit, that every monomial
    /// sits at its own degree in r variables, and the order-ideal closure.
    SurvivorTable(std::size_t num_variables, std::vector<std::vector<Monomial>> per_degree);

    std::size_t num_variables() const noexcept { return num_variables_; }
    const std::vector<std::vector<Monomial>>& per_degree() const noexcept { return per_degree_; }
    std::size_t top_degree() const noexcept { return per_degree_.size() - 1; }

    bool contains(const Monomial& m) const;

    /// One line per degree: `degree 2: x1*x2, x2^2`.
    std::string render() const;

private:
    struct Unchecked {};
    SurvivorTable(Unchecked, std::size_t num_variables, std::vector<std::vector<Monomial>> per_degree);

    friend SurvivorTable lex_segment_realization(const HVector& h);
    friend SurvivorTable complete_intersection_table(std::span<const std::uint32_t> exponents);
    friend SurvivorTable generic_table(std::size_t num_variables, std::size_t top_degree);

    std::size_t num_variables_;
    std::vector<std::vector<Monomial>> per_degree_;
};

/// Lex-segment quotient with Hilbert function h, in r = h_1 variables.
///
/// At each degree d the h_d lex-smallest monomials whose degree-(d-1)
/// divisors all survived are kept. Throws NotAnOSequence(d) when fewer
/// than h_d such monomials exist, which happens exactly when h fails
/// Macaulay's condition first at degree d. Requires h_1 >= 1.
SurvivorTable lex_segment_realization(const HVector& h);

/// Per-degree survivor counts.
HVector hilbert_function(const SurvivorTable& t);

struct SocleVector {
    Sequence entries;

    /// (0, ..., 0, 1).
    bool is_gorenstein() const;
};

/// s_d = number of degree-d survivors m with x * m outside the table for every variable x.
SocleVector socle_vector(const SurvivorTable& t);

/// Survivors of (x_1^{a_1}, ..., x_r^{a_r}): every exponent e_k < a_k.
SurvivorTable complete_intersection_table(std::span<const std::uint32_t> exponents);

/// Every monomial of degree <= top_degree in r variables.
SurvivorTable generic_table(std::size_t num_variables, std::size_t top_degree);

/// Coefficients of prod_k (1 + t + ... + t^{a_k - 1}). Every a_k must be >= 2.
HVector complete_intersection_hvector(std::span<const std::uint32_t> exponents);
HVector complete_intersection_hvector(std::uint32_t a, std::uint32_t b, std::uint32_t c);

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Maximum, over all n-sets S of degree-i monomials in r variables, of the
/// number of degree-(i+1) monomials whose degree-i divisors all lie in S.
///
/// Exhaustive. Throws InfeasibleSearch when C(#monomials, n) exceeds
/// `budget`, PreconditionViolated when fewer than n monomials exist.
Entry max_growth_bruteforce(std::uint64_t n, std::uint64_t i, std::uint64_t r,
                            std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace hvec
