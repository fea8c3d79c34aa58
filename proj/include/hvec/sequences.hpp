#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvec/binomial.hpp"

namespace hvec {

/// A raw integer sequence indexed by degree. Entries may be negative
/// (first differences, residuals) or zero (trailing tails).
using Sequence = std::vector<Entry>;

/// h-vector (h_0, ..., h_e): h_0 = 1, every entry positive, h_e the last.
///
/// Trailing zeros are stripped on construction. Empty or all-zero input,
/// negative entries, h_0 != 1 and internal zeros are rejected with
/// InvalidHVector.
class HVector {
public:
    explicit HVector(Sequence entries);
    HVector(std::initializer_list<Entry> entries) : HVector(Sequence(entries)) {}

    std::span<const Entry> entries() const noexcept { return entries_; }
    const Sequence& values() const noexcept { return entries_; }

    /// e, the last degree with a non-zero entry.
    std::size_t socle_degree() const noexcept { return entries_.size() - 1; }

    /// h_1, or 0 for h = (1).
    Entry codimension() const noexcept { return entries_.size() > 1 ? entries_[1] : 0; }

    /// h_d, zero past the socle degree.
    Entry operator[](std::size_t d) const noexcept { return d < entries_.size() ? entries_[d] : 0; }

    HVector reversed() const;

    /// `1,3,4,3,1`
    std::string to_string() const;

    bool operator==(const HVector&) const = default;
    auto operator<=>(const HVector&) const = default;

private:
    Sequence entries_;
};

/// `1,3,4,3,1` for any sequence.
std::string join(std::span<const Entry> v);

/// Outcome of a predicate; `first_violation` is the degree of the first
/// offending entry when the predicate fails.
struct Check {
    bool holds = true;
    std::optional<std::size_t> first_violation;

    explicit operator bool() const noexcept { return holds; }

    static Check pass() { return {}; }
    static Check fail(std::size_t degree) { return {false, degree}; }
};

/// Macaulay's condition on a raw sequence: v_0 = 1, every entry >= 0, and
/// v_{d+1} <= v_d^<d> for d >= 1. Trailing zeros are allowed. The reported
/// degree is d + 1, the degree of the entry that exceeds its bound (or of
/// a negative entry, or 0 when v_0 != 1).
Check check_o_sequence(std::span<const Entry> v);
Check is_o_sequence(const HVector& h);

/// ((Δv)_0 = 1, v_1 - v_0, ..., v_d - v_{d-1}).
Sequence first_difference(std::span<const Entry> v);

/// Δv is non-negative and an O-sequence. Requires v_0 = 1.
Check is_differentiable(std::span<const Entry> v);

/// Reports the smallest i with h_i != h_{e-i}.
Check is_symmetric(std::span<const Entry> h);
Check is_symmetric(const HVector& h);

/// Weakly up, then weakly down. Reports the degree reached by the first
/// strict ascent that follows a strict descent.
Check is_unimodal(std::span<const Entry> h);
Check is_unimodal(const HVector& h);

/// (h_0, ..., h_{floor(e/2)}).
Sequence first_half(std::span<const Entry> h);
Sequence first_half(const HVector& h);

enum class ReasonKind {
    NotSymmetric,
    NotOSequence,
    FirstHalfNotDifferentiable,
    SIWitness,
    OutOfScopeCodimension,
};

std::string to_string(ReasonKind kind);

struct Reason {
    ReasonKind kind;
    std::optional<std::size_t> degree;

    bool operator==(const Reason&) const = default;
};

struct SICheck {
    bool holds = false;
    /// Empty when holds; otherwise NotSymmetric and/or FirstHalfNotDifferentiable.
    std::vector<Reason> reasons;

    explicit operator bool() const noexcept { return holds; }
};

SICheck is_si_sequence(const HVector& h);

/// Allocation-free SI test for a raw vector (h_0, ..., h_e) with h_0 = 1
/// and h_e > 0. Used by the brute-force enumerators.
bool is_si_sequence(std::span<const Entry> h);

enum class Verdict { Gorenstein, NotGorenstein, Undecided };

std::string to_string(Verdict verdict);

struct ClassificationReport {
    Verdict verdict;
    Entry codimension;
    std::vector<Reason> reasons;
};

/// Tri-state Gorenstein verdict.
///
/// SI vectors are Gorenstein h-vectors in every codimension. In
/// codimension <= 3 the converse holds, so a non-SI vector is rejected
/// with its violations as the certificate. Symmetry and Macaulay growth
/// are necessary in every codimension, so a vector failing either is
/// rejected regardless of h_1. What remains (h_1 >= 4, symmetric,
/// O-sequence, not SI) is Undecided.
ClassificationReport classify_gorenstein(const HVector& h);

}  // namespace hvec
