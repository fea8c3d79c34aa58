#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hvec/sequences.hpp"

namespace hvec {

/// h = residual + (a shifted to start at degree `pivot`), where a is a
/// Gorenstein h-vector with a_pivot = 1 and the residual
/// (1, h_1, ..., h_{j-1}, h_j - a_j, ..., h_e - a_e) is an O-sequence.
struct StanleyDecomposition {
    std::size_t pivot = 1;
    /// (a_j, ..., a_e), a_j = 1.
    Sequence subtrahend;
    /// Indexed by degree 0..e; may end in zeros.
    Sequence residual;

    /// a_degree, zero outside [pivot, e].
    Entry a(std::size_t degree) const;

    bool operator==(const StanleyDecomposition&) const = default;
};

/// Largest h_1 a candidate subtrahend may have. In codimension <= 3
/// Gorenstein h-vectors are exactly the SI-sequences, which is what makes
/// the candidate set decidable.
inline constexpr Entry kMaxSubtrahendCodimension = 3;

/// Walks every candidate subtrahend for `h` at `pivot` in lex order of
/// (a_{j+1}, a_{j+2}, ...): SI-sequences of socle degree e - j with
/// a_{j+1} <= 3 and first-half entries a_{j+k} <= h_{j+k}. Stops early
/// when the visitor returns false.
void for_each_candidate_subtrahend(const HVector& h, std::size_t pivot,
                                   const std::function<bool(const Sequence&)>& visit);

/// The residual of `h` against `subtrahend` placed at `pivot`.
Sequence residual_of(const HVector& h, std::size_t pivot, const Sequence& subtrahend);

/// Lexicographically smallest decomposition of `h` at `pivot`, if any.
///
/// Requires 1 <= pivot <= e and h_1 <= 3 (UnsupportedCodimension
/// otherwise). For pivot >= 2 the subtrahend search is restricted to
/// codimension <= 3, so an empty answer there is relative to that class.
std::optional<StanleyDecomposition> find_stanley_decomposition(const HVector& h, std::size_t pivot);

/// Checks every invariant of `d` as a decomposition of `h`.
bool is_valid_decomposition(const HVector& h, const StanleyDecomposition& d);

enum class ProofCase {
    SubtrahendGeneric,  // a_i = C(i+1, 2)
    ResidualGeneric,    // Δ_{i-1} = i
    ResidualSmall,      // Δ_{i-1} <= i-1
};

std::string to_string(ProofCase c);

struct CheckedInequality {
    std::string label;  // "(1)", "(2)" or "(3)"
    Entry lhs;
    Entry rhs;
    bool holds;
};

struct ProofTrace {
    std::size_t degree;
    ProofCase proof_case;
    std::vector<CheckedInequality> checked;
};

/// Replays the codimension-3 differentiability argument on a concrete
/// decomposition with pivot 1.
///
/// For every i <= floor(e/2) with h_i < C(i+2, 2), picks the case that
/// applies and evaluates
///   (1) h_i - h_{i-1} <= h_{i-1} - h_{i-2}
/// plus, when Δ_{i-1} <= i-1,
///   (2) a_i - a_{i-1} <= h_{i-1} - h_{i-2}
///   (3) h_i - h_{i-1} <= a_i - a_{i-1}.
/// Also checks that the residual never grows after its first non-generic
/// entry. Any failure throws TraceViolation; it cannot happen on a valid
/// input, so it flags a bug.
///
/// Requires h symmetric with h_1 = 3 and `d` a valid pivot-1
/// decomposition of h (PreconditionViolated otherwise).
std::vector<ProofTrace> verify_proof_inequalities(const HVector& h, const StanleyDecomposition& d);

struct RefutedCandidate {
    Sequence subtrahend;
    /// Degree at which the residual goes negative or breaks Macaulay growth.
    std::size_t violation_degree;
};

struct RefutationReport {
    std::size_t candidates = 0;
    std::vector<RefutedCandidate> refuted;
    /// Must stay empty; anything here contradicts the codimension-3 theorem.
    std::vector<StanleyDecomposition> survivors;

    bool clean() const noexcept { return survivors.empty(); }
};

/// Runs every pivot-1 candidate subtrahend against a symmetric non-SI
/// h with h_1 = 3 and records where each residual fails.
RefutationReport refute_non_si(const HVector& h);

}  // namespace hvec
