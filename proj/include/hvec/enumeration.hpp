#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hvec/sequences.hpp"

namespace hvec {

enum class Filter { AllOSequences, Symmetric, SI, SymmetricNotSI };

/// `all`, `symmetric`, `si`, `symmetric-not-si`.
std::string to_string(Filter f);
std::optional<Filter> parse_filter(std::string_view name);

/// Whether the raw vector h (h_0 = 1, no zeros) passes `f`.
bool passes(Filter f, std::span<const Entry> h);

inline constexpr Entry kDefaultEntryCap = 25;

struct EnumerationSpec {
    std::size_t socle_degree = 0;
    Entry codimension = 1;
    Entry entry_cap = kDefaultEntryCap;
    Filter filter = Filter::SI;

    /// Throws PreconditionViolated unless entry_cap >= codimension >= 1.
    void validate() const;
};

/// Every h-vector with h_1 = codimension, socle degree exactly
/// socle_degree and entries <= entry_cap that passes the filter, in
/// lexicographic order.
///
/// Symmetric filters build the first half and mirror it; the SI filter
/// additionally grows the first half under Macaulay's bound on its
/// first difference.
void enumerate(const EnumerationSpec& spec, const std::function<void(const HVector&)>& emit);
std::vector<HVector> enumerate(const EnumerationSpec& spec);

/// e -> number of vectors enumerate() yields, for e = 0..e_max.
std::map<std::size_t, std::uint64_t> count_by_degree(Entry codimension, std::size_t e_max, Entry entry_cap,
                                                     Filter filter);

}  // namespace hvec
