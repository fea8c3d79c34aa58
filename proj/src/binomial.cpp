#include "hvec/binomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hvec/errors.hpp"

namespace hvec {

namespace {

constexpr std::uint64_t kEntryMax = static_cast<std::uint64_t>(std::numeric_limits<Entry>::max());
// One past the largest Entry, so "saturated" compares greater than any Entry.
constexpr std::uint64_t kSaturated = kEntryMax + 1;

__extension__ typedef unsigned __int128 Wide;

// C(n, k) saturated at kSaturated.
std::uint64_t binom_saturated(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Wide acc = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        // acc == C(n - k + t - 1, t - 1) here, so the division is exact.
        acc = acc * (n - k + t) / t;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

// Largest top >= bottom with C(top, bottom) <= budget (budget >= 1).
Integer largest_top(const Integer& budget, std::uint64_t bottom) {
    Integer lo = bottom;  // C(bottom, bottom) = 1 <= budget
    Integer step = 1;
    Integer hi = lo + step;
    while (binom(hi, bottom) <= budget) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    // invariant: C(lo) <= budget < C(hi)
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (binom(mid, bottom) <= budget)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::uint64_t largest_top_saturated(std::uint64_t budget, std::uint64_t bottom) {
    std::uint64_t lo = bottom;
    std::uint64_t hi = std::max(bottom, budget) + 1;  // C(top, b) >= top once top > b
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (binom_saturated(mid, bottom) <= budget)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Integer binom(const Integer& n, std::uint64_t k) {
    if (n < 0) throw PreconditionViolated("binom: negative n");
    if (Integer(k) > n) return 0;
    Integer kk = k;
    if (n - kk < kk) kk = n - kk;
    const auto steps = static_cast<std::uint64_t>(kk);
    Integer acc = 1;
    for (std::uint64_t t = 1; t <= steps; ++t) {
        acc *= n - kk + t;
        acc /= t;
    }
    return acc;
}

BinomialExpansion expand(const Integer& n, std::uint64_t i) {
    if (n < 1) throw PreconditionViolated("expand: n must be positive");
    if (i < 1) throw PreconditionViolated("expand: i must be positive");

    BinomialExpansion out;
    out.value_ = n;
    out.index_ = i;
    Integer remaining = n;
    for (std::uint64_t bottom = i; bottom >= 1 && remaining > 0; --bottom) {
        Integer top = largest_top(remaining, bottom);
        remaining -= binom(top, bottom);
        out.terms_.push_back({std::move(top), bottom});
    }
    return out;
}

Integer BinomialExpansion::evaluate() const {
    Integer sum = 0;
    for (const auto& t : terms_) sum += binom(t.top, t.bottom);
    return sum;
}

Integer BinomialExpansion::raised() const {
    Integer sum = 0;
    for (const auto& t : terms_) sum += binom(t.top + 1, t.bottom + 1);
    return sum;
}

bool BinomialExpansion::well_formed() const {
    if (terms_.empty() || terms_.front().bottom != index_) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        if (t.bottom < 1 || t.top < t.bottom) return false;
        if (k > 0) {
            const auto& prev = terms_[k - 1];
            if (t.bottom + 1 != prev.bottom || !(t.top < prev.top)) return false;
        }
    }
    return evaluate() == value_;
}

std::string BinomialExpansion::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k > 0) os << " + ";
        os << "C(" << terms_[k].top << "," << terms_[k].bottom << ")";
    }
    return os.str();
}

Integer macaulay_bound(const Integer& n, std::uint64_t i) {
    if (i < 1) throw PreconditionViolated("macaulay_bound: i must be positive");
    if (n < 0) throw PreconditionViolated("macaulay_bound: negative n");
    if (n == 0) return 0;
    return expand(n, i).raised();
}

Entry macaulay_bound_saturated(Entry n, std::uint64_t i) {
    if (i < 1) throw PreconditionViolated("macaulay_bound: i must be positive");
    if (n < 0) throw PreconditionViolated("macaulay_bound: negative n");
    auto remaining = static_cast<std::uint64_t>(n);
    std::uint64_t sum = 0;
    for (std::uint64_t bottom = i; bottom >= 1 && remaining > 0; --bottom) {
        const std::uint64_t top = largest_top_saturated(remaining, bottom);
        remaining -= binom_saturated(top, bottom);
        sum += binom_saturated(top + 1, bottom + 1);
        if (sum > kEntryMax) return static_cast<Entry>(kEntryMax);
    }
    return static_cast<Entry>(sum);
}

}  // namespace hvec
