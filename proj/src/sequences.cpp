#include "hvec/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "hvec/errors.hpp"

namespace hvec {

HVector::HVector(Sequence entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    if (entries_.empty()) throw InvalidHVector("h-vector is empty or all zero");
    for (std::size_t d = 0; d < entries_.size(); ++d) {
        if (entries_[d] < 0)
            throw InvalidHVector("h-vector entry h_" + std::to_string(d) + " is negative");
        if (entries_[d] == 0)
            throw InvalidHVector("h-vector has an internal zero at degree " + std::to_string(d));
    }
    if (entries_.front() != 1) throw InvalidHVector("h-vector must start with h_0 = 1");
}

HVector HVector::reversed() const {
    Sequence r(entries_.rbegin(), entries_.rend());
    return HVector(std::move(r));
}

std::string HVector::to_string() const { return join(entries_); }

std::string join(std::span<const Entry> v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0) os << ',';
        os << v[k];
    }
    return os.str();
}

Check check_o_sequence(std::span<const Entry> v) {
    if (v.empty() || v[0] != 1) return Check::fail(0);
    for (std::size_t d = 1; d < v.size(); ++d) {
        if (v[d] < 0) return Check::fail(d);
        if (d >= 2 && v[d] > macaulay_bound_saturated(v[d - 1], d - 1)) return Check::fail(d);
    }
    return Check::pass();
}

Check is_o_sequence(const HVector& h) { return check_o_sequence(h.entries()); }

Sequence first_difference(std::span<const Entry> v) {
    Sequence out;
    if (v.empty()) return out;
    out.reserve(v.size());
    out.push_back(1);
    for (std::size_t d = 1; d < v.size(); ++d) out.push_back(v[d] - v[d - 1]);
    return out;
}

Check is_differentiable(std::span<const Entry> v) {
    if (v.empty() || v[0] != 1) return Check::fail(0);
    // Zero tails in Δ are fine: 0^<d> = 0 keeps them zero.
    return check_o_sequence(first_difference(v));
}

Check is_symmetric(std::span<const Entry> h) {
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (h[i] != h[n - 1 - i]) return Check::fail(i);
    return Check::pass();
}

Check is_symmetric(const HVector& h) { return is_symmetric(h.entries()); }

Check is_unimodal(std::span<const Entry> h) {
    bool descended = false;
    for (std::size_t d = 1; d < h.size(); ++d) {
        if (h[d] < h[d - 1]) descended = true;
        else if (h[d] > h[d - 1] && descended) return Check::fail(d);
    }
    return Check::pass();
}

Check is_unimodal(const HVector& h) { return is_unimodal(h.entries()); }

Sequence first_half(std::span<const Entry> h) {
    if (h.empty()) return {};
    const std::size_t e = h.size() - 1;
    return Sequence(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(e / 2 + 1));
}

Sequence first_half(const HVector& h) { return first_half(h.entries()); }

std::string to_string(ReasonKind kind) {
    switch (kind) {
        case ReasonKind::NotSymmetric: return "NotSymmetric";
        case ReasonKind::NotOSequence: return "NotOSequence";
        case ReasonKind::FirstHalfNotDifferentiable: return "FirstHalfNotDifferentiable";
        case ReasonKind::SIWitness: return "SIWitness";
        case ReasonKind::OutOfScopeCodimension: return "OutOfScopeCodimension";
    }
    return "?";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Gorenstein: return "Gorenstein";
        case Verdict::NotGorenstein: return "NotGorenstein";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

SICheck is_si_sequence(const HVector& h) {
    SICheck out;
    if (auto sym = is_symmetric(h); !sym)
        out.reasons.push_back({ReasonKind::NotSymmetric, sym.first_violation});
    if (auto diff = is_differentiable(first_half(h)); !diff)
        out.reasons.push_back({ReasonKind::FirstHalfNotDifferentiable, diff.first_violation});
    out.holds = out.reasons.empty();
    return out;
}

bool is_si_sequence(std::span<const Entry> h) {
    const std::size_t n = h.size();
    if (n == 0 || h[0] != 1) return false;
    for (std::size_t i = 0; i < n / 2; ++i)
        if (h[i] != h[n - 1 - i]) return false;
    const std::size_t half = (n - 1) / 2;
    Entry prev_delta = 1;
    for (std::size_t k = 1; k <= half; ++k) {
        const Entry delta = h[k] - h[k - 1];
        if (delta < 0) return false;
        if (k >= 2 && delta > macaulay_bound_saturated(prev_delta, k - 1)) return false;
        prev_delta = delta;
    }
    return true;
}

ClassificationReport classify_gorenstein(const HVector& h) {
    ClassificationReport report{Verdict::Gorenstein, h.codimension(), {}};
    const SICheck si = is_si_sequence(h);
    if (si.holds) {
        report.reasons.push_back({ReasonKind::SIWitness, std::nullopt});
        return report;
    }

    const Check sym = is_symmetric(h);
    const Check ord = is_o_sequence(h);
    if (h.codimension() <= 3 || !sym || !ord) {
        report.verdict = Verdict::NotGorenstein;
        if (!sym) report.reasons.push_back({ReasonKind::NotSymmetric, sym.first_violation});
        if (!ord) report.reasons.push_back({ReasonKind::NotOSequence, ord.first_violation});
        for (const auto& r : si.reasons)
            if (r.kind == ReasonKind::FirstHalfNotDifferentiable) report.reasons.push_back(r);
        return report;
    }

    report.verdict = Verdict::Undecided;
    for (const auto& r : si.reasons) report.reasons.push_back(r);
    report.reasons.push_back({ReasonKind::OutOfScopeCodimension, std::nullopt});
    return report;
}

}  // namespace hvec
