#include "hvec/enumeration.hpp"

#include <algorithm>

#include "hvec/errors.hpp"

namespace hvec {

std::string to_string(Filter f) {
    switch (f) {
        case Filter::AllOSequences: return "all";
        case Filter::Symmetric: return "symmetric";
        case Filter::SI: return "si";
        case Filter::SymmetricNotSI: return "symmetric-not-si";
    }
    return "?";
}

std::optional<Filter> parse_filter(std::string_view name) {
    for (auto f : {Filter::AllOSequences, Filter::Symmetric, Filter::SI, Filter::SymmetricNotSI})
        if (name == to_string(f)) return f;
    return std::nullopt;
}

bool passes(Filter f, std::span<const Entry> h) {
    switch (f) {
        case Filter::AllOSequences: return check_o_sequence(h).holds;
        case Filter::Symmetric: return is_symmetric(h).holds;
        case Filter::SI: return is_si_sequence(h);
        case Filter::SymmetricNotSI: return is_symmetric(h).holds && !is_si_sequence(h);
    }
    return false;
}

void EnumerationSpec::validate() const {
    if (codimension < 1) throw PreconditionViolated("codimension must be >= 1");
    if (entry_cap < codimension) throw PreconditionViolated("entry cap must be >= codimension");
}

namespace {

class Generator {
public:
    Generator(const EnumerationSpec& spec, const std::function<void(const HVector&)>& emit)
        : spec_(spec), emit_(emit), e_(spec.socle_degree), h_(spec.socle_degree + 1, 0) {}

    void run() {
        if (e_ == 0) return;  // no degree-1 entry to carry the codimension
        h_[0] = 1;
        if (spec_.filter == Filter::AllOSequences) {
            h_[1] = spec_.codimension;
            grow_free(2);
            return;
        }
        grow_half(1);
    }

private:
    // Macaulay-bounded growth over every remaining position.
    void grow_free(std::size_t k) {
        if (k > e_) {
            emit_(HVector(h_));
            return;
        }
        const Entry hi = std::min(spec_.entry_cap, macaulay_bound_saturated(h_[k - 1], k - 1));
        for (Entry v = 1; v <= hi; ++v) {
            h_[k] = v;
            grow_free(k + 1);
        }
    }

    // First half only; the mirror fills the rest.
    void grow_half(std::size_t k) {
        const std::size_t half = e_ / 2;
        if (k > half) {
            for (std::size_t t = half + 1; t <= e_; ++t) h_[t] = h_[e_ - t];
            if (h_[1] != spec_.codimension) return;
            if (spec_.filter == Filter::SymmetricNotSI && is_si_sequence(std::span<const Entry>(h_))) return;
            emit_(HVector(h_));
            return;
        }
        Entry lo = 1;
        Entry hi = spec_.entry_cap;
        if (k == 1) {
            lo = hi = spec_.codimension;
        } else if (spec_.filter == Filter::SI) {
            const Entry prev_delta = h_[k - 1] - h_[k - 2];
            lo = h_[k - 1];
            hi = std::min(hi, h_[k - 1] + macaulay_bound_saturated(prev_delta, k - 1));
        }
        for (Entry v = lo; v <= hi; ++v) {
            h_[k] = v;
            grow_half(k + 1);
        }
    }

    const EnumerationSpec& spec_;
    const std::function<void(const HVector&)>& emit_;
    std::size_t e_;
    Sequence h_;
};

}  // namespace

void enumerate(const EnumerationSpec& spec, const std::function<void(const HVector&)>& emit) {
    spec.validate();
    Generator(spec, emit).run();
}

std::vector<HVector> enumerate(const EnumerationSpec& spec) {
    std::vector<HVector> out;
    enumerate(spec, [&](const HVector& h) { out.push_back(h); });
    return out;
}

std::map<std::size_t, std::uint64_t> count_by_degree(Entry codimension, std::size_t e_max, Entry entry_cap,
                                                     Filter filter) {
    std::map<std::size_t, std::uint64_t> table;
    for (std::size_t e = 0; e <= e_max; ++e) {
        std::uint64_t n = 0;
        enumerate({e, codimension, entry_cap, filter}, [&](const HVector&) { ++n; });
        table[e] = n;
    }
    return table;
}

}  // namespace hvec
