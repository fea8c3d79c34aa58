#include "hvec/decomposition.hpp"

#include <algorithm>

#include "hvec/errors.hpp"

namespace hvec {

namespace {

Entry generic_count(std::size_t degree, std::uint64_t variables) {
    // C(degree + variables - 1, variables - 1); small arguments only.
    return static_cast<Entry>(binom(Integer(degree + variables - 1), variables - 1));
}

struct SubtrahendWalk {
    const HVector& h;
    std::size_t pivot;
    std::size_t span;  // socle degree of the subtrahend
    std::function<bool(const Sequence&)> visit;
    // Optional prefix filter: called once b_k is fixed.
    std::function<bool(const Sequence&, std::size_t)> keep;
    Sequence b;
    bool stopped = false;

    void run() {
        b.assign(span + 1, 0);
        b[0] = 1;
        if (keep && !keep(b, 0)) return;
        descend(1);
    }

    void descend(std::size_t k) {
        if (stopped) return;
        const std::size_t half = span / 2;
        if (k > half) {
            for (std::size_t t = half + 1; t <= span; ++t) b[t] = b[span - t];
            if (!visit(b)) stopped = true;
            return;
        }
        Entry lo = b[k - 1];
        Entry hi = h[pivot + k];
        if (k == 1) {
            lo = 1;
            hi = std::min(hi, kMaxSubtrahendCodimension);
        } else {
            const Entry prev_delta = b[k - 1] - b[k - 2];
            hi = std::min(hi, b[k - 1] + macaulay_bound_saturated(prev_delta, k - 1));
        }
        for (Entry v = lo; v <= hi && !stopped; ++v) {
            b[k] = v;
            if (keep && !keep(b, k)) continue;
            descend(k + 1);
        }
        b[k] = 0;
    }
};

}  // namespace

Entry StanleyDecomposition::a(std::size_t degree) const {
    if (degree < pivot || degree - pivot >= subtrahend.size()) return 0;
    return subtrahend[degree - pivot];
}

void for_each_candidate_subtrahend(const HVector& h, std::size_t pivot,
                                   const std::function<bool(const Sequence&)>& visit) {
    if (pivot < 1 || pivot > h.socle_degree())
        throw PreconditionViolated("pivot must lie in [1, e]");
    SubtrahendWalk walk{h, pivot, h.socle_degree() - pivot, visit, {}, {}};
    walk.run();
}

Sequence residual_of(const HVector& h, std::size_t pivot, const Sequence& subtrahend) {
    Sequence r(h.values());
    for (std::size_t k = 0; k < subtrahend.size() && pivot + k < r.size(); ++k) r[pivot + k] -= subtrahend[k];
    return r;
}

std::optional<StanleyDecomposition> find_stanley_decomposition(const HVector& h, std::size_t pivot) {
    if (h.codimension() > kMaxSubtrahendCodimension) throw UnsupportedCodimension(h.codimension());
    const std::size_t e = h.socle_degree();
    if (pivot < 1 || pivot > e) throw PreconditionViolated("pivot must lie in [1, e]");

    // Degrees below the pivot are untouched by the subtraction.
    const auto untouched = std::span<const Entry>(h.entries()).first(pivot);
    if (!check_o_sequence(untouched)) return std::nullopt;

    Sequence residual(h.values());
    std::optional<StanleyDecomposition> found;
    const auto visit = [&](const Sequence& b) {
        Sequence r = residual_of(h, pivot, b);
        if (!check_o_sequence(r)) return true;
        found = StanleyDecomposition{pivot, b, std::move(r)};
        return false;
    };

    SubtrahendWalk walk{h, pivot, e - pivot, visit, {}, {}};
    walk.keep = [&](const Sequence& b, std::size_t k) {
        const std::size_t deg = pivot + k;
        residual[deg] = h[deg] - b[k];
        if (residual[deg] < 0 || h[e - k] - b[k] < 0) return false;
        if (deg >= 2 && residual[deg] > macaulay_bound_saturated(residual[deg - 1], deg - 1)) return false;
        return true;
    };
    walk.run();
    return found;
}

bool is_valid_decomposition(const HVector& h, const StanleyDecomposition& d) {
    const std::size_t e = h.socle_degree();
    if (d.pivot < 1 || d.pivot > e) return false;
    if (d.subtrahend.size() != e - d.pivot + 1 || d.subtrahend.front() != 1) return false;
    if (d.subtrahend.back() <= 0) return false;
    try {
        const HVector a(d.subtrahend);
        if (classify_gorenstein(a).verdict != Verdict::Gorenstein) return false;
    } catch (const InvalidHVector&) {
        return false;
    }
    if (d.residual != residual_of(h, d.pivot, d.subtrahend)) return false;
    return check_o_sequence(d.residual).holds;
}

std::string to_string(ProofCase c) {
    switch (c) {
        case ProofCase::SubtrahendGeneric: return "A_I_GENERIC";
        case ProofCase::ResidualGeneric: return "DELTA_GENERIC";
        case ProofCase::ResidualSmall: return "DELTA_SMALL";
    }
    return "?";
}

std::vector<ProofTrace> verify_proof_inequalities(const HVector& h, const StanleyDecomposition& d) {
    if (h.codimension() != 3) throw PreconditionViolated("proof replay needs h_1 = 3");
    if (!is_symmetric(h)) throw PreconditionViolated("proof replay needs a symmetric h");
    if (d.pivot != 1) throw PreconditionViolated("proof replay needs pivot 1");
    if (!is_valid_decomposition(h, d)) throw PreconditionViolated("not a valid decomposition of h");

    const Sequence& delta = d.residual;

    // An O-sequence starting (1, 2, ...) never grows once it stops being generic.
    for (std::size_t k = 1; k + 1 < delta.size(); ++k)
        if (delta[k] < static_cast<Entry>(k + 1) && delta[k + 1] > delta[k])
            throw TraceViolation(k + 1, "growth");

    std::vector<ProofTrace> traces;
    const std::size_t e = h.socle_degree();
    for (std::size_t i = 2; i <= e / 2; ++i) {
        if (h[i] >= generic_count(i, 3)) continue;

        const Entry step = h[i] - h[i - 1];
        const Entry prev_step = h[i - 1] - h[i - 2];
        const Entry a_step = d.a(i) - d.a(i - 1);

        ProofTrace trace{i, ProofCase::ResidualSmall, {}};
        if (d.a(i) == generic_count(i - 1, 3))
            trace.proof_case = ProofCase::SubtrahendGeneric;
        else if (delta[i - 1] == static_cast<Entry>(i))
            trace.proof_case = ProofCase::ResidualGeneric;

        trace.checked.push_back({"(1)", step, prev_step, step <= prev_step});
        if (trace.proof_case == ProofCase::ResidualSmall) {
            trace.checked.push_back({"(2)", a_step, prev_step, a_step <= prev_step});
            trace.checked.push_back({"(3)", step, a_step, step <= a_step});
        }
        for (const auto& c : trace.checked)
            if (!c.holds) throw TraceViolation(i, c.label);
        traces.push_back(std::move(trace));
    }
    return traces;
}

RefutationReport refute_non_si(const HVector& h) {
    if (h.codimension() != 3) throw PreconditionViolated("refutation needs h_1 = 3");
    if (!is_symmetric(h)) throw PreconditionViolated("refutation needs a symmetric h");
    if (is_si_sequence(h)) throw PreconditionViolated("h is an SI-sequence; nothing to refute");

    RefutationReport report;
    for_each_candidate_subtrahend(h, 1, [&](const Sequence& b) {
        ++report.candidates;
        Sequence r = residual_of(h, 1, b);
        const Check c = check_o_sequence(r);
        if (c.holds)
            report.survivors.push_back({1, b, std::move(r)});
        else
            report.refuted.push_back({b, *c.first_violation});
        return true;
    });
    return report;
}

}  // namespace hvec
