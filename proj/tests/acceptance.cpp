// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes inside its time limit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hvec/binomial.hpp"
#include "hvec/cli.hpp"
#include "hvec/decomposition.hpp"
#include "hvec/enumeration.hpp"
#include "hvec/errors.hpp"
#include "hvec/monomial_oracle.hpp"
#include "hvec/sequences.hpp"
#include "oracles.hpp"

namespace {

using namespace hvec;

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Odometer over raw vectors (1, v_1, ..., v_len-1), v_1 in [lo1, hi1],
// v_d in [lo, hi(d)] for d >= 2.
void box(std::size_t len, Entry lo1, Entry hi1, Entry lo, const std::function<Entry(std::size_t)>& hi,
         const std::function<void(const Sequence&)>& visit) {
    Sequence v(len, lo);
    v[0] = 1;
    if (len == 1) {
        visit(v);
        return;
    }
    v[1] = lo1;
    for (;;) {
        visit(v);
        std::size_t d = len - 1;
        for (;;) {
            Entry top = d == 1 ? hi1 : hi(d);
            if (v[d] < top) {
                ++v[d];
                break;
            }
            v[d] = d == 1 ? lo1 : lo;
            if (--d == 0) return;
        }
    }
}

Entry c2(std::size_t d) { return static_cast<Entry>((d + 2) * (d + 1) / 2); }

// 1. Macaulay bound against exhaustive monomial subsets.
Outcome macaulay_vs_bruteforce() {
    // C(56,6) subsets at n = 6, i = 3: above the default budget.
    constexpr std::uint64_t budget = 100'000'000;
    int pairs = 0;
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t i = 1; i <= 3; ++i) {
            Integer bound = macaulay_bound(n, i);
            Entry brute = max_growth_bruteforce(n, i, n, budget);
            if (bound != brute) {
                std::ostringstream os;
                os << "n=" << n << " i=" << i << ": bound " << bound << " vs brute force " << brute;
                return fail(os.str());
            }
            ++pairs;
        }
    return {true, std::to_string(pairs) + " (n,i) pairs"};
}

// 2. O-sequence iff realizable, and the realization reproduces h.
Outcome realization_round_trip() {
    std::uint64_t checked = 0, realizable = 0;
    Outcome out;
    for (std::size_t e = 1; e <= 6 && out.passed; ++e) {
        box(e + 1, 1, 3, 1, c2, [&](const Sequence& raw) {
            if (!out.passed) return;
            ++checked;
            HVector h(raw);
            Check o = is_o_sequence(h);
            try {
                SurvivorTable t = lex_segment_realization(h);
                if (!o.holds) {
                    out = fail("realized non-O-sequence " + h.to_string());
                    return;
                }
                if (hilbert_function(t) != h) out = fail("round trip changed " + h.to_string());
                ++realizable;
            } catch (const NotAnOSequence& ex) {
                if (o.holds)
                    out = fail("rejected O-sequence " + h.to_string());
                else if (ex.degree() != *o.first_violation)
                    out = fail("failure degree mismatch on " + h.to_string());
            }
        });
    }
    if (out.passed)
        out.detail = std::to_string(checked) + " vectors, " + std::to_string(realizable) + " realizable";
    return out;
}

// 3. Complete intersections of three pure powers.
Outcome complete_intersections() {
    int triples = 0;
    for (std::uint32_t a = 2; a <= 7; ++a)
        for (std::uint32_t b = a; b <= 7; ++b)
            for (std::uint32_t c = b; c <= 7; ++c) {
                HVector h = complete_intersection_hvector(a, b, c);
                std::array<std::uint32_t, 3> exps{a, b, c};
                bool ok = is_symmetric(h).holds && classify_gorenstein(h).verdict == Verdict::Gorenstein &&
                          is_si_sequence(h).holds && socle_vector(complete_intersection_table(exps)).is_gorenstein();
                if (!ok) return fail("failed at " + h.to_string());
                ++triples;
            }
    if (triples != 56) return fail("expected 56 triples, saw " + std::to_string(triples));
    return {true, "56 triples"};
}

EnumerationSpec spec_for(std::size_t e, Filter f) { return {e, 3, kDefaultEntryCap, f}; }

// 4. Every SI vector of codimension 3 decomposes and replays cleanly.
Outcome decompositions() {
    std::uint64_t vectors = 0, traces = 0;
    std::set<ProofCase> cases;
    for (std::size_t e = 1; e <= 8; ++e)
        for (const HVector& h : enumerate(spec_for(e, Filter::SI))) {
            ++vectors;
            auto d = find_stanley_decomposition(h, 1);
            if (!d) return fail("no decomposition for " + h.to_string());
            try {
                for (const ProofTrace& t : verify_proof_inequalities(h, *d)) {
                    ++traces;
                    cases.insert(t.proof_case);
                    for (const CheckedInequality& c : t.checked)
                        if (!c.holds) return fail("inequality " + c.label + " fails for " + h.to_string());
                }
            } catch (const TraceViolation& ex) {
                return fail(std::string("trace violation for ") + h.to_string() + ": " + ex.what());
            }
        }
    return {true, std::to_string(vectors) + " vectors, " + std::to_string(traces) + " traces, " +
                      std::to_string(cases.size()) + " proof cases reached"};
}

// 5. Symmetric non-SI vectors of codimension 3 are all refuted.
Outcome refutations() {
    std::uint64_t vectors = 0, candidates = 0;
    for (std::size_t e = 1; e <= 8; ++e)
        for (const HVector& h : enumerate(spec_for(e, Filter::SymmetricNotSI))) {
            ++vectors;
            RefutationReport r = refute_non_si(h);
            if (!r.clean()) return fail("survivor for " + h.to_string());
            candidates += r.candidates;
        }
    return {true, std::to_string(vectors) + " vectors, " + std::to_string(candidates) + " candidates refuted"};
}

// 6. Optimized and naive SI generators agree; counts frozen afterwards.
Outcome dual_generators() {
    // Recorded from the first agreeing run; e = 0..8.
    constexpr std::array<std::uint64_t, 9> golden{0, 0, 1, 1, 4, 4, 11, 11, 26};
    std::uint64_t total = 0;
    for (std::size_t e = 0; e <= 8; ++e) {
        std::set<Sequence> fast, naive;
        std::uint64_t fast_n = 0, naive_n = 0;
        enumerate(spec_for(e, Filter::SI), [&](const HVector& h) {
            fast.insert(h.values());
            ++fast_n;
        });
        oracle::naive_enumerate(spec_for(e, Filter::SI), [&](const Sequence& h) {
            naive.insert(h);
            ++naive_n;
        });
        if (fast != naive || fast_n != naive_n)
            return fail("generators disagree at e=" + std::to_string(e));
        if (fast_n != golden[e]) return fail("count drift at e=" + std::to_string(e));
        total += fast_n;
    }
    return {true, std::to_string(total) + " SI vectors over e=0..8"};
}

// 7. Implications between the definitions.
Outcome definition_implications() {
    std::uint64_t raw = 0, si = 0;
    Outcome out;
    for (std::size_t len = 1; len <= 8 && out.passed; ++len) {
        box(len, 0, 4, 0, [](std::size_t) { return Entry{15}; }, [&](const Sequence& v) {
            if (!out.passed) return;
            ++raw;
            if (is_differentiable(v).holds && !check_o_sequence(v).holds) {
                out = fail("differentiable but not an O-sequence: " + join(v));
                return;
            }
            bool zero_free = v.back() != 0 && std::find(v.begin(), v.end(), 0) == v.end();
            if (!zero_free || !is_symmetric(v).holds) return;
            HVector h(v);
            if (!is_si_sequence(h).holds) return;
            ++si;
            if (!is_unimodal(h).holds) out = fail("SI but not unimodal: " + h.to_string());
            else if (!is_o_sequence(h).holds) out = fail("SI but not an O-sequence: " + h.to_string());
        });
    }
    if (out.passed) out.detail = std::to_string(raw) + " vectors, " + std::to_string(si) + " SI";
    return out;
}

// 8. CLI output byte-identical to the committed goldens.
Outcome cli_goldens() {
    struct Case {
        std::vector<std::string> args;
        const char* file;
    };
    const std::vector<Case> cases{
        {{"expand", "4", "2"}, "expand_4_2.txt"},
        {{"check", "1,3,4,3,1"}, "check_1_3_4_3_1.txt"},
        {{"classify", "1,13,12,13,1"}, "classify_1_13_12_13_1.txt"},
        {{"decompose", "1,3,4,3,1"}, "decompose_1_3_4_3_1.txt"},
        {{"realize", "1,2,2"}, "realize_1_2_2.txt"},
    };
    for (const Case& c : cases) {
        std::ifstream in(std::string(HVEC_GOLDEN_DIR) + "/" + c.file, std::ios::binary);
        if (!in) return fail(std::string("missing golden ") + c.file);
        std::string expected{std::istreambuf_iterator<char>(in), {}};
        std::ostringstream out, err;
        cli::run(c.args, out, err);
        if (out.str() != expected) return fail(std::string("mismatch against ") + c.file);
    }
    return {true, std::to_string(cases.size()) + " goldens"};
}

struct Criterion {
    const char* name;
    double limit_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"AC1 macaulay bound equals brute-force maximum growth", 60, macaulay_vs_bruteforce},
        {"AC2 O-sequence iff lex-segment realizable, round trip exact", 120, realization_round_trip},
        {"AC3 complete intersections are symmetric, Gorenstein, SI", 5, complete_intersections},
        {"AC4 every codim-3 SI vector decomposes with clean proof replay", 600, decompositions},
        {"AC5 every codim-3 symmetric non-SI vector is refuted", 600, refutations},
        {"AC6 optimized and naive SI enumeration agree", 300, dual_generators},
        {"AC7 definition implications hold on the box", 120, definition_implications},
        {"AC8 CLI output matches goldens", 5, cli_goldens},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = fail(std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && secs > c.limit_seconds) o = fail("over time limit of " + std::to_string(c.limit_seconds) + " s");
        if (!o.passed) ++failures;
        std::printf("%s  %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
