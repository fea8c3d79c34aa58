#include "oracles.hpp"

namespace hvec::oracle {

std::vector<std::vector<Integer>> pascal_triangle(std::size_t max_n) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::vector<Integer> row(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

using Expansion = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

void extend(std::uint64_t remaining, std::uint64_t bottom, std::uint64_t top_limit, Expansion& current,
            const std::vector<std::vector<Integer>>& pascal, std::vector<Expansion>& out) {
    if (remaining == 0 && !current.empty()) {
        out.push_back(current);
        return;
    }
    if (bottom == 0) return;
    for (std::uint64_t top = bottom; top < top_limit && top < pascal.size(); ++top) {
        const Integer c = pascal[top][bottom];
        if (c > remaining) break;
        current.emplace_back(top, bottom);
        extend(remaining - static_cast<std::uint64_t>(c), bottom - 1, top, current, pascal, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Expansion> all_binomial_expansions(std::uint64_t n, std::uint64_t i) {
    // C(top, i) >= top for i < top, so top <= n + i bounds the search.
    static const auto pascal = pascal_triangle(256);
    std::vector<Expansion> out;
    Expansion current;
    extend(n, i, n + i + 1, current, pascal, out);
    return out;
}

bool naive_passes(Filter f, const Sequence& h) {
    const auto sym = [&] {
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k] != h[h.size() - 1 - k]) return false;
        return true;
    };
    const auto si = [&] { return sym() && is_differentiable(first_half(h)).holds; };
    switch (f) {
        case Filter::AllOSequences: return check_o_sequence(h).holds;
        case Filter::Symmetric: return sym();
        case Filter::SI: return si();
        case Filter::SymmetricNotSI: return sym() && !si();
    }
    return false;
}

void naive_enumerate(const EnumerationSpec& spec, const std::function<void(const Sequence&)>& emit) {
    const std::size_t e = spec.socle_degree;
    if (e == 0) return;
    Sequence h(e + 1, 1);
    h[1] = spec.codimension;
    const bool symmetric_only = spec.filter != Filter::AllOSequences;
    if (e == 1) {
        if (naive_passes(spec.filter, h)) emit(h);
        return;
    }
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == e) {
            for (Entry v = 1; v <= spec.entry_cap; ++v) {
                // h_e = h_0 is necessary for symmetry; skip the full predicate otherwise.
                if (symmetric_only && v != 1) continue;
                h[e] = v;
                if (naive_passes(spec.filter, h)) emit(h);
            }
            return;
        }
        for (Entry v = 1; v <= spec.entry_cap; ++v) {
            h[k] = v;
            fill(k + 1);
        }
    };
    fill(2);
}

}  // namespace hvec::oracle
