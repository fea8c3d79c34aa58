#include "hvec/monomial_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hvec/errors.hpp"

namespace hvec {

namespace {

// All degree-d monomials in r variables, lex-ascending, with the ranks of
// their degree-(d-1) divisors in the layer below.
struct DegreeLayer {
    std::vector<Monomial> monomials;
    std::vector<std::vector<std::uint32_t>> divisors;
};

void collect_exponents(std::size_t r, std::uint32_t degree, std::vector<std::uint32_t>& current,
                       std::vector<Monomial>& out) {
    const std::size_t pos = current.size();
    if (pos + 1 == r) {
        current.push_back(degree);
        out.emplace_back(current);
        current.pop_back();
        return;
    }
    for (std::uint32_t e = 0; e <= degree; ++e) {
        current.push_back(e);
        collect_exponents(r, degree - e, current, out);
        current.pop_back();
    }
}

std::vector<Monomial> monomials_ascending(std::size_t r, std::uint32_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> current;
    current.reserve(r);
    collect_exponents(r, degree, current, out);
    return out;
}

const DegreeLayer& degree_layer(std::size_t r, std::uint32_t degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::uint32_t>, std::unique_ptr<DegreeLayer>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[{r, degree}];
    if (slot) return *slot;

    auto layer = std::make_unique<DegreeLayer>();
    layer->monomials = monomials_ascending(r, degree);
    if (degree > 0) {
        const auto below = monomials_ascending(r, degree - 1);
        layer->divisors.reserve(layer->monomials.size());
        for (const auto& m : layer->monomials) {
            std::vector<std::uint32_t> ranks;
            std::vector<std::uint32_t> ex(m.exponents().begin(), m.exponents().end());
            for (std::size_t k = 0; k < r; ++k) {
                if (ex[k] == 0) continue;
                --ex[k];
                auto it = std::lower_bound(below.begin(), below.end(), Monomial(ex));
                ranks.push_back(static_cast<std::uint32_t>(it - below.begin()));
                ++ex[k];
            }
            layer->divisors.push_back(std::move(ranks));
        }
    } else {
        layer->divisors.emplace_back();
    }
    slot = std::move(layer);
    return *slot;
}

void sort_descending(std::vector<Monomial>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

bool contains_sorted_desc(const std::vector<Monomial>& v, const Monomial& m) {
    return std::binary_search(v.begin(), v.end(), m, std::greater<>());
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0})) {}

Monomial Monomial::unit(std::size_t num_variables) {
    return Monomial(std::vector<std::uint32_t>(num_variables, 0));
}

Monomial Monomial::times(std::size_t var) const {
    auto ex = exponents_;
    ++ex.at(var);
    return Monomial(std::move(ex));
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < exponents_.size(); ++k) {
        if (exponents_[k] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << (k + 1);
        if (exponents_[k] > 1) os << '^' << exponents_[k];
    }
    if (first) os << '1';
    return os.str();
}

SurvivorTable::SurvivorTable(Unchecked, std::size_t num_variables,
                             std::vector<std::vector<Monomial>> per_degree)
    : num_variables_(num_variables), per_degree_(std::move(per_degree)) {
    while (per_degree_.size() > 1 && per_degree_.back().empty()) per_degree_.pop_back();
    for (auto& layer : per_degree_) sort_descending(layer);
}

SurvivorTable::SurvivorTable(std::size_t num_variables, std::vector<std::vector<Monomial>> per_degree)
    : SurvivorTable(Unchecked{}, num_variables, std::move(per_degree)) {
    if (num_variables_ == 0) throw PreconditionViolated("survivor table needs at least one variable");
    if (per_degree_.empty() || per_degree_[0].size() != 1 ||
        per_degree_[0][0] != Monomial::unit(num_variables_))
        throw PreconditionViolated("degree 0 of a survivor table must be exactly the unit monomial");

    for (std::size_t d = 0; d < per_degree_.size(); ++d) {
        const auto& layer = per_degree_[d];
        if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
            throw PreconditionViolated("duplicate monomial at degree " + std::to_string(d));
        for (const auto& m : layer) {
            if (m.num_variables() != num_variables_ || m.degree() != d)
                throw PreconditionViolated("monomial " + m.to_string() + " misplaced at degree " +
                                           std::to_string(d));
            if (d == 0) continue;
            std::vector<std::uint32_t> ex(m.exponents().begin(), m.exponents().end());
            for (std::size_t k = 0; k < num_variables_; ++k) {
                if (ex[k] == 0) continue;
                --ex[k];
                if (!contains_sorted_desc(per_degree_[d - 1], Monomial(ex)))
                    throw PreconditionViolated("survivor " + m.to_string() +
                                               " has a divisor outside the table");
                ++ex[k];
            }
        }
    }
}

bool SurvivorTable::contains(const Monomial& m) const {
    if (m.num_variables() != num_variables_ || m.degree() >= per_degree_.size()) return false;
    return contains_sorted_desc(per_degree_[m.degree()], m);
}

std::string SurvivorTable::render() const {
    std::ostringstream os;
    for (std::size_t d = 0; d < per_degree_.size(); ++d) {
        os << "degree " << d << ":";
        for (std::size_t k = 0; k < per_degree_[d].size(); ++k)
            os << (k == 0 ? " " : ", ") << per_degree_[d][k].to_string();
        os << '\n';
    }
    return os.str();
}

SurvivorTable lex_segment_realization(const HVector& h) {
    const Entry r = h.codimension();
    if (r < 1) throw PreconditionViolated("lex_segment_realization requires h_1 >= 1");
    const auto nvars = static_cast<std::size_t>(r);

    std::vector<std::vector<Monomial>> per_degree;
    per_degree.push_back({Monomial::unit(nvars)});

    std::vector<char> alive_below{1};
    for (std::size_t d = 1; d <= h.socle_degree(); ++d) {
        const DegreeLayer& layer = degree_layer(nvars, static_cast<std::uint32_t>(d));
        const auto want = static_cast<std::size_t>(h[d]);
        std::vector<char> alive(layer.monomials.size(), 0);
        std::vector<Monomial> chosen;
        chosen.reserve(want);
        for (std::size_t k = 0; k < layer.monomials.size() && chosen.size() < want; ++k) {
            const auto& divs = layer.divisors[k];
            const bool candidate = std::all_of(divs.begin(), divs.end(),
                                               [&](std::uint32_t idx) { return alive_below[idx] != 0; });
            if (!candidate) continue;
            alive[k] = 1;
            chosen.push_back(layer.monomials[k]);
        }
        if (chosen.size() < want) throw NotAnOSequence(d);
        per_degree.push_back(std::move(chosen));
        alive_below = std::move(alive);
    }
    return SurvivorTable(SurvivorTable::Unchecked{}, nvars, std::move(per_degree));
}

HVector hilbert_function(const SurvivorTable& t) {
    Sequence counts;
    counts.reserve(t.per_degree().size());
    for (const auto& layer : t.per_degree()) counts.push_back(static_cast<Entry>(layer.size()));
    return HVector(std::move(counts));
}

bool SocleVector::is_gorenstein() const {
    if (entries.empty() || entries.back() != 1) return false;
    return std::all_of(entries.begin(), entries.end() - 1, [](Entry s) { return s == 0; });
}

SocleVector socle_vector(const SurvivorTable& t) {
    SocleVector s;
    const auto& layers = t.per_degree();
    for (std::size_t d = 0; d < layers.size(); ++d) {
        Entry count = 0;
        for (const auto& m : layers[d]) {
            bool killed = true;
            if (d + 1 < layers.size()) {
                for (std::size_t k = 0; k < t.num_variables() && killed; ++k)
                    if (contains_sorted_desc(layers[d + 1], m.times(k))) killed = false;
            }
            if (killed) ++count;
        }
        s.entries.push_back(count);
    }
    return s;
}

SurvivorTable complete_intersection_table(std::span<const std::uint32_t> exponents) {
    if (exponents.empty()) throw PreconditionViolated("complete intersection needs at least one exponent");
    for (auto a : exponents)
        if (a < 1) throw PreconditionViolated("complete intersection exponents must be positive");

    std::size_t top = 0;
    for (auto a : exponents) top += a - 1;
    const std::size_t r = exponents.size();

    std::vector<std::vector<Monomial>> per_degree;
    for (std::size_t d = 0; d <= top; ++d) {
        std::vector<Monomial> layer;
        for (const auto& m : degree_layer(r, static_cast<std::uint32_t>(d)).monomials) {
            bool fits = true;
            for (std::size_t k = 0; k < r; ++k)
                if (m.exponents()[k] >= exponents[k]) fits = false;
            if (fits) layer.push_back(m);
        }
        per_degree.push_back(std::move(layer));
    }
    return SurvivorTable(SurvivorTable::Unchecked{}, r, std::move(per_degree));
}

SurvivorTable generic_table(std::size_t num_variables, std::size_t top_degree) {
    if (num_variables == 0) throw PreconditionViolated("generic table needs at least one variable");
    std::vector<std::vector<Monomial>> per_degree;
    for (std::size_t d = 0; d <= top_degree; ++d)
        per_degree.push_back(degree_layer(num_variables, static_cast<std::uint32_t>(d)).monomials);
    return SurvivorTable(SurvivorTable::Unchecked{}, num_variables, std::move(per_degree));
}

HVector complete_intersection_hvector(std::span<const std::uint32_t> exponents) {
    Sequence poly{1};
    for (auto a : exponents) {
        if (a < 2) throw PreconditionViolated("complete intersection exponents must be >= 2");
        Sequence next(poly.size() + a - 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k)
            for (std::uint32_t t = 0; t < a; ++t) next[k + t] += poly[k];
        poly = std::move(next);
    }
    return HVector(std::move(poly));
}

HVector complete_intersection_hvector(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const std::uint32_t exps[] = {a, b, c};
    return complete_intersection_hvector(exps);
}

namespace {

struct GrowthSearch {
    std::uint64_t n;
    std::size_t words;
    std::vector<std::vector<std::uint64_t>> targets;  // divisor masks of degree-(i+1) monomials
    std::size_t universe;
    Entry best = 0;

    void run_single_word() {
        std::vector<std::uint64_t> masks;
        masks.reserve(targets.size());
        for (const auto& t : targets) masks.push_back(t[0]);
        recurse_single(0, 0, 0, masks);
    }

    void recurse_single(std::size_t start, std::uint64_t depth, std::uint64_t set,
                        const std::vector<std::uint64_t>& masks) {
        if (depth == n) {
            Entry count = 0;
            for (auto m : masks) count += (m & ~set) == 0;
            best = std::max(best, count);
            return;
        }
        for (std::size_t k = start; k + (n - depth) <= universe; ++k)
            recurse_single(k + 1, depth + 1, set | (std::uint64_t{1} << k), masks);
    }

    void run_multi_word() {
        std::vector<std::uint64_t> set(words, 0);
        recurse_multi(0, 0, set);
    }

    void recurse_multi(std::size_t start, std::uint64_t depth, std::vector<std::uint64_t>& set) {
        if (depth == n) {
            Entry count = 0;
            for (const auto& t : targets) {
                bool inside = true;
                for (std::size_t w = 0; w < words && inside; ++w) inside = (t[w] & ~set[w]) == 0;
                count += inside;
            }
            best = std::max(best, count);
            return;
        }
        for (std::size_t k = start; k + (n - depth) <= universe; ++k) {
            set[k / 64] |= std::uint64_t{1} << (k % 64);
            recurse_multi(k + 1, depth + 1, set);
            set[k / 64] &= ~(std::uint64_t{1} << (k % 64));
        }
    }
};

}  // namespace

Entry max_growth_bruteforce(std::uint64_t n, std::uint64_t i, std::uint64_t r, std::uint64_t budget) {
    if (n < 1 || i < 1 || r < 1)
        throw PreconditionViolated("max_growth_bruteforce requires n, i, r >= 1");
    const Integer available = binom(Integer(r - 1 + i), i);
    if (available < n)
        throw PreconditionViolated("fewer than n monomials of degree i exist in r variables");
    if (binom(available, n) > budget)
        throw InfeasibleSearch("C(" + available.str() + ", " + std::to_string(n) +
                               ") subsets exceed the search budget of " + std::to_string(budget));

    const DegreeLayer& upper = degree_layer(r, static_cast<std::uint32_t>(i + 1));
    GrowthSearch search;
    search.n = n;
    search.universe = static_cast<std::size_t>(available);
    search.words = (search.universe + 63) / 64;
    for (const auto& divs : upper.divisors) {
        std::vector<std::uint64_t> mask(search.words, 0);
        for (auto idx : divs) mask[idx / 64] |= std::uint64_t{1} << (idx % 64);
        search.targets.push_back(std::move(mask));
    }
    if (search.words == 1)
        search.run_single_word();
    else
        search.run_multi_word();
    return search.best;
}

}  // namespace hvec
