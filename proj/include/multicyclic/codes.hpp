#pragma once

// Multicyclic code construction: generating idempotent from a defining set,
// per-axis k profile, polynomial basis, generator matrix, exhaustive minimum
// distance and the product bound, plus a search over orbit selections.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "orbits.hpp"
#include "ring.hpp"
#include "spectral.hpp"

namespace multicyclic {

enum class BasisKind { none, box, greedy };

inline const char* basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::none: return "none";
        case BasisKind::box: return "box";
        case BasisKind::greedy: return "greedy";
    }
    return "none";
}

struct ProductBound {
    std::uint64_t value = 0;
    /// The code dimension factors as prod k_t and the box basis has full rank.
    bool applicable = false;
};

struct CodeRecord {
    DefiningSet defining_set;
    PolyTensor idempotent;
    std::size_t n = 0;
    std::size_t K = 0;
    std::vector<std::uint32_t> k_profile;  // empty for the zero code
    BasisKind basis_kind = BasisKind::none;
    GfMatrix generator;
    std::optional<std::size_t> d;  // absent for the zero code or beyond budget
    std::uint64_t codewords_examined = 0;
    ProductBound product_bound;
    std::size_t singleton_bound = 0;

    /// False only when the bound is applicable, d is known, and d falls below it.
    bool product_bound_holds() const { return !(product_bound.applicable && d && *d < product_bound.value); }
};

struct DistanceOptions {
    std::uint64_t budget = 3'000'000;
    /// Throw BudgetExceeded instead of omitting d when q^K exceeds the budget.
    bool require_exact = false;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
    return out;
}

/// X^exponents * f via cyclic shifts.
inline PolyTensor monomial_times(const Ring& ring, std::span<const std::uint32_t> exponents, PolyTensor f) {
    for (std::size_t t = 0; t < exponents.size(); ++t) {
        if (exponents[t] != 0) f = ring.shift_mul(f, t, exponents[t]);
    }
    return f;
}

class CodewordEnumerator {
public:
    CodewordEnumerator(const Field& F, const GfMatrix& G) : field_(F), G_(G) {
        const std::uint32_t q = F.order();
        multiples_.resize(G.rows());
        for (std::size_t r = 0; r < G.rows(); ++r) {
            multiples_[r].resize(q);
            for (std::uint32_t c = 0; c < q; ++c) {
                auto& row = multiples_[r][c];
                row.resize(G.cols());
                for (std::size_t i = 0; i < G.cols(); ++i) row[i] = F.mul(GfElement{c}, G.at(r, i));
            }
        }
        partial_.assign(G.rows() + 1, std::vector<GfElement>(G.cols()));
    }

    void run() { visit(0, false); }

    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t examined = 0;

private:
    void visit(std::size_t level, bool nonzero) {
        if (level == G_.rows()) {
            if (!nonzero) return;
            ++examined;
            const auto& word = partial_[level];
            const auto weight = static_cast<std::size_t>(
                std::count_if(word.begin(), word.end(), [](GfElement x) { return !x.is_zero(); }));
            best = std::min(best, weight);
            return;
        }
        const auto& from = partial_[level];
        auto& to = partial_[level + 1];
        for (std::uint32_t c = 0; c < field_.order(); ++c) {
            const auto& add = multiples_[level][c];
            for (std::size_t i = 0; i < to.size(); ++i) to[i] = field_.add(from[i], add[i]);
            visit(level + 1, nonzero || c != 0);
        }
    }

    const Field& field_;
    const GfMatrix& G_;
    std::vector<std::vector<std::vector<GfElement>>> multiples_;
    std::vector<std::vector<GfElement>> partial_;
};

}  // namespace detail

/// For each axis t, the least k such that X_t^k e lies in span{X_t^m e : m < k}.
inline std::vector<std::uint32_t> k_profile(const Ring& ring, const PolyTensor& e) {
    ring.check(e);
    if (e.is_zero()) throw Error(Errc::zero_idempotent, "k profile of the zero idempotent");
    std::vector<std::uint32_t> out(ring.rank());
    for (std::size_t t = 0; t < ring.rank(); ++t) {
        RowSpace span(ring.field(), ring.size());
        span.insert(e.data());
        std::uint32_t k = 1;
        PolyTensor shifted = e;
        for (;; ++k) {
            shifted = ring.shift_mul(shifted, t, 1);
            if (span.contains(shifted.data())) break;
            span.insert(shifted.data());
        }
        out[t] = k;
    }
    return out;
}

struct Basis {
    std::vector<PolyTensor> rows;
    BasisKind kind = BasisKind::none;
};

/// The box basis {X^m e : m_t < k_t} when prod k_t = K and those elements are
/// independent; otherwise a greedy scan of monomial multiples of e in monomial
/// order, keeping every element that raises the rank, until rank K.
inline Basis build_basis(const Ring& ring, const PolyTensor& e, std::size_t K,
                         const std::vector<std::uint32_t>& k_prof) {
    ring.check(e);
    if (e.is_zero()) throw Error(Errc::zero_idempotent, "basis of the zero code");
    std::uint64_t box_size = 1;
    for (auto k : k_prof) box_size = detail::saturating_mul(box_size, k);

    if (box_size == K) {
        Basis basis{{}, BasisKind::box};
        RowSpace span(ring.field(), ring.size());
        for (std::size_t flat : ring.monomial_order()) {
            const auto exps = ring.digits(flat);
            bool inside = true;
            for (std::size_t t = 0; t < exps.size(); ++t) inside = inside && exps[t] < k_prof[t];
            if (!inside) continue;
            basis.rows.push_back(detail::monomial_times(ring, exps, e));
            span.insert(basis.rows.back().data());
        }
        if (span.rank() == K) return basis;
    }

    Basis basis{{}, BasisKind::greedy};
    RowSpace span(ring.field(), ring.size());
    for (std::size_t flat : ring.monomial_order()) {
        if (span.rank() == K) break;
        PolyTensor candidate = detail::monomial_times(ring, ring.digits(flat), e);
        if (span.insert(candidate.data())) basis.rows.push_back(std::move(candidate));
    }
    if (span.rank() != K) {
        throw Error(Errc::rank_deficient, "monomial multiples of e reach rank " + std::to_string(span.rank()) +
                                              ", expected " + std::to_string(K));
    }
    return basis;
}

/// Row i holds the coefficients of rows[i] in monomial order.
inline GfMatrix generator_matrix(const Ring& ring, const std::vector<PolyTensor>& rows) {
    GfMatrix G(0, ring.size());
    for (const auto& row : rows) G.append_row(ring.to_vector(row));
    return G;
}

struct DistanceResult {
    std::optional<std::size_t> d;
    std::uint64_t examined = 0;
};

/// Minimum Hamming weight over all q^K - 1 nonzero combinations of the rows of G.
inline DistanceResult min_distance(const Field& F, const GfMatrix& G, std::uint64_t budget = 3'000'000) {
    if (G.rows() == 0) return {};
    const std::uint64_t total = detail::saturating_pow(F.order(), G.rows());
    if (total > budget) {
        throw Error(Errc::budget_exceeded, std::to_string(F.order()) + "^" + std::to_string(G.rows()) +
                                               " codewords exceed the budget of " + std::to_string(budget));
    }
    detail::CodewordEnumerator enumerator(F, G);
    enumerator.run();
    return {enumerator.best, enumerator.examined};
}

inline ProductBound product_bound(const Ring& ring, const std::vector<std::uint32_t>& k_prof, std::size_t K,
                                  BasisKind kind) {
    ProductBound out;
    if (k_prof.empty()) return out;
    out.value = 1;
    std::uint64_t box_size = 1;
    for (std::size_t t = 0; t < k_prof.size(); ++t) {
        out.value = detail::saturating_mul(out.value, ring.lengths()[t] - k_prof[t] + 1);
        box_size = detail::saturating_mul(box_size, k_prof[t]);
    }
    out.applicable = box_size == K && kind == BasisKind::box;
    return out;
}

/// Builds the code whose spectral support is the given defining set.
inline CodeRecord construct(const Ring& ring, DefiningSet set, const DistanceOptions& options = {}) {
    CodeRecord rec;
    rec.n = ring.size();
    rec.K = set.size();
    rec.singleton_bound = rec.n - rec.K + 1;
    rec.idempotent = idempotent_from_set(ring, set);
    rec.defining_set = std::move(set);
    if (rec.K == 0) {
        rec.generator = GfMatrix(0, rec.n);
        return rec;
    }
    rec.k_profile = k_profile(ring, rec.idempotent);
    Basis basis = build_basis(ring, rec.idempotent, rec.K, rec.k_profile);
    rec.basis_kind = basis.kind;
    rec.generator = generator_matrix(ring, basis.rows);
    rec.product_bound = product_bound(ring, rec.k_profile, rec.K, rec.basis_kind);

    const std::uint64_t total = detail::saturating_pow(ring.field().order(), rec.K);
    if (total <= options.budget || options.require_exact) {
        auto result = min_distance(ring.field(), rec.generator, options.budget);
        rec.d = result.d;
        rec.codewords_examined = result.examined;
    }
    return rec;
}

/// Closes the seeds under the Frobenius action and builds the code.
inline CodeRecord construct(const Ring& ring, const std::vector<MultiIndex>& seeds,
                            const DistanceOptions& options = {}) {
    return construct(ring, closure(ring, seeds), options);
}

/// sum_{i in S} X^i: the monomial-sum reading of the generating idempotent.
/// Diagnostic only; generally not idempotent.
inline PolyTensor monomial_sum(const Ring& ring, const DefiningSet& set) {
    PolyTensor out = ring.zero();
    for (const auto& idx : set.indices()) out.at(idx) = ring.field().add(out.at(idx), ring.field().one());
    return out;
}

enum class Objective { distance, product_bound };

struct SearchOptions {
    Objective objective = Objective::distance;
    DistanceOptions distance;
    /// Enumerate every orbit selection when there are at most this many.
    std::uint64_t exhaustive_limit = 100'000;
    /// Number of distinct selections drawn otherwise.
    std::size_t samples = 2'000;
    std::uint64_t seed = 0;
    /// Keep at most this many ranked codes; 0 keeps all.
    std::size_t top = 0;
};

struct SearchResult {
    std::vector<CodeRecord> codes;
    bool exhaustive = true;
    std::uint64_t candidates = 0;
};

namespace detail {

/// Number of orbit subsets with the given total size, saturating at cap + 1.
inline std::uint64_t count_selections(const std::vector<Orbit>& orbits, std::size_t target, std::uint64_t cap) {
    std::vector<std::uint64_t> ways(target + 1, 0);
    ways[0] = 1;
    for (const auto& orbit : orbits) {
        for (std::size_t s = target + 1; s-- > orbit.size();) {
            ways[s] = std::min(cap + 1, ways[s] + ways[s - orbit.size()]);
        }
    }
    return ways[target];
}

inline void enumerate_selections(const std::vector<Orbit>& orbits, std::size_t start, std::size_t remaining,
                                 std::vector<std::size_t>& chosen, std::vector<std::vector<std::size_t>>& out) {
    if (remaining == 0) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t i = start; i < orbits.size(); ++i) {
        if (orbits[i].size() > remaining) continue;
        chosen.push_back(i);
        enumerate_selections(orbits, i + 1, remaining - orbits[i].size(), chosen, out);
        chosen.pop_back();
    }
}

inline DefiningSet selection_to_set(const FrobeniusAction& action, const std::vector<Orbit>& orbits,
                                    const std::vector<std::size_t>& selection) {
    std::vector<MultiIndex> indices;
    for (auto i : selection) indices.insert(indices.end(), orbits[i].members.begin(), orbits[i].members.end());
    return DefiningSet(action, std::move(indices));
}

}  // namespace detail

/// Ranks codes of dimension K_target over all orbit selections (or a seeded
/// random sample of them). Ties go to the lexicographically smallest defining set.
inline SearchResult search(const Ring& ring, std::size_t K_target, const SearchOptions& options = {}) {
    if (K_target < 1 || K_target > ring.size())
        throw Error(Errc::infeasible, "target dimension must lie in [1, " + std::to_string(ring.size()) + "]");
    const FrobeniusAction action(ring);
    const auto orbits = all_orbits(action);
    const std::uint64_t count = detail::count_selections(orbits, K_target, options.exhaustive_limit);
    if (count == 0) throw Error(Errc::infeasible, "no union of orbits has size " + std::to_string(K_target));

    SearchResult result;
    std::vector<DefiningSet> sets;
    if (count <= options.exhaustive_limit) {
        std::vector<std::vector<std::size_t>> selections;
        std::vector<std::size_t> chosen;
        detail::enumerate_selections(orbits, 0, K_target, chosen, selections);
        for (const auto& s : selections) sets.push_back(detail::selection_to_set(action, orbits, s));
    } else {
        result.exhaustive = false;
        std::mt19937_64 rng(options.seed);
        std::set<DefiningSet> drawn;
        std::vector<std::size_t> order(orbits.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const std::size_t max_attempts = options.samples * 20;
        for (std::size_t attempt = 0; attempt < max_attempts && drawn.size() < options.samples; ++attempt) {
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::size_t> selection;
            std::size_t remaining = K_target;
            for (auto i : order) {
                if (orbits[i].size() <= remaining) {
                    selection.push_back(i);
                    remaining -= orbits[i].size();
                }
                if (remaining == 0) break;
            }
            if (remaining == 0) drawn.insert(detail::selection_to_set(action, orbits, selection));
        }
        sets.assign(drawn.begin(), drawn.end());
    }
    result.candidates = sets.size();

    result.codes.reserve(sets.size());
    for (auto& s : sets) result.codes.push_back(construct(ring, std::move(s), options.distance));

    const auto distance_key = [](const CodeRecord& c) -> std::int64_t {
        return c.d ? static_cast<std::int64_t>(*c.d) : -1;
    };
    const auto bound_key = [](const CodeRecord& c) -> std::int64_t {
        return c.product_bound.applicable ? static_cast<std::int64_t>(c.product_bound.value) : 0;
    };
    std::stable_sort(result.codes.begin(), result.codes.end(), [&](const CodeRecord& a, const CodeRecord& b) {
        if (options.objective == Objective::product_bound && bound_key(a) != bound_key(b))
            return bound_key(a) > bound_key(b);
        if (distance_key(a) != distance_key(b)) return distance_key(a) > distance_key(b);
        return a.defining_set < b.defining_set;
    });
    if (options.top != 0 && result.codes.size() > options.top) result.codes.resize(options.top);
    return result;
}

}  // namespace multicyclic
