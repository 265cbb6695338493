#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the transform, convolution or code-construction paths under test.

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include <multicyclic/multicyclic.hpp>

namespace oracle {

using multicyclic::Field;
using multicyclic::GfElement;
using multicyclic::MultiIndex;
using multicyclic::PolyTensor;
using multicyclic::Ring;

/// Sum of c_m * prod_t point_t^{m_t} with every power taken by Field::pow.
inline GfElement naive_evaluate(const Ring& ring, const PolyTensor& f, const std::vector<GfElement>& point) {
    const Field& F = ring.field();
    GfElement acc = F.zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const MultiIndex m = ring.box().unravel(i);
        GfElement term = f[i];
        for (std::size_t t = 0; t < m.size(); ++t) term = F.mul(term, F.pow(point[t], m[t]));
        acc = F.add(acc, term);
    }
    return acc;
}

inline std::vector<GfElement> root_point(const Ring& ring, const MultiIndex& j) {
    std::vector<GfElement> point;
    for (std::size_t t = 0; t < j.size(); ++t) point.push_back(ring.field().pow(ring.roots()[t], j[t]));
    return point;
}

/// Product of polynomials over GF(p) reduced modulo the field modulus, on
/// base-p encodings. Written independently of Field::mul_slow.
inline std::uint32_t poly_field_mul(const Field& F, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = F.characteristic();
    const unsigned m = F.degree();
    std::vector<std::uint64_t> x(m, 0), y(m, 0), prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i, a /= p, b /= p) {
        x[i] = a % p;
        y[i] = b % p;
    }
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    if (m > 1) {
        const auto& mod = F.modulus();
        for (unsigned deg = 2 * m - 1; deg >= m; --deg) {
            const std::uint64_t c = prod[deg];
            if (c == 0) continue;
            for (unsigned i = 0; i <= m; ++i) prod[deg - m + i] = (prod[deg - m + i] + (p - c) * mod[i]) % p;
        }
    }
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i, scale *= p) out += static_cast<std::uint32_t>(prod[i]) * scale;
    return out;
}

/// Direct definition of the r-dimensional product: sum over all pairs.
inline PolyTensor naive_product(const Ring& ring, const PolyTensor& a, const PolyTensor& b) {
    const Field& F = ring.field();
    PolyTensor out(ring.box());
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = 0; v < b.size(); ++v) {
            MultiIndex mu = ring.box().unravel(u), mv = ring.box().unravel(v), w(mu.size());
            for (std::size_t t = 0; t < mu.size(); ++t) w[t] = (mu[t] + mv[t]) % ring.lengths()[t];
            out.at(w) = F.add(out.at(w), F.mul(a[u], b[v]));
        }
    }
    return out;
}

/// Every element of R as a coefficient tensor, enumerated by base-q counting.
template <class Fn>
void for_each_element(const Ring& ring, Fn&& fn) {
    const std::uint32_t q = ring.field().order();
    PolyTensor f(ring.box());
    while (true) {
        fn(f);
        std::size_t i = 0;
        while (i < f.size() && f[i].value == q - 1) f[i++] = GfElement{0};
        if (i == f.size()) return;
        f[i] = GfElement{f[i].value + 1};
    }
}

/// Minimum weight over nonzero f in R vanishing at every root point outside S,
/// and the number of such f. Exhaustive over all q^N elements.
struct BruteCode {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    std::uint64_t nonzero_codewords = 0;
};

inline BruteCode brute_force_code(const Ring& ring, const std::vector<MultiIndex>& S) {
    std::set<MultiIndex> inside(S.begin(), S.end());
    std::vector<std::vector<GfElement>> parity_points;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        const MultiIndex idx = ring.box().unravel(j);
        if (!inside.contains(idx)) parity_points.push_back(root_point(ring, idx));
    }
    BruteCode out;
    for_each_element(ring, [&](const PolyTensor& f) {
        if (f.is_zero()) return;
        for (const auto& point : parity_points) {
            if (!naive_evaluate(ring, f, point).is_zero()) return;
        }
        ++out.nonzero_codewords;
        std::size_t w = 0;
        for (std::size_t i = 0; i < f.size(); ++i) w += f[i].is_zero() ? 0 : 1;
        out.d = std::min(out.d, w);
    });
    return out;
}

/// k_t = number of distinct t-th coordinates in S: X_t acts on the span of
/// {e_j : j in S} with eigenvalues w_t^{j_t}, so the cyclic subspace generated
/// by e has that dimension.
inline std::vector<std::uint32_t> projection_profile(const Ring& ring, const std::vector<MultiIndex>& S) {
    std::vector<std::uint32_t> out(ring.rank());
    for (std::size_t t = 0; t < ring.rank(); ++t) {
        std::set<std::uint32_t> coords;
        for (const auto& j : S) coords.insert(j[t]);
        out[t] = static_cast<std::uint32_t>(coords.size());
    }
    return out;
}

inline std::vector<MultiIndex> random_subset(const Ring& ring, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    std::vector<MultiIndex> out;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        if (coin(rng)) out.push_back(ring.box().unravel(j));
    }
    return out;
}

/// For every subset of frequency points (bit j = flat index j), the minimum
/// weight of a nonzero f whose root-point zeros are exactly the complement.
/// Exhaustive over R, so only for q^N up to about a million and N <= 16.
inline std::vector<std::size_t> weight_by_support(const Ring& ring) {
    std::vector<std::vector<GfElement>> points;
    for (std::size_t j = 0; j < ring.size(); ++j) points.push_back(root_point(ring, ring.box().unravel(j)));
    std::vector<std::size_t> best(std::size_t{1} << ring.size(), std::numeric_limits<std::size_t>::max());
    for_each_element(ring, [&](const PolyTensor& f) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (!naive_evaluate(ring, f, points[j]).is_zero()) mask |= std::size_t{1} << j;
        }
        std::size_t w = 0;
        for (std::size_t i = 0; i < f.size(); ++i) w += f[i].is_zero() ? 0 : 1;
        best[mask] = std::min(best[mask], w);
    });
    return best;
}

/// Minimum distance of the code with defining set S from a weight_by_support table.
inline std::size_t distance_from_table(const Ring& ring, const std::vector<std::size_t>& table,
                                       const std::vector<MultiIndex>& S) {
    std::size_t mask = 0;
    for (const auto& j : S) mask |= std::size_t{1} << ring.box().flat(j);
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) d = std::min(d, table[sub]);
    return d;
}

}  // namespace oracle
