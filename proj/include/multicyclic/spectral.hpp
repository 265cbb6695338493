#pragma once

// Multidimensional Fourier transform over F_q and the primitive idempotents
// it diagonalizes. All transforms are direct O(N^2) sums.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "ring.hpp"

namespace multicyclic {

namespace detail {

/// prod_t w_t^{sign * j_t * m_t}
inline GfElement character(const Ring& ring, std::size_t j, std::size_t m, int sign) {
    const Field& F = ring.field();
    const auto dj = ring.digits(j);
    const auto dm = ring.digits(m);
    GfElement out = F.one();
    for (std::size_t t = 0; t < ring.rank(); ++t) {
        out = F.mul(out, ring.root_power(t, sign * static_cast<std::int64_t>(dj[t]) * dm[t]));
    }
    return out;
}

inline GfElement inverse_of_integer(const Field& F, std::uint64_t n) {
    const GfElement x = F.from_integer(static_cast<std::int64_t>(n % F.characteristic()));
    if (x.is_zero())
        throw Error(Errc::division_by_zero, std::to_string(n) + " is divisible by the characteristic");
    return F.inv(x);
}

}  // namespace detail

/// values[j] = f(w_1^{j_1}, ..., w_r^{j_r}).
inline Spectrum fourier(const Ring& ring, const PolyTensor& f) {
    ring.check(f);
    const Field& F = ring.field();
    Spectrum out(ring.box());
    for (std::size_t j = 0; j < ring.size(); ++j) {
        GfElement acc = F.zero();
        for (std::size_t m = 0; m < ring.size(); ++m) {
            if (f[m].is_zero()) continue;
            acc = F.add(acc, F.mul(f[m], detail::character(ring, j, m, +1)));
        }
        out[j] = acc;
    }
    return out;
}

/// c[m] = (1/N) sum_j s[j] prod_t w_t^{-j_t m_t}.
inline PolyTensor fourier_inverse(const Ring& ring, const Spectrum& s) {
    if (!(s.box() == ring.box())) throw Error(Errc::ctx_mismatch, "spectrum shape does not match the ring");
    const Field& F = ring.field();
    const GfElement inv_n = detail::inverse_of_integer(F, ring.size());
    PolyTensor out(ring.box());
    for (std::size_t m = 0; m < ring.size(); ++m) {
        GfElement acc = F.zero();
        for (std::size_t j = 0; j < ring.size(); ++j) {
            if (s[j].is_zero()) continue;
            acc = F.add(acc, F.mul(s[j], detail::character(ring, j, m, -1)));
        }
        out[m] = F.mul(acc, inv_n);
    }
    return out;
}

/// Univariate primitive idempotent (1/n_t) sum_m w_t^{-i m} X_t^m, embedded in
/// the ring. axis is 0-based.
inline PolyTensor theta(const Ring& ring, std::size_t axis, std::uint32_t index) {
    if (axis >= ring.rank()) throw Error(Errc::axis_out_of_range, "axis " + std::to_string(axis));
    const std::uint32_t n = ring.lengths()[axis];
    if (index >= n) throw Error(Errc::index_out_of_range, "theta index " + std::to_string(index));
    const Field& F = ring.field();
    const GfElement inv_n = detail::inverse_of_integer(F, n);
    PolyTensor out(ring.box());
    for (std::uint32_t m = 0; m < n; ++m) {
        const std::int64_t exponent = -static_cast<std::int64_t>(index) * m;
        out[m * ring.box().stride(axis)] = F.mul(inv_n, ring.root_power(axis, exponent));
    }
    return out;
}

/// Primitive r-dimensional idempotent e_i = (1/N) sum_m (prod_t w_t^{-i_t m_t}) X^m.
/// Its spectrum is the Kronecker delta at i.
inline PolyTensor idempotent(const Ring& ring, const MultiIndex& index) {
    const std::size_t i = ring.box().flat(index);
    const Field& F = ring.field();
    const GfElement inv_n = detail::inverse_of_integer(F, ring.size());
    PolyTensor out(ring.box());
    for (std::size_t m = 0; m < ring.size(); ++m) {
        out[m] = F.mul(inv_n, detail::character(ring, i, m, -1));
    }
    return out;
}

/// 0/1 indicator spectrum of a set of multi-indices.
inline Spectrum indicator(const Ring& ring, const std::vector<MultiIndex>& indices) {
    Spectrum out(ring.box());
    for (const auto& idx : indices) out.at(idx) = ring.field().one();
    return out;
}

/// Multi-indices where the spectrum is nonzero, in lexicographic order.
inline std::vector<MultiIndex> support(const Spectrum& s) {
    std::vector<MultiIndex> out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (!s[j].is_zero()) out.push_back(s.box().unravel(j));
    }
    return out;
}

/// sum_{j in S} e_j, computed as the inverse transform of the indicator of S.
inline PolyTensor idempotent_from_set(const Ring& ring, const std::vector<MultiIndex>& indices) {
    return fourier_inverse(ring, indicator(ring, indices));
}

}  // namespace multicyclic
