#pragma once

// Frobenius action on multi-indices and the cyclotomic orbits it generates.
//
// The action multiplies every component by a fixed multiplier modulo its axis
// length. For a ring over F_q the multiplier is q; a subfield action uses
// p^s for s | m, which is what produces nontrivial orbits inside rings that
// satisfy n_t | q-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "ring.hpp"
#include "spectral.hpp"

namespace multicyclic {

class FrobeniusAction {
public:
    /// The multiplier must be coprime to every axis length so that the action
    /// permutes the box.
    FrobeniusAction(std::uint64_t multiplier, std::vector<std::uint32_t> lengths)
        : multiplier_(multiplier), box_(std::move(lengths)) {
        for (auto n : box_.lengths()) {
            if (std::gcd(multiplier_, std::uint64_t{n}) != 1)
                throw Error(Errc::invalid_argument, "multiplier " + std::to_string(multiplier_) +
                                                        " is not coprime to axis length " + std::to_string(n));
        }
    }

    /// sigma(i) = q * i componentwise.
    explicit FrobeniusAction(const Ring& ring) : multiplier_(ring.field().order()), box_(ring.box()) {}

    /// Action of the subfield GF(p^s); s must divide the extension degree.
    static FrobeniusAction subfield(const Ring& ring, unsigned s) {
        const unsigned m = ring.field().degree();
        if (s == 0 || m % s != 0)
            throw Error(Errc::invalid_argument, "subfield degree " + std::to_string(s) + " does not divide " +
                                                    std::to_string(m));
        std::uint64_t multiplier = 1;
        for (unsigned i = 0; i < s; ++i) multiplier *= ring.field().characteristic();
        return FrobeniusAction(multiplier, ring.lengths());
    }

    std::uint64_t multiplier() const { return multiplier_; }
    const IndexBox& box() const { return box_; }

    MultiIndex apply(const MultiIndex& idx) const {
        box_.check(idx);
        MultiIndex out(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const std::uint64_t n = box_.lengths()[t];
            out[t] = static_cast<std::uint32_t>((multiplier_ % n) * idx[t] % n);
        }
        return out;
    }

private:
    std::uint64_t multiplier_;
    IndexBox box_;
};

struct Orbit {
    /// Lexicographically smallest member.
    MultiIndex representative;
    /// Members in iteration order starting from the representative.
    std::vector<MultiIndex> members;

    std::size_t size() const { return members.size(); }
};

/// A set of multi-indices inside the box, kept sorted and unique, with a flag
/// telling whether it is a union of orbits.
class DefiningSet {
public:
    DefiningSet() = default;

    DefiningSet(const FrobeniusAction& action, std::vector<MultiIndex> indices) : indices_(std::move(indices)) {
        for (const auto& idx : indices_) action.box().check(idx);
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
        closed_ = std::all_of(indices_.begin(), indices_.end(), [&](const MultiIndex& idx) {
            return std::binary_search(indices_.begin(), indices_.end(), action.apply(idx));
        });
    }

    const std::vector<MultiIndex>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool closed() const { return closed_; }
    bool contains(const MultiIndex& idx) const { return std::binary_search(indices_.begin(), indices_.end(), idx); }

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) { return a.indices_ == b.indices_; }
    friend bool operator<(const DefiningSet& a, const DefiningSet& b) { return a.indices_ < b.indices_; }

private:
    std::vector<MultiIndex> indices_;
    bool closed_ = true;
};

inline MultiIndex frobenius(const FrobeniusAction& action, const MultiIndex& idx) { return action.apply(idx); }
inline MultiIndex frobenius(const Ring& ring, const MultiIndex& idx) { return FrobeniusAction(ring).apply(idx); }

inline Orbit orbit_of(const FrobeniusAction& action, const MultiIndex& idx) {
    std::vector<MultiIndex> trajectory{idx};
    for (MultiIndex next = action.apply(idx); next != idx; next = action.apply(next)) trajectory.push_back(next);
    const auto smallest = std::min_element(trajectory.begin(), trajectory.end());
    std::rotate(trajectory.begin(), smallest, trajectory.end());
    Orbit orbit;
    orbit.representative = trajectory.front();
    orbit.members = std::move(trajectory);
    return orbit;
}

inline Orbit orbit_of(const Ring& ring, const MultiIndex& idx) { return orbit_of(FrobeniusAction(ring), idx); }

/// Partition of the box into orbits, ordered by representative.
inline std::vector<Orbit> all_orbits(const FrobeniusAction& action) {
    const IndexBox& box = action.box();
    std::vector<bool> seen(box.size(), false);
    std::vector<Orbit> out;
    for (std::size_t flat = 0; flat < box.size(); ++flat) {
        if (seen[flat]) continue;
        Orbit orbit = orbit_of(action, box.unravel(flat));
        for (const auto& member : orbit.members) seen[box.flat(member)] = true;
        out.push_back(std::move(orbit));
    }
    return out;
}

inline std::vector<Orbit> all_orbits(const Ring& ring) { return all_orbits(FrobeniusAction(ring)); }

/// Union of the orbits of all seeds.
inline DefiningSet closure(const FrobeniusAction& action, const std::vector<MultiIndex>& seeds) {
    std::set<MultiIndex> members;
    for (const auto& seed : seeds) {
        if (members.contains(seed)) continue;
        for (auto& m : orbit_of(action, seed).members) members.insert(std::move(m));
    }
    return DefiningSet(action, std::vector<MultiIndex>(members.begin(), members.end()));
}

inline DefiningSet closure(const Ring& ring, const std::vector<MultiIndex>& seeds) {
    return closure(FrobeniusAction(ring), seeds);
}

inline PolyTensor idempotent_from_set(const Ring& ring, const DefiningSet& set) {
    return idempotent_from_set(ring, set.indices());
}

/// Representatives of the orbits on which the spectrum of e equals 1, each
/// mapped to its coefficient (always 1). Rejects spectra with values outside
/// {0, 1} and spectra that are not constant on orbits.
inline std::map<MultiIndex, GfElement> combinatorial_form(const Ring& ring, const PolyTensor& e,
                                                          const FrobeniusAction& action) {
    const Spectrum spectrum = fourier(ring, e);
    const Field& F = ring.field();
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
        if (spectrum[j] != F.zero() && spectrum[j] != F.one()) {
            throw Error(Errc::not_idempotent, "spectrum value " + std::to_string(spectrum[j].value) + " at " +
                                                  format_index(spectrum.box().unravel(j)) + " is not 0 or 1");
        }
    }
    std::map<MultiIndex, GfElement> out;
    for (const auto& orbit : all_orbits(action)) {
        const GfElement value = spectrum.at(orbit.representative);
        for (const auto& member : orbit.members) {
            if (spectrum.at(member) != value) {
                throw Error(Errc::not_orbit_constant, "spectrum varies within the orbit of " + format_index(orbit.representative));
            }
        }
        if (value == F.one()) out.emplace(orbit.representative, value);
    }
    return out;
}

inline std::map<MultiIndex, GfElement> combinatorial_form(const Ring& ring, const PolyTensor& e) {
    return combinatorial_form(ring, e, FrobeniusAction(ring));
}

}  // namespace multicyclic
