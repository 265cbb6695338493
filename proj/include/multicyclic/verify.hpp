#pragma once

// Property suite run by `multicyclic verify`: the idempotent family, the
// Fourier isomorphism, and the combinatorial/spectral equivalence on one ring.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbits.hpp"
#include "ring.hpp"
#include "spectral.hpp"

namespace multicyclic {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string detail;  // counterexample when failed
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    /// Orthogonality runs over every pair up to this ring size, else over `trials` random pairs.
    std::size_t exhaustive_pairs_limit = 64;
};

inline PolyTensor random_tensor(const Ring& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ring.field().order() - 1);
    PolyTensor out(ring.box());
    for (std::size_t i = 0; i < ring.size(); ++i) out[i] = GfElement{dist(rng)};
    return out;
}

/// Random union of orbits of the given action.
inline DefiningSet random_closed_set(const FrobeniusAction& action, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<MultiIndex> indices;
    for (const auto& orbit : all_orbits(action)) {
        if (coin(rng)) indices.insert(indices.end(), orbit.members.begin(), orbit.members.end());
    }
    return DefiningSet(action, std::move(indices));
}

inline std::vector<PropertyResult> verify_ring(const Ring& ring, const VerifyOptions& options = {}) {
    std::mt19937_64 rng(options.seed);
    std::vector<PropertyResult> out;
    const std::size_t N = ring.size();
    std::vector<PolyTensor> family;
    family.reserve(N);
    for (std::size_t i = 0; i < N; ++i) family.push_back(idempotent(ring, ring.box().unravel(i)));

    auto fail = [](PropertyResult& r, std::string detail) {
        if (!r.passed) return;
        r.passed = false;
        r.detail = std::move(detail);
    };

    {
        PropertyResult r{"idempotence", true, {}};
        for (std::size_t i = 0; i < N && r.passed; ++i) {
            if (!(ring.mul(family[i], family[i]) == family[i]))
                fail(r, "e" + format_index(ring.box().unravel(i)) + "^2 != e");
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"orthogonality", true, {}};
        auto check = [&](std::size_t i, std::size_t j) {
            if (!ring.mul(family[i], family[j]).is_zero())
                fail(r, "e" + format_index(ring.box().unravel(i)) + " * e" + format_index(ring.box().unravel(j)) +
                            " != 0");
        };
        if (N <= options.exhaustive_pairs_limit) {
            for (std::size_t i = 0; i < N && r.passed; ++i) {
                for (std::size_t j = 0; j < N && r.passed; ++j) {
                    if (i != j) check(i, j);
                }
            }
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, N - 1);
            for (std::size_t k = 0; k < options.trials && r.passed; ++k) {
                const auto i = pick(rng), j = pick(rng);
                if (i != j) check(i, j);
            }
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"partition_of_unity", true, {}};
        PolyTensor sum = ring.zero();
        for (const auto& e : family) sum = ring.add(sum, e);
        if (!(sum == ring.one())) fail(r, "sum of idempotents = " + ring.to_string(sum));
        out.push_back(r);
    }
    {
        PropertyResult r{"evaluation", true, {}};
        for (std::size_t i = 0; i < N && r.passed; ++i) {
            const Spectrum s = fourier(ring, family[i]);
            for (std::size_t j = 0; j < N; ++j) {
                const GfElement expected = i == j ? ring.field().one() : ring.field().zero();
                if (s[j] != expected) {
                    fail(r, "e" + format_index(ring.box().unravel(i)) + " at " + format_index(ring.box().unravel(j)) +
                                " = " + std::to_string(s[j].value));
                    break;
                }
            }
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"fourier_round_trip", true, {}};
        for (std::size_t k = 0; k < options.trials && r.passed; ++k) {
            const PolyTensor f = random_tensor(ring, rng);
            if (!(fourier_inverse(ring, fourier(ring, f)) == f)) fail(r, "f = " + ring.to_string(f));
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"convolution", true, {}};
        for (std::size_t k = 0; k < options.trials && r.passed; ++k) {
            const PolyTensor a = random_tensor(ring, rng);
            const PolyTensor b = random_tensor(ring, rng);
            const Spectrum sa = fourier(ring, a), sb = fourier(ring, b);
            const Spectrum sab = fourier(ring, ring.mul(a, b));
            for (std::size_t j = 0; j < N; ++j) {
                if (sab[j] != ring.field().mul(sa[j], sb[j])) {
                    fail(r, "a = " + ring.to_string(a) + ", b = " + ring.to_string(b));
                    break;
                }
            }
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"equivalence_round_trip", true, {}};
        const FrobeniusAction action(ring);
        for (std::size_t k = 0; k < options.trials && r.passed; ++k) {
            const DefiningSet set = random_closed_set(action, rng);
            const PolyTensor e = idempotent_from_set(ring, set);
            std::vector<MultiIndex> reps;
            for (const auto& [rep, coeff] : combinatorial_form(ring, e, action)) reps.push_back(rep);
            const PolyTensor again = idempotent_from_set(ring, closure(action, reps));
            if (!(again == e)) fail(r, "S = " + std::to_string(set.size()) + " indices");
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace multicyclic
