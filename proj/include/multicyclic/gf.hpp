#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are encoded as integers in [0, q): the base-p digits of the value
// are the coefficients of the polynomial representative, lowest degree first.
// Prime fields use plain modular arithmetic; extension fields multiply through
// discrete log / antilog tables built once at construction.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace multicyclic {

struct GfElement {
    std::uint32_t value = 0;

    constexpr GfElement() = default;
    constexpr explicit GfElement(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }

    friend constexpr auto operator<=>(GfElement, GfElement) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Dense polynomial over GF(p), coefficients low degree first.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
inline PrimePoly poly_rem(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    trim(out);
    return out;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PrimePoly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
public:
    static constexpr unsigned max_degree = 16;
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 16;
    static constexpr std::uint32_t add_table_limit = 1024;

    /// Builds GF(p^m). When m > 1 and no modulus is given, the lexicographically
    /// smallest monic irreducible of degree m is used. A supplied modulus lists
    /// m + 1 base-p coefficients, lowest degree first, with leading coefficient 1.
    explicit Field(std::uint32_t p, unsigned m = 1,
                   std::optional<std::vector<std::uint32_t>> modulus = std::nullopt)
        : p_(p), m_(m) {
        if (!detail::is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
        if (m < 1) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
        if (m > max_degree) throw Error(Errc::degree_too_large, "extension degree exceeds 16");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > max_order) throw Error(Errc::degree_too_large, "field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (m == 1) {
            if (modulus && !modulus->empty())
                throw Error(Errc::invalid_argument, "prime fields take no modulus");
        } else if (modulus) {
            if (modulus->size() != m + 1 || modulus->back() != 1)
                throw Error(Errc::invalid_argument, "modulus must be monic of degree " + std::to_string(m));
            for (auto c : *modulus) {
                if (c >= p) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
            }
            if (!detail::is_irreducible(*modulus, p))
                throw Error(Errc::reducible_modulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
            modulus_ = *modulus;
        } else {
            modulus_ = default_modulus(p, m);
        }

        find_generator();
        build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    GfElement generator() const { return generator_; }

    GfElement zero() const { return GfElement{0}; }
    GfElement one() const { return GfElement{1}; }

    GfElement element(std::uint64_t v) const {
        if (v >= q_) throw Error(Errc::invalid_argument, "element " + std::to_string(v) + " outside field");
        return GfElement{static_cast<std::uint32_t>(v)};
    }

    /// Image of an integer in the prime subfield.
    GfElement from_integer(std::int64_t n) const {
        const std::int64_t p = p_;
        return GfElement{static_cast<std::uint32_t>(((n % p) + p) % p)};
    }

    /// Discrete log to the base of the generator; x must be nonzero.
    std::uint32_t log(GfElement x) const {
        if (x.is_zero()) throw Error(Errc::division_by_zero, "log of zero");
        return log_[x.value];
    }
    GfElement antilog(std::uint64_t k) const { return GfElement{antilog_[k % (q_ - 1)]}; }

    GfElement add(GfElement a, GfElement b) const {
        if (m_ == 1) return GfElement{(a.value + b.value) % p_};
        if (p_ == 2) return GfElement{a.value ^ b.value};
        if (!add_table_.empty()) return GfElement{add_table_[a.value * q_ + b.value]};
        return add_digits(a, b);
    }

    GfElement neg(GfElement a) const {
        if (m_ == 1) return GfElement{(p_ - a.value) % p_};
        if (p_ == 2) return a;
        return GfElement{neg_table_[a.value]};
    }

    GfElement sub(GfElement a, GfElement b) const { return add(a, neg(b)); }

    GfElement mul(GfElement a, GfElement b) const {
        if (m_ == 1) {
            return GfElement{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
        }
        if (a.is_zero() || b.is_zero()) return zero();
        std::uint32_t k = log_[a.value] + log_[b.value];
        if (k >= q_ - 1) k -= q_ - 1;
        return GfElement{antilog_[k]};
    }

    GfElement inv(GfElement a) const {
        if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        if (m_ == 1) return GfElement{detail::inv_mod_prime(a.value, p_)};
        return GfElement{antilog_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    }

    GfElement div(GfElement a, GfElement b) const { return mul(a, inv(b)); }

    /// a^k for any integer k; negative exponents require a != 0. 0^0 = 1.
    GfElement pow(GfElement a, std::int64_t k) const {
        if (k < 0) {
            a = inv(a);
            k = -k;
        }
        GfElement result = one();
        GfElement base = a;
        auto e = static_cast<std::uint64_t>(k);
        while (e > 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(GfElement a) const {
        if (a.is_zero()) throw Error(Errc::division_by_zero, "order of zero");
        std::uint64_t order = q_ - 1;
        for (auto r : detail::prime_factors(q_ - 1)) {
            while (order % r == 0 && pow(a, static_cast<std::int64_t>(order / r)) == one()) order /= r;
        }
        return order;
    }

    /// generator^((q-1)/n), an element of order exactly n. Requires n | q-1.
    GfElement nth_root_of_unity(std::uint64_t n) const {
        if (n == 0 || (q_ - 1) % n != 0) {
            throw Error(Errc::order_not_dividing,
                        std::to_string(n) + " does not divide q-1 = " + std::to_string(q_ - 1));
        }
        return pow(generator_, static_cast<std::int64_t>((q_ - 1) / n));
    }

    /// Multiplication by polynomial arithmetic modulo the modulus. Table-free;
    /// used to build the tables.
    GfElement mul_slow(GfElement a, GfElement b) const {
        if (m_ == 1) return mul(a, b);
        auto prod = detail::poly_mul(decode(a), decode(b), p_);
        return encode(detail::poly_rem(std::move(prod), modulus_, p_));
    }

    detail::PrimePoly decode(GfElement a) const {
        detail::PrimePoly out(m_, 0);
        std::uint32_t v = a.value;
        for (unsigned i = 0; i < m_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        detail::trim(out);
        return out;
    }

    GfElement encode(const detail::PrimePoly& poly) const {
        std::uint32_t out = 0, scale = 1;
        for (std::size_t i = 0; i < poly.size() && i < m_; ++i) {
            out += poly[i] * scale;
            scale *= p_;
        }
        return GfElement{out};
    }

    /// Lexicographically smallest monic irreducible of degree m over GF(p),
    /// comparing the non-leading coefficients from degree m-1 down to 0.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned m) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::PrimePoly f(m + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < m; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[m] = 1;
            if (f[0] != 0 && detail::is_irreducible(f, p)) return f;
        }
        throw Error(Errc::reducible_modulus, "no irreducible polynomial found");
    }

private:
    GfElement pow_slow(GfElement a, std::uint64_t e) const {
        GfElement result = one();
        while (e > 0) {
            if (e & 1U) result = mul_slow(result, a);
            a = mul_slow(a, a);
            e >>= 1U;
        }
        return result;
    }

    void find_generator() {
        if (q_ == 2) {
            generator_ = one();
            return;
        }
        const auto factors = detail::prime_factors(q_ - 1);
        for (std::uint32_t v = 2; v < q_; ++v) {
            bool primitive = true;
            for (auto r : factors) {
                if (pow_slow(GfElement{v}, (q_ - 1) / r) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = GfElement{v};
                return;
            }
        }
        throw Error(Errc::invalid_argument, "no primitive element found");
    }

    GfElement add_digits(GfElement a, GfElement b) const {
        std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
        for (unsigned i = 0; i < m_; ++i) {
            out += ((x % p_ + y % p_) % p_) * scale;
            x /= p_;
            y /= p_;
            scale *= p_;
        }
        return GfElement{out};
    }

    void build_tables() {
        if (m_ > 1 && p_ != 2) {
            neg_table_.assign(q_, 0);
            for (std::uint32_t v = 0; v < q_; ++v) {
                std::uint32_t out = 0, scale = 1, x = v;
                for (unsigned i = 0; i < m_; ++i) {
                    out += ((p_ - x % p_) % p_) * scale;
                    x /= p_;
                    scale *= p_;
                }
                neg_table_[v] = out;
            }
            if (q_ <= add_table_limit) {
                add_table_.assign(std::size_t{q_} * q_, 0);
                for (std::uint32_t a = 0; a < q_; ++a)
                    for (std::uint32_t b = 0; b < q_; ++b)
                        add_table_[a * q_ + b] = add_digits(GfElement{a}, GfElement{b}).value;
            }
        }
        log_.assign(q_, 0);
        antilog_.assign(q_ - 1, 0);
        GfElement x = one();
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            antilog_[k] = x.value;
            log_[x.value] = k;
            x = mul_slow(x, generator_);
        }
    }

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    GfElement generator_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> add_table_;  // q*q entries, only for small odd-characteristic extensions
};

}  // namespace multicyclic
