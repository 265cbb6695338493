#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <multicyclic/gf.hpp>

#include "oracles.hpp"

using namespace multicyclic;

namespace {

std::vector<Field> small_fields() {
    return {Field(2), Field(3), Field(2, 2), Field(5), Field(7), Field(2, 3), Field(3, 2), Field(2, 4),
            Field(5, 2), Field(3, 3), Field(2, 5), Field(7, 2), Field(2, 6)};
}

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::invalid_argument;
}

}  // namespace

TEST(Field, PrimeFieldGenerators) {
    const Field f3(3);
    EXPECT_EQ(f3.order(), 3U);
    EXPECT_EQ(f3.generator(), GfElement{2});
    // 2^1 = 2 != 1, 2^2 = 4 = 1 mod 3.
    EXPECT_NE(f3.pow(GfElement{2}, 1), f3.one());
    EXPECT_EQ(f3.pow(GfElement{2}, 2), f3.one());

    const Field f2(2);
    EXPECT_EQ(f2.order(), 2U);
    EXPECT_EQ(f2.generator(), GfElement{1});
}

TEST(Field, Gf8NonzeroElementsHaveOrderDividingSeven) {
    const Field f8(2, 3);
    EXPECT_EQ(f8.order(), 8U);
    for (std::uint32_t v = 1; v < 8; ++v) {
        GfElement x{v}, acc = f8.one();
        for (int i = 0; i < 7; ++i) acc = f8.mul(acc, x);
        EXPECT_EQ(acc, f8.one()) << "x = " << v;
    }
    EXPECT_EQ(f8.multiplicative_order(f8.generator()), 7U);
}

TEST(Field, SmallArithmetic) {
    const Field f3(3);
    EXPECT_EQ(f3.inv(GfElement{2}), GfElement{2});
    EXPECT_EQ(f3.add(GfElement{2}, GfElement{2}), GfElement{1});
    EXPECT_EQ(f3.sub(GfElement{0}, GfElement{1}), GfElement{2});
    EXPECT_EQ(f3.pow(GfElement{2}, -1), GfElement{2});
    EXPECT_EQ(f3.pow(GfElement{0}, 0), f3.one());
}

TEST(Field, ExtensionMultiplicationMatchesPolynomialOracle) {
    for (const Field& F : {Field(2, 3), Field(3, 2), Field(2, 4), Field(5, 2)}) {
        for (std::uint32_t a = 0; a < F.order(); ++a) {
            for (std::uint32_t b = 0; b < F.order(); ++b) {
                ASSERT_EQ(F.mul(GfElement{a}, GfElement{b}).value, oracle::poly_field_mul(F, a, b))
                    << "q=" << F.order() << " a=" << a << " b=" << b;
            }
        }
    }
}

TEST(Field, ExtensionAdditionIsDigitwise) {
    auto digitwise = [](const Field& F, std::uint32_t a, std::uint32_t b, bool negate_b) {
        const std::uint32_t p = F.characteristic();
        std::uint32_t out = 0, scale = 1;
        for (unsigned i = 0; i < F.degree(); ++i, a /= p, b /= p, scale *= p) {
            const std::uint32_t y = negate_b ? (p - b % p) % p : b % p;
            out += (a % p + y) % p * scale;
        }
        return out;
    };
    std::mt19937_64 rng(3);
    // GF(3^7) is above the addition-table size and takes the digit path.
    for (const Field& F : {Field(2, 3), Field(3, 2), Field(5, 2), Field(3, 7), Field(2, 10)}) {
        std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
        for (int trial = 0; trial < 5000; ++trial) {
            const std::uint32_t a = dist(rng), b = dist(rng);
            ASSERT_EQ(F.add(GfElement{a}, GfElement{b}).value, digitwise(F, a, b, false));
            ASSERT_EQ(F.sub(GfElement{a}, GfElement{b}).value, digitwise(F, a, b, true));
        }
    }
}

TEST(Field, LogTablesInvert) {
    for (const Field& F : small_fields()) {
        for (std::uint32_t v = 1; v < F.order(); ++v) EXPECT_EQ(F.antilog(F.log(GfElement{v})), GfElement{v});
        for (std::uint32_t k = 0; k + 1 < F.order(); ++k) EXPECT_EQ(F.log(F.antilog(k)), k);
        EXPECT_EQ(F.multiplicative_order(F.generator()), F.order() - 1);
    }
}

TEST(Field, AxiomsHoldExhaustively) {
    for (const Field& F : small_fields()) {
        const std::uint32_t q = F.order();
        for (std::uint32_t a = 0; a < q; ++a) {
            const GfElement x{a};
            EXPECT_EQ(F.add(x, F.zero()), x);
            EXPECT_EQ(F.mul(x, F.one()), x);
            EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
            if (a != 0) {
                EXPECT_EQ(F.mul(x, F.inv(x)), F.one()) << "q=" << q << " a=" << a;
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                const GfElement y{b};
                ASSERT_EQ(F.add(x, y), F.add(y, x));
                ASSERT_EQ(F.mul(x, y), F.mul(y, x));
                for (std::uint32_t c = 0; c < q; ++c) {
                    const GfElement z{c};
                    ASSERT_EQ(F.add(F.add(x, y), z), F.add(x, F.add(y, z)));
                    ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
                    ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
                }
            }
        }
    }
}

TEST(Field, RootsOfUnityHaveExactOrder) {
    const Field f3(3);
    EXPECT_EQ(f3.nth_root_of_unity(2), GfElement{2});
    EXPECT_EQ(f3.nth_root_of_unity(1), f3.one());
    EXPECT_EQ(error_of([&] { f3.nth_root_of_unity(4); }), Errc::order_not_dividing);

    for (const Field& F : small_fields()) {
        EXPECT_EQ(F.nth_root_of_unity(1), F.one());
        for (std::uint32_t n = 1; n < F.order(); ++n) {
            if ((F.order() - 1) % n != 0) continue;
            const GfElement w = F.nth_root_of_unity(n);
            for (std::uint32_t k = 1; k < n; ++k) EXPECT_NE(F.pow(w, k), F.one());
            EXPECT_EQ(F.pow(w, n), F.one());
            // 1/n exists in F_q whenever n | q-1.
            EXPECT_FALSE(F.from_integer(n).is_zero());
        }
    }
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
    EXPECT_EQ(Field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(Field(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
    EXPECT_EQ(Field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_TRUE(Field(3).modulus().empty());
}

TEST(Field, ExplicitModulus) {
    // x^3 + x^2 + 1 is the other irreducible cubic over GF(2).
    const Field f8(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    EXPECT_EQ(f8.modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b)
            EXPECT_EQ(f8.mul(GfElement{a}, GfElement{b}).value, oracle::poly_field_mul(f8, a, b));
}

TEST(Field, ConstructionErrors) {
    EXPECT_EQ(error_of([] { Field(4); }), Errc::not_prime);
    EXPECT_EQ(error_of([] { Field(1); }), Errc::not_prime);
    EXPECT_EQ(error_of([] { Field(2, 17); }), Errc::degree_too_large);
    EXPECT_EQ(error_of([] { Field(3, 11); }), Errc::degree_too_large);
    // x^2 + 1 = (x - 2)(x - 3) over GF(5).
    EXPECT_EQ(error_of([] { Field(5, 2, std::vector<std::uint32_t>{1, 0, 1}); }), Errc::reducible_modulus);
    EXPECT_EQ(error_of([] { Field(5, 2, std::vector<std::uint32_t>{1, 0, 2}); }), Errc::invalid_argument);
    EXPECT_EQ(error_of([] { Field(3).inv(GfElement{0}); }), Errc::division_by_zero);
    EXPECT_EQ(error_of([] { Field(3).element(3); }), Errc::invalid_argument);
    EXPECT_NO_THROW(Field(2, 16));
}
