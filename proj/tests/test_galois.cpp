#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "lrc/curves.hpp"
#include "lrc/error.hpp"
#include "lrc/galois.hpp"
#include "lrc/poly.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an lrc::Error");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("default modulus is the smallest irreducible by encoding") {
    for (auto [p, d] : kSmallFields) {
        if (d == 1) continue;
        Field F = Field::make(p, d);
        const auto& mod = F.modulus();
        REQUIRE(mod.size() == d + 1);
        CHECK(mod.back() == 1);
        CHECK(oracle::irreducible_by_trial_division(mod, p));
        // nothing smaller is irreducible
        const std::uint32_t chosen = oracle::from_digits(oracle::Digits(mod.begin(), mod.end() - 1), p);
        for (std::uint32_t idx = 0; idx < chosen; ++idx) {
            auto g = oracle::to_digits(idx, p, d);
            g.push_back(1);
            CHECK_FALSE(oracle::irreducible_by_trial_division(g, p));
        }
    }
    CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("multiplication and addition match schoolbook arithmetic for q <= 16") {
    for (auto [p, d] : kSmallFields) {
        Field F = Field::make(p, d);
        const auto mod = d == 1 ? oracle::Digits{0, 1} : oracle::Digits(F.modulus().begin(), F.modulus().end());
        for (auto a : F.elements()) {
            for (auto b : F.elements()) {
                const auto want_mul = d == 1 ? (a.code * b.code) % p : oracle::field_mul(a.code, b.code, p, mod);
                CHECK(F.mul(a, b).code == want_mul);
                CHECK(F.add(a, b).code == oracle::field_add(a.code, b.code, p, d));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, d] : kSmallFields) {
        Field F = Field::make(p, d);
        const auto els = F.elements();
        for (auto a : els) {
            CHECK(F.add(a, F.neg(a)) == F.zero());
            CHECK(F.sub(a, a) == F.zero());
            CHECK(F.mul(a, F.one()) == a);
            if (a != F.zero()) {
                const auto mod = d == 1 ? oracle::Digits{0, 1} : oracle::Digits(F.modulus().begin(), F.modulus().end());
                const auto brute = d == 1 ? [&] {
                    for (std::uint32_t b = 1; b < p; ++b) {
                        if ((a.code * b) % p == 1) return b;
                    }
                    return 0u;
                }()
                                          : oracle::field_inv(a.code, p, mod);
                CHECK(F.inv(a).code == brute);
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.pow(a, static_cast<std::int64_t>(F.q()) - 1) == F.one());
                CHECK(F.pow(a, -1) == F.inv(a));
            }
            CHECK(F.pow(a, F.q()) == a);
            for (auto b : els) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                if (b != F.zero()) CHECK(F.mul(F.div(a, b), b) == a);
                // Frobenius is additive
                CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
                for (auto c : els) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                }
            }
        }
    }
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (auto [p, d] : kSmallFields) {
        Field F = Field::make(p, d);
        std::set<std::uint32_t> seen;
        FieldElement x = F.one();
        for (std::uint32_t i = 0; i + 1 < F.q(); ++i) {
            seen.insert(x.code);
            x = F.mul(x, F.primitive());
        }
        CHECK(seen.size() == F.q() - 1);
        CHECK(x == F.one());
    }
}

TEST_CASE("field construction errors") {
    CHECK(code_of([] { Field::make(4); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == ErrorCode::ReducibleModulus);
    CHECK(code_of([] { Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1, 1}); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([] { Field::make(2, 21); }) == ErrorCode::FieldTooLarge);
    CHECK(code_of([] { Field::of_order(6); }) == ErrorCode::NotPrime);
    Field F4 = Field::make(2, 2);
    CHECK(code_of([&] { F4.element(4); }) == ErrorCode::ContextMismatch);
    CHECK(code_of([&] { F4.inv(F4.zero()); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { F4.div(F4.one(), F4.zero()); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("explicit modulus is honoured") {
    // z^3 + z^2 + 1 instead of the default z^3 + z + 1
    Field F = Field::make(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    const oracle::Digits mod{1, 0, 1, 1};
    for (auto a : F.elements()) {
        for (auto b : F.elements()) CHECK(F.mul(a, b).code == oracle::field_mul(a.code, b.code, 2, mod));
    }
    CHECK_FALSE(F == Field::make(2, 3));
    CHECK(F == Field::make(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1}));
}

TEST_CASE("element printing") {
    Field F4 = Field::make(2, 2);
    CHECK(F4.to_string(F4.element(2)) == "z");
    CHECK(F4.to_string(F4.element(3)) == "z+1");
    CHECK(F4.to_string(F4.zero()) == "0");
    CHECK(F4.from_int(3) == F4.one());
    CHECK(Field::make(5).from_int(-1) == FieldElement{4});
}

TEST_CASE("Rabin test agrees with trial division") {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}}) {
        Field F = Field::make(p, d);
        for (unsigned deg = 1; deg <= 5; ++deg) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < deg; ++i) count *= p;
            if (count > 3125) break;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Poly f = Poly::monic_from_index(F, deg, idx);
                oracle::Digits dig;
                for (auto c : f.c) dig.push_back(c.code);
                CHECK(poly::is_irreducible(F, f) == oracle::irreducible_by_trial_division(dig, p));
            }
        }
    }
}

TEST_CASE("irreducible counts follow the necklace formula") {
    for (auto [q, dmax] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 5}, {4, 4}, {5, 3}, {7, 3}}) {
        Field F = Field::of_order(q);
        for (unsigned d = 1; d <= dmax; ++d) {
            CHECK(static_cast<std::int64_t>(all_irreducibles_of_degree(F, d).size()) == oracle::gauss_count(q, static_cast<int>(d)));
        }
    }
    CHECK(all_irreducibles_of_degree(Field::make(2), 4).size() == 3);
    CHECK(code_of([] { irreducibles_of_degree(Field::make(2), 2, 2); }) == ErrorCode::Exhausted);
}

TEST_CASE("polynomial division identity") {
    Field F = Field::make(3, 2);
    std::mt19937_64 rng(7);
    auto rnd = [&](int deg) {
        std::vector<FieldElement> c;
        for (int i = 0; i <= deg; ++i) c.push_back(F.element(rng() % F.q()));
        return Poly(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = rnd(static_cast<int>(rng() % 7));
        Poly b = rnd(static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        auto [quo, rem] = poly::divmod(F, a, b);
        CHECK(poly::add(F, poly::mul(F, quo, b), rem) == a);
        CHECK(rem.degree() < b.degree());
        const auto x = F.element(rng() % F.q());
        CHECK(poly::eval(F, poly::mul(F, a, b), x) == F.mul(poly::eval(F, a, x), poly::eval(F, b, x)));
        CHECK(poly::eval(F, poly::taylor_shift(F, a, x), F.zero()) == poly::eval(F, a, x));
    }
}
