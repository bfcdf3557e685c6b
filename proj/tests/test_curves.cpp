#include <doctest.h>

#include <random>
#include <set>

#include "lrc/curves.hpp"
#include "lrc/error.hpp"

using namespace lrc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an lrc::Error");
    return ErrorCode::IoError;
}

bool same(const LaurentSeries& a, const LaurentSeries& b) {
    return series::agreement(a, b) >= std::min(a.prec(), b.prec());
}

// Brute-force affine points of y^q0 + y = x^(q0+1).
std::vector<std::pair<std::uint32_t, std::uint32_t>> hermitian_points(const Field& F, unsigned q0) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto a : F.elements()) {
        for (auto b : F.elements()) {
            if (F.add(F.pow(b, q0), b) == F.pow(a, q0 + 1)) out.emplace_back(a.code, b.code);
        }
    }
    return out;
}

// Pole numbers of the Hermitian semigroup <q0, q0+1> below 2g.
std::vector<int> semigroup_below(unsigned q0, int limit) {
    std::vector<int> out;
    for (int n = 0; n < limit; ++n) {
        bool hit = false;
        for (int i = 0; i * static_cast<int>(q0) <= n && !hit; ++i) hit = (n - i * static_cast<int>(q0)) % (q0 + 1) == 0;
        if (hit) out.push_back(n);
    }
    return out;
}

CurveFunction random_function(const CurveBackend& B, std::mt19937_64& rng) {
    const auto& F = B.field();
    CurveFunction f = B.constant(F.element(rng() % F.q()));
    for (int k = 0; k < 3; ++k) {
        CurveFunction term = B.constant(F.element(1 + rng() % (F.q() - 1)));
        for (int i = static_cast<int>(rng() % 3); i > 0; --i) term = B.mul(term, B.x());
        if (B.kind() == BackendKind::Hermitian) {
            for (int j = static_cast<int>(rng() % 2); j > 0; --j) term = B.mul(term, B.y());
        }
        f = B.add(f, term);
    }
    return f;
}

}  // namespace

TEST_CASE("rational backend basics") {
    Field F = Field::make(5);
    auto B = CurveBackend::rational(F);
    CHECK(B.genus() == 0);
    CHECK(B.rr_basis_at_infinity().empty());
    const auto places = B.rational_places();
    REQUIRE(places.size() == 6);
    for (std::uint32_t a = 0; a < 5; ++a) CHECK(places[a] == Place::affine(F.element(a)));
    CHECK(places.back().kind == Place::Kind::Infinity);
    CHECK(B.local_parameter() == "1/x");

    // 1/(x - a) = t / (1 - a t) = sum a^i t^(i+1) with t = 1/x
    for (auto a : F.elements()) {
        const auto ex = B.expand_at_infinity(B.auxiliary_function(Place::affine(a)), 12);
        REQUIRE(ex.prec() >= 12);
        CHECK(ex.coeff(0) == F.zero());
        FieldElement pw = F.one();
        for (int i = 1; i < 12; ++i) {
            CHECK(ex.coeff(i) == pw);
            pw = F.mul(pw, a);
        }
        // at its own place the function is exactly 1/(x-a) = t^-1
        const auto local = B.expand_at_affine(B.auxiliary_function(Place::affine(a)), Place::affine(a), 6);
        CHECK(local.valuation() == -1);
        CHECK(local.coeff(-1) == F.one());
        CHECK(local.coeff(0) == F.zero());
    }
    CHECK(code_of([&] { B.auxiliary_function(Place::infinity()); }) == ErrorCode::PlaceAtInfinity);
}

TEST_CASE("rational affine expansion is the Taylor expansion") {
    Field F = Field::make(7);
    auto B = CurveBackend::rational(F);
    // f = x^3 at a: (a + t)^3 = a^3 + 3a^2 t + 3a t^2 + t^3
    const auto f = B.mul(B.mul(B.x(), B.x()), B.x());
    for (auto a : F.elements()) {
        const auto ex = B.expand_at_affine(f, Place::affine(a), 6);
        CHECK(ex.coeff(0) == F.pow(a, 3));
        CHECK(ex.coeff(1) == F.mul(F.from_int(3), F.pow(a, 2)));
        CHECK(ex.coeff(2) == F.mul(F.from_int(3), a));
        CHECK(ex.coeff(3) == F.one());
        CHECK(ex.coeff(4) == F.zero());
    }
}

TEST_CASE("higher-degree blocks") {
    Field F = Field::make(2);
    auto B = CurveBackend::rational(F);
    const auto quartics = all_irreducibles_of_degree(F, 4);
    REQUIRE(quartics.size() == 3);
    const auto Q = Place::higher(quartics[0]);
    CHECK(Q.degree == 4);
    const auto block = B.higher_degree_block(Q);
    REQUIRE(block.size() == 4);
    for (std::size_t s = 0; s < block.size(); ++s) {
        // x^s / m(x) has a zero of order 4 - s at infinity
        const auto ex = B.expand_at_infinity(block[s], 10);
        CHECK(ex.valuation() == static_cast<int>(4 - s));
    }
    const Place qs[] = {Place::affine(F.zero()), Place::affine(F.one())};
    const auto mixed = B.divisor_block(qs);
    CHECK(mixed.size() == 2);
    CHECK(mixed[0].den == Poly({F.zero(), F.one(), F.one()}));  // x(x+1)

    auto H = CurveBackend::hermitian(Field::make(2, 2));
    CHECK(code_of([&] { H.higher_degree_block(Q); }) == ErrorCode::UnsupportedBackend);
}

TEST_CASE("hermitian places match brute-force enumeration") {
    for (unsigned q0 : {2u, 3u, 4u}) {
        Field F = Field::of_order(q0 * q0);
        auto B = CurveBackend::hermitian(F);
        CHECK(B.q0() == q0);
        CHECK(B.genus() == q0 * (q0 - 1) / 2);
        const auto pts = hermitian_points(F, q0);
        CHECK(pts.size() == q0 * q0 * q0);
        const auto places = B.rational_places();
        REQUIRE(places.size() == pts.size() + 1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(places[i].a.code == pts[i].first);
            CHECK(places[i].b.code == pts[i].second);
        }
        CHECK(places.back().kind == Place::Kind::Infinity);
    }
    CHECK(code_of([] { CurveBackend::hermitian(Field::make(2, 3)); }) == ErrorCode::NotASquare);
}

TEST_CASE("hermitian Riemann-Roch basis has the semigroup pole numbers") {
    for (unsigned q0 : {2u, 3u, 4u}) {
        auto B = CurveBackend::hermitian(Field::of_order(q0 * q0));
        const int g = static_cast<int>(B.genus());
        const auto basis = B.rr_basis_at_infinity();
        const auto want = semigroup_below(q0, 2 * g);
        REQUIRE(basis.size() == want.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            CHECK(basis[j].second == want[j]);
            const auto ex = B.expand_at_infinity(basis[j].first, 2 * g + 4);
            CHECK(ex.valuation() == -want[j]);
        }
    }
}

TEST_CASE("hermitian expansions satisfy the curve equation") {
    for (unsigned q0 : {2u, 3u}) {
        Field F = Field::of_order(q0 * q0);
        auto B = CurveBackend::hermitian(F);
        const auto X = B.expand_at_infinity(B.x(), 20);
        const auto Y = B.expand_at_infinity(B.y(), 20);
        CHECK(X.valuation() == -static_cast<int>(q0));
        CHECK(Y.valuation() == -static_cast<int>(q0 + 1));
        const auto residual = series::pow(Y, static_cast<int>(q0)) + Y - series::pow(X, static_cast<int>(q0 + 1));
        CHECK(residual.is_zero_window());
        CHECK(residual.prec() >= 10);
        // x / y is the local parameter
        const auto t = X * series::inv(Y, 20);
        CHECK(same(t, LaurentSeries::monomial(F, F.one(), 1, 100)));

        for (const auto& P : B.rational_places()) {
            if (P.kind == Place::Kind::Infinity) continue;
            const auto Xa = B.expand_at_affine(B.x(), P, 12);
            const auto Ya = B.expand_at_affine(B.y(), P, 12);
            CHECK(Xa.coeff(0) == P.a);
            CHECK(Ya.coeff(0) == P.b);
            const auto res = series::pow(Ya, static_cast<int>(q0)) + Ya - series::pow(Xa, static_cast<int>(q0 + 1));
            CHECK(res.is_zero_window());
            CHECK(res.prec() >= 12);
        }
    }
}

TEST_CASE("expansion is a ring homomorphism") {
    std::mt19937_64 rng(31337);
    for (auto F : {Field::make(5), Field::make(2, 2), Field::make(3, 2)}) {
        std::vector<CurveBackend> backends{CurveBackend::rational(F)};
        if (F.ext_deg() == 2) backends.push_back(CurveBackend::hermitian(F));
        for (const auto& B : backends) {
            const auto places = B.rational_places();
            for (int trial = 0; trial < 25; ++trial) {
                const auto f = random_function(B, rng);
                const auto h = random_function(B, rng);
                CHECK(same(B.expand_at_infinity(B.add(f, h), 12),
                           B.expand_at_infinity(f, 12) + B.expand_at_infinity(h, 12)));
                CHECK(same(B.expand_at_infinity(B.mul(f, h), 12),
                           B.expand_at_infinity(f, 16) * B.expand_at_infinity(h, 16)));
                const auto& P = places[rng() % (places.size() - 1)];
                CHECK(same(B.expand_at_affine(B.mul(f, h), P, 8),
                           B.expand_at_affine(f, P, 8) * B.expand_at_affine(h, P, 8)));
            }
        }
    }
}

TEST_CASE("hermitian auxiliary functions have one simple affine pole") {
    for (unsigned q0 : {2u, 3u}) {
        Field F = Field::of_order(q0 * q0);
        auto B = CurveBackend::hermitian(F);
        const auto places = B.rational_places();
        const int g = static_cast<int>(B.genus());
        for (std::size_t i = 0; i + 1 < places.size(); i += 3) {
            const auto f = B.auxiliary_function(places[i]);
            for (std::size_t j = 0; j + 1 < places.size(); ++j) {
                const auto v = B.expand_at_affine(f, places[j], 4).valuation();
                if (i == j) CHECK(v == -1);
                else CHECK((!v || *v >= 0));
            }
            const auto at_inf = B.expand_at_infinity(f, 4).valuation();
            CHECK((!at_inf || *at_inf >= 1 - 2 * g));
        }
        CHECK(code_of([&] { B.auxiliary_function(Place::affine(F.one(), F.zero())); }) == ErrorCode::NonRationalPlace);
    }
}

TEST_CASE("place literals round trip") {
    Field F4 = Field::make(2, 2);
    auto H = CurveBackend::hermitian(F4);
    for (const auto& P : H.rational_places()) CHECK(H.parse_place(P.literal(BackendKind::Hermitian)) == P);
    auto R = CurveBackend::rational(Field::make(2));
    const auto Q = Place::higher(all_irreducibles_of_degree(Field::make(2), 3)[0]);
    CHECK(Q.literal(BackendKind::Rational) == "poly=1,1,0,1");
    CHECK(R.parse_place("poly=1,1,0,1") == Q);
    CHECK(R.parse_place("a=1") == Place::affine(FieldElement{1}));
    CHECK(code_of([&] { R.parse_place("poly=1,0,1"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([&] { H.parse_place("(a=1,b=0)"); }) == ErrorCode::NonRationalPlace);
    CHECK(code_of([&] { R.parse_place("bogus"); }) == ErrorCode::InvalidConfig);
}
