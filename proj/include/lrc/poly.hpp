#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

/// Univariate polynomial over F_q, coefficients constant-first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
struct Poly {
    std::vector<FieldElement> c;

    Poly() = default;
    explicit Poly(std::vector<FieldElement> coeffs);

    static Poly constant(FieldElement a);
    static Poly monomial(FieldElement a, std::size_t degree);
    /// x - a
    static Poly linear_root(const Field& F, FieldElement a);
    /// Monic polynomial of the given degree whose lower coefficients are the
    /// base-q digits of idx (the enumeration order used for irreducibles).
    static Poly monic_from_index(const Field& F, unsigned degree, std::uint64_t idx);
    static Poly from_codes(const Field& F, const std::vector<std::uint64_t>& codes);

    bool is_zero() const noexcept { return c.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    FieldElement lead() const noexcept { return c.empty() ? FieldElement{} : c.back(); }
    FieldElement coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : FieldElement{}; }
    std::vector<std::uint64_t> codes() const;

    friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, FieldElement s);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// (quotient, remainder); throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly gcd(const Field& F, Poly a, Poly b);
Poly make_monic(const Field& F, const Poly& a);
Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m);
FieldElement eval(const Field& F, const Poly& a, FieldElement x);
/// a(x + shift)
Poly taylor_shift(const Field& F, const Poly& a, FieldElement shift);

/// Rabin's test over F_q.
bool is_irreducible(const Field& F, const Poly& f);

std::string to_string(const Field& F, const Poly& a, char var = 'x');

}  // namespace poly

}  // namespace lrc
