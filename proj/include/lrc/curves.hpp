#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrc/galois.hpp"
#include "lrc/poly.hpp"
#include "lrc/series.hpp"

namespace lrc {

enum class BackendKind { Rational, Hermitian };

/// A place of a curve backend: the distinguished place at infinity, a
/// rational affine point, or (rational function field only) the place of a
/// monic irreducible polynomial of degree >= 1.
struct Place {
    enum class Kind { Infinity, RationalAffine, HigherDegree };

    Kind kind = Kind::Infinity;
    FieldElement a{};  // x-coordinate
    FieldElement b{};  // y-coordinate (Hermitian only)
    Poly poly;         // HigherDegree only
    unsigned degree = 1;

    static Place infinity() { return {}; }
    static Place affine(FieldElement a) { return {Kind::RationalAffine, a, {}, {}, 1}; }
    static Place affine(FieldElement a, FieldElement b) { return {Kind::RationalAffine, a, b, {}, 1}; }
    static Place higher(Poly m);

    /// Config literal: `inf`, `a=<int>`, `(a=<int>,b=<int>)` or `poly=<c0,c1,...>`.
    std::string literal(BackendKind backend) const;

    friend bool operator==(const Place&, const Place&) = default;
};

/// Element of the function field: sum_j num[j](x) y^j / den(x). The rational
/// backend only uses num[0]; Hermitian numerators are kept reduced to
/// y-degree < q0 via y^q0 = x^(q0+1) - y.
struct CurveFunction {
    BackendKind backend = BackendKind::Rational;
    std::vector<Poly> num;
    Poly den;
};

class CurveBackend {
public:
    /// Genus-0 function field F_q(x), local parameter 1/x at infinity.
    static CurveBackend rational(Field F);
    /// Hermitian curve y^q0 + y = x^(q0+1) over F_{q0^2}; genus q0(q0-1)/2,
    /// local parameter x/y at infinity. Throws NotASquare unless q is a square.
    static CurveBackend hermitian(Field F);

    BackendKind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return field_; }
    unsigned genus() const noexcept { return genus_; }
    /// sqrt(q) on the Hermitian backend, 0 on the rational one.
    unsigned q0() const noexcept { return q0_; }
    std::string name() const;
    std::string local_parameter() const;

    bool on_curve(FieldElement a, FieldElement b) const;

    /// Affine places in ascending (a, b) encoding order, then infinity.
    std::vector<Place> rational_places() const;

    /// Basis of L((2g-1) P_inf) as (function, pole number), pole numbers ascending.
    std::vector<std::pair<CurveFunction, int>> rr_basis_at_infinity() const;

    /// A function with a simple pole at P, regular at every other affine place,
    /// and pole order at most 2g-1 at infinity.
    CurveFunction auxiliary_function(const Place& P) const;

    /// {x^s / m(x) : 0 <= s < deg m} for a higher-degree place of F_q(x).
    std::vector<CurveFunction> higher_degree_block(const Place& Q) const;

    /// {x^s / M(x) : 0 <= s < deg M} where M is the product of the place
    /// polynomials of a set of distinct finite places of F_q(x).
    std::vector<CurveFunction> divisor_block(std::span<const Place> places) const;

    /// Local expansion at infinity in the backend's local parameter.
    LaurentSeries expand_at_infinity(const CurveFunction& f, int out_prec) const;

    /// Local expansion at an affine rational place in the parameter x - a.
    LaurentSeries expand_at_affine(const CurveFunction& f, const Place& P, int out_prec) const;

    // Function arithmetic (Hermitian results reduced modulo the curve equation).
    CurveFunction constant(FieldElement c) const;
    CurveFunction x() const;
    CurveFunction y() const;
    CurveFunction add(const CurveFunction& f, const CurveFunction& h) const;
    CurveFunction mul(const CurveFunction& f, const CurveFunction& h) const;
    CurveFunction scale(const CurveFunction& f, FieldElement c) const;

    std::string describe(const CurveFunction& f) const;

    /// Parses a place literal (see Place::literal) for this backend.
    Place parse_place(const std::string& literal) const;

private:
    CurveBackend(BackendKind kind, Field F, unsigned q0, unsigned genus)
        : kind_(kind), field_(std::move(F)), q0_(q0), genus_(genus) {}

    CurveFunction normalize(CurveFunction f) const;
    /// Pole order at infinity of the monomial x^i y^j.
    int monomial_pole(std::size_t i, std::size_t j) const;

    BackendKind kind_;
    Field field_;
    unsigned q0_;
    unsigned genus_;
};

/// The `count` lexicographically smallest monic irreducibles of degree d over
/// F_q (ordered by the integer encoding of their lower coefficients).
/// Throws Exhausted when fewer exist.
std::vector<Poly> irreducibles_of_degree(const Field& F, unsigned d, std::size_t count);

/// Every monic irreducible of degree d over F_q, in the same order.
std::vector<Poly> all_irreducibles_of_degree(const Field& F, unsigned d);

}  // namespace lrc
