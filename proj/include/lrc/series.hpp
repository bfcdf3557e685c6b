#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrc/galois.hpp"
#include "lrc/poly.hpp"

namespace lrc {

/// Truncated Laurent series sum_{i=v}^{prec-1} a_i t^i + O(t^prec) over F_q.
///
/// Canonical form: either coeffs[0] != 0 (so start() is the valuation) or the
/// window holds no nonzero coefficient, in which case coeffs is empty and
/// start() == prec(). Precision is tracked pessimistically: every operation
/// returns only coefficients that are determined by its inputs.
class LaurentSeries {
public:
    LaurentSeries(Field F, int start, std::vector<FieldElement> coeffs);

    static LaurentSeries zero(Field F, int prec);
    static LaurentSeries constant(Field F, FieldElement a, int prec);
    /// a * t^exponent + O(t^prec)
    static LaurentSeries monomial(Field F, FieldElement a, int exponent, int prec);
    /// The polynomial p(t) known to precision prec.
    static LaurentSeries from_poly(Field F, const Poly& p, int prec);

    const Field& field() const noexcept { return field_; }
    int start() const noexcept { return start_; }
    int prec() const noexcept { return start_ + static_cast<int>(coeffs_.size()); }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    /// Index of the first nonzero coefficient; nullopt when the known window
    /// is entirely zero (the true valuation is then only known to be >= prec()).
    std::optional<int> valuation() const noexcept;
    bool is_zero_window() const noexcept { return coeffs_.empty(); }
    /// Coefficient of t^exponent; throws PrecisionExhausted past prec().
    FieldElement coeff(int exponent) const;

    LaurentSeries truncated(int new_prec) const;
    /// Multiplication by t^k.
    LaurentSeries shifted(int k) const;

    /// Debug dump `v;prec;c0,c1,...` with integer-encoded coefficients.
    std::string dump() const;
    static LaurentSeries parse_dump(Field F, const std::string& text);

private:
    Field field_;
    int start_;
    std::vector<FieldElement> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

namespace series {

LaurentSeries scale(const LaurentSeries& a, FieldElement s);

/// Multiplicative inverse to precision min(out_prec, -v + len). Throws
/// NotInvertible for a zero window.
LaurentSeries inv(const LaurentSeries& a, int out_prec);

/// a^n; negative n goes through inv at the best available precision.
LaurentSeries pow(const LaurentSeries& a, int n);

/// a^(p^k) in characteristic p. Unlike pow, the known window scales with the
/// exponent: (a + O(t^N))^(p^k) = a^(p^k) + O(t^(N p^k)).
LaurentSeries frobenius(const LaurentSeries& a, unsigned k);

/// Iterates u <- map(u) from seed until map(u) and u agree through t^(out_prec-1).
/// The agreement index must strictly increase every step (t-adic contraction)
/// and the loop stops after 4 * out_prec steps; both failures raise NoContraction.
LaurentSeries solve_fixed_point(const std::function<LaurentSeries(const LaurentSeries&)>& map,
                                const LaurentSeries& seed, int out_prec);

/// Exponent up to which a and b agree: valuation(a - b), or the precision of
/// the difference when no disagreement is visible.
int agreement(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace series

}  // namespace lrc
