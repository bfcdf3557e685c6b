#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrc::bounds {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "n", "n/d", and decimals such as "0.005" or "-1.25", exactly.
Rational parse_rational(const std::string& text);
double to_double(const Rational& x);
std::string to_string(const Rational& x);

/// Raw affine value and its clamp at zero.
struct BoundValue {
    Rational raw;
    Rational rate;
};

BoundValue clamped(Rational raw);

double entropy_q(std::uint64_t q, double x);

BoundValue singleton_rate(int r, const Rational& delta);
BoundValue plotkin_rate(std::uint64_t q, int r, const Rational& delta);

struct LpResult {
    double value = 0;
    double tau = 0;
};
/// min over tau in [0, 1/(r+1)] of tau r + (1 - tau(r+1)) f_q(delta / (1 - tau(r+1))).
double lp_objective(std::uint64_t q, int r, double delta, double tau);
LpResult lp_minimize(std::uint64_t q, int r, double delta);
double lp_bound(std::uint64_t q, int r, double delta);

/// h(s) = log_q([1+(q-1)s]^(r+1) + (q-1)(1-s)^(r+1)) / (r+1) - delta log_q s,
/// evaluated in log space so large q^r does not overflow.
double gv_h(std::uint64_t q, int r, double delta, double s);
/// Sign-equivalent to h'(s): the derivative numerator divided by
/// (1+(q-1)s)^(r+1).
double gv_derivative_numerator(std::uint64_t q, int r, double delta, double s);

struct GvMinimum {
    double s = 0;
    double h = 0;
    std::string method;  // "bisection" or "grid"
};
/// Bisection on the derivative numerator after a numerical unimodality check;
/// falls back to gv_minimize_grid when the check fails.
GvMinimum gv_minimize_bisection(std::uint64_t q, int r, double delta);
/// Log-spaced grid over (0, 1] refined by golden-section search.
GvMinimum gv_minimize_grid(std::uint64_t q, int r, double delta);
/// Exact signs of (1+(q-1)s)^r((q-1)s-1) - (q-1)(1-s)^r(1+s), the delta = 1/2
/// derivative numerator, at s = 1/(q-1) and s = 1/(q-1) + 2^(-r). Negative then
/// positive places the unique critical point strictly between them.
struct HalfBracket {
    int sign_low = 0;
    int sign_high = 0;
    bool brackets() const noexcept { return sign_low < 0 && sign_high > 0; }
};
HalfBracket gv_half_minimizer_bracket(std::uint64_t q, int r);

/// 1 - min h. delta = 0 gives the limit r/(r+1).
double gv_bound(std::uint64_t q, int r, double delta);

/// r/(r+1) - (1/A) r/(r+1) - delta
BoundValue tvz_rate(int r, const Rational& delta, const Rational& ihara);
BoundValue tvz_square_rate(std::uint64_t q, int r, const Rational& delta);
BoundValue tvz_oddpower_rate(std::uint64_t p, int m, int r, const Rational& delta);

struct Applicable {
    std::optional<BoundValue> value;
    std::string reason;  // why it does not apply
};

struct BargBounds {
    Applicable btv_a;  // r = sqrt(q) - 1
    Applicable btv_b;  // (r+1) | (sqrt(q)+1)
};
BargBounds barg_bounds(std::uint64_t q, int r, const Rational& delta);

/// (u, v) with r+1 = u p^v, p^v <= sqrt(q), and u dividing both p^v - 1 and sqrt(q) - 1.
std::optional<std::pair<std::uint64_t, unsigned>> lmx_decomposition(std::uint64_t q, int r);
Applicable lmx_bound(std::uint64_t q, int r, const Rational& delta);

enum class Versus { BtvB, Lmx };
/// Threshold below which the square-q rate beats the comparison bound.
Rational crossover_delta(std::uint64_t q, int r, Versus vs);

struct Piece {
    int e = 0;
    Rational intercept;  // r/(r+1) - (b/(r+1)) / (q^(e/2) - 1)
    Rational from;
    Rational to;
    /// intercept - e * delta
    Rational at(const Rational& delta) const { return intercept - Rational(e) * delta; }
};

struct PrimeFieldBound {
    int b = 0;
    /// every even divisor e of b with its intercept (from/to unset)
    std::vector<Piece> lines;
    /// upper envelope over the lines, positive part only, ordered by delta
    std::vector<Piece> envelope;
    Rational value(const Rational& delta) const;
};
PrimeFieldBound prime_field_bound(std::uint64_t q, int r);

struct TowerParams {
    BigInt genus;
    BigInt places_lower;
};
/// Level `level` of the square-field tower over F_{l^2}.
TowerParams gs_tower_params(std::uint64_t ell, int level);

/// sqrt(q) - 1 for squares, the odd-power tower bound for p^(2m+1) with m >= 1,
/// nullopt otherwise.
std::optional<Rational> ihara_lower(std::uint64_t q);

/// tvz_square_rate(q, r, delta) > gv_bound(q, r, delta) + 1e-10
bool gv_exceedance_check(std::uint64_t q, int r, const Rational& delta);

struct Sample {
    Rational delta;
    double rate = 0;
    double raw = 0;
    std::string params;
};

struct BoundCurve {
    std::string bound_id;
    std::string params;
    bool exact = false;
    std::vector<Sample> samples;
};

/// Grid "start:stop:step", inclusive of stop when it lands on the grid.
std::vector<Rational> parse_delta_grid(const std::string& spec);

/// Known ids: gv singleton plotkin lp btv_a btv_b lmx tvz_square tvz_oddpower tvz_prime
const std::vector<std::string>& bound_ids();

/// Single evaluation; throws Inapplicable, DomainError, NotASquare, NotOddPower.
Sample evaluate_bound(const std::string& id, std::uint64_t q, int r, const Rational& delta);

/// Samples outside a bound's delta domain are skipped.
BoundCurve sample_bound(const std::string& id, std::uint64_t q, int r, const std::vector<Rational>& grid);

struct Figure {
    std::vector<BoundCurve> curves;
    std::vector<std::string> omitted;
};
Figure figure_curves(int figure);

std::string curves_csv(const std::vector<BoundCurve>& curves);

}  // namespace lrc::bounds
