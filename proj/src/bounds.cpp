#include "lrc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "lrc/error.hpp"
#include "lrc/galois.hpp"

namespace lrc::bounds {

namespace {

Rational frac(const BigInt& a, const BigInt& b) {
    Rational out(a);
    return out / Rational(b);
}

Rational locality_ratio(int r) { return frac(r, r + 1); }

std::optional<std::uint64_t> exact_sqrt(std::uint64_t q) {
    auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    while (s * s > q) --s;
    while ((s + 1) * (s + 1) <= q) ++s;
    if (s * s != q) return std::nullopt;
    return s;
}

std::uint64_t require_square(std::uint64_t q) {
    auto s = exact_sqrt(q);
    if (!s || !prime_power_split(q)) fail(ErrorCode::NotASquare, std::to_string(q) + " is not the square of a prime power");
    return *s;
}

void require_locality(int r) {
    if (r < 1) fail(ErrorCode::BadParams, "locality r must be >= 1");
}

void require_q(std::uint64_t q) {
    if (q < 2) fail(ErrorCode::BadParams, "q must be >= 2");
}

void require_unit_delta(const Rational& delta) {
    if (delta < 0 || delta > 1) fail(ErrorCode::DomainError, "delta must lie in [0, 1], got " + to_string(delta));
}

BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

// Upper bound of the q-ary GV/LP delta domain, with slack for decimal grids.
bool beyond_plotkin_point(std::uint64_t q, double delta) {
    return delta > 1.0 - 1.0 / static_cast<double>(q) + 1e-15;
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 500 && b - a > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2.0;
}

double f_q(std::uint64_t q, double x) {
    const double qd = static_cast<double>(q);
    if (x >= 1.0 - 1.0 / qd) return 0.0;
    const double root = std::sqrt(std::max(0.0, (qd - 1.0) * x * (1.0 - x)));
    double arg = (qd - 1.0 - x * (qd - 2.0) - 2.0 * root) / qd;
    arg = std::clamp(arg, 0.0, 1.0);
    return entropy_q(q, arg);
}

std::string rstr(int r) { return "r=" + std::to_string(r); }

std::string params_string(std::uint64_t q, int r) { return "q=" + std::to_string(q) + ";" + rstr(r); }

}  // namespace

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> Rational { fail(ErrorCode::InvalidConfig, "not a number: '" + text + "'"); };
    if (text.empty()) return bad();
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> BigInt {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) bad();
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) bad();
        }
        // strip leading zeros: cpp_int reads them as an octal prefix
        std::size_t first = s.find_first_not_of('0', i);
        BigInt v(first == std::string::npos ? std::string("0") : s.substr(first));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    if (slash != std::string::npos) {
        const BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) fail(ErrorCode::InvalidConfig, "zero denominator in '" + text + "'");
        return frac(parse_int(text.substr(0, slash)), den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto decimals = static_cast<unsigned>(text.size() - dot - 1);
    if (digits == "-" || digits == "+" || digits.empty()) return bad();
    if (digits.back() == '-' || digits.back() == '+') return bad();
    return frac(parse_int(digits), big_pow(10, decimals));
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

BoundValue clamped(Rational raw) {
    BoundValue v{raw, raw};
    if (v.rate < 0) v.rate = 0;
    return v;
}

double entropy_q(std::uint64_t q, double x) {
    require_q(q);
    if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::DomainError, "entropy argument outside [0, 1]");
    const double lq = std::log(static_cast<double>(q));
    double h = 0.0;
    if (x > 0.0) h += x * std::log(static_cast<double>(q - 1)) - x * std::log(x);
    if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
    return h / lq;
}

BoundValue singleton_rate(int r, const Rational& delta) {
    require_locality(r);
    require_unit_delta(delta);
    return clamped(locality_ratio(r) * (1 - delta));
}

BoundValue plotkin_rate(std::uint64_t q, int r, const Rational& delta) {
    require_q(q);
    require_locality(r);
    const Rational qq(q);
    if (delta < 0 || delta > 1 - 1 / qq) fail(ErrorCode::DomainError, "Plotkin needs delta in [0, 1 - 1/q]");
    return clamped(locality_ratio(r) * (1 - qq / (qq - 1) * delta));
}

double lp_objective(std::uint64_t q, int r, double delta, double tau) {
    const double rest = 1.0 - tau * (r + 1);
    if (rest <= 0.0) return static_cast<double>(r) / (r + 1);
    return tau * r + rest * f_q(q, delta / rest);
}

LpResult lp_minimize(std::uint64_t q, int r, double delta) {
    require_q(q);
    require_locality(r);
    if (delta < 0.0 || beyond_plotkin_point(q, delta)) fail(ErrorCode::DomainError, "LP bound needs delta in [0, 1 - 1/q]");
    constexpr int kGrid = 10000;
    const double top = 1.0 / (r + 1);
    auto obj = [&](double tau) { return lp_objective(q, r, delta, tau); };
    int best = 0;
    double best_val = obj(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double v = obj(top * i / kGrid);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = top * std::max(best - 1, 0) / kGrid;
    const double hi = top * std::min(best + 1, kGrid) / kGrid;
    const double tau = golden_section(obj, lo, hi, 1e-12);
    LpResult out{obj(tau), tau};
    if (best_val < out.value) out = {best_val, top * best / kGrid};
    return out;
}

double lp_bound(std::uint64_t q, int r, double delta) { return lp_minimize(q, r, delta).value; }

double gv_h(std::uint64_t q, int r, double delta, double s) {
    const double qm1 = static_cast<double>(q - 1);
    const double A = 1.0 + qm1 * s;
    const double rho = (1.0 - s) / A;
    const double tail = std::log1p(qm1 * std::pow(rho, r + 1));
    return (std::log(A) + tail / (r + 1) - delta * std::log(s)) / std::log(static_cast<double>(q));
}

double gv_derivative_numerator(std::uint64_t q, int r, double delta, double s) {
    const double qm1 = static_cast<double>(q - 1);
    const double A = 1.0 + qm1 * s;
    const double rho = (1.0 - s) / A;
    return s * qm1 * (1.0 - std::pow(rho, r)) / A - delta * (1.0 + qm1 * std::pow(rho, r + 1));
}

namespace {

void check_gv_args(std::uint64_t q, int r, double delta) {
    require_q(q);
    require_locality(r);
    if (!(delta > 0.0) || beyond_plotkin_point(q, delta)) {
        fail(ErrorCode::DomainError, "GV minimization needs delta in (0, 1 - 1/q]");
    }
}

}  // namespace

GvMinimum gv_minimize_grid(std::uint64_t q, int r, double delta) {
    check_gv_args(q, r, delta);
    constexpr int kGrid = 20000;
    const double lo_exp = -14.0;
    auto at = [&](int i) { return std::pow(10.0, lo_exp * (1.0 - static_cast<double>(i) / kGrid)); };
    auto h = [&](double s) { return gv_h(q, r, delta, s); };
    int best = kGrid;
    double best_val = h(1.0);
    for (int i = 0; i < kGrid; ++i) {
        const double v = h(at(i));
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = at(std::max(best - 1, 0));
    const double b = at(std::min(best + 1, kGrid));
    const double s = golden_section(h, a, b, 1e-15 * std::max(1.0, b));
    GvMinimum out{s, h(s), "grid"};
    if (best_val < out.h) out = {at(best), best_val, "grid"};
    return out;
}

GvMinimum gv_minimize_bisection(std::uint64_t q, int r, double delta) {
    check_gv_args(q, r, delta);
    auto num = [&](double s) { return gv_derivative_numerator(q, r, delta, s); };
    // the sign of h' must go from - to + exactly once on a log-spaced sample
    constexpr int kSamples = 4000;
    bool seen_positive = false;
    bool unimodal = true;
    for (int i = 0; i <= kSamples; ++i) {
        const double s = std::pow(10.0, -14.0 * (1.0 - static_cast<double>(i) / kSamples));
        const double v = num(s);
        if (v > 0.0) seen_positive = true;
        else if (seen_positive && v < 0.0) unimodal = false;
    }
    if (!unimodal) return gv_minimize_grid(q, r, delta);
    if (num(1.0) <= 0.0) return {1.0, gv_h(q, r, delta, 1.0), "bisection"};
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (num(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    const double s = lo > 0.0 ? (lo + hi) / 2.0 : hi;
    return {s, gv_h(q, r, delta, s), "bisection"};
}

HalfBracket gv_half_minimizer_bracket(std::uint64_t q, int r) {
    require_locality(r);
    if (q < 3) fail(ErrorCode::BadParams, "the bracket needs q >= 3");
    const BigInt qm1(q - 1);
    // at s = a/D the numerator times D^(r+1) is an integer with the same sign
    auto sign_at = [&](const BigInt& a, const BigInt& D) {
        const BigInt lead = boost::multiprecision::pow(BigInt(D + qm1 * a), static_cast<unsigned>(r)) * (qm1 * a - D);
        const BigInt tail = qm1 * boost::multiprecision::pow(BigInt(D - a), static_cast<unsigned>(r)) * (D + a);
        const BigInt v = lead - tail;
        return v < 0 ? -1 : (v > 0 ? 1 : 0);
    };
    const BigInt two_r = big_pow(2, static_cast<unsigned>(r));
    // 1/(q-1) and 1/(q-1) + 2^-r = (2^r + q - 1) / ((q-1) 2^r)
    return {sign_at(1, qm1), sign_at(two_r + qm1, qm1 * two_r)};
}

double gv_bound(std::uint64_t q, int r, double delta) {
    require_q(q);
    require_locality(r);
    if (delta == 0.0) return static_cast<double>(r) / (r + 1);
    return std::max(0.0, 1.0 - gv_minimize_bisection(q, r, delta).h);
}

BoundValue tvz_rate(int r, const Rational& delta, const Rational& ihara) {
    require_locality(r);
    require_unit_delta(delta);
    if (ihara <= 0) fail(ErrorCode::BadParams, "Ihara constant must be positive");
    const Rational ratio = locality_ratio(r);
    return clamped(ratio - ratio / ihara - delta);
}

BoundValue tvz_square_rate(std::uint64_t q, int r, const Rational& delta) {
    const auto root = require_square(q);
    if (root < 3) fail(ErrorCode::BadParams, "sqrt(q) - 1 must exceed 1 for a positive rate constant");
    return tvz_rate(r, delta, Rational(root - 1));
}

BoundValue tvz_oddpower_rate(std::uint64_t p, int m, int r, const Rational& delta) {
    if (!is_prime(p) || m < 1) fail(ErrorCode::NotOddPower, "need q = p^(2m+1) with p prime and m >= 1");
    const Rational pm = Rational(big_pow(p, static_cast<unsigned>(m))) - 1;
    const Rational pm1 = Rational(big_pow(p, static_cast<unsigned>(m + 1))) - 1;
    const Rational penalty = (1 / pm + 1 / pm1) / 2;
    require_locality(r);
    require_unit_delta(delta);
    const Rational ratio = locality_ratio(r);
    return clamped(ratio - penalty * ratio - delta);
}

BargBounds barg_bounds(std::uint64_t q, int r, const Rational& delta) {
    require_locality(r);
    require_unit_delta(delta);
    const auto root = require_square(q);
    const Rational ratio = locality_ratio(r);
    const Rational sq(root);
    BargBounds out;
    if (static_cast<std::uint64_t>(r) + 1 == root) {
        out.btv_a.value = clamped(ratio * (1 - delta - 3 / (sq + 1)));
    } else {
        out.btv_a.reason = "needs r = sqrt(q) - 1 = " + std::to_string(root - 1);
    }
    if ((root + 1) % (static_cast<std::uint64_t>(r) + 1) == 0) {
        out.btv_b.value = clamped(ratio * (1 - delta - (sq + r) / (Rational(q) - 1)));
    } else {
        out.btv_b.reason = "needs (r+1) | (sqrt(q)+1) = " + std::to_string(root + 1);
    }
    return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> lmx_decomposition(std::uint64_t q, int r) {
    require_locality(r);
    const auto root = require_square(q);
    const auto p = prime_power_split(q)->first;
    const auto n = static_cast<std::uint64_t>(r) + 1;
    std::uint64_t pv = 1;
    for (unsigned v = 0; pv <= root && n % pv == 0; ++v, pv *= p) {
        const std::uint64_t u = n / pv;
        const std::uint64_t g = std::gcd(pv - 1, root - 1);
        if (g % u == 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

Applicable lmx_bound(std::uint64_t q, int r, const Rational& delta) {
    require_unit_delta(delta);
    Applicable out;
    if (!lmx_decomposition(q, r)) {
        out.reason = "needs r+1 = u p^v with u | gcd(p^v - 1, sqrt(q) - 1)";
        return out;
    }
    const Rational sq(*exact_sqrt(q));
    out.value = clamped(locality_ratio(r) * (1 - delta - (sq + r - 1) / (Rational(q) - sq)));
    return out;
}

Rational crossover_delta(std::uint64_t q, int r, Versus vs) {
    require_locality(r);
    const Rational sq(require_square(q));
    const Rational num(BigInt(r - 1) * r);
    return vs == Versus::BtvB ? num / (Rational(q) - 1) : num / (Rational(q) - sq);
}

Rational PrimeFieldBound::value(const Rational& delta) const {
    for (const auto& p : envelope) {
        if (delta >= p.from && delta <= p.to) return p.at(delta);
    }
    return 0;
}

PrimeFieldBound prime_field_bound(std::uint64_t q, int r) {
    require_locality(r);
    if (!is_prime(q)) fail(ErrorCode::NotPrimeField, std::to_string(q) + " is not prime");
    PrimeFieldBound out;
    out.b = (r % 2 != 0) ? r + 1 : (q == 2 ? r + 2 : r);
    const Rational ratio = locality_ratio(r);
    for (int e = 2; e <= out.b; e += 2) {
        if (out.b % e != 0) continue;
        Piece p;
        p.e = e;
        p.intercept = ratio - frac(out.b, r + 1) / (Rational(big_pow(q, static_cast<unsigned>(e / 2))) - 1);
        out.lines.push_back(p);
    }
    if (out.lines.empty()) fail(ErrorCode::Inapplicable, "b has no even divisor");

    // walk the upper envelope from delta = 0 until it reaches zero
    std::optional<Piece> cur;
    for (const auto& p : out.lines) {
        if (p.intercept > 0 && (!cur || p.intercept > cur->intercept)) cur = p;
    }
    Rational start = 0;
    while (cur) {
        const Rational zero = cur->intercept / cur->e;
        std::optional<Piece> next;
        Rational next_at = zero;
        for (const auto& p : out.lines) {
            if (p.e >= cur->e) continue;
            // flatter line overtakes where the two meet
            const Rational meet = (cur->intercept - p.intercept) / (cur->e - p.e);
            if (meet >= start && meet < next_at && p.at(meet) > 0) {
                next_at = meet;
                next = p;
            }
        }
        Piece piece = *cur;
        piece.from = start;
        piece.to = next_at;
        out.envelope.push_back(piece);
        start = next_at;
        cur = next;
    }
    return out;
}

TowerParams gs_tower_params(std::uint64_t ell, int level) {
    if (!prime_power_split(ell)) fail(ErrorCode::BadParams, std::to_string(ell) + " is not a prime power");
    if (level < 1) fail(ErrorCode::BadParams, "tower level must be >= 1");
    TowerParams out;
    const auto m = static_cast<unsigned>(level);
    if (m % 2 == 0) {
        const BigInt a = big_pow(ell, m / 2) - 1;
        out.genus = a * a;
    } else {
        out.genus = (big_pow(ell, (m + 1) / 2) - 1) * (big_pow(ell, (m - 1) / 2) - 1);
    }
    const BigInt q = BigInt(ell) * ell;
    out.places_lower = (q - ell) * big_pow(ell, m - 1) + ell;
    return out;
}

std::optional<Rational> ihara_lower(std::uint64_t q) {
    const auto split = prime_power_split(q);
    if (!split) fail(ErrorCode::BadParams, std::to_string(q) + " is not a prime power");
    const auto [p, d] = *split;
    if (d % 2 == 0) return Rational(*exact_sqrt(q) - 1);
    if (d >= 3) {
        const unsigned m = (d - 1) / 2;
        const Rational pm = Rational(big_pow(p, m)) - 1;
        const Rational zeta = Rational(p - 1) / pm;
        return 2 * (Rational(big_pow(p, m + 1)) - 1) / (Rational(p) + 1 + zeta);
    }
    return std::nullopt;
}

bool gv_exceedance_check(std::uint64_t q, int r, const Rational& delta) {
    const double ours = to_double(tvz_square_rate(q, r, delta).rate);
    const double d = to_double(delta);
    const double gv = beyond_plotkin_point(q, d) ? 0.0 : gv_bound(q, r, d);
    return ours > gv + 1e-10;
}

std::vector<Rational> parse_delta_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) fail(ErrorCode::InvalidConfig, "delta grid must be start:stop:step, got '" + spec + "'");
    const Rational start = parse_rational(parts[0]);
    const Rational stop = parse_rational(parts[1]);
    const Rational step = parse_rational(parts[2]);
    if (step <= 0) fail(ErrorCode::InvalidConfig, "delta grid step must be positive");
    if (stop < start) fail(ErrorCode::InvalidConfig, "delta grid stop precedes start");
    std::vector<Rational> out;
    for (Rational x = start; x <= stop; x += step) {
        out.push_back(x);
        if (out.size() > 1'000'000) fail(ErrorCode::InvalidConfig, "delta grid has too many points");
    }
    return out;
}

const std::vector<std::string>& bound_ids() {
    static const std::vector<std::string> ids = {"gv",  "singleton", "plotkin",    "lp",           "btv_a",
                                                 "btv_b", "lmx",     "tvz_square", "tvz_oddpower", "tvz_prime"};
    return ids;
}

namespace {

Sample exact_sample(const Rational& delta, const BoundValue& v, std::string params) {
    return {delta, to_double(v.rate), to_double(v.raw), std::move(params)};
}

Sample from_applicable(const Rational& delta, const Applicable& a, std::string params) {
    if (!a.value) fail(ErrorCode::Inapplicable, a.reason);
    return exact_sample(delta, *a.value, std::move(params));
}

}  // namespace

Sample evaluate_bound(const std::string& id, std::uint64_t q, int r, const Rational& delta) {
    const std::string params = params_string(q, r);
    const double d = to_double(delta);
    if (id == "gv") {
        if (d < 0.0 || beyond_plotkin_point(q, d)) fail(ErrorCode::DomainError, "GV needs delta in [0, 1 - 1/q]");
        const double v = gv_bound(q, r, d);
        return {delta, v, v, params};
    }
    if (id == "lp") {
        const double v = lp_bound(q, r, d);
        return {delta, v, v, params};
    }
    if (id == "singleton") return exact_sample(delta, singleton_rate(r, delta), params);
    if (id == "plotkin") return exact_sample(delta, plotkin_rate(q, r, delta), params);
    if (id == "btv_a") return from_applicable(delta, barg_bounds(q, r, delta).btv_a, params);
    if (id == "btv_b") return from_applicable(delta, barg_bounds(q, r, delta).btv_b, params);
    if (id == "lmx") return from_applicable(delta, lmx_bound(q, r, delta), params);
    if (id == "tvz_square") return exact_sample(delta, tvz_square_rate(q, r, delta), params);
    if (id == "tvz_oddpower") {
        const auto split = prime_power_split(q);
        if (!split || split->second % 2 == 0 || split->second < 3) {
            fail(ErrorCode::NotOddPower, std::to_string(q) + " is not p^(2m+1) with m >= 1");
        }
        return exact_sample(delta, tvz_oddpower_rate(split->first, static_cast<int>(split->second - 1) / 2, r, delta), params);
    }
    if (id == "tvz_prime") {
        require_unit_delta(delta);
        const auto pf = prime_field_bound(q, r);
        const Rational v = pf.value(delta);
        std::string extra;
        for (const auto& p : pf.envelope) {
            if (delta >= p.from && delta <= p.to) {
                extra = ";e=" + std::to_string(p.e);
                break;
            }
        }
        return {delta, to_double(v), to_double(v), params + ";b=" + std::to_string(pf.b) + extra};
    }
    fail(ErrorCode::InvalidConfig, "unknown bound id '" + id + "'");
}

BoundCurve sample_bound(const std::string& id, std::uint64_t q, int r, const std::vector<Rational>& grid) {
    BoundCurve curve;
    curve.bound_id = id;
    curve.params = params_string(q, r);
    curve.exact = !(id == "gv" || id == "lp");
    for (const auto& delta : grid) {
        try {
            curve.samples.push_back(evaluate_bound(id, q, r, delta));
        } catch (const Error& err) {
            if (err.code() != ErrorCode::DomainError) throw;
        }
    }
    return curve;
}

Figure figure_curves(int figure) {
    struct Setup {
        std::uint64_t q;
        int r;
        std::vector<std::string> ids;
        std::string grid;
    };
    Figure out;
    auto sweep_delta = [&](const Setup& s) {
        const auto grid = parse_delta_grid(s.grid);
        for (const auto& id : s.ids) {
            try {
                out.curves.push_back(sample_bound(id, s.q, s.r, grid));
            } catch (const Error& err) {
                if (err.code() != ErrorCode::Inapplicable && err.code() != ErrorCode::NotASquare &&
                    err.code() != ErrorCode::NotOddPower) {
                    throw;
                }
                out.omitted.push_back(id + " (" + params_string(s.q, s.r) + "): " + err.what());
            }
        }
    };
    const std::vector<std::string> square_ids = {"gv", "btv_a", "btv_b", "lmx", "tvz_square"};
    switch (figure) {
        case 1: sweep_delta({1ULL << 12, 63, square_ids, "0:0.99:0.01"}); break;
        case 2: sweep_delta({1ULL << 12, 64, square_ids, "0:0.99:0.01"}); break;
        case 3: sweep_delta({1ULL << 13, 64, {"gv", "tvz_oddpower"}, "0:0.99:0.01"}); break;
        case 4: {
            // locality sweep at delta = 1/2; one sample per r
            const Rational half(Rational(1) / 2);
            const std::uint64_t q = 1ULL << 12;
            for (const auto& id : square_ids) {
                BoundCurve curve;
                curve.bound_id = id;
                curve.params = "q=" + std::to_string(q) + ";delta=1/2";
                curve.exact = id != "gv";
                std::size_t skipped = 0;
                for (int r = 2; r <= 200; ++r) {
                    try {
                        Sample s = evaluate_bound(id, q, r, half);
                        curve.samples.push_back(std::move(s));
                    } catch (const Error& err) {
                        if (err.code() != ErrorCode::Inapplicable) throw;
                        ++skipped;
                    }
                }
                if (curve.samples.empty()) {
                    out.omitted.push_back(id + " (" + curve.params + "): inapplicable for every r in 2..200");
                    continue;
                }
                if (skipped > 0) {
                    out.omitted.push_back(id + " (" + curve.params + "): inapplicable for " + std::to_string(skipped) +
                                          " of the r values in 2..200");
                }
                out.curves.push_back(std::move(curve));
            }
            break;
        }
        case 5: sweep_delta({2, 11, {"gv", "tvz_prime"}, "0:0.15:0.005"}); break;
        default: fail(ErrorCode::InvalidConfig, "figure must be 1..5, got " + std::to_string(figure));
    }
    return out;
}

std::string curves_csv(const std::vector<BoundCurve>& curves) {
    std::string out = "delta,rate,bound_id,params\n";
    char buf[64];
    for (const auto& c : curves) {
        for (const auto& s : c.samples) {
            std::snprintf(buf, sizeof buf, "%.6g", to_double(s.delta));
            out += buf;
            std::snprintf(buf, sizeof buf, ",%.12g,", s.rate);
            out += buf;
            out += c.bound_id + "," + s.params + "\n";
        }
    }
    return out;
}

}  // namespace lrc::bounds
