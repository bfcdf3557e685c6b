#include "lrc/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {

namespace {

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
    if (!(a.field() == b.field())) fail(ErrorCode::ContextMismatch, "series over different fields");
}

}  // namespace

LaurentSeries::LaurentSeries(Field F, int start, std::vector<FieldElement> coeffs)
    : field_(std::move(F)), start_(start), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) field_.check(c);
    const int prec = start_ + static_cast<int>(coeffs_.size());
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](FieldElement c) { return c.code != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        start_ = prec;
        return;
    }
    const auto skip = static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    start_ += skip;
}

LaurentSeries LaurentSeries::zero(Field F, int prec) { return LaurentSeries(std::move(F), prec, {}); }

LaurentSeries LaurentSeries::constant(Field F, FieldElement a, int prec) {
    return monomial(std::move(F), a, 0, prec);
}

LaurentSeries LaurentSeries::monomial(Field F, FieldElement a, int exponent, int prec) {
    if (prec <= exponent) return zero(std::move(F), prec);
    std::vector<FieldElement> c(static_cast<std::size_t>(prec - exponent));
    c[0] = a;
    return LaurentSeries(std::move(F), exponent, std::move(c));
}

LaurentSeries LaurentSeries::from_poly(Field F, const Poly& p, int prec) {
    std::vector<FieldElement> c(static_cast<std::size_t>(std::max(prec, 0)));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
    if (prec < 0) return zero(std::move(F), prec);
    return LaurentSeries(std::move(F), 0, std::move(c));
}

std::optional<int> LaurentSeries::valuation() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return start_;
}

FieldElement LaurentSeries::coeff(int exponent) const {
    if (exponent >= prec()) {
        fail(ErrorCode::PrecisionExhausted, "coefficient of t^" + std::to_string(exponent) +
                                                " requested from series known to O(t^" +
                                                std::to_string(prec()) + ")");
    }
    if (exponent < start_) return field_.zero();
    return coeffs_[static_cast<std::size_t>(exponent - start_)];
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
    if (new_prec >= prec()) return *this;
    if (new_prec <= start_) return zero(field_, new_prec);
    return LaurentSeries(field_, start_,
                         std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + (new_prec - start_)));
}

LaurentSeries LaurentSeries::shifted(int k) const { return LaurentSeries(field_, start_ + k, coeffs_); }

std::string LaurentSeries::dump() const {
    std::ostringstream os;
    os << start_ << ';' << prec() << ';';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].code;
    }
    return os.str();
}

LaurentSeries LaurentSeries::parse_dump(Field F, const std::string& text) {
    std::istringstream is(text);
    std::string v_s, prec_s, body;
    if (!std::getline(is, v_s, ';') || !std::getline(is, prec_s, ';')) {
        fail(ErrorCode::InvalidConfig, "malformed series dump: " + text);
    }
    std::getline(is, body);
    const int v = std::stoi(v_s);
    const int prec = std::stoi(prec_s);
    std::vector<FieldElement> c;
    std::istringstream bs(body);
    std::string tok;
    while (std::getline(bs, tok, ',')) {
        if (!tok.empty()) c.push_back(F.element(std::stoull(tok)));
    }
    if (v + static_cast<int>(c.size()) != prec) fail(ErrorCode::InvalidConfig, "series dump length mismatch");
    return LaurentSeries(std::move(F), v, std::move(c));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    const auto& F = a.field();
    const int prec = std::min(a.prec(), b.prec());
    const int v = std::min({a.start(), b.start(), prec});
    std::vector<FieldElement> c(static_cast<std::size_t>(prec - v));
    for (int e = v; e < prec; ++e) c[static_cast<std::size_t>(e - v)] = F.add(a.coeff(e), b.coeff(e));
    return LaurentSeries(F, v, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a) {
    const auto& F = a.field();
    std::vector<FieldElement> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a.coeffs()[i]);
    return LaurentSeries(F, a.start(), std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    const auto& F = a.field();
    const int v = a.start() + b.start();
    const int prec = std::min(a.prec() + b.start(), b.prec() + a.start());
    const std::size_t len = static_cast<std::size_t>(std::max(prec - v, 0));
    std::vector<FieldElement> c(len);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < std::min(len, ac.size()); ++i) {
        if (ac[i].code == 0) continue;
        for (std::size_t j = 0; i + j < len && j < bc.size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(ac[i], bc[j]));
        }
    }
    return LaurentSeries(F, v, std::move(c));
}

namespace series {

LaurentSeries scale(const LaurentSeries& a, FieldElement s) {
    const auto& F = a.field();
    std::vector<FieldElement> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.coeffs()[i], s);
    if (s.code == 0) return LaurentSeries::zero(F, a.prec());
    return LaurentSeries(F, a.start(), std::move(c));
}

LaurentSeries inv(const LaurentSeries& a, int out_prec) {
    if (a.is_zero_window()) fail(ErrorCode::NotInvertible, "series has no known nonzero leading term");
    const auto& F = a.field();
    const auto& ac = a.coeffs();
    const int v = -a.start();
    const int prec = std::min(out_prec, v + static_cast<int>(ac.size()));
    const std::size_t len = static_cast<std::size_t>(std::max(prec - v, 0));
    std::vector<FieldElement> b(len);
    const FieldElement lead_inv = F.inv(ac[0]);
    for (std::size_t n = 0; n < len; ++n) {
        if (n == 0) {
            b[0] = lead_inv;
            continue;
        }
        FieldElement acc = F.zero();
        for (std::size_t k = 1; k <= n && k < ac.size(); ++k) acc = F.add(acc, F.mul(ac[k], b[n - k]));
        b[n] = F.neg(F.mul(lead_inv, acc));
    }
    if (len == 0) return LaurentSeries::zero(F, prec);
    return LaurentSeries(F, v, std::move(b));
}

LaurentSeries pow(const LaurentSeries& a, int n) {
    LaurentSeries base = a;
    if (n < 0) {
        base = inv(a, INT_MAX / 2);
        n = -n;
    }
    const auto& F = a.field();
    const int rel = base.is_zero_window() ? 0 : static_cast<int>(base.coeffs().size());
    LaurentSeries result = LaurentSeries::constant(F, F.one(), std::max(rel, 1));
    if (n == 0) return result;
    result = base;
    --n;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentSeries frobenius(const LaurentSeries& a, unsigned k) {
    const auto& F = a.field();
    int factor = 1;
    for (unsigned i = 0; i < k; ++i) factor *= static_cast<int>(F.p());
    const int prec = a.prec() * factor;
    if (a.is_zero_window()) return LaurentSeries::zero(F, prec);
    const int v = a.start() * factor;
    std::vector<FieldElement> c(static_cast<std::size_t>(prec - v));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        c[i * static_cast<std::size_t>(factor)] = F.pow(a.coeffs()[i], factor);
    }
    return LaurentSeries(F, v, std::move(c));
}

int agreement(const LaurentSeries& a, const LaurentSeries& b) {
    const LaurentSeries d = a - b;
    return d.valuation().value_or(d.prec());
}

LaurentSeries solve_fixed_point(const std::function<LaurentSeries(const LaurentSeries&)>& map,
                                const LaurentSeries& seed, int out_prec) {
    LaurentSeries u = seed;
    int last = INT_MIN;
    const int max_steps = 4 * std::max(out_prec, 1);
    for (int step = 0; step < max_steps; ++step) {
        LaurentSeries next = map(u);
        const int agree = agreement(next, u);
        if (agree >= out_prec) return next.truncated(out_prec);
        if (agree <= last) {
            fail(ErrorCode::NoContraction, "fixed-point agreement stalled at t^" + std::to_string(agree));
        }
        last = agree;
        u = std::move(next);
    }
    fail(ErrorCode::NoContraction, "fixed-point iteration did not reach precision " + std::to_string(out_prec));
}

}  // namespace series

}  // namespace lrc
