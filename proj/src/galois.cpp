#include "lrc/galois.hpp"

#include <algorithm>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a by the monic polynomial m, both over F_p, constant-first.
Digits poly_rem(Digits a, const Digits& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) {
                const std::uint64_t sub = (lead * m[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero(const Digits& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Monic polynomial of degree k whose lower coefficients are the base-p digits of idx.
Digits monic_from_index(std::uint64_t idx, unsigned k, std::uint32_t p) {
    Digits out(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    out[k] = 1;
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Exhaustive factor check: no monic divisor of degree 1..deg/2.
bool irreducible_by_trial_division(const Digits& f, std::uint32_t p) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    for (unsigned k = 1; k <= d / 2; ++k) {
        const std::uint64_t count = ipow(p, k);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (is_zero(poly_rem(f, monic_from_index(idx, k, p), p))) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 2;
    unsigned d = 1;
    std::uint32_t q = 2;
    Digits modulus;
    std::vector<std::uint32_t> pow_p;  // p^i, i < d
    std::vector<std::uint32_t> exp;    // exp[i] = g^i, length 2(q-1)
    std::vector<std::uint32_t> log;    // log[x] for x != 0
    std::uint32_t generator = 1;

    Digits digits(std::uint32_t code) const {
        Digits out(d, 0);
        for (unsigned i = 0; i < d; ++i) {
            out[i] = code % p;
            code /= p;
        }
        return out;
    }

    std::uint32_t encode(const Digits& c) const {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < d && i < c.size(); ++i) code += c[i] * pow_p[i];
        return code;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (d == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        const Digits da = digits(a), db = digits(b);
        Digits prod(2 * d - 1, 0);
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned j = 0; j < d; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
            }
        }
        return encode(poly_rem(std::move(prod), modulus, p));
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t n) const {
        std::uint32_t r = 1;
        while (n > 0) {
            if (n & 1u) r = mul_slow(r, a);
            a = mul_slow(a, a);
            n >>= 1;
        }
        return r;
    }

    void build_tables() {
        const std::uint64_t order = q - 1;
        const auto factors = prime_factors(order);
        for (std::uint32_t cand = 1; cand < q; ++cand) {
            bool ok = true;
            for (auto f : factors) {
                if (pow_slow(cand, order / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator = cand;
                break;
            }
        }
        exp.assign(2 * order, 0);
        log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            exp[i] = x;
            exp[i + order] = x;
            log[x] = static_cast<std::uint32_t>(i);
            x = mul_slow(x, generator);
        }
    }
};

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power_split(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
    unsigned d = 0;
    while (q % p == 0) {
        q /= p;
        ++d;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), d);
}

Field Field::make(std::uint32_t p, unsigned ext_deg, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (ext_deg < 1) fail(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < ext_deg; ++i) {
        q *= p;
        if (q > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^20");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->d = ext_deg;
    impl->q = static_cast<std::uint32_t>(q);
    impl->pow_p.resize(ext_deg);
    for (unsigned i = 0; i < ext_deg; ++i) impl->pow_p[i] = static_cast<std::uint32_t>(ipow(p, i));

    if (modulus) {
        auto m = *modulus;
        if (m.size() != ext_deg + 1) {
            fail(ErrorCode::DegreeMismatch, "modulus length " + std::to_string(m.size()) +
                                                " does not match degree " + std::to_string(ext_deg));
        }
        for (auto c : m) {
            if (c >= p) fail(ErrorCode::DegreeMismatch, "modulus coefficient out of range");
        }
        if (m.back() != 1) fail(ErrorCode::DegreeMismatch, "modulus must be monic");
        if (ext_deg > 1 && !irreducible_by_trial_division(m, p)) {
            fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        }
        impl->modulus = std::move(m);
    } else if (ext_deg == 1) {
        impl->modulus = {0, 1};
    } else {
        const std::uint64_t count = ipow(p, ext_deg);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto cand = monic_from_index(idx, ext_deg, p);
            if (cand[0] != 0 && irreducible_by_trial_division(cand, p)) {
                impl->modulus = std::move(cand);
                break;
            }
        }
    }
    impl->build_tables();
    return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q, std::optional<std::vector<std::uint32_t>> modulus) {
    auto split = prime_power_split(q);
    if (!split) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return make(split->first, split->second, std::move(modulus));
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
unsigned Field::ext_deg() const noexcept { return impl_->d; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
FieldElement Field::primitive() const noexcept { return {impl_->generator}; }

void Field::check(FieldElement x) const {
    if (x.code >= impl_->q) {
        fail(ErrorCode::ContextMismatch,
             "element code " + std::to_string(x.code) + " is outside F_" + std::to_string(impl_->q));
    }
}

FieldElement Field::element(std::uint64_t code) const {
    if (code >= impl_->q) {
        fail(ErrorCode::ContextMismatch,
             "element code " + std::to_string(code) + " is outside F_" + std::to_string(impl_->q));
    }
    return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_int(std::int64_t value) const {
    const std::int64_t p = impl_->p;
    return {static_cast<std::uint32_t>(((value % p) + p) % p)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > impl_->d) fail(ErrorCode::DegreeMismatch, "too many coefficients for field element");
    Digits c(coeffs.begin(), coeffs.end());
    for (auto v : c) {
        if (v >= impl_->p) fail(ErrorCode::ContextMismatch, "coefficient out of range");
    }
    return {impl_->encode(c)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
    check(x);
    return impl_->digits(x.code);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    const auto& s = *impl_;
    if (s.p == 2) return {a.code ^ b.code};
    if (s.d == 1) return {(a.code + b.code) % s.p};
    std::uint32_t out = 0;
    std::uint32_t x = a.code, y = b.code;
    for (unsigned i = 0; i < s.d; ++i) {
        out += ((x % s.p + y % s.p) % s.p) * s.pow_p[i];
        x /= s.p;
        y /= s.p;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    const auto& s = *impl_;
    if (s.p == 2) return a;
    if (s.d == 1) return {(s.p - a.code) % s.p};
    std::uint32_t out = 0;
    std::uint32_t x = a.code;
    for (unsigned i = 0; i < s.d; ++i) {
        out += ((s.p - x % s.p) % s.p) * s.pow_p[i];
        x /= s.p;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.code == 0 || b.code == 0) return {0};
    const auto& s = *impl_;
    return {s.exp[s.log[a.code] + s.log[b.code]]};
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.code == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    const auto& s = *impl_;
    return {s.exp[(s.q - 1) - s.log[a.code]]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t n) const {
    check(a);
    if (a.code == 0) {
        if (n == 0) return one();
        if (n < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
        return zero();
    }
    const auto& s = *impl_;
    const std::int64_t order = s.q - 1;
    std::int64_t e = (static_cast<std::int64_t>(s.log[a.code]) * (n % order)) % order;
    if (e < 0) e += order;
    return {s.exp[static_cast<std::size_t>(e)]};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out(impl_->q);
    for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = {i};
    return out;
}

std::string Field::to_string(FieldElement x) const {
    check(x);
    if (impl_->d == 1) return std::to_string(x.code);
    if (x.code == 0) return "0";
    const auto c = impl_->digits(x.code);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = impl_->d; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i];
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->d == b.impl_->d && a.impl_->modulus == b.impl_->modulus;
}

}  // namespace lrc
