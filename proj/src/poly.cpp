#include "lrc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {

namespace {

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().code == 0) c.pop_back();
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Poly::Poly(std::vector<FieldElement> coeffs) : c(std::move(coeffs)) { trim(c); }

Poly Poly::constant(FieldElement a) { return Poly({a}); }

Poly Poly::monomial(FieldElement a, std::size_t degree) {
    std::vector<FieldElement> c(degree + 1);
    c[degree] = a;
    return Poly(std::move(c));
}

Poly Poly::linear_root(const Field& F, FieldElement a) { return Poly({F.neg(a), F.one()}); }

Poly Poly::monic_from_index(const Field& F, unsigned degree, std::uint64_t idx) {
    std::vector<FieldElement> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = FieldElement{static_cast<std::uint32_t>(idx % F.q())};
        idx /= F.q();
    }
    c[degree] = F.one();
    return Poly(std::move(c));
}

Poly Poly::from_codes(const Field& F, const std::vector<std::uint64_t>& codes) {
    std::vector<FieldElement> c;
    c.reserve(codes.size());
    for (auto v : codes) c.push_back(F.element(v));
    return Poly(std::move(c));
}

std::vector<std::uint64_t> Poly::codes() const {
    std::vector<std::uint64_t> out;
    out.reserve(c.size());
    for (auto x : c) out.push_back(x.code);
    return out;
}

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<FieldElement> out(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<FieldElement> out(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly scale(const Field& F, const Poly& a, FieldElement s) {
    std::vector<FieldElement> out(a.c.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.c[i], s);
    return Poly(std::move(out));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> out(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].code == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<FieldElement> r = a.c;
    std::vector<FieldElement> quo(a.c.size() - b.c.size() + 1);
    const FieldElement inv_lead = F.inv(b.lead());
    for (std::size_t k = quo.size(); k-- > 0;) {
        const FieldElement coef = F.mul(r[k + b.c.size() - 1], inv_lead);
        quo[k] = coef;
        if (coef.code == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r[k + j] = F.sub(r[k + j], F.mul(coef, b.c[j]));
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly make_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly result = rem(F, Poly::constant(F.one()), m);
    base = rem(F, base, m);
    while (e > 0) {
        if (e & 1u) result = rem(F, mul(F, result, base), m);
        base = rem(F, mul(F, base, base), m);
        e >>= 1;
    }
    return result;
}

FieldElement eval(const Field& F, const Poly& a, FieldElement x) {
    FieldElement acc = F.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

Poly taylor_shift(const Field& F, const Poly& a, FieldElement shift) {
    // Horner in the ring: result = (...(a_n)(x+s) + a_{n-1})(x+s) + ...
    const Poly lin({shift, F.one()});
    Poly acc;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        acc = add(F, mul(F, acc, lin), Poly::constant(a.c[i]));
    }
    return acc;
}

bool is_irreducible(const Field& F, const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x = Poly::monomial(F.one(), 1);
    // x^(q^k) mod f for k = 0..n
    std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = rem(F, x, f);
    for (int k = 1; k <= n; ++k) frob[k] = powmod(F, frob[k - 1], F.q(), f);
    if (!sub(F, frob[n], frob[0]).is_zero()) return false;
    for (unsigned ell : prime_divisors(static_cast<unsigned>(n))) {
        const Poly g = gcd(F, f, sub(F, frob[n / ell], frob[0]));
        if (g.degree() != 0) return false;
    }
    return true;
}

std::string to_string(const Field& F, const Poly& a, char var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        const auto c = a.c[i];
        if (c.code == 0) continue;
        if (!first) os << '+';
        first = false;
        const std::string cs = F.to_string(c);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        if (c.code != 1) os << (compound ? "(" + cs + ")" : cs);
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

}  // namespace poly

}  // namespace lrc
