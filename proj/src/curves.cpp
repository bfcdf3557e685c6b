#include "lrc/curves.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {

namespace {

unsigned int_sqrt(unsigned n) {
    unsigned r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

unsigned log_p(unsigned n, unsigned p) {
    unsigned k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

}  // namespace

Place Place::higher(Poly m) {
    Place P;
    P.kind = Kind::HigherDegree;
    P.degree = static_cast<unsigned>(m.degree());
    P.poly = std::move(m);
    return P;
}

std::string Place::literal(BackendKind backend) const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Infinity: return "inf";
        case Kind::RationalAffine:
            if (backend == BackendKind::Hermitian) {
                os << "(a=" << a.code << ",b=" << b.code << ')';
            } else {
                os << "a=" << a.code;
            }
            return os.str();
        case Kind::HigherDegree:
            os << "poly=";
            for (std::size_t i = 0; i < poly.c.size(); ++i) os << (i ? "," : "") << poly.c[i].code;
            return os.str();
    }
    return {};
}

CurveBackend CurveBackend::rational(Field F) { return CurveBackend(BackendKind::Rational, std::move(F), 0, 0); }

CurveBackend CurveBackend::hermitian(Field F) {
    if (F.ext_deg() % 2 != 0) {
        fail(ErrorCode::NotASquare, "Hermitian curve needs a square field order, got " + std::to_string(F.q()));
    }
    const unsigned q0 = int_sqrt(F.q());
    return CurveBackend(BackendKind::Hermitian, std::move(F), q0, q0 * (q0 - 1) / 2);
}

std::string CurveBackend::name() const {
    return kind_ == BackendKind::Rational ? "rational" : "hermitian";
}

std::string CurveBackend::local_parameter() const { return kind_ == BackendKind::Rational ? "1/x" : "x/y"; }

bool CurveBackend::on_curve(FieldElement a, FieldElement b) const {
    if (kind_ == BackendKind::Rational) return true;
    const auto& F = field_;
    return F.add(F.pow(b, q0_), b) == F.pow(a, q0_ + 1);
}

std::vector<Place> CurveBackend::rational_places() const {
    std::vector<Place> out;
    const auto elems = field_.elements();
    if (kind_ == BackendKind::Rational) {
        for (auto a : elems) out.push_back(Place::affine(a));
    } else {
        for (auto a : elems) {
            for (auto b : elems) {
                if (on_curve(a, b)) out.push_back(Place::affine(a, b));
            }
        }
    }
    out.push_back(Place::infinity());
    return out;
}

int CurveBackend::monomial_pole(std::size_t i, std::size_t j) const {
    if (kind_ == BackendKind::Rational) return static_cast<int>(i);
    return static_cast<int>(i * q0_ + j * (q0_ + 1));
}

CurveFunction CurveBackend::normalize(CurveFunction f) const {
    const auto& F = field_;
    f.backend = kind_;
    if (f.den.is_zero()) fail(ErrorCode::DivisionByZero, "function with zero denominator");
    if (kind_ == BackendKind::Hermitian) {
        // y^j = y^(j-q0) (x^(q0+1) - y) for j >= q0
        const Poly xq1 = Poly::monomial(F.one(), q0_ + 1);
        for (std::size_t j = f.num.size(); j-- > q0_;) {
            const Poly c = f.num[j];
            if (c.is_zero()) continue;
            f.num[j] = Poly{};
            const std::size_t base = j - q0_;
            f.num[base] = poly::add(F, f.num[base], poly::mul(F, c, xq1));
            if (f.num.size() < base + 2) f.num.resize(base + 2);
            f.num[base + 1] = poly::sub(F, f.num[base + 1], c);
        }
    }
    while (!f.num.empty() && f.num.back().is_zero()) f.num.pop_back();
    const FieldElement s = F.inv(f.den.lead());
    f.den = poly::scale(F, f.den, s);
    for (auto& c : f.num) c = poly::scale(F, c, s);
    return f;
}

CurveFunction CurveBackend::constant(FieldElement c) const {
    return normalize({kind_, {Poly::constant(c)}, Poly::constant(field_.one())});
}

CurveFunction CurveBackend::x() const {
    return normalize({kind_, {Poly::monomial(field_.one(), 1)}, Poly::constant(field_.one())});
}

CurveFunction CurveBackend::y() const {
    if (kind_ == BackendKind::Rational) fail(ErrorCode::UnsupportedBackend, "rational backend has no y");
    return normalize({kind_, {Poly{}, Poly::constant(field_.one())}, Poly::constant(field_.one())});
}

CurveFunction CurveBackend::add(const CurveFunction& f, const CurveFunction& h) const {
    const auto& F = field_;
    CurveFunction out{kind_, {}, {}};
    const std::size_t n = std::max(f.num.size(), h.num.size());
    out.num.resize(n);
    if (f.den == h.den) {
        out.den = f.den;
        for (std::size_t j = 0; j < n; ++j) {
            out.num[j] = poly::add(F, j < f.num.size() ? f.num[j] : Poly{}, j < h.num.size() ? h.num[j] : Poly{});
        }
    } else {
        out.den = poly::mul(F, f.den, h.den);
        for (std::size_t j = 0; j < n; ++j) {
            const Poly a = j < f.num.size() ? poly::mul(F, f.num[j], h.den) : Poly{};
            const Poly b = j < h.num.size() ? poly::mul(F, h.num[j], f.den) : Poly{};
            out.num[j] = poly::add(F, a, b);
        }
    }
    return normalize(std::move(out));
}

CurveFunction CurveBackend::mul(const CurveFunction& f, const CurveFunction& h) const {
    const auto& F = field_;
    CurveFunction out{kind_, {}, poly::mul(F, f.den, h.den)};
    if (!f.num.empty() && !h.num.empty()) {
        out.num.resize(f.num.size() + h.num.size() - 1);
        for (std::size_t i = 0; i < f.num.size(); ++i) {
            for (std::size_t j = 0; j < h.num.size(); ++j) {
                out.num[i + j] = poly::add(F, out.num[i + j], poly::mul(F, f.num[i], h.num[j]));
            }
        }
    }
    return normalize(std::move(out));
}

CurveFunction CurveBackend::scale(const CurveFunction& f, FieldElement c) const {
    CurveFunction out = f;
    for (auto& p : out.num) p = poly::scale(field_, p, c);
    return normalize(std::move(out));
}

std::vector<std::pair<CurveFunction, int>> CurveBackend::rr_basis_at_infinity() const {
    std::vector<std::pair<CurveFunction, int>> out;
    if (kind_ == BackendKind::Rational) return out;
    const int bound = 2 * static_cast<int>(genus_) - 1;
    const auto& F = field_;
    for (std::size_t j = 0; j < q0_; ++j) {
        for (std::size_t i = 0; monomial_pole(i, j) <= bound; ++i) {
            CurveFunction f{kind_, std::vector<Poly>(j + 1), Poly::constant(F.one())};
            f.num[j] = Poly::monomial(F.one(), i);
            out.emplace_back(normalize(std::move(f)), monomial_pole(i, j));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

CurveFunction CurveBackend::auxiliary_function(const Place& P) const {
    const auto& F = field_;
    if (P.kind == Place::Kind::Infinity) fail(ErrorCode::PlaceAtInfinity, "auxiliary function requested at infinity");
    if (P.kind != Place::Kind::RationalAffine) fail(ErrorCode::NonRationalPlace, "auxiliary function needs a rational place");
    const Poly x_minus_a = Poly::linear_root(F, P.a);
    if (kind_ == BackendKind::Rational) {
        return normalize({kind_, {Poly::constant(F.one())}, x_minus_a});
    }
    if (!on_curve(P.a, P.b)) fail(ErrorCode::NonRationalPlace, "point is not on the Hermitian curve");
    CurveFunction g = constant(F.one());
    for (auto b : F.elements()) {
        if (b == P.b || !on_curve(P.a, b)) continue;
        g = mul(g, add(y(), constant(F.neg(b))));
    }
    g.den = x_minus_a;
    return normalize(std::move(g));
}

std::vector<CurveFunction> CurveBackend::higher_degree_block(const Place& Q) const {
    if (kind_ != BackendKind::Rational) {
        fail(ErrorCode::UnsupportedBackend, "higher-degree blocks are only provided on the rational backend");
    }
    if (Q.kind != Place::Kind::HigherDegree) fail(ErrorCode::NonRationalPlace, "expected a higher-degree place");
    return divisor_block(std::span<const Place>(&Q, 1));
}

std::vector<CurveFunction> CurveBackend::divisor_block(std::span<const Place> places) const {
    if (kind_ != BackendKind::Rational) {
        fail(ErrorCode::UnsupportedBackend, "divisor blocks are only provided on the rational backend");
    }
    const auto& F = field_;
    Poly M = Poly::constant(F.one());
    for (std::size_t i = 0; i < places.size(); ++i) {
        const auto& P = places[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (places[j] == P) fail(ErrorCode::BadParams, "divisor block places must be distinct");
        }
        if (P.kind == Place::Kind::Infinity) fail(ErrorCode::PlaceAtInfinity, "divisor block may not contain infinity");
        M = poly::mul(F, M, P.kind == Place::Kind::RationalAffine ? Poly::linear_root(F, P.a) : P.poly);
    }
    std::vector<CurveFunction> out;
    for (int s = 0; s < M.degree(); ++s) {
        out.push_back(normalize({kind_, {Poly::monomial(F.one(), static_cast<std::size_t>(s))}, M}));
    }
    return out;
}

namespace {

// Evaluates sum_j num_j(X) Y^j / den(X) in series arithmetic.
LaurentSeries evaluate(const Field& F, const CurveFunction& f, const LaurentSeries& xs,
                       const LaurentSeries* ys, int rel_prec) {
    std::size_t max_deg = static_cast<std::size_t>(std::max(f.den.degree(), 0));
    for (const auto& c : f.num) max_deg = std::max(max_deg, static_cast<std::size_t>(std::max(c.degree(), 0)));
    std::vector<LaurentSeries> xp;
    xp.push_back(LaurentSeries::constant(F, F.one(), rel_prec));
    for (std::size_t i = 1; i <= max_deg; ++i) xp.push_back(xp.back() * xs);

    auto poly_in_x = [&](const Poly& p) {
        LaurentSeries acc = LaurentSeries::zero(F, rel_prec);
        bool first = true;
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (p.c[i].code == 0) continue;
            LaurentSeries term = series::scale(xp[i], p.c[i]);
            acc = first ? term : acc + term;
            first = false;
        }
        return acc;
    };

    LaurentSeries num = LaurentSeries::zero(F, rel_prec);
    bool first = true;
    LaurentSeries yp = LaurentSeries::constant(F, F.one(), rel_prec);
    for (std::size_t j = 0; j < f.num.size(); ++j) {
        if (j > 0) yp = yp * *ys;
        if (f.num[j].is_zero()) continue;
        LaurentSeries term = poly_in_x(f.num[j]) * yp;
        num = first ? term : num + term;
        first = false;
    }
    const LaurentSeries den = poly_in_x(f.den);
    return num * series::inv(den, INT_MAX / 2);
}

}  // namespace

LaurentSeries CurveBackend::expand_at_infinity(const CurveFunction& f, int out_prec) const {
    const auto& F = field_;
    int pole = 0;
    for (std::size_t j = 0; j < f.num.size(); ++j) {
        if (!f.num[j].is_zero()) pole = std::max(pole, monomial_pole(static_cast<std::size_t>(f.num[j].degree()), j));
    }
    const int rel = std::max(out_prec + pole + 2, 1);
    LaurentSeries result = LaurentSeries::zero(F, 0);
    if (kind_ == BackendKind::Rational) {
        const LaurentSeries xs = LaurentSeries::monomial(F, F.one(), -1, rel - 1);
        result = evaluate(F, f, xs, nullptr, rel);
    } else {
        // x = t^-q0 u, y = t^-(q0+1) u with u = 1 + t^(q0^2-1) u^(1-q0)
        const int q0 = static_cast<int>(q0_);
        const LaurentSeries one = LaurentSeries::constant(F, F.one(), rel);
        auto map = [&](const LaurentSeries& u) {
            return one + series::pow(u, 1 - q0).shifted(q0 * q0 - 1);
        };
        const LaurentSeries u =
            series::solve_fixed_point(map, LaurentSeries::constant(F, F.one(), 1), rel);
        const LaurentSeries xs = u.shifted(-q0);
        const LaurentSeries ys = u.shifted(-(q0 + 1));
        result = evaluate(F, f, xs, &ys, rel);
    }
    if (result.prec() < out_prec) {
        fail(ErrorCode::PrecisionExhausted, "expansion reached only O(t^" + std::to_string(result.prec()) + ")");
    }
    return result.truncated(out_prec);
}

LaurentSeries CurveBackend::expand_at_affine(const CurveFunction& f, const Place& P, int out_prec) const {
    const auto& F = field_;
    if (P.kind != Place::Kind::RationalAffine) fail(ErrorCode::NonRationalPlace, "expected an affine rational place");
    const int rel = std::max(out_prec + 2 * std::max(f.den.degree(), 0) + 2, 1);
    // x = a + s
    const LaurentSeries xs = LaurentSeries::from_poly(F, Poly({P.a, F.one()}), rel);
    LaurentSeries result = LaurentSeries::zero(F, 0);
    if (kind_ == BackendKind::Rational) {
        result = evaluate(F, f, xs, nullptr, rel);
    } else {
        if (!on_curve(P.a, P.b)) fail(ErrorCode::NonRationalPlace, "point is not on the Hermitian curve");
        // y = (a+s)^(q0+1) - y^q0, contracting because y -> y^q0 multiplies the error order by q0
        const LaurentSeries rhs = series::pow(xs, static_cast<int>(q0_) + 1);
        const unsigned k = log_p(q0_, F.p());
        auto map = [&](const LaurentSeries& y) { return rhs - series::frobenius(y, k); };
        const LaurentSeries ys = series::solve_fixed_point(map, LaurentSeries::constant(F, P.b, 1), rel);
        result = evaluate(F, f, xs, &ys, rel);
    }
    if (result.prec() < out_prec) {
        fail(ErrorCode::PrecisionExhausted, "expansion reached only O(s^" + std::to_string(result.prec()) + ")");
    }
    return result.truncated(out_prec);
}

std::string CurveBackend::describe(const CurveFunction& f) const {
    std::ostringstream os;
    std::vector<std::string> terms;
    for (std::size_t j = 0; j < f.num.size(); ++j) {
        if (f.num[j].is_zero()) continue;
        std::string c = poly::to_string(field_, f.num[j]);
        if (j == 0) {
            terms.push_back(c);
            continue;
        }
        std::string yj = j == 1 ? "y" : "y^" + std::to_string(j);
        if (c == "1") {
            terms.push_back(yj);
        } else if (f.num[j].c.size() == 1 && c.find('+') == std::string::npos) {
            terms.push_back(c + yj);
        } else {
            terms.push_back("(" + c + ")" + yj);
        }
    }
    std::string num;
    for (std::size_t i = terms.size(); i-- > 0;) num += terms[i] + (i ? "+" : "");
    if (num.empty()) num = "0";
    if (f.den.degree() == 0) return num;
    const bool wrap = terms.size() > 1 || num.find('+') != std::string::npos;
    os << (wrap ? "(" + num + ")" : num) << "/(" << poly::to_string(field_, f.den) << ')';
    return os.str();
}

Place CurveBackend::parse_place(const std::string& literal) const {
    const std::string s = strip(literal);
    auto parse_int = [&](const std::string& v) -> std::uint64_t {
        try {
            std::size_t used = 0;
            const auto out = std::stoull(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidConfig, "bad integer in place literal: " + literal);
        }
    };
    if (s == "inf") return Place::infinity();
    if (s.rfind("poly=", 0) == 0) {
        if (kind_ != BackendKind::Rational) fail(ErrorCode::UnsupportedBackend, "higher-degree places need the rational backend");
        std::vector<std::uint64_t> codes;
        for (const auto& tok : split(s.substr(5), ',')) codes.push_back(parse_int(tok));
        Poly m = Poly::from_codes(field_, codes);
        if (m.degree() < 1 || m.lead() != field_.one() || !poly::is_irreducible(field_, m)) {
            fail(ErrorCode::InvalidConfig, "place polynomial must be monic irreducible: " + literal);
        }
        return Place::higher(std::move(m));
    }
    if (s.rfind("a=", 0) == 0 && kind_ == BackendKind::Rational) {
        return Place::affine(field_.element(parse_int(s.substr(2))));
    }
    if (s.size() > 2 && s.front() == '(' && s.back() == ')' && kind_ == BackendKind::Hermitian) {
        const auto parts = split(s.substr(1, s.size() - 2), ',');
        if (parts.size() == 2 && parts[0].rfind("a=", 0) == 0 && parts[1].rfind("b=", 0) == 0) {
            const auto a = field_.element(parse_int(parts[0].substr(2)));
            const auto b = field_.element(parse_int(parts[1].substr(2)));
            if (!on_curve(a, b)) fail(ErrorCode::NonRationalPlace, "point is not on the Hermitian curve: " + literal);
            return Place::affine(a, b);
        }
    }
    fail(ErrorCode::InvalidConfig, "unrecognized place literal for " + name() + " backend: " + literal);
}

std::vector<Poly> all_irreducibles_of_degree(const Field& F, unsigned d) {
    if (d < 1) fail(ErrorCode::BadParams, "irreducible degree must be >= 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
        count *= F.q();
        if (count > (1ull << 26)) fail(ErrorCode::BadParams, "irreducible enumeration too large");
    }
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = Poly::monic_from_index(F, d, idx);
        if (poly::is_irreducible(F, f)) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Poly> irreducibles_of_degree(const Field& F, unsigned d, std::size_t count) {
    if (d < 1) fail(ErrorCode::BadParams, "irreducible degree must be >= 1");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        total *= F.q();
        if (total > (1ull << 26)) fail(ErrorCode::BadParams, "irreducible enumeration too large");
    }
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < total && out.size() < count; ++idx) {
        Poly f = Poly::monic_from_index(F, d, idx);
        if (poly::is_irreducible(F, f)) out.push_back(std::move(f));
    }
    if (out.size() < count) {
        fail(ErrorCode::Exhausted, "only " + std::to_string(out.size()) + " monic irreducibles of degree " +
                                       std::to_string(d) + " exist over F_" + std::to_string(F.q()));
    }
    return out;
}

}  // namespace lrc
