// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/builder.hpp"
#include "lrc/cli.hpp"
#include "lrc/codec.hpp"
#include "lrc/error.hpp"
#include "lrc/series.hpp"

using namespace lrc;
namespace bd = lrc::bounds;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (problems.size() < 8) problems.push_back(what);
    }
};

std::string instance_name(const LrcCode& c) {
    std::ostringstream s;
    s << (c.params.backend == BackendKind::Hermitian ? "herm" : "rat") << " q=" << c.params.q << " r=" << c.params.r
      << " m=" << c.params.m << " t=" << c.params.t << " e=" << c.params.e << " n=" << c.n();
    return s.str();
}

// Every built code is kept for the repair criterion.
std::vector<LrcCode> g_built;

struct ContractStats {
    int instances = 0;
    int distances = 0;
    int independence_violations = 0;
};

// k bound, t-independence, locality and exact distance where affordable.
void check_contract(const LrcCode& code, Outcome& out, ContractStats& stats, std::uint64_t distance_budget,
                    bool independence_is_required = true) {
    const auto name = instance_name(code);
    const int t = code.params.t;
    const auto gen = dimension_and_generator(code);
    out.expect(static_cast<long>(gen.k) >= code.k_lower_bound(), name + ": k=" + std::to_string(gen.k) + " below bound");
    const bool indep = verify_t_independence(code, t);
    if (!indep) {
        ++stats.independence_violations;
        if (independence_is_required) out.expect(false, name + ": some t columns of H are dependent");
    }
    if (code.t_independent) out.expect(*code.t_independent == indep, name + ": build-time independence flag disagrees");
    const auto loc = verify_locality(code, code.params.r);
    out.expect(loc.certified, name + ": locality not certified (" + loc.reason + ")");
    if (gen.k > 0) {
        const auto d = min_distance_exact(code, distance_budget);
        if (d.d) {
            ++stats.distances;
            if (indep || independence_is_required) {
                out.expect(*d.d >= static_cast<std::size_t>(t) + 1, name + ": d=" + std::to_string(*d.d));
            }
        }
    }
    ++stats.instances;
    g_built.push_back(code);
}

std::vector<Place> affine_places(const CurveBackend& B) {
    std::vector<Place> out;
    for (const auto& P : B.rational_places()) {
        if (P.kind != Place::Kind::Infinity) out.push_back(P);
    }
    return out;
}

FieldElement random_alpha(const Field& F, std::mt19937_64& rng) {
    return F.element(2 + rng() % (F.q() - 2));
}

Outcome criterion_rational() {
    Outcome out;
    ContractStats stats;
    const auto R5 = CurveBackend::rational(Field::make(5));
    check_contract(build_code_rational_places(R5, 2, 2, 2), out, stats, 50'000'000);

    std::mt19937_64 rng(20240611);
    const std::vector<Field> fields{Field::make(2, 2), Field::make(5), Field::make(7), Field::make(3, 2)};
    int built = 0;
    while (built < 60) {
        const Field& F = fields[built % fields.size()];
        const auto B = CurveBackend::rational(F);
        auto places = affine_places(B);
        std::shuffle(places.begin(), places.end(), rng);
        const int q = static_cast<int>(F.q());
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(q - 1));
        const int m_max = std::min(q / r, 36 / (r + 1));
        if (m_max < 1) continue;
        const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(m_max));
        const int t = 1 + static_cast<int>(rng() % 3);
        std::vector<FieldElement> alphas;
        for (int i = 0; i < m; ++i) alphas.push_back(random_alpha(F, rng));
        try {
            check_contract(build_code_rational_places(B, r, m, t, alphas, places), out, stats, 2'000'000);
        } catch (const Error& e) {
            out.expect(false, "rat q=" + std::to_string(q) + " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                  " t=" + std::to_string(t) + ": " + std::string(error_code_name(e.code())) + " " + e.what());
        }
        ++built;
    }
    out.detail = std::to_string(stats.instances) + " instances, exact distance on " + std::to_string(stats.distances);
    return out;
}

Outcome criterion_hermitian() {
    Outcome out;
    ContractStats stats;
    std::mt19937_64 rng(77);
    int rank_checks = 0;
    struct Shape {
        unsigned p;
        int r, m;
    };
    const std::vector<Shape> shapes{{2, 1, 4}, {2, 2, 3}, {2, 3, 2}, {2, 4, 2}, {2, 7, 1}, {2, 8, 1},
                                    {3, 2, 4}, {3, 3, 3}, {3, 4, 2}, {3, 5, 3}, {3, 8, 2}, {3, 11, 2}};
    for (const auto& s : shapes) {
        const Field F = Field::make(s.p, 2);
        const auto B = CurveBackend::hermitian(F);
        const int q0 = static_cast<int>(s.p);
        if (s.m * s.r > q0 * q0 * q0) continue;
        auto places = affine_places(B);
        for (int t = 1; t <= 3; ++t) {
            std::shuffle(places.begin(), places.end(), rng);
            std::vector<FieldElement> alphas;
            for (int i = 0; i < s.m; ++i) alphas.push_back(random_alpha(F, rng));
            const auto A = build_expansion_matrix(B, t, 1);
            ++rank_checks;
            out.expect(linalg::rank(F, A.entries) == B.genus(), "rank(A) != g for q=" + std::to_string(F.q()));
            try {
                check_contract(build_code_rational_places(B, s.r, s.m, t, alphas, places), out, stats, 2'000'000);
            } catch (const Error& e) {
                out.expect(false, "herm q=" + std::to_string(F.q()) + " r=" + std::to_string(s.r) + ": " +
                                      std::string(error_code_name(e.code())) + " " + e.what());
            }
        }
    }
    out.detail = std::to_string(stats.instances) + " instances, exact distance on " + std::to_string(stats.distances) +
                 ", rank(A) = g on " + std::to_string(rank_checks);
    return out;
}

Outcome criterion_prime_fields() {
    Outcome out;
    ContractStats stats;
    int small = 0;
    auto run = [&](std::uint32_t p, int r, int m, int t, int deg, BlockMode mode, bool strict = true) {
        const auto B = CurveBackend::rational(Field::make(p));
        HigherDegreeOptions opt;
        opt.mode = mode;
        try {
            const auto code = build_code_prime_field(B, r, m, t, deg, opt);
            if (code.n() <= 12) ++small;
            // the distance oracle is only required on n <= 12; larger ones are tried under a budget
            check_contract(code, out, stats, code.n() <= 12 ? 50'000'000 : 2'000'000, strict);
            if (code.n() <= 12 && dimension_and_generator(code).k > 0) {
                out.expect(min_distance_exact(code).d.has_value(), instance_name(code) + ": distance not computed");
            }
        } catch (const Error& e) {
            out.expect(false, "F_" + std::to_string(p) + " r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                  " t=" + std::to_string(t) + " e=" + std::to_string(deg) + ": " +
                                  std::string(error_code_name(e.code())) + " " + e.what());
        }
    };
    // F_2, r = 3: b = 4
    for (int t = 1; t <= 2; ++t) {
        for (int m = 1; m <= 3; ++m) run(2, 3, m, t, 4, BlockMode::SinglePlace);
        run(2, 3, 1, t, 2, BlockMode::Mixed);
    }
    // F_3, r = 2: b = 2 (the even case)
    for (int t = 1; t <= 3; ++t) {
        for (int m = 1; m <= 3; ++m) run(3, 2, m, t, 2, BlockMode::SinglePlace);
        run(3, 2, 4, t, 2, BlockMode::Mixed);
    }
    // F_2, r = 2: b = r + 2, the other even case; independence is observed, not required
    for (int t = 1; t <= 2; ++t) {
        run(2, 2, 1, t, 4, BlockMode::SinglePlace, false);
        run(2, 2, 2, t, 4, BlockMode::Mixed, false);
        run(2, 2, 1, t, 2, BlockMode::Mixed, false);
    }
    out.detail = std::to_string(stats.instances) + " instances (" + std::to_string(small) +
                 " with n <= 12), t-independence violations: " + std::to_string(stats.independence_violations);
    return out;
}

Outcome criterion_prime_envelope() {
    Outcome out;
    const auto pf = bd::prime_field_bound(2, 11);
    const auto R = [](const char* s) { return bd::parse_rational(s); };
    out.expect(pf.envelope.size() == 3, "expected three pieces");
    if (pf.envelope.size() == 3) {
        const auto& a = pf.envelope[0];
        const auto& b = pf.envelope[1];
        const auto& c = pf.envelope[2];
        out.expect(a.intercept == R("227/252") && a.from == 0 && a.to == R("4/189"), "first piece");
        out.expect(b.intercept == R("65/84") && b.from == R("4/189") && b.to == R("2/21"), "second piece");
        out.expect(c.intercept == R("7/12") && c.from == R("2/21") && c.to == R("7/48"), "third piece");
        // continuity and the zero at the endpoint, exactly
        out.expect(a.at(a.to) == b.at(b.from) && b.at(b.to) == c.at(c.from), "pieces do not meet");
        out.expect(c.at(c.to) == 0, "envelope does not vanish at 7/48");
    }
    out.detail = "227/252 | 4/189 | 65/84 | 2/21 | 7/12 | 7/48";
    return out;
}

Outcome criterion_gv() {
    Outcome out;
    const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 16, 64, 4096};
    const std::vector<int> rs{1, 2, 5, 11, 63};
    const std::vector<double> fractions{0.05, 0.3, 0.6, 0.9};
    double worst = 0;
    int points = 0;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            // two of the four delta fractions per (q, r), alternating: 100 points
            for (std::size_t k = (i + j) % 2; k < fractions.size(); k += 2) {
                const double delta = fractions[k] * (1 - 1.0 / static_cast<double>(qs[i]));
                const auto a = bd::gv_minimize_bisection(qs[i], rs[j], delta);
                const auto b = bd::gv_minimize_grid(qs[i], rs[j], delta);
                const double gap = std::abs(a.h - b.h);
                worst = std::max(worst, gap);
                out.expect(gap < 1e-8, "q=" + std::to_string(qs[i]) + " r=" + std::to_string(rs[j]) + " gap " +
                                           std::to_string(gap));
                ++points;
            }
        }
    }
    out.expect(points == 100, "sweep has " + std::to_string(points) + " points");
    int brackets = 0;
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 64, 256, 4096, 8192}) {
        for (int r = 1; r <= 64; ++r) {
            const auto hb = bd::gv_half_minimizer_bracket(q, r);
            out.expect(hb.brackets(), "delta=1/2 root not in (1/(q-1), 1/(q-1)+2^-r) for q=" + std::to_string(q) +
                                          " r=" + std::to_string(r));
            ++brackets;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d sweep points, max |h_bisect - h_grid| = %.2e; %d exact delta=1/2 brackets",
                  points, worst, brackets);
    out.detail = buf;
    return out;
}

using Curves = std::map<std::string, std::vector<std::pair<double, double>>>;

Curves run_figure(int k, Outcome& out) {
    std::ostringstream csv, err;
    const int code = cli::run({"bounds", "--figure", std::to_string(k)}, csv, err);
    out.expect(code == 0, "figure " + std::to_string(k) + " exit " + std::to_string(code));
    Curves curves;
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    out.expect(line == "delta,rate,bound_id,params", "figure " + std::to_string(k) + " header");
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string d, rate, id;
        std::getline(row, d, ',');
        std::getline(row, rate, ',');
        std::getline(row, id, ',');
        curves[id].emplace_back(std::stod(d), std::stod(rate));
    }
    return curves;
}

double at(const Curves& c, const std::string& id, double delta) {
    const auto it = c.find(id);
    if (it == c.end()) return std::nan("");
    for (const auto& [d, v] : it->second) {
        if (std::abs(d - delta) < 1e-12) return v;
    }
    return std::nan("");
}

Outcome criterion_figures() {
    Outcome out;
    // GV at the sample points from a 40-digit golden-section oracle
    struct Frozen {
        int figure;
        double delta, gv;
    };
    const std::vector<Frozen> frozen{
        {1, 0.1, 0.85963146378790504}, {1, 0.3, 0.62656789738553689}, {1, 0.5, 0.41668134431131788},
        {1, 0.7, 0.22657964043328731}, {1, 0.9, 0.060943453627932075}, {2, 0.1, 0.85971046887062239},
        {2, 0.3, 0.62656789767524888}, {2, 0.5, 0.41668134431131788}, {2, 0.7, 0.22657964043328731},
        {2, 0.9, 0.060943453627932075}, {3, 0.1, 0.8624833232208776},  {3, 0.3, 0.63221245550727893},
        {3, 0.5, 0.42308369696093362}, {3, 0.7, 0.23221787580448455}, {3, 0.9, 0.063935608868966569},
        {5, 0.05, 0.69050407587474954}, {5, 0.1, 0.52432625033659487}, {5, 0.145, 0.40101954873072248},
    };
    std::map<int, Curves> figs;
    for (int k = 1; k <= 5; ++k) figs[k] = run_figure(k, out);
    for (const auto& f : frozen) {
        const double v = at(figs[f.figure], "gv", f.delta);
        out.expect(std::abs(v - f.gv) < 1e-9, "figure " + std::to_string(f.figure) + " gv at " + std::to_string(f.delta));
    }
    // the square-field line is affine, so its samples are checked exactly against r/(r+1) (1 - 1/63) - delta
    for (int k = 1; k <= 2; ++k) {
        const double r = k == 1 ? 63 : 64;
        for (const auto& [d, v] : figs[k]["tvz_square"]) {
            out.expect(std::abs(v - std::max(0.0, r / (r + 1) * (1 - 1.0 / 63) - d)) < 1e-11, "tvz_square sample");
        }
    }
    int exceed = 0;
    for (double d : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (int k = 1; k <= 2; ++k) {
            const bool ok = at(figs[k], "tvz_square", d) > at(figs[k], "gv", d);
            out.expect(ok, "figure " + std::to_string(k) + ": tvz_square <= gv at " + std::to_string(d));
            exceed += ok;
        }
        const bool ok = at(figs[3], "tvz_oddpower", d) > at(figs[3], "gv", d);
        out.expect(ok, "figure 3: tvz_oddpower <= gv at " + std::to_string(d));
        exceed += ok;
    }
    int below = 0;
    for (const auto& [d, v] : figs[5]["tvz_prime"]) {
        const bool ok = v <= at(figs[5], "gv", d);
        out.expect(ok, "figure 5: envelope exceeds gv at " + std::to_string(d));
        below += ok;
    }
    out.expect(figs[5]["tvz_prime"].size() == 31, "figure 5 grid size");
    out.expect(figs[4]["gv"].size() == 199 && figs[4]["tvz_square"].size() == 199, "figure 4 covers r = 2..200");
    out.detail = std::to_string(exceed) + "/15 exceedances in figures 1-3, envelope <= gv on " + std::to_string(below) +
                 "/31 in figure 5";
    return out;
}

Outcome criterion_crossover() {
    Outcome out;
    const std::uint64_t q = 4096;
    // intersection of two affine curves from their exact raw values at delta = 0 and 1
    auto intersect = [](const bd::Rational& a0, const bd::Rational& a1, const bd::Rational& b0,
                        const bd::Rational& b1) {
        return (b0 - a0) / ((a1 - a0) - (b1 - b0));
    };
    int checked = 0;
    for (int r : {63, 64}) {
        const auto sq_0 = bd::tvz_square_rate(q, r, 0).raw;
        const auto sq_1 = bd::tvz_square_rate(q, r, 1).raw;
        const auto b0 = bd::barg_bounds(q, r, 0).btv_b.value;
        const auto b1 = bd::barg_bounds(q, r, 1).btv_b.value;
        if (b0 && b1) {
            const auto x = intersect(sq_0, sq_1, b0->raw, b1->raw);
            out.expect(x == bd::crossover_delta(q, r, bd::Versus::BtvB), "r=" + std::to_string(r) + " vs btv_b: " + bd::to_string(x));
            ++checked;
        }
        const auto l0 = bd::lmx_bound(q, r, 0).value;
        const auto l1 = bd::lmx_bound(q, r, 1).value;
        if (l0 && l1) {
            const auto x = intersect(sq_0, sq_1, l0->raw, l1->raw);
            out.expect(x == bd::crossover_delta(q, r, bd::Versus::Lmx), "r=" + std::to_string(r) + " vs lmx: " + bd::to_string(x));
            ++checked;
        }
    }
    out.expect(checked == 2, "expected two applicable pairs, got " + std::to_string(checked));
    out.detail = std::to_string(checked) + " applicable pairs: r=63 vs lmx " +
                 bd::to_string(bd::crossover_delta(q, 63, bd::Versus::Lmx)) + ", r=64 vs btv_b " +
                 bd::to_string(bd::crossover_delta(q, 64, bd::Versus::BtvB));
    return out;
}

Outcome criterion_repair() {
    Outcome out;
    std::vector<std::pair<const LrcCode*, Generator>> pool;
    for (const auto& c : g_built) {
        auto gen = dimension_and_generator(c);
        if (gen.k > 0) pool.emplace_back(&c, std::move(gen));
    }
    out.expect(!pool.empty(), "no built instances");
    if (pool.empty()) return out;
    std::mt19937_64 rng(424242);
    int restored = 0;
    const int trials = 1000;
    for (int i = 0; i < trials; ++i) {
        const auto& [code, gen] = pool[rng() % pool.size()];
        const auto c = random_codeword(code->field, gen.G, rng);
        const std::size_t pos = rng() % c.size();
        ErasedWord w(c.begin(), c.end());
        w[pos].reset();
        try {
            const auto rep = repair_erasure(*code, w);
            const bool ok = rep.position == pos && rep.value == c[pos] && rep.word == c;
            out.expect(ok, instance_name(*code) + ": wrong symbol at " + std::to_string(pos));
            restored += ok;
        } catch (const Error& e) {
            out.expect(false, instance_name(*code) + ": " + std::string(error_code_name(e.code())));
        }
    }
    out.detail = std::to_string(restored) + "/" + std::to_string(trials) + " restored over " +
                 std::to_string(pool.size()) + " codes";
    return out;
}

void field_axioms(const Field& F, const std::vector<FieldElement>& xs, Outcome& out, std::uint64_t& checks) {
    const auto p = F.p();
    for (auto a : xs) {
        out.expect(F.from_coeffs(F.coeffs(a)) == a, "encoding round trip");
        if (a != F.zero()) out.expect(F.mul(a, F.inv(a)) == F.one(), "inverse");
        out.expect(F.add(a, F.neg(a)) == F.zero(), "negation");
        for (auto b : xs) {
            out.expect(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)), "frobenius additivity");
            out.expect(F.mul(a, b) == F.mul(b, a) && F.add(a, b) == F.add(b, a), "commutativity");
            for (auto c : xs) {
                out.expect(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)), "mul associativity");
                out.expect(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)), "add associativity");
                out.expect(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), "distributivity");
                ++checks;
            }
        }
    }
}

LaurentSeries random_series(const Field& F, std::mt19937_64& rng) {
    const int start = static_cast<int>(rng() % 9) - 4;
    const int len = 4 + static_cast<int>(rng() % 10);
    std::vector<FieldElement> c;
    for (int i = 0; i < len; ++i) c.push_back(F.element(rng() % F.q()));
    if (c[0] == F.zero()) c[0] = F.one();
    return LaurentSeries(F, start, c);
}

void series_properties(const Field& F, std::mt19937_64& rng, int trials, Outcome& out) {
    const auto name = " over F_" + std::to_string(F.q());
    for (int i = 0; i < trials; ++i) {
        const auto a = random_series(F, rng);
        const auto b = random_series(F, rng);
        const auto prod = a * b;
        out.expect(prod.valuation() == *a.valuation() + *b.valuation(), "valuation of a product" + name);
        const auto sum = a + b;
        const int lo = std::min(*a.valuation(), *b.valuation());
        if (sum.valuation()) out.expect(*sum.valuation() >= lo, "valuation of a sum" + name);
        if (*a.valuation() != *b.valuation()) {
            out.expect(sum.valuation() == lo, "strict triangle equality" + name);
        }
        const auto ia = series::inv(a, 24);
        const auto one = a * ia;
        out.expect(series::agreement(one, LaurentSeries::constant(F, F.one(), one.prec())) >= one.prec(),
                   "a * inv(a) = 1" + name);
    }
    // u = 1 + c t u^2 for a random c
    const auto c = F.element(1 + rng() % (F.q() - 1));
    auto map = [&](const LaurentSeries& u) {
        return LaurentSeries::constant(F, F.one(), 1000) + LaurentSeries::monomial(F, c, 1, 1000) * u * u;
    };
    const auto u = series::solve_fixed_point(map, LaurentSeries::constant(F, F.one(), 1), 20);
    out.expect(series::agreement(map(u), u) >= 20, "fixed point residual" + name);
}

Outcome criterion_properties() {
    Outcome out;
    std::uint64_t checks = 0;
    int exhaustive = 0;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const auto F = Field::of_order(q);
        field_axioms(F, F.elements(), out, checks);
        ++exhaustive;
    }
    std::mt19937_64 rng(1234567);
    int sampled = 0;
    for (std::uint64_t q : {25u, 27u, 32u, 49u, 81u, 125u, 243u, 256u, 1024u, 3125u, 4096u, 65536u, 1u << 20}) {
        const auto F = Field::of_order(q);
        std::vector<FieldElement> xs;
        for (int i = 0; i < 24; ++i) xs.push_back(F.element(rng() % q));
        xs.push_back(F.zero());
        xs.push_back(F.one());
        field_axioms(F, xs, out, checks);
        ++sampled;
    }
    int series_fields = 0;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 64, 4096}) {
        series_properties(Field::of_order(q), rng, 300, out);
        ++series_fields;
    }
    out.detail = std::to_string(exhaustive) + " fields exhaustive, " + std::to_string(sampled) + " sampled, " +
                 std::to_string(checks) + " triples; series suite on " + std::to_string(series_fields) + " fields";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "rational-place contract", 60, criterion_rational},
        {2, "hermitian contract", 120, criterion_hermitian},
        {3, "prime-field contract", 60, criterion_prime_fields},
        {4, "prime-field envelope exact", 1, criterion_prime_envelope},
        {5, "GV optimizer", 30, criterion_gv},
        {6, "figures", 120, criterion_figures},
        {7, "crossover arithmetic", 1, criterion_crossover},
        {8, "repair round trip", 10, criterion_repair},
        {9, "field and series properties", 30, criterion_properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("uncaught: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(secs < c.limit_seconds, "runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        std::printf("[%s] %d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
