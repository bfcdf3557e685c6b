#include "lrc/codec.hpp"

#include <algorithm>
#include <map>

#include "lrc/error.hpp"

namespace lrc {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base) return UINT64_MAX;
        out *= base;
    }
    return out;
}

std::size_t weight(const Field& F, const std::vector<FieldElement>& c) {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [&](FieldElement x) { return x != F.zero(); }));
}

void add_into(const Field& F, std::vector<FieldElement>& acc, std::span<const FieldElement> v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F.add(acc[i], v[i]);
}

// Walks every codeword sum_j c_j G_j as an F_p-odometer over the vectors
// z^l G_j: bumping a digit adds its vector, and wrapping after p steps has
// added it p times, which is zero in characteristic p.
template <typename Visit>
void for_each_codeword(const Field& F, const Matrix& G, Visit&& visit) {
    const std::size_t n = G.cols();
    std::vector<std::vector<FieldElement>> steps;
    std::uint32_t beta = 1;
    for (unsigned l = 0; l < F.ext_deg(); ++l, beta *= F.p()) {
        for (std::size_t j = 0; j < G.rows(); ++j) {
            std::vector<FieldElement> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = F.mul(F.element(beta), G(j, i));
            steps.push_back(std::move(v));
        }
    }
    std::vector<FieldElement> c(n, F.zero());
    std::vector<std::uint32_t> digit(steps.size(), 0);
    if (!visit(c)) return;
    while (true) {
        std::size_t pos = 0;
        while (pos < steps.size()) {
            add_into(F, c, steps[pos]);
            if (++digit[pos] < F.p()) break;
            digit[pos] = 0;
            ++pos;
        }
        if (pos == steps.size()) return;
        if (!visit(c)) return;
    }
}

bool is_codeword(const Field& F, const Matrix& H, std::span<const FieldElement> w) {
    for (auto s : linalg::apply(F, H, w)) {
        if (s != F.zero()) return false;
    }
    return true;
}

// Checks the definition directly: c_i is a function of c_I over all codewords.
bool projection_determines(const Field& F, const Matrix& G, std::size_t i, std::span<const std::size_t> I) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
    bool ok = true;
    for_each_codeword(F, G, [&](const std::vector<FieldElement>& c) {
        std::vector<std::uint32_t> key;
        for (auto j : I) key.push_back(c[j].code);
        auto [it, fresh] = seen.emplace(std::move(key), c[i].code);
        if (!fresh && it->second != c[i].code) ok = false;
        return ok;
    });
    return ok;
}

}  // namespace

Generator dimension_and_generator(const LrcCode& code) {
    Generator out;
    out.G = linalg::nullspace(code.field, code.H);
    out.k = out.G.rows();
    if (out.G.cols() != code.n()) out.G = Matrix(0, code.n());
    return out;
}

std::size_t singleton_upper(std::size_t n, std::size_t k, int r) {
    if (k == 0) return n + 1;
    long bound;
    if (r > 0) {
        const long ceil_kr = (static_cast<long>(k) + r - 1) / r;
        bound = static_cast<long>(n) - static_cast<long>(k) - ceil_kr + 2;
    } else {
        bound = static_cast<long>(n) - static_cast<long>(k) + 1;
    }
    return static_cast<std::size_t>(std::max(bound, 1L));
}

DistanceResult min_distance_exact(const LrcCode& code, std::uint64_t budget, DistanceStrategy strategy) {
    const auto& F = code.field;
    const Generator gen = dimension_and_generator(code);
    DistanceResult out;
    if (gen.k == 0) {
        out.strategy = "empty-code";
        return out;
    }
    const std::uint64_t messages = saturating_pow(F.q(), gen.k);
    if (strategy == DistanceStrategy::Auto) {
        strategy = (messages <= kMessageEnumerationLimit && messages <= budget) ? DistanceStrategy::MessageEnumeration
                                                                              : DistanceStrategy::SupportEnumeration;
    }
    if (strategy == DistanceStrategy::MessageEnumeration) {
        out.strategy = "message-enumeration";
        if (messages > budget) return out;
        std::size_t best = code.n() + 1;
        for_each_codeword(F, gen.G, [&](const std::vector<FieldElement>& c) {
            ++out.work;
            const auto w = weight(F, c);
            if (w > 0 && w < best) best = w;
            return true;
        });
        out.d = best;
        return out;
    }
    out.strategy = "support-enumeration";
    // the locality-aware cap is only valid when the groups certify locality r
    const int r = code.groups.empty() ? 0 : code.params.r;
    const std::size_t cap = std::min(singleton_upper(code.n(), gen.k, r), code.n());
    for (std::size_t w = 1; w <= cap; ++w) {
        bool found = false;
        bool exhausted = false;
        for_each_subset(code.n(), w, [&](std::span<const std::size_t> cols) {
            if (out.work >= budget) {
                exhausted = true;
                return false;
            }
            ++out.work;
            if (!linalg::columns_independent(F, code.H, cols)) {
                found = true;
                return false;
            }
            return true;
        });
        if (exhausted) return out;
        if (found) {
            out.d = w;
            return out;
        }
    }
    // no dependent set below the cap means the cap itself is attained
    out.d = cap;
    return out;
}

LocalityResult verify_locality(const LrcCode& code, int r) {
    const auto& F = code.field;
    const std::size_t n = code.n();
    LocalityResult out;
    std::vector<bool> covered(n, false);
    const std::size_t base_rank = linalg::rank(F, code.H);
    for (const auto& group : code.groups) {
        if (group.empty() || group.size() > static_cast<std::size_t>(r) + 1) continue;
        Matrix ext(code.H.rows() + 1, n);
        for (std::size_t i = 0; i < code.H.rows(); ++i) {
            for (std::size_t j = 0; j < n; ++j) ext(i, j) = code.H(i, j);
        }
        for (auto j : group) ext(code.H.rows(), j) = F.one();
        if (linalg::rank(F, ext) != base_rank) continue;
        for (auto i : group) {
            LocalityWitness w{i, {}, "group-row"};
            for (auto j : group) {
                if (j != i) w.repair_set.push_back(j);
            }
            out.witnesses.push_back(std::move(w));
            covered[i] = true;
        }
    }
    std::optional<Generator> gen;
    for (std::size_t i = 0; i < n; ++i) {
        if (covered[i]) continue;
        if (!gen) gen = dimension_and_generator(code);
        if (n > 14 || F.q() > 4 || saturating_pow(F.q(), gen->k) > (1ULL << 16)) {
            out.reason = "coordinate " + std::to_string(i) + " has no group witness and is too large for the exhaustive check";
            break;
        }
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) others.push_back(j);
        }
        std::optional<std::vector<std::size_t>> found;
        for (std::size_t size = 0; size <= static_cast<std::size_t>(r) && size <= others.size() && !found; ++size) {
            for_each_subset(others.size(), size, [&](std::span<const std::size_t> idx) {
                std::vector<std::size_t> I;
                for (auto t : idx) I.push_back(others[t]);
                if (projection_determines(F, gen->G, i, I)) {
                    found = std::move(I);
                    return false;
                }
                return true;
            });
        }
        if (!found) {
            out.reason = "coordinate " + std::to_string(i) + " is not determined by any " + std::to_string(r) + " others";
            break;
        }
        out.witnesses.push_back({i, std::move(*found), "exhaustive"});
        covered[i] = true;
    }
    out.certified = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const LocalityWitness& a, const LocalityWitness& b) { return a.coordinate < b.coordinate; });
    return out;
}

bool verify_t_independence(const LrcCode& code, int t, std::uint64_t budget) {
    if (t < 0) fail(ErrorCode::BadParams, "t must be >= 0");
    const auto subsets = binomial(code.n(), static_cast<std::uint64_t>(t));
    if (subsets > budget) {
        fail(ErrorCode::BudgetExceeded, "C(" + std::to_string(code.n()) + ", " + std::to_string(t) + ") = " +
                                            std::to_string(subsets) + " subsets exceeds the budget of " + std::to_string(budget));
    }
    return for_each_subset(code.n(), static_cast<std::size_t>(t), [&](std::span<const std::size_t> cols) {
        return linalg::columns_independent(code.field, code.H, cols);
    });
}

Repair repair_erasure(const LrcCode& code, const ErasedWord& word) {
    const auto& F = code.field;
    if (word.size() != code.n()) {
        fail(ErrorCode::BadParams, "word has length " + std::to_string(word.size()) + ", code length is " + std::to_string(code.n()));
    }
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i]) {
            F.check(*word[i]);
            continue;
        }
        if (pos) fail(ErrorCode::MultipleErasures, "erasures at " + std::to_string(*pos) + " and " + std::to_string(i));
        pos = i;
    }
    if (!pos) fail(ErrorCode::NoErasure, "word has no erased symbol");
    const auto group = std::find_if(code.groups.begin(), code.groups.end(), [&](const auto& g) {
        return std::find(g.begin(), g.end(), *pos) != g.end();
    });
    if (group == code.groups.end()) fail(ErrorCode::NotInAnyGroup, "coordinate " + std::to_string(*pos) + " lies in no repair group");

    FieldElement sum = F.zero();
    for (auto j : *group) {
        if (j != *pos) sum = F.add(sum, *word[j]);
    }
    Repair out;
    out.position = *pos;
    out.value = F.neg(sum);
    for (std::size_t i = 0; i < word.size(); ++i) out.word.push_back(i == *pos ? out.value : *word[i]);
    if (!is_codeword(F, code.H, out.word)) fail(ErrorCode::NotACodeword, "restored word does not satisfy H w = 0");
    return out;
}

CodeReport analyze(const LrcCode& code, const AnalyzeOptions& options) {
    CodeReport rep;
    rep.n = code.n();
    rep.r = code.params.r;
    rep.k_exact = dimension_and_generator(code).k;
    if (code.params.m > 0) rep.k_lower_bound = code.k_lower_bound();
    if (code.params.r > 0) rep.d_singleton_upper = singleton_upper(rep.n, rep.k_exact, code.params.r);
    const bool built = code.params.m > 0;
    if (built) rep.d_lower = static_cast<std::size_t>(code.params.t) + 1;
    if (options.check_independence) {
        if (options.independence_t) rep.t = options.independence_t;
        else if (built) rep.t = code.params.t;
    }
    if (rep.t) {
        try {
            rep.t_independence_certified = verify_t_independence(code, *rep.t, options.subset_budget);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::BudgetExceeded) throw;
            rep.notes.push_back("t-independence unknown: " + std::string(err.what()));
        }
    }
    if (options.exact_distance) {
        const auto dist = min_distance_exact(code, options.distance_budget);
        rep.d_exact = dist.d;
        rep.distance_strategy = dist.strategy;
        if (!dist.d && dist.strategy != "empty-code") rep.notes.push_back("distance unknown: budget exhausted");
    }
    if (options.verify_locality && rep.r > 0) {
        auto loc = verify_locality(code, rep.r);
        rep.locality_certified = loc.certified;
        rep.locality_witnesses = std::move(loc.witnesses);
        if (!loc.reason.empty()) rep.notes.push_back("locality: " + loc.reason);
    }
    return rep;
}

long singleton_defect(const CodeReport& report) {
    if (!report.d_exact) fail(ErrorCode::DistanceUnknown, "singleton defect needs an exact distance");
    if (report.r <= 0) fail(ErrorCode::BadParams, "singleton defect needs r >= 1");
    const long bound = static_cast<long>(singleton_upper(report.n, report.k_exact, report.r));
    const long defect = bound - static_cast<long>(*report.d_exact);
    if (defect < 0) fail(ErrorCode::DomainError, "distance exceeds the locality Singleton bound");
    return defect;
}

std::vector<FieldElement> random_codeword(const Field& F, const Matrix& G, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    std::vector<FieldElement> c(G.cols(), F.zero());
    for (std::size_t j = 0; j < G.rows(); ++j) {
        const FieldElement s = F.element(pick(rng));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(c[i], F.mul(s, G(j, i)));
    }
    return c;
}

}  // namespace lrc
