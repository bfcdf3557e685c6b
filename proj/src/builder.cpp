#include "lrc/builder.hpp"

#include <algorithm>
#include <set>

#include "lrc/error.hpp"

namespace lrc {

namespace {

constexpr int kPrecisionGuard = 8;
constexpr std::size_t kMaxCheckedLength = 40;
constexpr int kMaxCheckedT = 4;

// Expansion with the builder's precision budget 2g + t*e + guard, retried once
// at double the budget.
LaurentSeries budgeted_expansion(const CurveBackend& backend, const CurveFunction& f, int genus, int rows_te) {
    const int budget = 2 * genus + rows_te + kPrecisionGuard;
    try {
        return backend.expand_at_infinity(f, budget);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::PrecisionExhausted && err.code() != ErrorCode::InsufficientPrecision) throw;
        return backend.expand_at_infinity(f, 2 * budget);
    }
}

bool check_t_independence(const Field& F, const Matrix& H, int t) {
    const auto k = static_cast<std::size_t>(t);
    return for_each_subset(H.cols(), k, [&](std::span<const std::size_t> cols) {
        return linalg::columns_independent(F, H, cols);
    });
}

void validate_common(int r, int m, int t) {
    if (r < 1) fail(ErrorCode::BadParams, "locality r must be >= 1");
    if (m < 1) fail(ErrorCode::BadParams, "group count m must be >= 1");
    if (t < 0) fail(ErrorCode::BadParams, "t must be >= 0");
}

std::vector<FieldElement> checked_alphas(const Field& F, std::vector<FieldElement> alphas, int m) {
    if (alphas.empty()) return default_alphas(F, m);
    if (alphas.size() == 1 && m > 1) alphas.assign(static_cast<std::size_t>(m), alphas.front());
    if (alphas.size() != static_cast<std::size_t>(m)) {
        fail(ErrorCode::BadParams, "expected " + std::to_string(m) + " alphas, got " + std::to_string(alphas.size()));
    }
    for (auto a : alphas) {
        F.check(a);
        if (a == F.zero() || a == F.one()) {
            fail(ErrorCode::AlphaInvalid, "alpha must avoid {0, 1}, got " + F.to_string(a));
        }
    }
    return alphas;
}

struct Assembly {
    Matrix H;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::string> provenance;
    std::vector<ColumnSource> sources;
};

// Stacks the m all-one group rows over the reduced local columns.
Assembly assemble(const Field& F, const CurveBackend& backend, const ExpansionMatrix& A,
                  const std::vector<std::vector<ColumnSource>>& group_columns, int rows_te) {
    const std::size_t m = group_columns.size();
    const auto local_rows = A.complement_rows();
    std::size_t n = 0;
    for (const auto& g : group_columns) n += g.size();
    Assembly out;
    out.H = Matrix(m + local_rows.size(), n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> group;
        std::vector<FieldElement> first_values;
        for (std::size_t j = 0; j < group_columns[i].size(); ++j) {
            const auto& src = group_columns[i][j];
            out.H(i, col) = F.one();
            const LaurentSeries ex = budgeted_expansion(backend, src.function, A.genus, rows_te);
            const ReducedColumn red = reduce_function(A, ex);
            for (std::size_t row = 0; row < red.values.size(); ++row) {
                out.H(m + row, col) = F.mul(src.multiplier, red.values[row]);
            }
            std::string label = "group " + std::to_string(i) + ": ";
            if (src.replicated) label += F.to_string(src.multiplier) + " * ";
            label += "reduce(" + backend.describe(src.function) + ")";
            out.provenance.push_back(std::move(label));
            out.sources.push_back(src);
            group.push_back(col);
            ++col;
        }
        out.groups.push_back(std::move(group));
    }
    return out;
}

void finish_checks(LrcCode& code) {
    const int t = code.params.t;
    if (t <= kMaxCheckedT && code.n() <= kMaxCheckedLength) {
        code.t_independent = check_t_independence(code.field, code.H, t);
    }
}

}  // namespace

std::vector<std::size_t> ExpansionMatrix::complement_rows() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t r = 0; r < entries.rows(); ++r) {
        if (k < pivot_rows.size() && pivot_rows[k] == r) {
            ++k;
            continue;
        }
        out.push_back(r);
    }
    return out;
}

ExpansionMatrix build_expansion_matrix(const CurveBackend& backend, int t, int e) {
    if (t < 0) fail(ErrorCode::BadParams, "t must be >= 0");
    if (e < 1) fail(ErrorCode::BadParams, "e must be >= 1");
    const auto& F = backend.field();
    const int g = static_cast<int>(backend.genus());
    const auto basis = backend.rr_basis_at_infinity();
    if (static_cast<int>(basis.size()) != g) {
        fail(ErrorCode::RankDeficient, "basis size " + std::to_string(basis.size()) + " differs from genus");
    }
    const int rows = 2 * g + t * e;
    ExpansionMatrix A;
    A.genus = g;
    A.entries = Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        const auto& [f, pole] = basis[static_cast<std::size_t>(j)];
        A.pole_numbers.push_back(pole);
        const LaurentSeries ex = budgeted_expansion(backend, f, g, t * e);
        for (int row = 0; row < rows; ++row) A.entries(static_cast<std::size_t>(row), static_cast<std::size_t>(j)) = ex.coeff(row - 2 * g + 1);
    }
    if (linalg::rank(F, A.entries) != static_cast<std::size_t>(g)) {
        fail(ErrorCode::RankDeficient, "expansion matrix has rank below the genus");
    }
    if (g == 0) {
        A.pivot_method = "leading-rows";
        return A;
    }
    // Leading rows 2g-1-n_j: triangular when the basis has distinct pole numbers.
    std::vector<std::size_t> leading;
    for (int pole : A.pole_numbers) leading.push_back(static_cast<std::size_t>(2 * g - 1 - pole));
    std::sort(leading.begin(), leading.end());
    const bool distinct = std::adjacent_find(leading.begin(), leading.end()) == leading.end();
    if (distinct && linalg::rank(F, A.entries.select_rows(leading)) == static_cast<std::size_t>(g)) {
        A.pivot_rows = std::move(leading);
        A.pivot_method = "leading-rows";
    } else {
        A.pivot_rows = linalg::independent_rows(F, A.entries);
        A.pivot_method = "elimination";
    }
    return A;
}

ReducedColumn reduce_function(const ExpansionMatrix& A, const LaurentSeries& g_expansion) {
    const auto& F = g_expansion.field();
    const int g = A.genus;
    const auto rows = A.total_rows();
    const int last_exponent = static_cast<int>(rows) - 2 * g;  // exponent of the last row
    if (g_expansion.prec() <= last_exponent) {
        fail(ErrorCode::InsufficientPrecision, "expansion known to O(t^" + std::to_string(g_expansion.prec()) +
                                                   "), need O(t^" + std::to_string(last_exponent + 1) + ")");
    }
    if (auto v = g_expansion.valuation(); v && *v < 1 - 2 * g) {
        fail(ErrorCode::BadParams, "function has a pole of order " + std::to_string(-*v) + " at infinity, above 2g-1");
    }
    ReducedColumn out;
    out.full.resize(rows);
    for (std::size_t row = 0; row < rows; ++row) out.full[row] = g_expansion.coeff(static_cast<int>(row) - 2 * g + 1);
    if (g > 0) {
        std::vector<FieldElement> rhs;
        for (auto r : A.pivot_rows) rhs.push_back(out.full[r]);
        auto sol = linalg::solve_square(F, A.entries.select_rows(A.pivot_rows), rhs);
        if (!sol) fail(ErrorCode::RankDeficient, "pivot submatrix is singular");
        out.alphas = std::move(*sol);
        for (std::size_t row = 0; row < rows; ++row) {
            FieldElement acc = out.full[row];
            for (int w = 0; w < g; ++w) {
                acc = F.sub(acc, F.mul(out.alphas[static_cast<std::size_t>(w)], A.entries(row, static_cast<std::size_t>(w))));
            }
            out.full[row] = acc;
        }
        for (auto r : A.pivot_rows) {
            if (out.full[r] != F.zero()) fail(ErrorCode::RankDeficient, "reduction left a nonzero pivot coefficient");
        }
    }
    for (auto r : A.complement_rows()) out.values.push_back(out.full[r]);
    return out;
}

std::string construction_name(Construction c) {
    return c == Construction::SimplePoles ? "simple-poles" : "higher-degree";
}

long LrcCode::k_lower_bound() const noexcept {
    return static_cast<long>(n()) - params.m - params.genus - static_cast<long>(params.t) * params.e;
}

LrcCode code_from_parity_check(Field F, Matrix H) {
    LrcCode code;
    code.field = F;
    code.params.q = F.q();
    code.H = std::move(H);
    code.provenance.assign(code.H.cols(), "given");
    return code;
}

std::vector<FieldElement> default_alphas(const Field& F, int m) {
    if (F.q() < 3) fail(ErrorCode::FieldTooSmall, "no alpha outside {0, 1} exists in F_2");
    return std::vector<FieldElement>(static_cast<std::size_t>(std::max(m, 0)), F.element(2));
}

int locality_block_size(std::uint32_t q, int r) {
    if (r % 2 != 0) return r + 1;
    if (q == 2) return r + 2;
    return r;
}

std::vector<std::vector<Place>> select_divisor_blocks(const Field& F, int e, std::size_t count, BlockMode mode) {
    if (e < 1) fail(ErrorCode::BadParams, "block degree must be >= 1");
    const auto ue = static_cast<unsigned>(e);
    std::vector<std::vector<Place>> blocks;
    for (auto& m : all_irreducibles_of_degree(F, ue)) {
        if (blocks.size() == count) break;
        blocks.push_back({Place::higher(std::move(m))});
    }
    if (mode == BlockMode::Mixed && blocks.size() < count) {
        std::vector<Place> pool;
        for (unsigned d = ue - 1; d >= 1; --d) {
            if (ue % d != 0) continue;
            if (d == 1) {
                for (auto a : F.elements()) pool.push_back(Place::affine(a));
            } else {
                for (auto& m : all_irreducibles_of_degree(F, d)) pool.push_back(Place::higher(std::move(m)));
            }
        }
        std::vector<std::vector<Place>> open;
        std::vector<unsigned> fill;
        for (auto& P : pool) {
            std::size_t k = 0;
            while (k < open.size() && fill[k] + P.degree > ue) ++k;
            if (k == open.size()) {
                open.emplace_back();
                fill.push_back(0);
            }
            open[k].push_back(P);
            fill[k] += P.degree;
        }
        for (std::size_t k = 0; k < open.size() && blocks.size() < count; ++k) {
            if (fill[k] == ue) blocks.push_back(std::move(open[k]));
        }
    }
    if (blocks.size() < count) {
        fail(ErrorCode::NotEnoughIrreducibles, "need " + std::to_string(count) + " disjoint degree-" +
                                                   std::to_string(e) + " blocks over F_" + std::to_string(F.q()) +
                                                   ", found " + std::to_string(blocks.size()));
    }
    return blocks;
}

LrcCode build_code_rational_places(const CurveBackend& backend, int r, int m, int t,
                                   std::vector<FieldElement> alphas, std::optional<std::vector<Place>> places) {
    const auto& F = backend.field();
    validate_common(r, m, t);
    if (F.q() < 3) fail(ErrorCode::FieldTooSmall, "the simple-pole construction needs q >= 3");
    alphas = checked_alphas(F, std::move(alphas), m);

    const std::size_t need = static_cast<std::size_t>(m) * static_cast<std::size_t>(r);
    std::vector<Place> chosen;
    if (places) {
        chosen = *places;
        if (chosen.size() < need) {
            fail(ErrorCode::NotEnoughPlaces, "configured " + std::to_string(chosen.size()) + " places, need " + std::to_string(need));
        }
        chosen.resize(need);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const auto& P = chosen[i];
            if (P.kind == Place::Kind::Infinity) fail(ErrorCode::PlaceAtInfinity, "group places must avoid infinity");
            if (P.kind != Place::Kind::RationalAffine || !backend.on_curve(P.a, P.b)) {
                fail(ErrorCode::NonRationalPlace, "group places must be rational points of the curve");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (chosen[j] == P) fail(ErrorCode::BadParams, "group places must be distinct");
            }
        }
    } else {
        for (auto& P : backend.rational_places()) {
            if (P.kind == Place::Kind::Infinity) continue;
            if (chosen.size() == need) break;
            chosen.push_back(P);
        }
        if (chosen.size() < need) {
            fail(ErrorCode::NotEnoughPlaces, "need " + std::to_string(need) + " affine rational places, the " +
                                                 backend.name() + " backend over F_" + std::to_string(F.q()) +
                                                 " has " + std::to_string(chosen.size()));
        }
    }

    const ExpansionMatrix A = build_expansion_matrix(backend, t, 1);

    LrcCode code;
    code.field = F;
    code.params = {F.q(), r, m, t, 1, static_cast<int>(backend.genus()), backend.kind(),
                   Construction::SimplePoles, 0, alphas};
    std::vector<std::vector<ColumnSource>> group_columns(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<CurveFunction> funcs;
        std::vector<std::string> literals;
        for (int j = 0; j < r; ++j) {
            const auto& P = chosen[static_cast<std::size_t>(i * r + j)];
            funcs.push_back(backend.auxiliary_function(P));
            literals.push_back(P.literal(backend.kind()));
        }
        auto& cols = group_columns[static_cast<std::size_t>(i)];
        for (const auto& f : funcs) cols.push_back({f, F.one(), false});
        cols.push_back({funcs.front(), alphas[static_cast<std::size_t>(i)], true});
        code.group_functions.push_back(std::move(funcs));
        code.group_places.push_back(std::move(literals));
    }
    Assembly as = assemble(F, backend, A, group_columns, t);
    code.H = std::move(as.H);
    code.groups = std::move(as.groups);
    code.provenance = std::move(as.provenance);
    code.sources = std::move(as.sources);
    code.pivot_rows = A.pivot_rows;
    finish_checks(code);
    return code;
}

LrcCode build_code_prime_field(const CurveBackend& backend, int r, int m, int t, int e,
                               const HigherDegreeOptions& options) {
    const auto& F = backend.field();
    validate_common(r, m, t);
    if (backend.kind() != BackendKind::Rational) {
        fail(ErrorCode::UnsupportedBackend, "higher-degree places are only provided on the rational backend");
    }
    if (F.ext_deg() != 1) fail(ErrorCode::NotPrimeField, "the higher-degree construction expects a prime field");
    const int b = locality_block_size(F.q(), r);
    if (e < 2 || e % 2 != 0 || b % e != 0) {
        fail(ErrorCode::BadLocalityParity, "e = " + std::to_string(e) + " must be an even divisor of b = " + std::to_string(b));
    }
    const bool replicate = (b == r);
    std::vector<FieldElement> alphas;
    if (replicate) alphas = checked_alphas(F, options.alphas, m);

    const std::size_t per_group = static_cast<std::size_t>(b / e);
    std::vector<std::vector<Place>> blocks;
    if (options.blocks) {
        blocks = *options.blocks;
        if (blocks.size() < per_group * static_cast<std::size_t>(m)) {
            fail(ErrorCode::NotEnoughIrreducibles, "configured " + std::to_string(blocks.size()) + " blocks, need " +
                                                       std::to_string(per_group * static_cast<std::size_t>(m)));
        }
        std::vector<Place> seen;
        for (const auto& blk : blocks) {
            unsigned deg = 0;
            for (const auto& P : blk) {
                if (std::find(seen.begin(), seen.end(), P) != seen.end()) {
                    fail(ErrorCode::BadParams, "divisor blocks must have disjoint supports");
                }
                seen.push_back(P);
                deg += P.degree;
                if (P.kind == Place::Kind::Infinity) fail(ErrorCode::PlaceAtInfinity, "blocks may not contain infinity");
                if (static_cast<unsigned>(e) % P.degree != 0) {
                    fail(ErrorCode::BadLocalityParity, "block place degrees must divide e");
                }
            }
            if (deg != static_cast<unsigned>(e)) fail(ErrorCode::BadLocalityParity, "every block must have degree e");
        }
    } else {
        blocks = select_divisor_blocks(F, e, per_group * static_cast<std::size_t>(m), options.mode);
    }

    const ExpansionMatrix A = build_expansion_matrix(backend, t, e);

    LrcCode code;
    code.field = F;
    code.params = {F.q(), r, m, t, e, static_cast<int>(backend.genus()), backend.kind(),
                   Construction::HigherDegree, b, alphas};
    std::vector<std::vector<ColumnSource>> group_columns(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
        std::vector<CurveFunction> funcs;
        std::vector<std::string> literals;
        for (std::size_t u = 0; u < per_group; ++u) {
            const auto& blk = blocks[i * per_group + u];
            for (auto& f : backend.divisor_block(blk)) funcs.push_back(std::move(f));
            std::string lit;
            for (const auto& P : blk) lit += (lit.empty() ? "" : "+") + P.literal(backend.kind());
            literals.push_back(std::move(lit));
        }
        auto& cols = group_columns[i];
        if (replicate) {
            for (const auto& f : funcs) cols.push_back({f, F.one(), false});
            cols.push_back({funcs.front(), alphas[i], true});
        } else {
            // r+1 plain columns; with b = r+2 the last block function is dropped
            for (int j = 0; j <= r; ++j) cols.push_back({funcs[static_cast<std::size_t>(j)], F.one(), false});
        }
        code.group_functions.push_back(std::move(funcs));
        code.group_places.push_back(std::move(literals));
    }
    Assembly as = assemble(F, backend, A, group_columns, t * e);
    code.H = std::move(as.H);
    code.groups = std::move(as.groups);
    code.provenance = std::move(as.provenance);
    code.sources = std::move(as.sources);
    code.pivot_rows = A.pivot_rows;
    finish_checks(code);
    return code;
}

std::size_t reduced_function_rank(const CurveBackend& backend, const LrcCode& code) {
    const auto& F = backend.field();
    int total_degree = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < code.group_functions.size(); ++i) {
        count += code.group_functions[i].size();
        // Pole divisor degree contributed by the group: r simple poles, or b.
        total_degree += static_cast<int>(code.group_functions[i].size());
    }
    if (count == 0) return 0;
    const ExpansionMatrix A = build_expansion_matrix(backend, total_degree, 1);
    Matrix cols(A.complement_rows().size(), count);
    std::size_t c = 0;
    for (const auto& group : code.group_functions) {
        for (const auto& f : group) {
            const LaurentSeries ex = backend.expand_at_infinity(f, total_degree + 2);
            cols.set_column(c++, reduce_function(A, ex).values);
        }
    }
    return linalg::rank(F, cols);
}

}  // namespace lrc
