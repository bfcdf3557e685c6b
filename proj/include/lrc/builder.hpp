#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/curves.hpp"
#include "lrc/galois.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

/// Expansion coefficients of the basis f_1..f_g of L((2g-1) P_inf): column j
/// holds f_j = t^(1-2g) sum_i c_ij t^i for rows i = 0 .. 2g-1+t*e.
struct ExpansionMatrix {
    Matrix entries;
    std::vector<int> pole_numbers;
    /// Rows whose square submatrix is invertible (|pivot_rows| = g), ascending.
    std::vector<std::size_t> pivot_rows;
    /// "leading-rows" when the pole-number echelon rows were invertible,
    /// "elimination" when Gaussian elimination picked them.
    std::string pivot_method;
    int genus = 0;

    std::size_t total_rows() const noexcept { return entries.rows(); }
    /// Rows not in pivot_rows, ascending; these index the local rows of H.
    std::vector<std::size_t> complement_rows() const;
};

/// Builds the (2g + t*e) x g expansion matrix of the backend's Riemann-Roch
/// basis and selects pivot rows. Throws RankDeficient if rank < g.
ExpansionMatrix build_expansion_matrix(const CurveBackend& backend, int t, int e);

struct ReducedColumn {
    /// Solution of A_R alpha = b_R: the multiples of f_w subtracted from g.
    std::vector<FieldElement> alphas;
    /// Coefficients of g - sum alpha_w f_w on every row of A (zero on pivot rows).
    std::vector<FieldElement> full;
    /// The entries on complement_rows(), i.e. the column contributed to H.
    std::vector<FieldElement> values;
};

/// Cancels the expansion of g against the basis on the pivot rows.
/// Throws InsufficientPrecision when the expansion does not cover every row,
/// BadParams when g has a pole of order > 2g-1 at infinity.
ReducedColumn reduce_function(const ExpansionMatrix& A, const LaurentSeries& g_expansion);

enum class Construction { SimplePoles, HigherDegree };
enum class BlockMode { SinglePlace, Mixed };

std::string construction_name(Construction c);

struct CodeParams {
    std::uint32_t q = 0;
    int r = 0;
    int m = 0;
    int t = 0;
    int e = 1;
    int genus = 0;
    BackendKind backend = BackendKind::Rational;
    Construction construction = Construction::SimplePoles;
    /// Degree of each group's divisor for the higher-degree construction (0 otherwise).
    int b = 0;
    /// Per-group multiplier of the replicated column; empty when no column is replicated.
    std::vector<FieldElement> alphas;
};

/// Where a column of H came from: the auxiliary function g it reduces, and
/// the multiplier (alpha_i for the replicated column, 1 otherwise).
struct ColumnSource {
    CurveFunction function;
    FieldElement multiplier{1};
    bool replicated = false;
};

struct LrcCode {
    Field field = Field::make(2);
    Matrix H;
    /// m disjoint blocks of r+1 coordinates; empty for a bare parity-check matrix.
    std::vector<std::vector<std::size_t>> groups;
    CodeParams params;
    std::vector<std::string> provenance;
    std::vector<std::size_t> pivot_rows;
    /// Place literals of each group's divisor support.
    std::vector<std::vector<std::string>> group_places;

    /// Only populated on freshly built codes.
    std::vector<ColumnSource> sources;
    /// Every auxiliary function of each group before column selection (r per
    /// group for simple poles, b per group for higher-degree places).
    std::vector<std::vector<CurveFunction>> group_functions;
    /// Empirical "any t columns independent" check run at build time when
    /// t <= 4 and n <= 40; nullopt when skipped.
    std::optional<bool> t_independent;

    std::size_t n() const noexcept { return H.cols(); }
    /// n - m - g - t*e
    long k_lower_bound() const noexcept;
};

/// Wraps a bare parity-check matrix (no group structure) as a code.
LrcCode code_from_parity_check(Field F, Matrix H);

std::vector<FieldElement> default_alphas(const Field& F, int m);

/// Divisor degree per group: r (q odd, r even), r+1 (r odd), r+2 (q = 2, r even).
int locality_block_size(std::uint32_t q, int r);

/// Divisor blocks of degree e built from distinct finite places, in
/// deterministic order. SinglePlace uses degree-e places only; Mixed adds
/// first-fit sums of places whose degrees divide e.
std::vector<std::vector<Place>> select_divisor_blocks(const Field& F, int e, std::size_t count, BlockMode mode);

LrcCode build_code_rational_places(const CurveBackend& backend, int r, int m, int t,
                                   std::vector<FieldElement> alphas = {},
                                   std::optional<std::vector<Place>> places = std::nullopt);

struct HigherDegreeOptions {
    BlockMode mode = BlockMode::SinglePlace;
    std::optional<std::vector<std::vector<Place>>> blocks;
    std::vector<FieldElement> alphas;
};

LrcCode build_code_prime_field(const CurveBackend& backend, int r, int m, int t, int e,
                               const HigherDegreeOptions& options = {});

/// Rank of the reduced expansions of every auxiliary function in
/// code.group_functions, computed far enough out that the rank equals the
/// dimension of their span. Equals the function count iff they are independent.
std::size_t reduced_function_rank(const CurveBackend& backend, const LrcCode& code);

}  // namespace lrc
