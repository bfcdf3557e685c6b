#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrc {

/// An element of F_q stored by its base-p integer encoding sum(c_i * p^i),
/// where c_i are the coefficients of its polynomial representative
/// (constant term first). Elements do not know which field they belong to;
/// every operation goes through a Field.
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Finite field F_{p^d} = F_p[z]/(modulus). Immutable and cheap to copy
/// (shared state), safe for concurrent reads.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    /// Builds F_{p^ext_deg}. Without a modulus the lexicographically smallest
    /// monic irreducible of degree ext_deg is used. A modulus is given as
    /// coefficients constant-first and must be monic of degree ext_deg.
    static Field make(std::uint32_t p, unsigned ext_deg = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Builds F_q from its order, splitting q = p^d.
    static Field of_order(std::uint64_t q,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const noexcept;
    unsigned ext_deg() const noexcept;
    std::uint32_t q() const noexcept;
    /// Constant-first, length ext_deg + 1, monic. For prime fields: {0, 1}.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Element with the given integer encoding; throws ContextMismatch if out of range.
    FieldElement element(std::uint64_t code) const;
    /// Image of an integer under Z -> F_p -> F_q.
    FieldElement from_int(std::int64_t value) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement x) const;
    /// A generator of the multiplicative group (used for the log tables).
    FieldElement primitive() const noexcept;

    bool contains(FieldElement x) const noexcept { return x.code < q(); }
    void check(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::int64_t n) const;

    /// All q elements in ascending encoding order, zero first.
    std::vector<FieldElement> elements() const;

    std::string to_string(FieldElement x) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, d) with q = p^d, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power_split(std::uint64_t q) noexcept;

}  // namespace lrc
