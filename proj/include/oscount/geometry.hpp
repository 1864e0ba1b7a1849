#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oscount/rational.hpp"

namespace oscount {

// Effective curve class as coefficients on the coordinate generators of
// the effective cone. Ordering (operator<=>) is lexicographic; the
// componentwise partial order is leq().
class CurveClass {
public:
    CurveClass() = default;
    explicit CurveClass(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}
    CurveClass(std::initializer_list<std::uint32_t> coeffs) : coeffs_(coeffs) {}

    std::size_t rank() const noexcept { return coeffs_.size(); }
    std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::uint64_t total() const noexcept;
    // True when some coordinate vanishes on a space with more than one factor.
    bool has_zero_component() const noexcept;

    // Componentwise alpha <= beta. Ranks must agree.
    bool leq(const CurveClass& other) const noexcept;

    CurveClass operator+(const CurveClass& other) const;
    CurveClass operator-(const CurveClass& other) const;

    auto operator<=>(const CurveClass&) const = default;
    bool operator==(const CurveClass&) const = default;

    // Comma-joined coefficients, e.g. "3,4". Used as the JSON key form.
    std::string key() const;
    // Inverse of key(); throws ErrorKind::format on malformed input.
    static CurveClass parse(std::string_view key);

private:
    std::vector<std::uint32_t> coeffs_;
};

// Either P^{s_1} x ... x P^{s_t}, or a generic homogeneous space given by
// the coefficients of c_1(X) on the cone generators plus a table of
// one-point invariants.
class AmbientSpace {
public:
    static AmbientSpace product(std::vector<std::uint32_t> dims);
    static AmbientSpace generic(std::vector<std::uint32_t> chern, std::map<CurveClass, Rational> invariants);

    bool is_product() const noexcept { return !dims_.empty(); }
    std::size_t rank() const noexcept { return chern_.size(); }
    // c_i with c_1(X).beta = sum c_i beta_i. For products c_i = s_i + 1.
    std::span<const std::uint32_t> chern() const noexcept { return chern_; }
    // Empty for generic spaces.
    std::span<const std::uint32_t> dims() const noexcept { return dims_; }
    const std::map<CurveClass, Rational>& invariant_table() const noexcept { return invariants_; }

    std::string describe() const;

    bool operator==(const AmbientSpace&) const = default;

private:
    AmbientSpace() = default;

    std::vector<std::uint32_t> dims_;
    std::vector<std::uint32_t> chern_;
    std::map<CurveClass, Rational> invariants_;
};

// Throws ErrorKind::argument unless beta is nonzero and of the space's rank.
void require_valid_class(const AmbientSpace& space, const CurveClass& beta);

// C_beta = c_1(X).beta - 2.
std::int64_t c_beta(const AmbientSpace& space, const CurveClass& beta);

// I_{1,beta}(pt). Product spaces use prod_i 1/(beta_i!)^{s_i+1}; generic
// spaces look the class up and throw ErrorKind::invariant_unavailable when
// it is absent.
Rational one_point_invariant(const AmbientSpace& space, const CurveClass& beta);

}  // namespace oscount
