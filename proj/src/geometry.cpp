#include "oscount/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "oscount/error.hpp"

namespace oscount {

bool CurveClass::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t CurveClass::total() const noexcept
{
    return std::accumulate(coeffs_.begin(), coeffs_.end(), std::uint64_t{0});
}

bool CurveClass::has_zero_component() const noexcept
{
    return coeffs_.size() > 1 && std::find(coeffs_.begin(), coeffs_.end(), 0u) != coeffs_.end();
}

bool CurveClass::leq(const CurveClass& other) const noexcept
{
    if (rank() != other.rank())
        return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (coeffs_[i] > other.coeffs_[i])
            return false;
    return true;
}

CurveClass CurveClass::operator+(const CurveClass& other) const
{
    std::vector<std::uint32_t> r(coeffs_);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += other.coeffs_[i];
    return CurveClass(std::move(r));
}

CurveClass CurveClass::operator-(const CurveClass& other) const
{
    std::vector<std::uint32_t> r(coeffs_);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= other.coeffs_[i];
    return CurveClass(std::move(r));
}

std::string CurveClass::key() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

CurveClass CurveClass::parse(std::string_view key)
{
    std::vector<std::uint32_t> coeffs;
    std::string_view rest = key;
    while (true) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::format, "malformed curve class '" + std::string(key) + "'");
        coeffs.push_back(v);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return CurveClass(std::move(coeffs));
}

AmbientSpace AmbientSpace::product(std::vector<std::uint32_t> dims)
{
    if (dims.empty())
        throw Error(ErrorKind::argument, "product space needs at least one factor");
    for (auto s : dims)
        if (s < 1)
            throw Error(ErrorKind::argument, "projective factor dimension must be >= 1");
    AmbientSpace space;
    space.chern_.reserve(dims.size());
    for (auto s : dims)
        space.chern_.push_back(s + 1);
    space.dims_ = std::move(dims);
    return space;
}

AmbientSpace AmbientSpace::generic(std::vector<std::uint32_t> chern, std::map<CurveClass, Rational> invariants)
{
    if (chern.empty())
        throw Error(ErrorKind::argument, "generic space needs at least one chern coefficient");
    for (auto c : chern)
        if (c < 1)
            throw Error(ErrorKind::argument, "chern coefficients must be >= 1");
    for (const auto& [beta, value] : invariants) {
        if (beta.rank() != chern.size() || beta.is_zero())
            throw Error(ErrorKind::argument, "invariant table key (" + beta.key() + ") is not a nonzero class of rank "
                                                 + std::to_string(chern.size()));
    }
    AmbientSpace space;
    space.chern_ = std::move(chern);
    space.invariants_ = std::move(invariants);
    return space;
}

std::string AmbientSpace::describe() const
{
    std::string out;
    if (is_product()) {
        for (std::size_t i = 0; i < dims_.size(); ++i)
            out += (i ? " x P^" : "P^") + std::to_string(dims_[i]);
        return out;
    }
    out = "generic(c1=";
    for (std::size_t i = 0; i < chern_.size(); ++i)
        out += (i ? "," : "") + std::to_string(chern_[i]);
    return out + ")";
}

void require_valid_class(const AmbientSpace& space, const CurveClass& beta)
{
    if (beta.rank() != space.rank())
        throw Error(ErrorKind::argument, "curve class (" + beta.key() + ") has rank " + std::to_string(beta.rank())
                                             + " but the space has " + std::to_string(space.rank()) + " factors");
    if (beta.is_zero())
        throw Error(ErrorKind::argument, "curve class (" + beta.key() + ") is zero");
}

std::int64_t c_beta(const AmbientSpace& space, const CurveClass& beta)
{
    require_valid_class(space, beta);
    std::int64_t pairing = 0;
    for (std::size_t i = 0; i < beta.rank(); ++i)
        pairing += std::int64_t(space.chern()[i]) * beta[i];
    return pairing - 2;
}

Rational one_point_invariant(const AmbientSpace& space, const CurveClass& beta)
{
    require_valid_class(space, beta);
    if (!space.is_product()) {
        auto it = space.invariant_table().find(beta);
        if (it == space.invariant_table().end())
            throw Error(ErrorKind::invariant_unavailable, "invariant unavailable for class (" + beta.key() + ")");
        return it->second;
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < beta.rank(); ++i) {
        BigInt f = factorial(beta[i]);
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), space.dims()[i] + 1);
        den *= p;
    }
    return Rational(BigInt(1), den);
}

}  // namespace oscount
