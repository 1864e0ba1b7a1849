#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "oscount/geometry.hpp"
#include "oscount/rational.hpp"

namespace oscount::oracles {

// OC(beta) by literal recursion over ordered tuples of nonzero classes with
// the unsimplified weight C!/((C+2-r)! r!). No memoization, no multinomial
// collapsing; intended only as a cross-check for the engine. Throws
// ErrorKind::budget_exceeded when sum(beta) exceeds max_total.
Rational oc_bruteforce(const AmbientSpace& space, const CurveClass& beta, std::uint64_t max_total = 6);

// Formal sum of Schubert classes sigma_(a,b) of the Grassmannian of lines
// in P^s, with s-1 >= a >= b >= 0. Zero coefficients are never stored.
class SchubertClass {
public:
    using Index = std::pair<unsigned, unsigned>;

    explicit SchubertClass(unsigned s);
    static SchubertClass sigma(unsigned s, unsigned a, unsigned b);

    unsigned ambient() const noexcept { return s_; }
    const std::map<Index, BigInt>& terms() const noexcept { return terms_; }
    BigInt coefficient(unsigned a, unsigned b) const;
    bool admissible(unsigned a, unsigned b) const noexcept { return a <= s_ - 1 && b <= a; }

    void add(unsigned a, unsigned b, const BigInt& coeff);

    bool operator==(const SchubertClass&) const = default;

private:
    unsigned s_;
    std::map<Index, BigInt> terms_;
};

// Product with sigma_(1,0): sigma_(a,b) -> sigma_(a+1,b) + sigma_(a,b+1),
// dropping inadmissible terms.
SchubertClass pieri_multiply(const SchubertClass& c);

// Coefficient of sigma_(s-1,s-1) in sigma_(1,0)^{s-1} . sigma_(s-1,0).
BigInt schubert_line_count(unsigned s);

// Polynomial in commuting xi, psi with rational coefficients, truncated by
// xi^i = 0 for i > xi_cap.
class JetPolynomial {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (xi, psi)

    explicit JetPolynomial(unsigned xi_cap) : cap_(xi_cap) {}
    static JetPolynomial monomial(unsigned xi_cap, const Rational& coeff, unsigned xi, unsigned psi);

    unsigned xi_cap() const noexcept { return cap_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(unsigned xi, unsigned psi) const;
    std::size_t monomial_count() const noexcept { return terms_.size(); }

    void add(unsigned xi, unsigned psi, const Rational& coeff);
    JetPolynomial operator+(const JetPolynomial& other) const;
    JetPolynomial operator*(const JetPolynomial& other) const;

private:
    unsigned cap_;
    std::map<Exponents, Rational> terms_;
};

// d xi . prod_{i=1}^{s-1} (i psi + d xi) . (1/d) xi^{s-1}, truncated at xi^s.
JetPolynomial jet_top_class(unsigned s, unsigned long d);

// Coefficient of xi^s psi^{s-1} in jet_top_class(s, d).
Rational jet_coefficient(unsigned s, unsigned long d);

}  // namespace oscount::oracles
