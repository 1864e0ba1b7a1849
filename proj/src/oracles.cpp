#include "oscount/oracles.hpp"

#include <vector>

#include "oscount/error.hpp"

namespace oscount::oracles {

namespace {

// Plain loop; deliberately not shared with the engine's factorial tables.
BigInt slow_factorial(std::int64_t n)
{
    BigInt r = 1;
    for (std::int64_t k = 2; k <= n; ++k)
        r *= k;
    return r;
}

struct BruteForce {
    const AmbientSpace& space;

    Rational oc(const CurveClass& beta) const
    {
        const std::int64_t c = c_beta(space, beta);
        if (c < 0)
            throw Error(ErrorKind::argument, "negative C_beta for class (" + beta.key() + ")");
        Rational value = Rational(slow_factorial(c)) * one_point_invariant(space, beta);
        std::vector<CurveClass> prefix;
        subtract_tuples(beta, c, beta, prefix, value);
        return value;
    }

    // Walks every ordered tuple (gamma_1, ..., gamma_r) of nonzero classes
    // summing to beta with r >= 2, subtracting its term from `acc`.
    void subtract_tuples(const CurveClass& beta, std::int64_t c, const CurveClass& rem,
                         std::vector<CurveClass>& prefix, Rational& acc) const
    {
        if (rem.is_zero()) {
            const std::int64_t r = std::int64_t(prefix.size());
            if (r < 2 || c + 2 - r < 0)
                return;
            Rational term(slow_factorial(c), BigInt(slow_factorial(c + 2 - r) * slow_factorial(r)));
            term.canonicalize();
            for (const auto& part : prefix)
                term *= Rational(c_beta(space, part) + 1) * oc(part);
            acc -= term;
            return;
        }
        std::vector<std::uint32_t> digits(rem.rank(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == rem[i])
                digits[i++] = 0;
            if (i == digits.size())
                break;
            ++digits[i];
            CurveClass part(digits);
            prefix.push_back(part);
            subtract_tuples(beta, c, rem - part, prefix, acc);
            prefix.pop_back();
        }
    }
};

}  // namespace

Rational oc_bruteforce(const AmbientSpace& space, const CurveClass& beta, std::uint64_t max_total)
{
    require_valid_class(space, beta);
    if (beta.total() > max_total)
        throw Error(ErrorKind::budget_exceeded, "brute force capped at total degree " + std::to_string(max_total)
                                                    + "; class (" + beta.key() + ") is larger");
    return BruteForce{space}.oc(beta);
}

// ---------------------------------------------------------------- Schubert

SchubertClass::SchubertClass(unsigned s) : s_(s)
{
    if (s < 1)
        throw Error(ErrorKind::argument, "Grassmannian of lines needs s >= 1");
}

SchubertClass SchubertClass::sigma(unsigned s, unsigned a, unsigned b)
{
    SchubertClass c(s);
    if (!c.admissible(a, b))
        throw Error(ErrorKind::argument, "sigma_(" + std::to_string(a) + "," + std::to_string(b)
                                             + ") is not a Schubert class of lines in P^" + std::to_string(s));
    c.add(a, b, 1);
    return c;
}

BigInt SchubertClass::coefficient(unsigned a, unsigned b) const
{
    auto it = terms_.find({a, b});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SchubertClass::add(unsigned a, unsigned b, const BigInt& coeff)
{
    if (!admissible(a, b))
        return;
    auto& slot = terms_[{a, b}];
    slot += coeff;
    if (slot == 0)
        terms_.erase({a, b});
}

SchubertClass pieri_multiply(const SchubertClass& c)
{
    SchubertClass out(c.ambient());
    for (const auto& [idx, coeff] : c.terms()) {
        out.add(idx.first + 1, idx.second, coeff);
        out.add(idx.first, idx.second + 1, coeff);
    }
    return out;
}

BigInt schubert_line_count(unsigned s)
{
    if (s < 2)
        throw Error(ErrorKind::argument, "schubert_line_count needs s >= 2");
    SchubertClass c = SchubertClass::sigma(s, s - 1, 0);
    for (unsigned k = 0; k + 1 < s; ++k)
        c = pieri_multiply(c);
    return c.coefficient(s - 1, s - 1);
}

// --------------------------------------------------------------------- jet

JetPolynomial JetPolynomial::monomial(unsigned xi_cap, const Rational& coeff, unsigned xi, unsigned psi)
{
    JetPolynomial p(xi_cap);
    p.add(xi, psi, coeff);
    return p;
}

Rational JetPolynomial::coefficient(unsigned xi, unsigned psi) const
{
    auto it = terms_.find({xi, psi});
    return it == terms_.end() ? Rational(0) : it->second;
}

void JetPolynomial::add(unsigned xi, unsigned psi, const Rational& coeff)
{
    if (xi > cap_ || coeff == 0)
        return;
    auto& slot = terms_[{xi, psi}];
    slot += coeff;
    if (slot == 0)
        terms_.erase({xi, psi});
}

JetPolynomial JetPolynomial::operator+(const JetPolynomial& other) const
{
    JetPolynomial out(*this);
    for (const auto& [e, c] : other.terms_)
        out.add(e.first, e.second, c);
    return out;
}

JetPolynomial JetPolynomial::operator*(const JetPolynomial& other) const
{
    JetPolynomial out(std::min(cap_, other.cap_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            out.add(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return out;
}

JetPolynomial jet_top_class(unsigned s, unsigned long d)
{
    if (s < 2 || d < 1)
        throw Error(ErrorKind::argument, "jet expansion needs s >= 2 and d >= 1");
    const Rational dq(d);
    JetPolynomial p = JetPolynomial::monomial(s, dq, 1, 0);
    for (unsigned i = 1; i + 1 <= s; ++i) {
        JetPolynomial factor = JetPolynomial::monomial(s, Rational(i), 0, 1) + JetPolynomial::monomial(s, dq, 1, 0);
        p = p * factor;
    }
    return p * JetPolynomial::monomial(s, Rational(1) / dq, s - 1, 0);
}

Rational jet_coefficient(unsigned s, unsigned long d)
{
    return jet_top_class(s, d).coefficient(s, s - 1);
}

}  // namespace oscount::oracles
