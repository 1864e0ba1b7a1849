#include "oscount/rational.hpp"

#include <algorithm>
#include <cctype>

#include "oscount/error.hpp"

namespace oscount {

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return Error(ErrorKind::format, "malformed rational '" + std::string(text) + "'"); };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw bad();
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0)
        throw bad();
    Rational q(n, d);
    q.canonicalize();
    if (negative)
        q = -q;
    return q;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::size_t bit_length(const Rational& q)
{
    auto bits = [](const BigInt& z) -> std::size_t { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); };
    return std::max(bits(q.get_num()), bits(q.get_den()));
}

}  // namespace oscount
