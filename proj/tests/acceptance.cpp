// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oscount/engine.hpp"
#include "oscount/oracles.hpp"
#include "property_checks.hpp"

using namespace oscount;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double single_value_limit_s = 1.0;
constexpr double flagship_limit_s = 60.0;

EngineOptions bounded()
{
    EngineOptions options;
    options.budget.max_partitions = 1'000'000;
    options.budget.max_bits = 1 << 16;
    return options;
}

// Every OC value produced under criteria 1-4, for the integrality audit.
std::vector<std::pair<std::string, Rational>> audited;

std::string name_of(const AmbientSpace& space, const CurveClass& beta)
{
    return "beta=(" + beta.key() + ") on " + space.describe();
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Evaluates OC with a fresh engine, records it for the audit, and checks
// value and runtime.
std::string expect_oc(std::vector<std::uint32_t> dims, std::vector<std::uint32_t> beta, const Rational& want,
                      double limit_s)
{
    auto space = AmbientSpace::product(std::move(dims));
    CurveClass b(std::move(beta));
    auto start = Clock::now();
    Engine engine(space, bounded());
    Rational got = engine.osculating_count(b);
    double elapsed = seconds_since(start);
    audited.emplace_back(name_of(space, b), got);
    if (got != want)
        return name_of(space, b) + ": got " + to_string(got) + ", expected " + to_string(want);
    if (elapsed >= limit_s)
        return name_of(space, b) + ": took " + std::to_string(elapsed) + " s";
    return {};
}

std::string criterion_published_values()
{
    std::vector<std::function<std::string()>> checks;
    checks.push_back([] { return expect_oc({1}, {1}, 1, single_value_limit_s); });
    for (std::uint32_t n = 2; n <= 8; ++n)
        checks.push_back([n] { return expect_oc({1}, {n}, 0, single_value_limit_s); });
    for (std::uint32_t s = 1; s <= 10; ++s)
        checks.push_back([s] { return expect_oc({s}, {1}, Rational(factorial(s - 1)), single_value_limit_s); });
    checks.push_back([] { return expect_oc({3}, {1}, 2, single_value_limit_s); });
    checks.push_back([] { return expect_oc({3}, {2}, 27, single_value_limit_s); });
    checks.push_back([] { return expect_oc({2}, {2}, 1, single_value_limit_s); });
    for (auto& c : checks)
        if (auto msg = c(); !msg.empty())
            return msg;
    return {};
}

std::string criterion_flagship()
{
    // 1237651772190153893157497812054065 x 10^7
    Rational want = parse_rational("1237651772190153893157497812054065") * 10000000;
    auto start = Clock::now();
    std::string msg = expect_oc({5, 6}, {3, 4}, want, flagship_limit_s);
    std::cout << "       flagship runtime " << seconds_since(start) << " s\n";
    return msg;
}

std::string criterion_inverse_round_trip()
{
    for (std::uint32_t s = 1; s <= 4; ++s) {
        auto space = AmbientSpace::product({s});
        OCTable table = compute_table(space, CurveClass{5}, bounded());
        for (std::uint32_t n = 1; n <= 5; ++n) {
            CurveClass beta{n};
            audited.emplace_back(name_of(space, beta), *table.find(beta));
            BigInt f = factorial(n), den;
            mpz_pow_ui(den.get_mpz_t(), f.get_mpz_t(), s + 1);
            Rational want(BigInt(1), den);
            Rational got = invariant_from_oc(space, beta, table);
            if (got != want)
                return name_of(space, beta) + ": recovered " + to_string(got) + ", expected " + to_string(want);
        }
    }
    return {};
}

std::string criterion_oracle_equivalence()
{
    const std::vector<std::vector<std::uint32_t>> spaces = {{1}, {2}, {3}, {1, 1}, {2, 2}, {2, 3}};
    int cases = 0;
    for (const auto& dims : spaces) {
        auto space = AmbientSpace::product(dims);
        Engine engine(space, bounded());
        for (const auto& beta : subclasses(CurveClass(std::vector<std::uint32_t>(dims.size(), 5)))) {
            if (beta.total() > 5)
                continue;
            ++cases;
            Rational fast = engine.osculating_count(beta);
            audited.emplace_back(name_of(space, beta), fast);
            Rational slow = oracles::oc_bruteforce(space, beta, 5);
            if (fast != slow)
                return name_of(space, beta) + ": engine " + to_string(fast) + " vs brute force " + to_string(slow);
        }
    }
    std::cout << "       " << cases << " classes compared\n";
    return {};
}

std::string criterion_schubert()
{
    for (unsigned s = 2; s <= 10; ++s)
        if (BigInt n = oracles::schubert_line_count(s); n != 1)
            return "s=" + std::to_string(s) + ": got " + to_string(n);
    return {};
}

std::string criterion_jet()
{
    for (unsigned s = 2; s <= 8; ++s) {
        for (unsigned long d : {1ul, 5ul, 100ul}) {
            auto poly = oracles::jet_top_class(s, d);
            std::string where = "s=" + std::to_string(s) + " d=" + std::to_string(d);
            if (poly.monomial_count() != 1)
                return where + ": " + std::to_string(poly.monomial_count()) + " surviving monomials";
            if (poly.coefficient(s, s - 1) != Rational(factorial(s - 1)))
                return where + ": coefficient " + to_string(poly.coefficient(s, s - 1));
        }
    }
    return {};
}

std::string criterion_properties()
{
    if (auto m = testing::weight_forms_agree(); !m.empty())
        return "weight forms: " + m;
    if (auto m = testing::partition_counts_complete(); !m.empty())
        return "partition completeness: " + m;
    if (auto m = testing::ordered_counts_match_tuples(6); !m.empty())
        return "ordered counts: " + m;
    if (auto m = testing::parallel_runs_identical(AmbientSpace::product({2, 3}), {4, 3}); !m.empty())
        return "determinism: " + m;
    return {};
}

std::string criterion_integrality()
{
    std::string bad;
    for (const auto& [name, value] : audited)
        if (!is_integral(value))
            bad += (bad.empty() ? "" : "; ") + name + " = " + to_string(value);
    std::cout << "       " << audited.size() << " values audited\n";
    return bad.empty() ? std::string() : "non-integral: " + bad;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"1 published values", criterion_published_values},
        {"2 P^5 x P^6 flagship", criterion_flagship},
        {"3 inverse round trip", criterion_inverse_round_trip},
        {"4 brute-force equivalence", criterion_oracle_equivalence},
        {"5 Schubert line count", criterion_schubert},
        {"6 jet coefficient", criterion_jet},
        {"7 property suites", criterion_properties},
        {"8 integrality audit", criterion_integrality},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        std::string msg;
        try {
            msg = run();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty()) {
            std::cout << "[PASS] criterion " << name << '\n';
        } else {
            std::cout << "[FAIL] criterion " << name << ": " << msg << '\n';
            ++failed;
        }
    }
    std::cout << (failed ? "FAILED " : "passed ") << criteria.size() - failed << "/" << criteria.size() << '\n';
    return failed ? 1 : 0;
}
