#include "oscount/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "oscount/error.hpp"

namespace oscount {

// ---------------------------------------------------------------- OCTable

const Rational* OCTable::find(const CurveClass& beta) const
{
    auto it = entries_.find(beta);
    return it == entries_.end() ? nullptr : &it->second.value;
}

void OCTable::insert(const CurveClass& beta, Rational value)
{
    require_valid_class(space_, beta);
    OCEntry entry;
    entry.zero_component = beta.has_zero_component();
    entry.integral = is_integral(value);
    entry.value = std::move(value);
    entries_.insert_or_assign(beta, std::move(entry));
}

std::optional<CurveClass> OCTable::closure_gap() const
{
    for (const auto& [beta, entry] : entries_)
        for (const auto& gamma : subclasses(beta))
            if (!contains(gamma))
                return gamma;
    return std::nullopt;
}

std::vector<CurveClass> OCTable::non_integral_classes() const
{
    std::vector<CurveClass> out;
    for (const auto& [beta, entry] : entries_)
        if (!entry.integral)
            out.push_back(beta);
    return out;
}

// ------------------------------------------------------- correction sum

namespace {

void check_bits(const Budget& budget, const Rational& value, const CurveClass& beta)
{
    if (budget.max_bits && bit_length(value) > *budget.max_bits)
        throw Error(ErrorKind::budget_exceeded, "bit-length cap of " + std::to_string(*budget.max_bits)
                                                    + " exceeded while expanding class (" + beta.key() + ")");
}

// Everything the sum over partitions of beta needs, independent of where
// the subclass values came from.
struct Recursion {
    const AmbientSpace& space;
    const CurveClass& beta;
    std::int64_t c;
    // (C_gamma + 1) * OC(gamma), indexed by subclass_index(beta, gamma).
    std::vector<Rational> scaled;
    std::vector<BigInt> fact;  // 0! .. (C+2)!

    Recursion(const AmbientSpace& s, const CurveClass& b) : space(s), beta(b), c(c_beta(s, b))
    {
        if (c < 0)
            throw Error(ErrorKind::argument, "C_beta = " + std::to_string(c) + " is negative for class (" + b.key()
                                                 + "); the recursion needs c_1(X).beta >= 2");
        scaled.resize(subclass_index(b, b) + 1);
        fact.reserve(std::size_t(c) + 3);
        fact.emplace_back(1);
        for (std::int64_t k = 1; k <= c + 2; ++k)
            fact.push_back(fact.back() * k);
    }

    Rational leading() const { return Rational(fact[c]) * one_point_invariant(space, beta); }

    Rational weight(const VectorPartition& p) const
    {
        const std::int64_t r = p.part_count();
        const BigInt multiplicity = ordered_count(p);
        if (r - 2 > c)
            return Rational(0);
        // binom(C, r-2) / (r(r-1))
        Rational w(fact[c], BigInt(fact[r - 2] * fact[c - r + 2] * (r * (r - 1))));
        w.canonicalize();
        w *= multiplicity;
        // C! / ((C+2-r)! r!), the unsimplified form; must agree exactly.
        Rational alt(fact[c], BigInt(fact[c + 2 - r] * factorial(r)));
        alt.canonicalize();
        alt *= multiplicity;
        if (w != alt)
            throw std::logic_error("weight forms disagree for partition " + p.to_string());
        return w;
    }

    Correction term(const VectorPartition& p) const
    {
        Correction corr;
        corr.weight = weight(p);
        corr.product_term = 1;
        for (const auto& block : p.blocks()) {
            const Rational& f = scaled[subclass_index(beta, block.part)];
            for (std::uint32_t m = 0; m < block.multiplicity; ++m)
                corr.product_term *= f;
        }
        corr.total = corr.weight * corr.product_term;
        return corr;
    }

    // Sum of all correction totals. Partitions are pulled from the stream
    // sequentially; terms may be evaluated on worker threads but are always
    // summed in stream order.
    Rational corrections(const EngineOptions& options, std::atomic<std::uint64_t>& visited,
                         ContributionReport* report) const
    {
        constexpr std::size_t batch_size = 2048;
        const unsigned threads = std::max(1u, options.threads);
        Rational sum = 0;
        PartitionStream stream(beta);
        std::vector<VectorPartition> batch;
        bool done = false;
        while (!done) {
            batch.clear();
            while (batch.size() < batch_size) {
                auto p = stream.next();
                if (!p) {
                    done = true;
                    break;
                }
                std::uint64_t n = ++visited;
                if (options.budget.max_partitions && n > *options.budget.max_partitions)
                    throw Error(ErrorKind::budget_exceeded,
                                "partition cap of " + std::to_string(*options.budget.max_partitions)
                                    + " exceeded while expanding class (" + beta.key() + ")");
                batch.push_back(std::move(*p));
            }
            std::vector<Correction> terms(batch.size());
            auto work = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    terms[i] = term(batch[i]);
                    check_bits(options.budget, terms[i].total, beta);
                }
            };
            if (threads == 1 || batch.size() < 2 * threads) {
                work(0, batch.size());
            } else {
                std::vector<std::future<void>> jobs;
                const std::size_t chunk = (batch.size() + threads - 1) / threads;
                for (std::size_t lo = 0; lo < batch.size(); lo += chunk)
                    jobs.push_back(std::async(std::launch::async, work, lo, std::min(batch.size(), lo + chunk)));
                for (auto& j : jobs)
                    j.get();
            }
            for (std::size_t i = 0; i < terms.size(); ++i) {
                sum += terms[i].total;
                if (report) {
                    terms[i].partition = std::move(batch[i]);
                    report->corrections.push_back(std::move(terms[i]));
                }
            }
        }
        return sum;
    }
};

const Rational& require_entry(const OCTable& table, const CurveClass& gamma)
{
    const Rational* v = table.find(gamma);
    if (!v)
        throw Error(ErrorKind::missing_entry, "OC value missing for class (" + gamma.key() + ")");
    return *v;
}

void fill_from_table(Recursion& rec, const OCTable& table)
{
    for (const auto& gamma : subclasses(rec.beta)) {
        if (gamma == rec.beta)
            continue;
        rec.scaled[subclass_index(rec.beta, gamma)] = Rational(c_beta(rec.space, gamma) + 1) * require_entry(table, gamma);
    }
}

}  // namespace

// ----------------------------------------------------------------- Engine

Engine::Engine(AmbientSpace space, EngineOptions options) : space_(std::move(space)), options_(options) {}

Engine::Engine(const OCTable& warm, EngineOptions options) : Engine(warm.space(), options)
{
    for (const auto& [beta, entry] : warm.entries()) {
        std::promise<Rational> p;
        p.set_value(entry.value);
        slots_.emplace(beta, p.get_future().share());
    }
}

Rational Engine::osculating_count(const CurveClass& beta)
{
    require_valid_class(space_, beta);
    return get_or_compute(beta);
}

ContributionReport Engine::contribution_breakdown(const CurveClass& beta)
{
    require_valid_class(space_, beta);
    ContributionReport report;
    Rational value = evaluate(beta, &report);
    {
        std::lock_guard lock(mutex_);
        if (!slots_.count(beta)) {
            std::promise<Rational> p;
            p.set_value(value);
            slots_.emplace(beta, p.get_future().share());
            ++computed_;
        }
    }
    return report;
}

OCTable Engine::compute_table(const CurveClass& max_beta)
{
    require_valid_class(space_, max_beta);
    OCTable out(space_);
    for (const auto& gamma : subclasses(max_beta))
        out.insert(gamma, get_or_compute(gamma));
    return out;
}

OCTable Engine::table() const
{
    OCTable out(space_);
    std::lock_guard lock(mutex_);
    for (const auto& [beta, fut] : slots_)
        if (fut.wait_for(std::chrono::seconds(0)) == std::future_status::ready)
            out.insert(beta, fut.get());
    return out;
}

EngineStats Engine::stats() const
{
    return {hits_.load(), computed_.load(), visited_.load()};
}

Rational Engine::get_or_compute(const CurveClass& beta)
{
    std::promise<Rational> promise;
    {
        std::unique_lock lock(mutex_);
        auto it = slots_.find(beta);
        if (it != slots_.end()) {
            auto fut = it->second;
            lock.unlock();
            ++hits_;
            return fut.get();
        }
        slots_.emplace(beta, promise.get_future().share());
    }
    try {
        Rational value = evaluate(beta, nullptr);
        promise.set_value(value);
        ++computed_;
        return value;
    } catch (...) {
        {
            std::lock_guard lock(mutex_);
            slots_.erase(beta);
        }
        promise.set_exception(std::current_exception());
        throw;
    }
}

Rational Engine::evaluate(const CurveClass& beta, ContributionReport* report)
{
    Recursion rec(space_, beta);
    for (const auto& gamma : subclasses(beta)) {
        if (gamma == beta)
            continue;
        rec.scaled[subclass_index(beta, gamma)] = Rational(c_beta(space_, gamma) + 1) * get_or_compute(gamma);
    }
    Rational leading = rec.leading();
    Rational result = leading - rec.corrections(options_, visited_, report);
    check_bits(options_.budget, result, beta);
    if (report) {
        report->beta = beta;
        report->leading_term = leading;
        report->result = result;
    }
    return result;
}

// --------------------------------------------------------- free functions

namespace {

void require_same_space(const AmbientSpace& space, const OCTable& cache)
{
    if (!(cache.space() == space))
        throw Error(ErrorKind::argument, "cache belongs to " + cache.space().describe() + ", not " + space.describe());
}

}  // namespace

Rational osculating_count(const AmbientSpace& space, const CurveClass& beta, OCTable& cache,
                          const EngineOptions& options)
{
    require_same_space(space, cache);
    Engine engine(cache, options);
    Rational value = engine.osculating_count(beta);
    cache = engine.table();
    return value;
}

ContributionReport contribution_breakdown(const AmbientSpace& space, const CurveClass& beta, OCTable& cache,
                                          const EngineOptions& options)
{
    require_same_space(space, cache);
    Engine engine(cache, options);
    ContributionReport report = engine.contribution_breakdown(beta);
    cache = engine.table();
    return report;
}

OCTable compute_table(const AmbientSpace& space, const CurveClass& max_beta, const EngineOptions& options)
{
    Engine engine(space, options);
    return engine.compute_table(max_beta);
}

Rational invariant_from_oc(const AmbientSpace& space, const CurveClass& beta, const OCTable& oc_values)
{
    require_valid_class(space, beta);
    require_same_space(space, oc_values);
    Recursion rec(space, beta);
    fill_from_table(rec, oc_values);
    const Rational& oc = require_entry(oc_values, beta);
    std::atomic<std::uint64_t> visited{0};
    Rational numer = oc + rec.corrections(EngineOptions{}, visited, nullptr);
    return numer / Rational(rec.fact[rec.c]);
}

Rational recompute_from_table(const AmbientSpace& space, const CurveClass& beta, const OCTable& oc_values)
{
    require_valid_class(space, beta);
    require_same_space(space, oc_values);
    Recursion rec(space, beta);
    fill_from_table(rec, oc_values);
    std::atomic<std::uint64_t> visited{0};
    return rec.leading() - rec.corrections(EngineOptions{}, visited, nullptr);
}

}  // namespace oscount
