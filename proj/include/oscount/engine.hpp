#pragma once

#include <atomic>
#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "oscount/geometry.hpp"
#include "oscount/partitions.hpp"
#include "oscount/rational.hpp"

namespace oscount {

// Resource caps. Unset means unlimited. Exceeding a cap throws
// ErrorKind::budget_exceeded naming the class being expanded.
struct Budget {
    std::optional<std::uint64_t> max_partitions;
    std::optional<std::size_t> max_bits;
};

struct EngineOptions {
    Budget budget;
    // Worker threads for the correction sum of a single class. Results are
    // summed in canonical partition order whatever the value.
    unsigned threads = 1;
};

struct OCEntry {
    Rational value;
    bool zero_component = false;
    bool integral = true;
};

// Computed OC values for one space, keyed by curve class.
class OCTable {
public:
    explicit OCTable(AmbientSpace space) : space_(std::move(space)) {}

    const AmbientSpace& space() const noexcept { return space_; }
    const std::map<CurveClass, OCEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    const Rational* find(const CurveClass& beta) const;
    bool contains(const CurveClass& beta) const { return find(beta) != nullptr; }
    void insert(const CurveClass& beta, Rational value);

    // First nonzero gamma <= beta missing for some present beta, if any.
    std::optional<CurveClass> closure_gap() const;
    std::vector<CurveClass> non_integral_classes() const;

private:
    AmbientSpace space_;
    std::map<CurveClass, OCEntry> entries_;
};

struct Correction {
    VectorPartition partition;
    Rational weight;        // ordered_count * binom(C, r-2) / (r(r-1))
    Rational product_term;  // prod_k (C_k + 1) OC(part_k)
    Rational total;         // weight * product_term
};

struct ContributionReport {
    CurveClass beta;
    Rational leading_term;  // C! * I_{1,beta}(pt)
    std::vector<Correction> corrections;
    Rational result;        // leading_term - sum of totals
};

struct EngineStats {
    std::uint64_t cache_hits = 0;
    std::uint64_t computed = 0;
    std::uint64_t partitions_visited = 0;
};

// Memoized evaluator of the osculating-curve recursion on one space. Each
// class is computed at most once; concurrent requests for the same class
// wait on the single computation in flight.
class Engine {
public:
    explicit Engine(AmbientSpace space, EngineOptions options = {});
    explicit Engine(const OCTable& warm, EngineOptions options = {});

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const AmbientSpace& space() const noexcept { return space_; }

    Rational osculating_count(const CurveClass& beta);
    ContributionReport contribution_breakdown(const CurveClass& beta);
    // Fills every nonzero gamma <= max_beta bottom-up and returns them.
    OCTable compute_table(const CurveClass& max_beta);

    // Snapshot of every completed entry.
    OCTable table() const;
    EngineStats stats() const;

private:
    Rational get_or_compute(const CurveClass& beta);
    Rational evaluate(const CurveClass& beta, ContributionReport* report);

    AmbientSpace space_;
    EngineOptions options_;
    mutable std::mutex mutex_;
    std::map<CurveClass, std::shared_future<Rational>> slots_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> computed_{0};
    std::atomic<std::uint64_t> visited_{0};
};

// Free-function forms operating on a caller-owned cache. The cache must
// belong to `space`; it is extended with every class computed.
Rational osculating_count(const AmbientSpace& space, const CurveClass& beta, OCTable& cache,
                          const EngineOptions& options = {});
ContributionReport contribution_breakdown(const AmbientSpace& space, const CurveClass& beta, OCTable& cache,
                                          const EngineOptions& options = {});
OCTable compute_table(const AmbientSpace& space, const CurveClass& max_beta, const EngineOptions& options = {});

// Recovers I_{1,beta}(pt) from OC values of every nonzero gamma <= beta.
// Throws ErrorKind::missing_entry naming the first absent class.
Rational invariant_from_oc(const AmbientSpace& space, const CurveClass& beta, const OCTable& oc_values);

// Re-evaluates OC(beta) from the table's values on proper subclasses,
// ignoring any stored value for beta itself.
Rational recompute_from_table(const AmbientSpace& space, const CurveClass& beta, const OCTable& oc_values);

}  // namespace oscount
