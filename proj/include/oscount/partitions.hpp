#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "oscount/geometry.hpp"
#include "oscount/rational.hpp"

namespace oscount {

struct PartBlock {
    CurveClass part;
    std::uint32_t multiplicity = 0;

    bool operator==(const PartBlock&) const = default;
};

// Unordered partition of a curve class into nonzero parts. Blocks are kept
// in strictly decreasing lexicographic order of their parts, so two
// partitions are equal iff they are structurally equal.
class VectorPartition {
public:
    VectorPartition() = default;
    // Builds the canonical form from parts in any order.
    static VectorPartition from_parts(std::vector<CurveClass> parts);

    const std::vector<PartBlock>& blocks() const noexcept { return blocks_; }
    std::uint32_t part_count() const noexcept { return count_; }
    CurveClass sum() const;

    // e.g. "[(2,0),(0,1)x2]"
    std::string to_string() const;

    bool operator==(const VectorPartition&) const = default;

private:
    friend class PartitionStream;

    std::vector<PartBlock> blocks_;
    std::uint32_t count_ = 0;
};

// r! / prod_k m_k!: ordered tuples collapsing to this partition.
BigInt ordered_count(const VectorPartition& p);

// All nonzero gamma <= beta, ordered as mixed-radix counters with the first
// coordinate fastest, which refines the componentwise partial order.
std::vector<CurveClass> subclasses(const CurveClass& beta);

// Position of gamma in subclasses(beta) plus one (the zero class maps to 0).
// Valid for gamma <= beta.
std::size_t subclass_index(const CurveClass& beta, const CurveClass& gamma);

// Lazy enumeration of every partition of beta into at least two nonzero
// parts. Depth-first over non-increasing part sequences; partitions come out
// in decreasing lexicographic order of their part lists.
class PartitionStream {
public:
    explicit PartitionStream(const CurveClass& beta);

    std::optional<VectorPartition> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = VectorPartition;
        using difference_type = std::ptrdiff_t;
        using pointer = const VectorPartition*;
        using reference = const VectorPartition&;

        iterator() = default;
        explicit iterator(PartitionStream* s) : stream_(s) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = stream_->next();
            if (!current_)
                stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return stream_ == o.stream_; }

    private:
        PartitionStream* stream_ = nullptr;
        std::optional<VectorPartition> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    bool descend(std::size_t from);
    VectorPartition current() const;

    std::vector<CurveClass> candidates_;   // decreasing lex, candidates_[0] == beta
    std::vector<std::size_t> chosen_;      // indices into candidates_
    std::vector<CurveClass> remainders_;   // remainders_[k] before choosing chosen_[k]
    bool started_ = false;
    bool exhausted_ = false;
};

inline PartitionStream enumerate_partitions(const CurveClass& beta) { return PartitionStream(beta); }

}  // namespace oscount
