#include "oscount/partitions.hpp"

#include <algorithm>
#include <functional>

#include "oscount/error.hpp"

namespace oscount {

VectorPartition VectorPartition::from_parts(std::vector<CurveClass> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    VectorPartition p;
    for (auto& part : parts) {
        if (part.is_zero())
            throw Error(ErrorKind::argument, "partition part is zero");
        if (!p.blocks_.empty() && p.blocks_.back().part == part)
            ++p.blocks_.back().multiplicity;
        else
            p.blocks_.push_back({std::move(part), 1});
        ++p.count_;
    }
    return p;
}

CurveClass VectorPartition::sum() const
{
    if (blocks_.empty())
        return {};
    CurveClass total(std::vector<std::uint32_t>(blocks_.front().part.rank(), 0));
    for (const auto& b : blocks_)
        for (std::uint32_t m = 0; m < b.multiplicity; ++m)
            total = total + b.part;
    return total;
}

std::string VectorPartition::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            out += ',';
        out += "(" + blocks_[i].part.key() + ")";
        if (blocks_[i].multiplicity > 1)
            out += "x" + std::to_string(blocks_[i].multiplicity);
    }
    return out + "]";
}

BigInt ordered_count(const VectorPartition& p)
{
    BigInt n = factorial(p.part_count());
    for (const auto& b : p.blocks())
        n /= factorial(b.multiplicity);
    return n;
}

std::vector<CurveClass> subclasses(const CurveClass& beta)
{
    std::vector<CurveClass> out;
    std::vector<std::uint32_t> digits(beta.rank(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == beta[i])
            digits[i++] = 0;
        if (i == digits.size())
            break;
        ++digits[i];
        out.emplace_back(digits);
    }
    return out;
}

std::size_t subclass_index(const CurveClass& beta, const CurveClass& gamma)
{
    std::size_t index = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < beta.rank(); ++i) {
        index += stride * gamma[i];
        stride *= std::size_t(beta[i]) + 1;
    }
    return index;
}

PartitionStream::PartitionStream(const CurveClass& beta)
{
    if (beta.is_zero())
        throw Error(ErrorKind::argument, "cannot partition the zero class (" + beta.key() + ")");
    candidates_ = subclasses(beta);
    std::sort(candidates_.begin(), candidates_.end(), std::greater<>());
    remainders_.push_back(beta);
}

// Extends the current prefix greedily, starting the search at candidate
// `from` for the next slot, backtracking on dead ends. Returns false when
// the enumeration is exhausted.
bool PartitionStream::descend(std::size_t from)
{
    while (true) {
        const CurveClass& rem = remainders_[chosen_.size()];
        // The first part may not be beta itself: that is the trivial partition.
        std::size_t i = std::max<std::size_t>(from, chosen_.empty() ? 1 : 0);
        while (i < candidates_.size() && !candidates_[i].leq(rem))
            ++i;
        if (i < candidates_.size()) {
            chosen_.push_back(i);
            CurveClass next = rem - candidates_[i];
            if (next.is_zero())
                return true;
            if (remainders_.size() == chosen_.size())
                remainders_.push_back(std::move(next));
            else
                remainders_[chosen_.size()] = std::move(next);
            from = i;
            continue;
        }
        if (chosen_.empty())
            return false;
        from = chosen_.back() + 1;
        chosen_.pop_back();
    }
}

VectorPartition PartitionStream::current() const
{
    VectorPartition p;
    for (std::size_t idx : chosen_) {
        const CurveClass& part = candidates_[idx];
        if (!p.blocks_.empty() && p.blocks_.back().part == part)
            ++p.blocks_.back().multiplicity;
        else
            p.blocks_.push_back({part, 1});
        ++p.count_;
    }
    return p;
}

std::optional<VectorPartition> PartitionStream::next()
{
    if (exhausted_)
        return std::nullopt;
    bool found;
    if (!started_) {
        started_ = true;
        found = descend(0);
    } else {
        std::size_t from = chosen_.back() + 1;
        chosen_.pop_back();
        found = descend(from);
    }
    if (!found) {
        exhausted_ = true;
        return std::nullopt;
    }
    return current();
}

}  // namespace oscount
