#ifndef FIBCOMP_ENUMERATE_HPP
#define FIBCOMP_ENUMERATE_HPP

#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fibcomp/core.hpp"

// Lazy generation, exact counting, and ranking of class-restricted
// compositions. The canonical order is ascending lexicographic on the part
// sequence: (1,1,3) < (1,3,1) < (3,1,1) < (5).

namespace fibcomp {

namespace detail {

inline constexpr Part no_part = 0;

/// Smallest admitted part.
[[nodiscard]] constexpr Part first_part(ClassTag tag) noexcept
{
    return tag == ClassTag::Min2 ? 2 : 1;
}

/// Next admitted part after p, or no_part when the class has none.
[[nodiscard]] constexpr Part next_part(ClassTag tag, Part p) noexcept
{
    switch (tag) {
    case ClassTag::All:
    case ClassTag::Min2: return p + 1;
    case ClassTag::Parts12: return p == 1 ? 2 : no_part;
    case ClassTag::Odd: return p + 2;
    }
    return no_part;
}

/// Calls fn(p) for each admitted part p <= limit, in ascending order, until
/// fn returns false.
template <class Fn>
constexpr void for_each_part(ClassTag tag, std::uint64_t limit, Fn&& fn)
{
    for (Part p = first_part(tag); p != no_part && p <= limit; p = next_part(tag, p))
        if (!fn(p))
            return;
}

} // namespace detail

/// counts[m] = number of class compositions of m, for 0 <= m <= limit.
/// Built by dynamic programming over the first part; immutable afterwards.
class CountTable {
public:
    CountTable(ClassTag tag, std::uint32_t limit) : tag_(tag), counts_(std::size_t{limit} + 1)
    {
        counts_[0] = 1;
        for (std::uint32_t m = 1; m <= limit; ++m) {
            BigInt sum = 0;
            detail::for_each_part(tag, m, [&](Part p) {
                sum += counts_[m - p];
                return true;
            });
            counts_[m] = std::move(sum);
        }
    }

    [[nodiscard]] ClassTag tag() const noexcept { return tag_; }
    [[nodiscard]] std::uint32_t limit() const noexcept { return static_cast<std::uint32_t>(counts_.size() - 1); }
    [[nodiscard]] std::span<const BigInt> counts() const noexcept { return counts_; }

    [[nodiscard]] const BigInt& count(std::uint32_t m) const
    {
        if (m > limit())
            throw precondition_error("count table covers totals up to " + std::to_string(limit()));
        return counts_[m];
    }

    /// 0-based position of c in the canonical order of its class and total.
    [[nodiscard]] BigInt rank(const Composition& c) const
    {
        if (!belongs(tag_, c))
            throw precondition_error("composition is not in class " + std::string(class_name(tag_)));
        if (c.total() > limit())
            throw precondition_error("composition total exceeds count table limit");
        BigInt r = 0;
        std::uint64_t remaining = c.total();
        for (Part x : c.parts()) {
            detail::for_each_part(tag_, remaining, [&](Part p) {
                if (p >= x)
                    return false;
                r += counts_[remaining - p];
                return true;
            });
            remaining -= x;
        }
        return r;
    }

    /// Composition at 0-based position r among class compositions of n.
    [[nodiscard]] Composition unrank(std::uint32_t n, BigInt r) const
    {
        if (r < 0 || r >= count(n))
            throw precondition_error("rank " + r.str() + " out of range [0, " + count(n).str() + ") for class " +
                                     class_name(tag_) + " and n = " + std::to_string(n));
        std::vector<Part> parts;
        std::uint64_t remaining = n;
        while (remaining > 0) {
            Part chosen = detail::no_part;
            detail::for_each_part(tag_, remaining, [&](Part p) {
                const BigInt& block = counts_[remaining - p];
                if (r < block) {
                    chosen = p;
                    return false;
                }
                r -= block;
                return true;
            });
            if (chosen == detail::no_part)
                throw invariant_violation("unrank walked past the end of its count table");
            parts.push_back(chosen);
            remaining -= chosen;
        }
        return Composition(std::move(parts));
    }

private:
    ClassTag tag_;
    std::vector<BigInt> counts_;
};

[[nodiscard]] inline BigInt count(ClassTag tag, std::uint32_t n)
{
    return CountTable(tag, n).count(n);
}

[[nodiscard]] inline BigInt rank(ClassTag tag, const Composition& c)
{
    return CountTable(tag, c.total()).rank(c);
}

[[nodiscard]] inline Composition unrank(ClassTag tag, std::uint32_t n, const BigInt& r)
{
    return CountTable(tag, n).unrank(n, r);
}

/// Number of class compositions of n with exactly j parts, for every j that
/// occurs. The empty composition of 0 is reported at j = 0.
[[nodiscard]] inline std::map<std::uint32_t, BigInt> count_by_parts(ClassTag tag, std::uint32_t n)
{
    // by[m][j]: compositions of m with j parts.
    std::vector<std::vector<BigInt>> by(std::size_t{n} + 1, std::vector<BigInt>(std::size_t{n} + 1));
    by[0][0] = 1;
    for (std::uint32_t m = 1; m <= n; ++m)
        detail::for_each_part(tag, m, [&](Part p) {
            for (std::uint32_t j = 1; j <= m; ++j)
                by[m][j] += by[m - p][j - 1];
            return true;
        });
    std::map<std::uint32_t, BigInt> out;
    for (std::uint32_t j = 0; j <= n; ++j)
        if (by[n][j] != 0)
            out.emplace(j, by[n][j]);
    return out;
}

/// Restartable enumeration state: the current composition as a part vector.
/// Memory is O(n) regardless of how many compositions remain.
class CompositionCursor {
public:
    /// Positioned at the first class composition of n (or done if none).
    CompositionCursor(ClassTag tag, std::uint32_t n) : tag_(tag), n_(n)
    {
        done_ = !completable(tag_, n_);
        if (!done_)
            fill_smallest(n_);
    }

    /// Positioned at an existing class composition of n.
    CompositionCursor(ClassTag tag, const Composition& at) : tag_(tag), n_(at.total()), parts_(at.part_vector())
    {
        if (!belongs(tag_, at))
            throw precondition_error("cursor start is not in class " + std::string(class_name(tag_)));
    }

    [[nodiscard]] bool done() const noexcept { return done_; }
    [[nodiscard]] ClassTag tag() const noexcept { return tag_; }
    [[nodiscard]] std::uint32_t total() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Part>& parts() const noexcept { return parts_; }
    [[nodiscard]] Composition current() const { return Composition(parts_); }

    /// Moves to the lexicographic successor; returns false once exhausted.
    bool advance()
    {
        if (done_)
            return false;
        std::uint64_t suffix = 0;
        while (!parts_.empty()) {
            Part old = parts_.back();
            parts_.pop_back();
            suffix += old;
            for (Part q = detail::next_part(tag_, old); q != detail::no_part && q <= suffix;
                 q = detail::next_part(tag_, q)) {
                if (completable(tag_, suffix - q)) {
                    parts_.push_back(q);
                    fill_smallest(suffix - q);
                    return true;
                }
            }
        }
        done_ = true;
        return false;
    }

private:
    void fill_smallest(std::uint64_t m)
    {
        while (m > 0) {
            Part chosen = detail::no_part;
            detail::for_each_part(tag_, m, [&](Part p) {
                if (completable(tag_, m - p)) {
                    chosen = p;
                    return false;
                }
                return true;
            });
            parts_.push_back(chosen);
            m -= chosen;
        }
    }

    ClassTag tag_;
    std::uint32_t n_;
    std::vector<Part> parts_;
    bool done_ = false;
};

/// Lazy range over class compositions of n in canonical order, optionally
/// restricted to the rank window [first_rank, first_rank + max_items).
class CompositionStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(CompositionCursor cursor, std::optional<std::uint64_t> remaining)
            : cursor_(std::move(cursor)), remaining_(remaining)
        {
            if (remaining_ && *remaining_ == 0)
                cursor_.reset();
            else if (cursor_ && cursor_->done())
                cursor_.reset();
        }

        Composition operator*() const { return cursor_->current(); }
        iterator& operator++()
        {
            if (remaining_)
                --*remaining_;
            if (!cursor_->advance() || (remaining_ && *remaining_ == 0))
                cursor_.reset();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return !a.cursor_ && !b.cursor_; }

    private:
        std::optional<CompositionCursor> cursor_;
        std::optional<std::uint64_t> remaining_;
    };

    CompositionStream(ClassTag tag, std::uint32_t n) : start_(tag, n) {}
    CompositionStream(CompositionCursor start, std::optional<std::uint64_t> max_items)
        : start_(std::move(start)), max_items_(max_items)
    {}

    [[nodiscard]] iterator begin() const { return iterator(start_, max_items_); }
    [[nodiscard]] iterator end() const { return {}; }

private:
    CompositionCursor start_;
    std::optional<std::uint64_t> max_items_;
};

/// Every class composition of n exactly once, in canonical order.
[[nodiscard]] inline CompositionStream enumerate(ClassTag tag, std::uint32_t n)
{
    return {tag, n};
}

/// The shard of the canonical order with ranks in [lo, hi); hi is clamped to
/// the class count.
[[nodiscard]] inline CompositionStream enumerate_ranks(const CountTable& table, std::uint32_t n, const BigInt& lo,
                                                       const BigInt& hi)
{
    const BigInt& total = table.count(n);
    BigInt end = hi < total ? hi : total;
    if (lo < 0 || lo > end)
        throw precondition_error("rank range [" + lo.str() + ", " + hi.str() + ") is empty or reversed");
    if (lo == end)
        return {CompositionCursor(table.tag(), n), std::uint64_t{0}};
    return {CompositionCursor(table.tag(), table.unrank(n, lo)), static_cast<std::uint64_t>(end - lo)};
}

/// Number of items produced by a full pass over enumerate(tag, n).
[[nodiscard]] inline std::uint64_t enumerated_count(ClassTag tag, std::uint32_t n)
{
    std::uint64_t k = 0;
    for (CompositionCursor cur(tag, n); !cur.done(); cur.advance())
        ++k;
    return k;
}

/// Materializes the full class set of n in canonical order.
[[nodiscard]] inline std::vector<Composition> collect(ClassTag tag, std::uint32_t n)
{
    std::vector<Composition> out;
    for (CompositionCursor cur(tag, n); !cur.done(); cur.advance())
        out.push_back(cur.current());
    return out;
}

} // namespace fibcomp

#endif // FIBCOMP_ENUMERATE_HPP
