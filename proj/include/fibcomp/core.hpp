#ifndef FIBCOMP_CORE_HPP
#define FIBCOMP_CORE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibcomp {

/// Exact integer used for every count, rank, and Fibonacci value.
using BigInt = boost::multiprecision::cpp_int;

/// A single summand of a composition (a 1 x k tile).
using Part = std::uint32_t;

/// Input that violates a documented precondition (wrong class, wrong total,
/// out-of-range index, n below a map's validity range, ...).
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Indicates a defect, never bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Ordered sequence of positive parts. The empty sequence is the unique
/// composition of 0.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<Part> parts) : parts_(std::move(parts))
    {
        for (Part p : parts_) {
            if (p == 0)
                throw precondition_error("composition parts must be positive");
            total_ += p;
        }
    }

    Composition(std::initializer_list<Part> parts)
        : Composition(std::vector<Part>(parts))
    {}

    [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<Part>& part_vector() const noexcept { return parts_; }
    [[nodiscard]] std::uint32_t total() const noexcept { return total_; }
    [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] Part front() const { return parts_.front(); }
    [[nodiscard]] Part back() const { return parts_.back(); }

    // Lexicographic on the part sequence; a proper prefix sorts first.
    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    std::uint32_t total_ = 0;
};

enum class ClassTag : std::uint8_t { All, Parts12, Odd, Min2 };

inline constexpr ClassTag all_class_tags[] = {
    ClassTag::All, ClassTag::Parts12, ClassTag::Odd, ClassTag::Min2};

/// Membership predicate of a restriction class on a single part value.
[[nodiscard]] constexpr bool admits(ClassTag tag, Part k) noexcept
{
    switch (tag) {
    case ClassTag::All: return k >= 1;
    case ClassTag::Parts12: return k == 1 || k == 2;
    case ClassTag::Odd: return k % 2 == 1;
    case ClassTag::Min2: return k >= 2;
    }
    return false;
}

/// Whether some composition of m exists with every part admitted by tag.
[[nodiscard]] constexpr bool completable(ClassTag tag, std::uint64_t m) noexcept
{
    return m == 0 || tag != ClassTag::Min2 || m >= 2;
}

/// Every part satisfies the predicate (vacuously true for the empty composition).
[[nodiscard]] inline bool belongs(ClassTag tag, const Composition& c) noexcept
{
    return std::ranges::all_of(c.parts(), [tag](Part k) { return admits(tag, k); });
}

[[nodiscard]] constexpr const char* class_name(ClassTag tag) noexcept
{
    switch (tag) {
    case ClassTag::All: return "all";
    case ClassTag::Parts12: return "parts12";
    case ClassTag::Odd: return "odd";
    case ClassTag::Min2: return "min2";
    }
    return "?";
}

inline ClassTag parse_class(std::string_view name)
{
    for (ClassTag tag : all_class_tags)
        if (name == class_name(tag))
            return tag;
    throw parse_error("unknown class '" + std::string(name) + "' (expected all, parts12, odd, min2)");
}

/// Small set of class tags.
class ClassSet {
public:
    constexpr ClassSet() = default;
    constexpr ClassSet(std::initializer_list<ClassTag> tags)
    {
        for (ClassTag t : tags)
            insert(t);
    }

    constexpr void insert(ClassTag t) noexcept { bits_ |= bit(t); }
    [[nodiscard]] constexpr bool contains(ClassTag t) const noexcept { return (bits_ & bit(t)) != 0; }
    [[nodiscard]] constexpr std::size_t size() const noexcept { return std::popcount(bits_); }

    friend constexpr bool operator==(ClassSet, ClassSet) = default;

private:
    static constexpr std::uint8_t bit(ClassTag t) noexcept
    {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
    }
    std::uint8_t bits_ = 0;
};

/// The tags whose predicate every part of c satisfies. ALL is always present.
[[nodiscard]] inline ClassSet classify(const Composition& c) noexcept
{
    ClassSet out;
    for (ClassTag tag : all_class_tags)
        if (belongs(tag, c))
            out.insert(tag);
    return out;
}

/// Exact Fibonacci values F_0..F_N.
class FibTable {
public:
    explicit FibTable(std::size_t max_index = 1) { grow(max_index); }

    void grow(std::size_t max_index)
    {
        if (values_.empty()) {
            values_.emplace_back(0);
            values_.emplace_back(1);
        }
        while (values_.size() <= max_index) {
            auto k = values_.size();
            values_.push_back(values_[k - 1] + values_[k - 2]);
        }
    }

    [[nodiscard]] std::size_t max_index() const noexcept { return values_.size() - 1; }
    [[nodiscard]] const BigInt& operator[](std::size_t m) const { return values_.at(m); }
    [[nodiscard]] std::span<const BigInt> values() const noexcept { return values_; }

private:
    std::vector<BigInt> values_;
};

namespace detail {

struct SharedFib {
    std::mutex mutex;
    FibTable table;
};

inline SharedFib& shared_fib()
{
    static SharedFib instance;
    return instance;
}

struct SharedPascal {
    std::mutex mutex;
    std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
};

inline SharedPascal& shared_pascal()
{
    static SharedPascal instance;
    return instance;
}

} // namespace detail

/// F_m, exact. The process-wide table grows on demand under a lock.
[[nodiscard]] inline BigInt fib(std::size_t m)
{
    auto& shared = detail::shared_fib();
    std::lock_guard lock(shared.mutex);
    shared.table.grow(m);
    return shared.table[m];
}

/// Binomial coefficient from Pascal's triangle; zero when b < 0, a < 0 or b > a.
[[nodiscard]] inline BigInt binomial(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a)
        return 0;
    auto& shared = detail::shared_pascal();
    std::lock_guard lock(shared.mutex);
    auto& rows = shared.rows;
    while (rows.size() <= static_cast<std::size_t>(a)) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t k = 1; k + 1 < row.size(); ++k)
            row[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// 2^e, exact.
[[nodiscard]] inline BigInt pow2(std::size_t e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

} // namespace fibcomp

#endif // FIBCOMP_CORE_HPP
