#ifndef FIBCOMP_IDENTITIES_HPP
#define FIBCOMP_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcomp/core.hpp"
#include "fibcomp/enumerate.hpp"

// Exact-count verification of the Fibonacci identities
//
//   eq1:  F_1 + F_3 + ... + F_{2n-1}        = F_{2n}
//   eq2:  F_2 + F_4 + ... + F_{2n}          = F_{2n+1} - 1
//   eq3:  2 (F_1 + F_4 + ... + F_{3n-2})    = F_{3n}
//   eq4:  sum_k binomial(n-1-k, k)          = F_n
//   pow2: c(n)                              = 2^{n-1}
//
// Each right-hand side is also tied to a class count where the class count
// is cheap enough to obtain by exhaustive enumeration.

namespace fibcomp {

enum class IdentityId : std::uint8_t { Eq1, Eq2, Eq3, Eq4, Pow2 };

inline constexpr IdentityId all_identities[] = {IdentityId::Eq1, IdentityId::Eq2, IdentityId::Eq3, IdentityId::Eq4,
                                                IdentityId::Pow2};

[[nodiscard]] constexpr const char* identity_name(IdentityId id) noexcept
{
    switch (id) {
    case IdentityId::Eq1: return "eq1";
    case IdentityId::Eq2: return "eq2";
    case IdentityId::Eq3: return "eq3";
    case IdentityId::Eq4: return "eq4";
    case IdentityId::Pow2: return "pow2";
    }
    return "?";
}

inline IdentityId parse_identity(std::string_view name)
{
    for (IdentityId id : all_identities)
        if (name == identity_name(id))
            return id;
    throw parse_error("unknown identity '" + std::string(name) + "' (expected eq1, eq2, eq3, eq4, pow2)");
}

struct IdentityRow {
    std::uint32_t n = 0;
    BigInt lhs;
    BigInt rhs;
    /// Class count tied to rhs, when obtained in range.
    std::optional<BigInt> class_count;
    /// eq4 only: binomial(n-1-k, k) for k = 0, 1, ...
    std::vector<BigInt> binomial_terms;
    /// eq4 only: count_by_parts(min2, n+1) at j = k+1, when in range.
    std::optional<std::vector<BigInt>> part_terms;
    bool ok = false;
};

struct IdentityReport {
    IdentityId id = IdentityId::Eq1;
    std::uint32_t n_first = 0;
    std::uint32_t n_last = 0;
    std::vector<IdentityRow> rows;
    bool passed = false;
};

struct IdentityOptions {
    /// Largest total whose class is enumerated exhaustively for cross-checks.
    std::uint32_t enumeration_limit = 22;
    /// Largest total for the eq4 part-count statistic.
    std::uint32_t part_count_limit = 25;
    /// Largest n for the pow2 exhaustive enumeration.
    std::uint32_t pow2_enumeration_limit = 16;
};

namespace detail {

inline IdentityRow make_row(std::uint32_t n, BigInt lhs, BigInt rhs)
{
    IdentityRow row;
    row.n = n;
    row.lhs = std::move(lhs);
    row.rhs = std::move(rhs);
    row.ok = row.lhs == row.rhs;
    return row;
}

inline IdentityReport finish(IdentityId id, std::uint32_t first, std::uint32_t last, std::vector<IdentityRow> rows)
{
    IdentityReport r{id, first, last, std::move(rows), true};
    for (const auto& row : r.rows)
        r.passed = r.passed && row.ok;
    return r;
}

inline void require_n_max(std::uint32_t n_max, std::uint32_t least, IdentityId id)
{
    if (n_max < least)
        throw precondition_error(std::string(identity_name(id)) + " requires n_max >= " + std::to_string(least));
}

} // namespace detail

[[nodiscard]] inline IdentityReport check_eq1(std::uint32_t n_max, const IdentityOptions& opts = {})
{
    detail::require_n_max(n_max, 1, IdentityId::Eq1);
    std::vector<IdentityRow> rows;
    BigInt sum = 0;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        sum += fib(2 * n - 1);
        auto row = detail::make_row(n, sum, fib(2 * n));
        if (2 * n <= opts.enumeration_limit) {
            row.class_count = BigInt(enumerated_count(ClassTag::Odd, 2 * n));
            row.ok = row.ok && *row.class_count == row.rhs;
        }
        rows.push_back(std::move(row));
    }
    return detail::finish(IdentityId::Eq1, 1, n_max, std::move(rows));
}

/// Rows start at n = 0 (empty sum against F_1 - 1).
[[nodiscard]] inline IdentityReport check_eq2(std::uint32_t n_max, const IdentityOptions& opts = {})
{
    std::vector<IdentityRow> rows;
    BigInt sum = 0;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        if (n > 0)
            sum += fib(2 * n);
        auto row = detail::make_row(n, sum, fib(2 * n + 1) - 1);
        if (2 * n + 1 <= opts.enumeration_limit) {
            row.class_count = BigInt(enumerated_count(ClassTag::Odd, 2 * n + 1)) - 1;
            row.ok = row.ok && *row.class_count == row.rhs;
        }
        rows.push_back(std::move(row));
    }
    return detail::finish(IdentityId::Eq2, 0, n_max, std::move(rows));
}

/// Checked in doubled form: lhs = 2 * sum, rhs = F_{3n}.
[[nodiscard]] inline IdentityReport check_eq3(std::uint32_t n_max, const IdentityOptions& opts = {})
{
    detail::require_n_max(n_max, 1, IdentityId::Eq3);
    std::vector<IdentityRow> rows;
    BigInt sum = 0;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        sum += fib(3 * n - 2);
        auto row = detail::make_row(n, 2 * sum, fib(3 * n));
        if (3 * n + 1 <= opts.enumeration_limit) {
            row.class_count = BigInt(enumerated_count(ClassTag::Min2, 3 * n + 1));
            row.ok = row.ok && *row.class_count == row.rhs;
        }
        rows.push_back(std::move(row));
    }
    return detail::finish(IdentityId::Eq3, 1, n_max, std::move(rows));
}

/// Formula level for every n; term by term against the part-count statistic
/// of min2 compositions of n+1 while n+1 <= part_count_limit.
[[nodiscard]] inline IdentityReport check_eq4(std::uint32_t n_max, const IdentityOptions& opts = {})
{
    detail::require_n_max(n_max, 1, IdentityId::Eq4);
    std::vector<IdentityRow> rows;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        auto row = detail::make_row(n, 0, fib(n));
        for (std::int64_t k = 0; n - 1 - k >= k; ++k) {
            row.binomial_terms.push_back(binomial(n - 1 - k, k));
            row.lhs += row.binomial_terms.back();
        }
        row.ok = row.lhs == row.rhs;
        if (n + 1 <= opts.part_count_limit) {
            auto by_parts = count_by_parts(ClassTag::Min2, n + 1);
            std::vector<BigInt> terms;
            BigInt total = 0;
            for (std::uint32_t k = 0; k < row.binomial_terms.size(); ++k) {
                auto it = by_parts.find(k + 1);
                terms.push_back(it == by_parts.end() ? BigInt(0) : it->second);
            }
            for (const auto& [j, v] : by_parts)
                total += v;
            // No part counts beyond the binomial range may occur.
            bool no_extra = by_parts.empty() || by_parts.rbegin()->first <= row.binomial_terms.size();
            row.ok = row.ok && no_extra && terms == row.binomial_terms && total == row.rhs &&
                     count(ClassTag::Min2, n + 1) == row.rhs;
            row.class_count = total;
            row.part_terms = std::move(terms);
        }
        rows.push_back(std::move(row));
    }
    return detail::finish(IdentityId::Eq4, 1, n_max, std::move(rows));
}

/// count(all, n) by dynamic programming against 2^{n-1}, and by exhaustive
/// enumeration for n <= pow2_enumeration_limit.
[[nodiscard]] inline IdentityReport check_pow2(std::uint32_t n_max, const IdentityOptions& opts = {})
{
    detail::require_n_max(n_max, 1, IdentityId::Pow2);
    CountTable table(ClassTag::All, n_max);
    std::vector<IdentityRow> rows;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        auto row = detail::make_row(n, table.count(n), pow2(n - 1));
        if (n <= opts.pow2_enumeration_limit) {
            row.class_count = BigInt(enumerated_count(ClassTag::All, n));
            row.ok = row.ok && *row.class_count == row.rhs;
        }
        rows.push_back(std::move(row));
    }
    return detail::finish(IdentityId::Pow2, 1, n_max, std::move(rows));
}

[[nodiscard]] inline IdentityReport check_identity(IdentityId id, std::uint32_t n_max, const IdentityOptions& opts = {})
{
    switch (id) {
    case IdentityId::Eq1: return check_eq1(n_max, opts);
    case IdentityId::Eq2: return check_eq2(n_max, opts);
    case IdentityId::Eq3: return check_eq3(n_max, opts);
    case IdentityId::Eq4: return check_eq4(n_max, opts);
    case IdentityId::Pow2: return check_pow2(n_max, opts);
    }
    throw invariant_violation("unknown identity id");
}

} // namespace fibcomp

#endif // FIBCOMP_IDENTITIES_HPP
