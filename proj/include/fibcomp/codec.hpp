#ifndef FIBCOMP_CODEC_HPP
#define FIBCOMP_CODEC_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcomp/core.hpp"

// Cut/join encoding: a composition of n is a tiling of a 1 x n board, and
// each of the n-1 interior cell boundaries is either a cut (a part ends there)
// or a join (the same part continues).

namespace fibcomp {

enum class Letter : char { Cut = 'C', Join = 'J' };

[[nodiscard]] constexpr Letter swapped(Letter l) noexcept
{
    return l == Letter::Cut ? Letter::Join : Letter::Cut;
}

/// Cut/join word for a board of length n >= 1. Letter i (0-based) describes
/// the boundary after cell i + 1.
class CutJoinSeq {
public:
    CutJoinSeq(std::vector<Letter> letters, std::uint32_t board)
        : letters_(std::move(letters)), board_(board)
    {
        if (board_ == 0)
            throw precondition_error("cut/join board length must be at least 1");
        if (letters_.size() + 1 != board_)
            throw precondition_error("cut/join word length must be board length - 1");
    }

    /// Board length implied by the word (length + 1).
    explicit CutJoinSeq(std::vector<Letter> letters)
        : CutJoinSeq(letters, static_cast<std::uint32_t>(letters.size() + 1))
    {}

    [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
    [[nodiscard]] std::uint32_t board() const noexcept { return board_; }
    [[nodiscard]] std::size_t cuts() const noexcept { return static_cast<std::size_t>(std::ranges::count(letters_, Letter::Cut)); }

    friend bool operator==(const CutJoinSeq&, const CutJoinSeq&) = default;

    /// "JJCC"; empty string for board length 1.
    [[nodiscard]] std::string str() const
    {
        std::string out;
        out.reserve(letters_.size());
        for (Letter l : letters_)
            out += static_cast<char>(l);
        return out;
    }

    /// Parses a word over {C, J}. An explicit board, when given, must equal
    /// the word length + 1.
    static CutJoinSeq parse(std::string_view text, std::optional<std::uint32_t> board = std::nullopt)
    {
        std::vector<Letter> letters;
        letters.reserve(text.size());
        for (char ch : text) {
            if (ch == 'C')
                letters.push_back(Letter::Cut);
            else if (ch == 'J')
                letters.push_back(Letter::Join);
            else
                throw parse_error("cut/join word may only contain 'C' and 'J': '" + std::string(text) + "'");
        }
        auto implied = static_cast<std::uint32_t>(letters.size() + 1);
        if (board && *board != implied)
            throw parse_error("board length " + std::to_string(*board) + " does not match word '" +
                              std::string(text) + "' (expected " + std::to_string(implied) + ")");
        return CutJoinSeq(std::move(letters), implied);
    }

private:
    std::vector<Letter> letters_;
    std::uint32_t board_;
};

[[nodiscard]] inline CutJoinSeq encode(const Composition& c)
{
    if (c.empty())
        throw precondition_error("cannot encode the empty composition: it has no board");
    std::vector<Letter> letters;
    letters.reserve(c.total() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (Part j = 1; j < c.parts()[i]; ++j)
            letters.push_back(Letter::Join);
        if (i + 1 < c.size())
            letters.push_back(Letter::Cut);
    }
    return CutJoinSeq(std::move(letters), c.total());
}

[[nodiscard]] inline Composition decode(const CutJoinSeq& w)
{
    std::vector<Part> parts;
    Part run = 1;
    for (Letter l : w.letters()) {
        if (l == Letter::Cut) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

/// Swap every letter of the encoding. An involution on compositions of n >= 1.
[[nodiscard]] inline Composition conjugate(const Composition& c)
{
    if (c.empty())
        throw precondition_error("cannot conjugate the empty composition: it has no board");
    auto word = encode(c);
    std::vector<Letter> letters(word.letters().begin(), word.letters().end());
    std::ranges::transform(letters, letters.begin(), swapped);
    return decode(CutJoinSeq(std::move(letters), word.board()));
}

[[nodiscard]] inline Composition reverse(const Composition& c)
{
    std::vector<Part> parts(c.part_vector().rbegin(), c.part_vector().rend());
    return Composition(std::move(parts));
}

} // namespace fibcomp

#endif // FIBCOMP_CODEC_HPP
