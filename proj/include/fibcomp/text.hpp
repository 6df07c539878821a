#ifndef FIBCOMP_TEXT_HPP
#define FIBCOMP_TEXT_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "fibcomp/core.hpp"

namespace fibcomp {

/// Text form of a composition: comma-separated decimal parts with no spaces
/// ("3,1,1"). The empty composition is the single character "-".
[[nodiscard]] inline std::string to_text(const Composition& c)
{
    if (c.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(c.parts()[i]);
    }
    return out;
}

[[nodiscard]] inline Composition parse_composition(std::string_view text)
{
    if (text == "-")
        return {};
    if (text.empty())
        throw parse_error("empty composition text (use '-' for the empty composition)");

    std::vector<Part> parts;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (field.empty() || field.front() == '+' || field.front() == '-')
            throw parse_error("malformed composition '" + std::string(text) + "'");
        Part value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || end != field.data() + field.size())
            throw parse_error("malformed composition '" + std::string(text) + "'");
        if (value == 0)
            throw parse_error("composition parts must be positive: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

[[nodiscard]] inline std::string to_string(const BigInt& v)
{
    return v.str();
}

} // namespace fibcomp

#endif // FIBCOMP_TEXT_HPP
