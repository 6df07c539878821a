#ifndef FIBCOMP_RENDER_HPP
#define FIBCOMP_RENDER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "fibcomp/codec.hpp"
#include "fibcomp/core.hpp"

// Deterministic board drawings of a composition. Output depends only on the
// composition and the RenderSpec; no locale-sensitive formatting is used.

namespace fibcomp {

enum class RenderFormat : std::uint8_t { Ascii, Svg };
enum class Shading : std::uint8_t { None, EvenGray };
enum class Annotation : std::uint8_t { None, CutJoin, Lengths };

struct RenderSpec {
    RenderFormat format = RenderFormat::Ascii;
    Shading shading = Shading::None;
    Annotation annotation = Annotation::None;
};

namespace svg_metrics {
inline constexpr int cell = 40;
inline constexpr int margin = 10;
inline constexpr int corner = 6;
inline constexpr int annotation_band = 30;
inline constexpr std::string_view gray = "#cccccc";
inline constexpr std::string_view white = "#ffffff";
} // namespace svg_metrics

namespace detail {

inline bool shaded(const RenderSpec& spec, Part k)
{
    return spec.shading == Shading::EvenGray && k % 2 == 0;
}

inline void require_board(const Composition& c)
{
    if (c.empty())
        throw precondition_error("cannot render the empty composition: it has no board");
}

} // namespace detail

/// `|###|#|#|`: k cells per tile ('#', or '%' for shaded tiles), '|' at the
/// board ends and at every cut. CutJoin adds a row "J J C C"; Lengths adds a
/// row with each tile length under the tile's first cell.
[[nodiscard]] inline std::string render_ascii(const Composition& c, const RenderSpec& spec = {})
{
    detail::require_board(c);
    std::string board = "|";
    std::string lengths;
    for (Part k : c.parts()) {
        std::string label = std::to_string(k);
        lengths += ' ';
        lengths += label;
        lengths.append(k - label.size(), ' ');
        board.append(k, detail::shaded(spec, k) ? '%' : '#');
        board += '|';
    }
    std::string out = board + '\n';
    if (spec.annotation == Annotation::CutJoin) {
        std::string row;
        const CutJoinSeq word = encode(c);
        for (Letter l : word.letters()) {
            if (!row.empty())
                row += ' ';
            row += static_cast<char>(l);
        }
        out += row + '\n';
    } else if (spec.annotation == Annotation::Lengths) {
        lengths.erase(lengths.find_last_not_of(' ') + 1);
        out += lengths + '\n';
    }
    return out;
}

/// One rounded rectangle per tile, unit cell 40px, dashed lines at joins,
/// emitted left to right.
[[nodiscard]] inline std::string render_svg(const Composition& c, const RenderSpec& spec = {})
{
    using namespace svg_metrics;
    detail::require_board(c);
    const int width = 2 * margin + cell * static_cast<int>(c.total());
    const int height = 2 * margin + cell + (spec.annotation == Annotation::CutJoin ? annotation_band : 0);
    const int top = margin;
    const int bottom = margin + cell;
    auto num = [](int v) { return std::to_string(v); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    int x = margin;
    for (Part k : c.parts()) {
        const int w = cell * static_cast<int>(k);
        out += "  <rect x=\"" + num(x) + "\" y=\"" + num(top) + "\" width=\"" + num(w) + "\" height=\"" + num(cell) +
               "\" rx=\"" + num(corner) + "\" ry=\"" + num(corner) + "\" fill=\"" +
               std::string(detail::shaded(spec, k) ? gray : white) +
               "\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
        for (Part j = 1; j < k; ++j) {
            const int lx = x + cell * static_cast<int>(j);
            out += "  <line x1=\"" + num(lx) + "\" y1=\"" + num(top) + "\" x2=\"" + num(lx) + "\" y2=\"" +
                   num(bottom) + "\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
        }
        if (spec.annotation == Annotation::Lengths)
            out += "  <text x=\"" + num(x + w / 2) + "\" y=\"" + num(top + cell / 2 + 7) +
                   "\" font-family=\"monospace\" font-size=\"20\" text-anchor=\"middle\">" + std::to_string(k) +
                   "</text>\n";
        x += w;
    }
    if (spec.annotation == Annotation::CutJoin) {
        int boundary = 1;
        const CutJoinSeq word = encode(c);
        for (Letter l : word.letters()) {
            out += "  <text x=\"" + num(margin + cell * boundary) + "\" y=\"" + num(bottom + 22) +
                   "\" font-family=\"monospace\" font-size=\"20\" text-anchor=\"middle\">" +
                   std::string(1, static_cast<char>(l)) + "</text>\n";
            ++boundary;
        }
    }
    out += "</svg>\n";
    return out;
}

[[nodiscard]] inline std::string render(const Composition& c, const RenderSpec& spec = {})
{
    return spec.format == RenderFormat::Svg ? render_svg(c, spec) : render_ascii(c, spec);
}

} // namespace fibcomp

#endif // FIBCOMP_RENDER_HPP
