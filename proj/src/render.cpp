#include "twocolor/diagram.hpp"

#include <sstream>
#include <string_view>

namespace twocolor {

namespace {

constexpr int cell_px = 32;

struct Glyphs {
    std::string_view square;
    std::string_view upper;
    std::string_view lower;
    std::string_view pair;
    std::string_view blank;
    std::string_view separator;
};

constexpr Glyphs ascii_glyphs{"[2]", " \\1", "1\\ ", "1\\1", "   ", ""};
constexpr Glyphs unicode_glyphs{"■", "◥", "◣", "⧅", " ", " "};

std::string_view glyph(const Glyphs& g, std::optional<CellKind> kind)
{
    if (!kind)
        return g.blank;
    switch (*kind) {
    case CellKind::square:
    case CellKind::merged_square: return g.square;
    case CellKind::upper_triangle: return g.upper;
    case CellKind::lower_triangle: return g.lower;
    case CellKind::triangle_pair: return g.pair;
    }
    return g.blank;
}

std::string render_text(const ModularDiagram& dia, const Glyphs& g)
{
    std::string out;
    const int rows = dia.row_count();
    const int cols = dia.column_count();
    for (int r = 1; r <= rows; ++r) {
        std::string line;
        for (int c = 1; c <= cols; ++c) {
            if (c > 1)
                line += g.separator;
            line += glyph(g, dia.at({r, c}));
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

void svg_label(std::ostringstream& os, double x, double y, int value)
{
    os << "  <text x=\"" << x << "\" y=\"" << y
       << "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"central\">" << value
       << "</text>\n";
}

void svg_triangle(std::ostringstream& os, int x, int y, bool upper)
{
    const int s = cell_px;
    os << "  <polygon points=\"";
    if (upper)
        os << x << ',' << y << ' ' << x + s << ',' << y << ' ' << x + s << ',' << y + s;
    else
        os << x << ',' << y << ' ' << x << ',' << y + s << ' ' << x + s << ',' << y + s;
    os << "\" fill=\"" << (upper ? "#d4ecd4" : "#d4e0f4") << "\" stroke=\"black\"/>\n";
    // Label sits inside the triangle, away from the hypotenuse.
    if (upper)
        svg_label(os, x + 0.7 * s, y + 0.3 * s, 1);
    else
        svg_label(os, x + 0.3 * s, y + 0.7 * s, 1);
}

std::string render_svg(const ModularDiagram& dia)
{
    const int width = dia.column_count() * cell_px;
    const int height = dia.row_count() * cell_px;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (const auto& [c, kind] : dia.cells()) {
        const int x = (c.col - 1) * cell_px;
        const int y = (c.row - 1) * cell_px;
        switch (kind) {
        case CellKind::square:
        case CellKind::merged_square:
            os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_px
               << "\" height=\"" << cell_px << "\" fill=\"white\" stroke=\"black\"/>\n";
            svg_label(os, x + 0.5 * cell_px, y + 0.5 * cell_px, 2);
            break;
        case CellKind::upper_triangle:
            svg_triangle(os, x, y, true);
            break;
        case CellKind::lower_triangle:
            svg_triangle(os, x, y, false);
            break;
        case CellKind::triangle_pair:
            svg_triangle(os, x, y, true);
            svg_triangle(os, x, y, false);
            break;
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render(const ModularDiagram& dia, RenderFormat format, RenderOptions opts)
{
    if (format == RenderFormat::svg)
        return render_svg(dia);
    return render_text(dia, opts.unicode ? unicode_glyphs : ascii_glyphs);
}

} // namespace twocolor
