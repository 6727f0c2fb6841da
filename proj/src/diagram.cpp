#include "twocolor/diagram.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "twocolor/error.hpp"

namespace twocolor {

int cell_value(CellKind k) noexcept
{
    switch (k) {
    case CellKind::upper_triangle:
    case CellKind::lower_triangle:
        return 1;
    case CellKind::square:
    case CellKind::triangle_pair:
    case CellKind::merged_square:
        return 2;
    }
    return 0;
}

bool is_all_square(CellKind k) noexcept
{
    return k == CellKind::square || k == CellKind::merged_square;
}

const char* to_string(CellKind k) noexcept
{
    switch (k) {
    case CellKind::square: return "square";
    case CellKind::upper_triangle: return "upper_triangle";
    case CellKind::lower_triangle: return "lower_triangle";
    case CellKind::triangle_pair: return "triangle_pair";
    case CellKind::merged_square: return "merged_square";
    }
    return "?";
}

std::string to_string(Cell c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

const char* to_string(Orientation o) noexcept
{
    return o == Orientation::row ? "row" : "column";
}

const char* to_string(StripAction a) noexcept
{
    switch (a) {
    case StripAction::none: return "none";
    case StripAction::removed: return "removed";
    case StripAction::inserted: return "inserted";
    case StripAction::far_edge_inserted: return "far_edge_inserted";
    }
    return "?";
}

ModularDiagram::ModularDiagram(CellMap cells) : cells_(std::move(cells))
{
    for (const auto& [c, kind] : cells_) {
        if (c.row < 1 || c.col < 1)
            throw MalformedDiagram("cell " + to_string(c) + " has an index below 1");
        if (c.row != c.col && kind != CellKind::square && kind != CellKind::merged_square)
            throw MalformedDiagram(std::string(to_string(kind)) + " off the diagonal at "
                                   + to_string(c));
    }
}

std::optional<CellKind> ModularDiagram::at(Cell c) const
{
    auto it = cells_.find(c);
    if (it == cells_.end())
        return std::nullopt;
    return it->second;
}

int ModularDiagram::diagonal_length() const noexcept
{
    int d = 0;
    for (const auto& [c, kind] : cells_) {
        if (c.row == c.col)
            d = std::max(d, c.row);
    }
    return d;
}

int ModularDiagram::row_count() const noexcept
{
    return cells_.empty() ? 0 : cells_.rbegin()->first.row;
}

int ModularDiagram::column_count() const noexcept
{
    int n = 0;
    for (const auto& [c, kind] : cells_)
        n = std::max(n, c.col);
    return n;
}

std::int64_t ModularDiagram::total_value() const noexcept
{
    std::int64_t v = 0;
    for (const auto& [c, kind] : cells_)
        v += cell_value(kind);
    return v;
}

int ModularDiagram::lone_triangle_count() const noexcept
{
    return static_cast<int>(std::ranges::count_if(cells_, [](const auto& e) {
        return e.second == CellKind::upper_triangle || e.second == CellKind::lower_triangle;
    }));
}

namespace {

int line_of(Cell c, Orientation o) noexcept
{
    return o == Orientation::row ? c.row : c.col;
}

Cell shifted(Cell c, Orientation o, int delta) noexcept
{
    if (o == Orientation::row)
        c.row += delta;
    else
        c.col += delta;
    return c;
}

int to_index(Part v)
{
    if (v > std::numeric_limits<int>::max())
        throw InvalidPartition("part too large for a diagram");
    return static_cast<int>(v);
}

void place_triangle(ModularDiagram::CellMap& cells, Cell c, CellKind tri)
{
    auto [it, fresh] = cells.try_emplace(c, tri);
    if (!fresh)
        it->second = CellKind::triangle_pair;
}

// Diagonal cells become the triangles they stand for once the diagonal
// line is drawn back; off-diagonal cells are plain squares.
ModularDiagram::CellMap with_diagonal_drawn(const ModularDiagram::CellMap& cells)
{
    ModularDiagram::CellMap out;
    for (const auto& [c, kind] : cells) {
        if (c.row != c.col)
            out.emplace(c, CellKind::square);
        else if (kind == CellKind::upper_triangle || kind == CellKind::lower_triangle)
            out.emplace(c, kind);
        else
            out.emplace(c, CellKind::triangle_pair);
    }
    return out;
}

} // namespace

ModularDiagram build_diagram(const Parts& greens, const Parts& blues)
{
    if (!is_distinct_descending(greens, Parity::odd))
        throw InvalidPartition("greens must be distinct positive odd parts in decreasing order");
    if (!is_distinct_descending(blues, Parity::odd))
        throw InvalidPartition("blues must be distinct positive odd parts in decreasing order");
    if (weight(greens) > max_weight || weight(blues) > max_weight)
        throw InvalidPartition("weight exceeds the configured bound");

    const int s = static_cast<int>(greens.size());
    const int t = static_cast<int>(blues.size());
    const int d = std::max(s, t);

    ModularDiagram::CellMap cells;
    for (int i = 1; i <= s; ++i) {
        const int k = d - s + i;
        place_triangle(cells, {k, k}, CellKind::upper_triangle);
        const int squares = to_index((greens[static_cast<std::size_t>(i - 1)] - 1) / 2);
        for (int j = 1; j <= squares; ++j)
            cells.emplace(Cell{k, k + j}, CellKind::square);
    }
    for (int j = 1; j <= t; ++j) {
        const int k = d - t + j;
        place_triangle(cells, {k, k}, CellKind::lower_triangle);
        const int squares = to_index((blues[static_cast<std::size_t>(j - 1)] - 1) / 2);
        for (int r = 1; r <= squares; ++r)
            cells.emplace(Cell{k + r, k}, CellKind::square);
    }
    return ModularDiagram(std::move(cells));
}

ModularDiagram merge_adjoined(const ModularDiagram& dia)
{
    ModularDiagram::CellMap cells = dia.cells();
    for (auto& [c, kind] : cells) {
        if (kind == CellKind::triangle_pair)
            kind = CellKind::merged_square;
    }
    return ModularDiagram(std::move(cells));
}

StripReport longest_all_square_strip(const ModularDiagram& dia, Orientation o)
{
    std::map<int, int> length;
    std::map<int, bool> clean;
    for (const auto& [c, kind] : dia.cells()) {
        const int line = line_of(c, o);
        ++length[line];
        auto [it, fresh] = clean.try_emplace(line, true);
        it->second = it->second && is_all_square(kind);
    }

    StripReport best{o, 0, 0, StripAction::none};
    for (const auto& [line, len] : length) {
        if (clean[line] && len > best.length) {
            best.length = len;
            best.position = line;
        }
    }
    return best;
}

ModularDiagram remove_strip(const ModularDiagram& dia, Orientation o, int position)
{
    ModularDiagram::CellMap cells;
    bool found = false;
    for (const auto& [c, kind] : dia.cells()) {
        const int line = line_of(c, o);
        if (line == position) {
            if (!is_all_square(kind))
                throw MalformedDiagram("cannot remove " + std::string(to_string(o)) + " "
                                       + std::to_string(position) + ": "
                                       + to_string(kind) + " at " + to_string(c));
            found = true;
            continue;
        }
        cells.emplace(line > position ? shifted(c, o, -1) : c, kind);
    }
    if (!found)
        throw MalformedDiagram("cannot remove " + std::string(to_string(o)) + " "
                               + std::to_string(position) + ": line is empty");
    return ModularDiagram(std::move(cells));
}

ModularDiagram insert_strip(const ModularDiagram& dia, Orientation o, int position,
                            int num_squares)
{
    if (position < 1)
        throw InvalidInput("insert_strip: position must be at least 1");
    if (num_squares < 1)
        throw InvalidInput("insert_strip: a strip needs at least one square");

    ModularDiagram::CellMap cells;
    for (const auto& [c, kind] : dia.cells())
        cells.emplace(line_of(c, o) >= position ? shifted(c, o, +1) : c, kind);
    for (int i = 1; i <= num_squares; ++i) {
        const Cell c = o == Orientation::row ? Cell{position, i} : Cell{i, position};
        cells.emplace(c, CellKind::square);
    }
    return ModularDiagram(std::move(cells));
}

int far_edge_position(const ModularDiagram& dia, Orientation o) noexcept
{
    return (o == Orientation::row ? dia.row_count() : dia.column_count()) + 1;
}

ColorParts split_and_read(const ModularDiagram& dia)
{
    const ModularDiagram::CellMap drawn = with_diagonal_drawn(dia.cells());

    ColorParts out;
    std::map<Cell, bool> consumed;
    for (const auto& [c, kind] : drawn)
        consumed.emplace(c, false);

    // Counts the run of squares leaving (k,k) in direction (dr,dc).
    auto walk = [&](int k, int dr, int dc) {
        int run = 0;
        for (Cell c{k + dr, k + dc}; drawn.contains(c); c = Cell{c.row + dr, c.col + dc}) {
            consumed[c] = true;
            ++run;
        }
        return run;
    };

    for (const auto& [c, kind] : drawn) {
        if (c.row != c.col)
            continue;
        consumed[c] = true;
        const int k = c.row;
        if (kind == CellKind::upper_triangle || kind == CellKind::triangle_pair)
            out.greens.push_back(1 + 2 * Part{walk(k, 0, 1)});
        if (kind == CellKind::lower_triangle || kind == CellKind::triangle_pair)
            out.blues.push_back(1 + 2 * Part{walk(k, 1, 0)});
    }

    for (const auto& [c, used] : consumed) {
        if (!used)
            throw MalformedDiagram("cell " + to_string(c) + " belongs to no part");
    }

    std::ranges::sort(out.greens, std::greater<>{});
    std::ranges::sort(out.blues, std::greater<>{});
    if (auto it = std::ranges::adjacent_find(out.greens); it != out.greens.end())
        throw MalformedDiagram("green part " + std::to_string(*it) + " read twice");
    if (auto it = std::ranges::adjacent_find(out.blues); it != out.blues.end())
        throw MalformedDiagram("blue part " + std::to_string(*it) + " read twice");

    // The parts must also sit where build_diagram would put them.
    const ModularDiagram::CellMap expected = build_diagram(out.greens, out.blues).cells();
    auto a = drawn.begin();
    auto b = expected.begin();
    for (; a != drawn.end() && b != expected.end(); ++a, ++b) {
        if (a->first != b->first || a->second != b->second) {
            const Cell bad = std::min(a->first, b->first);
            throw MalformedDiagram("cell " + to_string(bad) + " is not in canonical position");
        }
    }
    if (a != drawn.end())
        throw MalformedDiagram("cell " + to_string(a->first) + " is not in canonical position");
    if (b != expected.end())
        throw MalformedDiagram("cell " + to_string(b->first) + " is missing");
    return out;
}

} // namespace twocolor
