#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "twocolor/core.hpp"

namespace twocolor {

// Two-modular diagram of the odd parts of a TwoColorPartition.
//
// A green part 2a+1 is a row: an upper triangle on the diagonal cell (k,k)
// followed by a squares at (k,k+1)..(k,k+a). A blue part 2c+1 is a column:
// a lower triangle on (k,k) with c squares at (k+1,k)..(k+c,k). Squares are
// worth 2 and triangles 1.
//
// Anchoring: with s greens and t blues, d = max(s,t), the i-th largest
// green sits on diagonal index d-s+i and the j-th largest blue on d-t+j, so
// the smallest green and smallest blue share the bottom diagonal cell.

enum class CellKind : std::uint8_t {
    square,
    upper_triangle,  // green, above the diagonal line
    lower_triangle,  // blue, below the diagonal line
    triangle_pair,   // both triangles on one cell, diagonal line still drawn
    merged_square,   // both triangles with the diagonal line deleted
};

int cell_value(CellKind k) noexcept;
bool is_all_square(CellKind k) noexcept;
const char* to_string(CellKind k) noexcept;

struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

enum class Orientation : std::uint8_t { row, column };
const char* to_string(Orientation o) noexcept;

enum class StripAction : std::uint8_t { none, removed, inserted, far_edge_inserted };
const char* to_string(StripAction a) noexcept;

// A located all-square line. `position` is 0 when no line qualifies.
struct StripReport {
    Orientation orientation = Orientation::row;
    int length = 0;
    int position = 0;
    StripAction action = StripAction::none;

    friend bool operator==(const StripReport&, const StripReport&) = default;
};

class ModularDiagram {
public:
    using CellMap = std::map<Cell, CellKind>;

    ModularDiagram() = default;
    // Throws MalformedDiagram if a triangle-bearing kind sits off the
    // diagonal or an index is < 1.
    explicit ModularDiagram(CellMap cells);

    const CellMap& cells() const noexcept { return cells_; }
    bool empty() const noexcept { return cells_.empty(); }
    std::optional<CellKind> at(Cell c) const;

    // Largest k with (k,k) occupied; 0 for the empty diagram.
    int diagonal_length() const noexcept;
    int row_count() const noexcept;
    int column_count() const noexcept;

    std::int64_t total_value() const noexcept;
    int lone_triangle_count() const noexcept;

    friend bool operator==(const ModularDiagram&, const ModularDiagram&) = default;

private:
    CellMap cells_;
};

struct ColorParts {
    Parts greens;
    Parts blues;

    friend bool operator==(const ColorParts&, const ColorParts&) = default;
};

// Throws InvalidPartition unless both lists are odd, distinct, descending.
ModularDiagram build_diagram(const Parts& greens, const Parts& blues);

// Every triangle_pair becomes a merged_square.
ModularDiagram merge_adjoined(const ModularDiagram& dia);

// Longest line of the given orientation made only of squares (plain or
// merged). Ties go to the smallest index.
StripReport longest_all_square_strip(const ModularDiagram& dia, Orientation o);

// Deletes line `position` and shifts every later line one step back.
// Throws MalformedDiagram unless the line is nonempty and all-square.
ModularDiagram remove_strip(const ModularDiagram& dia, Orientation o, int position);

// Shifts lines >= position one step forward and fills line `position` with
// num_squares squares starting at index 1.
ModularDiagram insert_strip(const ModularDiagram& dia, Orientation o, int position,
                            int num_squares);

// One past the last occupied line of the given orientation.
int far_edge_position(const ModularDiagram& dia, Orientation o) noexcept;

// Redraws the diagonal and reads the parts back. Any square-valued cell on
// the diagonal splits into an upper and a lower triangle. Throws
// MalformedDiagram (naming a cell) when the cells do not form exactly the
// canonical diagram of the parts read.
ColorParts split_and_read(const ModularDiagram& dia);

enum class RenderFormat : std::uint8_t { ascii, svg };

struct RenderOptions {
    // ascii only: draw with box/triangle glyphs instead of the 7-bit set.
    bool unicode = false;
};

// ASCII: one line per grid row, three characters per cell:
//   "[2]" square or merged square, " \1" upper triangle,
//   "1\ " lower triangle, "1\1" triangle pair, "   " empty.
// Unicode: one glyph per cell, space separated:
//   U+25A0 square, U+25E5 upper, U+25E3 lower, U+29C5 pair, space empty.
// Trailing blanks are trimmed; the empty diagram renders as "".
//
// SVG: 32px cells, one <rect> per square, one <polygon> per triangle, each
// labelled with its value; viewBox covers the occupied grid.
std::string render(const ModularDiagram& dia, RenderFormat format, RenderOptions opts = {});

} // namespace twocolor
