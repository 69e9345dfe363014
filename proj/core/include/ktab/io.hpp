#pragma once

#include <iosfwd>
#include <string>

#include "ktab/irsk.hpp"
#include "ktab/jdt.hpp"
#include "ktab/polyomino.hpp"
#include "ktab/tableau.hpp"
#include "ktab/word.hpp"

namespace ktab {

// ASCII rendering in the layout used throughout: one line per row, inner
// boxes as blanks, entries right-aligned per cell.
std::string render(const SkewTableau& t);
std::string render(const DotState& s);
std::string render(const MoonPolyomino& m);
std::string render(const Filling& f);

// JSON round-trip: {"outer": [...], "inner": [...], "rows": [[...], ...]}.
std::string toJson(const SkewTableau& t);
SkewTableau tableauFromJson(const std::string& json);

std::string toJson(const CorrespondencePair& pair);
std::string toJson(const IrskPair& pair);
std::string toJson(const TwoLineArray& a);

// Board file format: one line per row, "rowIndex colStart colEnd".
MoonPolyomino boardFromStream(std::istream& in);
std::string boardToText(const MoonPolyomino& m);

}  // namespace ktab
