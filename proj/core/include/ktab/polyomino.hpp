#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ktab/jdt.hpp"
#include "ktab/word.hpp"

namespace ktab {

struct RowSpan {
  int row;
  int colStart;
  int colEnd;
  bool operator==(const RowSpan&) const = default;
  auto operator<=>(const RowSpan&) const = default;
};

// Row-interval model of a moon polyomino.  Validation enforces:
//   - every column is a contiguous interval of rows (convexity),
//   - any two row intervals are nested, likewise any two column intervals.
// Boards are normalized so the top row is 1 and the leftmost column is 1.
class MoonPolyomino {
 public:
  // Throws std::invalid_argument with a diagnostic naming the offending
  // pair of rows/columns.
  static MoonPolyomino validate(std::vector<RowSpan> rows);

  int numRows() const { return static_cast<int>(rows_.size()); }
  int numCols() const;
  int cellCount() const;
  const std::vector<RowSpan>& rows() const { return rows_; }
  const RowSpan& rowSpan(int r) const;      // r is 1-based
  bool hasCell(int r, int c) const;
  // Column c as a row interval; throws if the column is empty.
  std::pair<int, int> columnSpan(int c) const;

  bool isStack() const;          // rows left justified
  bool isFerrers() const;        // stack with row lengths weakly decreasing downwards
  bool isFerrersFrench() const;  // stack with the longest rows at the bottom

  std::vector<int> rowLengthMultiset() const;  // sorted descending

  bool operator==(const MoonPolyomino&) const = default;
  auto operator<=>(const MoonPolyomino&) const = default;
  std::string key() const;

 private:
  std::vector<RowSpan> rows_;  // normalized, rows 1..k
};

struct Rect {
  int rowTop, rowBottom, colLeft, colRight;
  int height() const { return rowBottom - rowTop + 1; }
  int width() const { return colRight - colLeft + 1; }
  bool containsBox(int r, int c) const {
    return rowTop <= r && r <= rowBottom && colLeft <= c && c <= colRight;
  }
  bool contains(const Rect& o) const {
    return rowTop <= o.rowTop && o.rowBottom <= rowBottom && colLeft <= o.colLeft &&
           o.colRight <= colRight;
  }
  bool operator==(const Rect&) const = default;
  auto operator<=>(const Rect&) const = default;
};

// All inclusion-maximal axis-aligned rectangles contained in the board.
std::vector<Rect> maximalRectangles(const MoonPolyomino& m);

// A 01-filling with at most one 1 per column; ones are the boxes holding 1.
struct Filling {
  MoonPolyomino board;
  std::set<Box> ones;

  static Filling make(MoonPolyomino board, std::set<Box> ones);  // validates
  bool operator==(const Filling&) const = default;
};

struct ChainStats {
  int ne = 0;
  int se = 0;
  bool operator==(const ChainStats&) const = default;
};

// Longest ne/se chains: max over maximal rectangles of the longest strictly
// monotone sequence of ones inside the rectangle (a chain's bounding
// rectangle lies in M iff the chain fits in some maximal rectangle).
ChainStats chainStats(const Filling& f);
ChainStats chainStatsIn(const Filling& f, const Rect& x);

// N(M; n; ne=u, se=v) via exhaustive enumeration of column assignments.
// Throws BudgetError when the assignment space exceeds the budget.
long countFillings(const MoonPolyomino& m, int n, int u, int v,
                   const SearchBudget& budget = defaultBudget());

// The full table (u,v) -> count for a fixed number of ones, one pass.
std::map<std::pair<int, int>, long> countTable(const MoonPolyomino& m, int n,
                                               const SearchBudget& budget = defaultBudget());

struct BoardMove {
  MoonPolyomino board;                      // the transformed board
  std::vector<std::pair<Rect, Rect>> rectMap;  // same-dimension maximal rectangles
};

// Delete the leftmost column c, add a new column at the right end of the
// largest rectangle R containing c (the rows of R shift right one unit).
BoardMove columnMove(const MoonPolyomino& m);

// Stack-polyomino analogue: delete the bottom row, insert a row of the same
// length above the top of the largest rectangle containing it.
BoardMove rowMove(const MoonPolyomino& m);

enum class MoveDirection { column, row };

// Transport a filling across columnMove/rowMove using the column-shift
// (resp. row-shift) bijection on the word carried by the moved rectangle.
Filling transportFilling(const Filling& f, MoveDirection direction);

struct ReduceStep {
  MoveDirection direction;
  MoonPolyomino before;
};
struct ReduceLog {
  std::vector<ReduceStep> steps;
};

// Column moves until the board is a stack polyomino, then row moves until
// it is a Ferrers board in French notation.
std::pair<MoonPolyomino, ReduceLog> reduceToFerrers(const MoonPolyomino& m);

// Replays the recorded reduction on a filling of the original board.
Filling transportThroughLog(const Filling& f, const ReduceLog& log);

// Every moon polyomino with the given multiset of row lengths, translation
// canonical.  Rows are contiguous; orders and offsets are enumerated and
// filtered through the validator.
std::vector<MoonPolyomino> enumerateMoonBoards(const std::vector<int>& rowLengths);

struct InvarianceReport {
  bool pass = true;
  int arrangements = 0;
  std::string detail;  // first mismatch, empty when pass
  // (n, u, v) -> count, shared by all arrangements when pass holds
  std::map<std::tuple<int, int, int>, long> table;
};

// Enumerate all arrangements of the multiset, compute count tables for all
// n <= nMax, and check that every arrangement agrees cell by cell.
InvarianceReport verifyInvariance(const std::vector<int>& rowMultiset, int nMax,
                                  const SearchBudget& budget = defaultBudget());

}  // namespace ktab
