#include "ktab/polyomino.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ktab/shifts.hpp"

namespace ktab {

namespace {

bool nested(int a1, int b1, int a2, int b2) {
  return (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2);
}

}  // namespace

MoonPolyomino MoonPolyomino::validate(std::vector<RowSpan> rows) {
  if (rows.empty()) throw std::invalid_argument("board: no rows");
  std::sort(rows.begin(), rows.end());
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].row == rows[i + 1].row)
      throw std::invalid_argument("board: duplicate row index " + std::to_string(rows[i].row));
  for (const RowSpan& r : rows)
    if (r.colStart > r.colEnd)
      throw std::invalid_argument("board: empty row " + std::to_string(r.row));
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1].row != rows[i].row + 1)
      throw std::invalid_argument("board: rows " + std::to_string(rows[i].row) + " and " +
                                  std::to_string(rows[i + 1].row) +
                                  " are not vertically contiguous");
  // translation-normalize
  int rowBase = rows.front().row - 1;
  int colBase = rows.front().colStart;
  for (const RowSpan& r : rows) colBase = std::min(colBase, r.colStart);
  --colBase;
  for (RowSpan& r : rows) {
    r.row -= rowBase;
    r.colStart -= colBase;
    r.colEnd -= colBase;
  }
  // row comparability
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (!nested(rows[i].colStart, rows[i].colEnd, rows[j].colStart, rows[j].colEnd))
        throw std::invalid_argument("board: rows " + std::to_string(rows[i].row) + " and " +
                                    std::to_string(rows[j].row) + " are not nested");
  MoonPolyomino m;
  m.rows_ = std::move(rows);
  // column convexity and comparability
  int nc = m.numCols();
  std::vector<std::pair<int, int>> colSpans;
  for (int c = 1; c <= nc; ++c) {
    int first = 0, last = 0;
    for (int r = 1; r <= m.numRows(); ++r) {
      if (!m.hasCell(r, c)) continue;
      if (first == 0) first = r;
      if (first != 0 && last != 0 && r != last + 1)
        throw std::invalid_argument("board: column " + std::to_string(c) + " is not contiguous");
      last = r;
    }
    if (first != 0) colSpans.push_back({first, last});
  }
  for (size_t i = 0; i < colSpans.size(); ++i)
    for (size_t j = i + 1; j < colSpans.size(); ++j)
      if (!nested(colSpans[i].first, colSpans[i].second, colSpans[j].first, colSpans[j].second))
        throw std::invalid_argument("board: columns " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " are not nested");
  return m;
}

int MoonPolyomino::numCols() const {
  int m = 0;
  for (const RowSpan& r : rows_) m = std::max(m, r.colEnd);
  return m;
}

int MoonPolyomino::cellCount() const {
  int s = 0;
  for (const RowSpan& r : rows_) s += r.colEnd - r.colStart + 1;
  return s;
}

const RowSpan& MoonPolyomino::rowSpan(int r) const {
  if (r < 1 || r > numRows()) throw std::invalid_argument("rowSpan: bad row");
  return rows_[static_cast<size_t>(r - 1)];
}

bool MoonPolyomino::hasCell(int r, int c) const {
  if (r < 1 || r > numRows()) return false;
  const RowSpan& span = rows_[static_cast<size_t>(r - 1)];
  return span.colStart <= c && c <= span.colEnd;
}

std::pair<int, int> MoonPolyomino::columnSpan(int c) const {
  int first = 0, last = 0;
  for (int r = 1; r <= numRows(); ++r) {
    if (!hasCell(r, c)) continue;
    if (first == 0) first = r;
    last = r;
  }
  if (first == 0) throw std::invalid_argument("columnSpan: empty column");
  return {first, last};
}

bool MoonPolyomino::isStack() const {
  for (const RowSpan& r : rows_)
    if (r.colStart != rows_.front().colStart) return false;
  return true;
}

bool MoonPolyomino::isFerrers() const {
  if (!isStack()) return false;
  for (size_t i = 0; i + 1 < rows_.size(); ++i)
    if (rows_[i + 1].colEnd > rows_[i].colEnd) return false;
  return true;
}

bool MoonPolyomino::isFerrersFrench() const {
  if (!isStack()) return false;
  for (size_t i = 0; i + 1 < rows_.size(); ++i)
    if (rows_[i + 1].colEnd < rows_[i].colEnd) return false;
  return true;
}

std::vector<int> MoonPolyomino::rowLengthMultiset() const {
  std::vector<int> lens;
  for (const RowSpan& r : rows_) lens.push_back(r.colEnd - r.colStart + 1);
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string MoonPolyomino::key() const {
  std::ostringstream out;
  for (const RowSpan& r : rows_) out << r.colStart << '-' << r.colEnd << ';';
  return out.str();
}

std::vector<Rect> maximalRectangles(const MoonPolyomino& m) {
  // every maximal rectangle is band(I) x I for a distinct row-interval value I
  std::vector<std::pair<int, int>> intervals;
  for (const RowSpan& r : m.rows()) intervals.push_back({r.colStart, r.colEnd});
  std::sort(intervals.begin(), intervals.end());
  intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());
  std::vector<Rect> out;
  for (auto [c1, c2] : intervals) {
    int top = 0, bottom = 0;
    int meetC1 = 0, meetC2 = 0;
    for (int r = 1; r <= m.numRows(); ++r) {
      const RowSpan& span = m.rowSpan(r);
      if (span.colStart <= c1 && c2 <= span.colEnd) {
        if (top == 0) {
          top = r;
          meetC1 = span.colStart;
          meetC2 = span.colEnd;
        }
        bottom = r;
        meetC1 = std::max(meetC1, span.colStart);
        meetC2 = std::min(meetC2, span.colEnd);
      }
    }
    // maximal iff the interval is exactly the meet of its band
    if (meetC1 == c1 && meetC2 == c2) out.push_back(Rect{top, bottom, c1, c2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Filling Filling::make(MoonPolyomino board, std::set<Box> ones) {
  std::set<int> seenCols;
  for (const Box& b : ones) {
    if (!board.hasCell(b.row, b.col))
      throw std::invalid_argument("filling: a 1 lies outside the board");
    if (!seenCols.insert(b.col).second)
      throw std::invalid_argument("filling: column " + std::to_string(b.col) +
                                  " holds more than one 1");
  }
  return Filling{std::move(board), std::move(ones)};
}

ChainStats chainStatsIn(const Filling& f, const Rect& x) {
  // ones inside x, one per column, read left to right with letters counted
  // from the bottom of x: ne chains are strictly increasing subsequences
  std::vector<int> letters;
  for (const Box& b : f.ones)
    if (x.containsBox(b.row, b.col)) letters.push_back(x.rowBottom - b.row + 1);
  if (letters.empty()) return ChainStats{};
  SubseqLengths s = extremeSubseqLengths(Word(std::move(letters)));
  return ChainStats{s.lis, s.lds};
}

ChainStats chainStats(const Filling& f) {
  ChainStats best;
  for (const Rect& x : maximalRectangles(f.board)) {
    ChainStats s = chainStatsIn(f, x);
    best.ne = std::max(best.ne, s.ne);
    best.se = std::max(best.se, s.se);
  }
  return best;
}

namespace {

// Visit every filling with at most one 1 per column.  choice[c-1]: 0 for an
// empty column, otherwise the row of its 1.
void forEachFilling(const MoonPolyomino& m, const std::function<void(const Filling&)>& fn,
                    const SearchBudget& budget) {
  int nc = m.numCols();
  double states = 1;
  std::vector<std::pair<int, int>> spans;
  for (int c = 1; c <= nc; ++c) {
    auto span = m.columnSpan(c);
    spans.push_back(span);
    states *= span.second - span.first + 2;
    if (states > static_cast<double>(budget.maxStates))
      throw BudgetError("filling enumeration exceeds the state budget");
  }
  std::vector<int> choice(static_cast<size_t>(nc), 0);
  std::set<Box> ones;
  std::function<void(int)> rec = [&](int c) {
    if (c > nc) {
      fn(Filling{m, ones});
      return;
    }
    rec(c + 1);  // column empty
    for (int r = spans[static_cast<size_t>(c - 1)].first;
         r <= spans[static_cast<size_t>(c - 1)].second; ++r) {
      auto it = ones.insert(Box{r, c}).first;
      rec(c + 1);
      ones.erase(it);
    }
  };
  rec(1);
}

}  // namespace

std::map<std::pair<int, int>, long> countTable(const MoonPolyomino& m, int n,
                                               const SearchBudget& budget) {
  std::map<std::pair<int, int>, long> table;
  forEachFilling(
      m,
      [&](const Filling& f) {
        if (static_cast<int>(f.ones.size()) != n) return;
        ChainStats s = chainStats(f);
        ++table[{s.ne, s.se}];
      },
      budget);
  return table;
}

long countFillings(const MoonPolyomino& m, int n, int u, int v, const SearchBudget& budget) {
  auto table = countTable(m, n, budget);
  auto it = table.find({u, v});
  return it == table.end() ? 0 : it->second;
}

namespace {

// The largest rectangle containing the leftmost column: its rows are exactly
// the rows starting at column 1, its width the shortest such row.
Rect leftColumnRectangle(const MoonPolyomino& m) {
  int top = 0, bottom = 0, width = 0;
  for (int r = 1; r <= m.numRows(); ++r) {
    const RowSpan& span = m.rowSpan(r);
    if (span.colStart != 1) continue;
    if (top == 0) {
      top = r;
      width = span.colEnd;
    }
    bottom = r;
    width = std::min(width, span.colEnd);
  }
  return Rect{top, bottom, 1, width};
}

std::vector<std::pair<Rect, Rect>> matchRectangles(const MoonPolyomino& before,
                                                   const MoonPolyomino& after) {
  std::vector<Rect> a = maximalRectangles(before);
  std::vector<Rect> b = maximalRectangles(after);
  if (a.size() != b.size()) throw std::logic_error("board move changed the rectangle count");
  std::vector<std::pair<Rect, Rect>> out;
  for (const Rect& x : a) {
    const Rect* match = nullptr;
    for (const Rect& y : b)
      if (y.height() == x.height() && y.width() == x.width()) {
        if (match) throw std::logic_error("ambiguous rectangle correspondence");
        match = &y;
      }
    if (!match) throw std::logic_error("no same-dimension rectangle after the move");
    out.push_back({x, *match});
  }
  return out;
}

}  // namespace

BoardMove columnMove(const MoonPolyomino& m) {
  Rect r = leftColumnRectangle(m);
  std::vector<RowSpan> rows;
  for (int i = 1; i <= m.numRows(); ++i) {
    RowSpan span = m.rowSpan(i);
    if (r.rowTop <= i && i <= r.rowBottom) {
      ++span.colStart;
      ++span.colEnd;
    }
    rows.push_back(span);
  }
  MoonPolyomino moved = MoonPolyomino::validate(std::move(rows));
  BoardMove out{moved, matchRectangles(m, moved)};
  return out;
}

namespace {

// The largest rectangle containing the bottom row of a stack polyomino.
Rect bottomRowRectangle(const MoonPolyomino& m) {
  const RowSpan& bottom = m.rowSpan(m.numRows());
  int top = m.numRows();
  for (int r = m.numRows(); r >= 1; --r) {
    const RowSpan& span = m.rowSpan(r);
    if (span.colStart <= bottom.colStart && bottom.colEnd <= span.colEnd)
      top = r;
    else
      break;
  }
  return Rect{top, m.numRows(), bottom.colStart, bottom.colEnd};
}

}  // namespace

BoardMove rowMove(const MoonPolyomino& m) {
  if (!m.isStack()) throw std::invalid_argument("rowMove: board is not a stack polyomino");
  Rect r = bottomRowRectangle(m);
  const RowSpan bottom = m.rowSpan(m.numRows());
  std::vector<RowSpan> rows;
  for (int i = 1; i < r.rowTop; ++i) rows.push_back(m.rowSpan(i));
  rows.push_back(RowSpan{r.rowTop, bottom.colStart, bottom.colEnd});  // the new row
  for (int i = r.rowTop; i < m.numRows(); ++i) {
    RowSpan span = m.rowSpan(i);
    span.row = i + 1;
    rows.push_back(span);
  }
  MoonPolyomino moved = MoonPolyomino::validate(std::move(rows));
  BoardMove out{moved, matchRectangles(m, moved)};
  return out;
}

namespace {

std::vector<int> sortedValues(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

Filling transportFilling(const Filling& f, MoveDirection direction) {
  const MoonPolyomino& m = f.board;
  if (direction == MoveDirection::column) {
    Rect r = leftColumnRectangle(m);
    BoardMove move = columnMove(m);
    std::set<Box> ones;
    std::set<int> usedCols, usedRows;
    bool leftNonEmpty = false;
    for (const Box& b : f.ones) {
      if (r.containsBox(b.row, b.col)) {
        usedCols.insert(b.col);
        usedRows.insert(b.row);
        if (b.col == 1) leftNonEmpty = true;
      } else {
        ones.insert(b);  // outside R: unchanged
      }
    }
    if (!leftNonEmpty) {
      // deleted column empty: the filling of R keeps its absolute boxes
      for (const Box& b : f.ones)
        if (r.containsBox(b.row, b.col)) ones.insert(b);
      return Filling::make(move.board, std::move(ones));
    }
    // word of R's filling: nonempty columns left to right, letters counted
    // from the bottom among the nonempty rows
    std::vector<int> cols = sortedValues(usedCols);
    std::vector<int> rowsBottomUp = sortedValues(usedRows);
    std::reverse(rowsBottomUp.begin(), rowsBottomUp.end());
    std::map<int, int> rowToLetter;
    for (size_t i = 0; i < rowsBottomUp.size(); ++i)
      rowToLetter[rowsBottomUp[i]] = static_cast<int>(i) + 1;
    std::vector<int> letters;
    for (int c : cols) {
      for (const Box& b : f.ones)
        if (b.col == c && r.containsBox(b.row, b.col)) letters.push_back(rowToLetter.at(b.row));
    }
    Word shifted = colShift(Word(std::move(letters)));
    // place the new word in the old nonempty columns minus c, plus the new
    // rightmost column of R'
    std::vector<int> newCols(cols.begin() + 1, cols.end());
    newCols.push_back(r.colRight + 1);
    for (size_t i = 0; i < newCols.size(); ++i) {
      int letter = shifted[static_cast<int>(i)];
      ones.insert(Box{rowsBottomUp[static_cast<size_t>(letter - 1)], newCols[i]});
    }
    return Filling::make(move.board, std::move(ones));
  }

  // row direction
  Rect r = bottomRowRectangle(m);
  BoardMove move = rowMove(m);
  int bottomRow = m.numRows();
  auto shiftRow = [&](int row) { return row >= r.rowTop ? row + 1 : row; };
  std::set<Box> ones;
  std::set<int> usedCols, usedRows;
  bool bottomNonEmpty = false;
  for (const Box& b : f.ones) {
    if (r.containsBox(b.row, b.col)) {
      usedCols.insert(b.col);
      usedRows.insert(b.row);
      if (b.row == bottomRow) bottomNonEmpty = true;
    } else {
      ones.insert(b);
    }
  }
  if (!bottomNonEmpty) {
    for (const Box& b : f.ones)
      if (r.containsBox(b.row, b.col)) ones.insert(Box{shiftRow(b.row), b.col});
    return Filling::make(move.board, std::move(ones));
  }
  std::vector<int> cols = sortedValues(usedCols);
  std::vector<int> rowsBottomUp = sortedValues(usedRows);
  std::reverse(rowsBottomUp.begin(), rowsBottomUp.end());
  std::map<int, int> rowToLetter;
  for (size_t i = 0; i < rowsBottomUp.size(); ++i)
    rowToLetter[rowsBottomUp[i]] = static_cast<int>(i) + 1;
  std::vector<int> letters;
  for (int c : cols) {
    for (const Box& b : f.ones)
      if (b.col == c && r.containsBox(b.row, b.col)) letters.push_back(rowToLetter.at(b.row));
  }
  Word shifted = rowShift(Word(std::move(letters)));
  // same columns; the 1s move to the surviving nonempty rows plus the new
  // top row of R', smallest letter lowest
  std::vector<int> newRowsBottomUp;
  for (int row : rowsBottomUp)
    if (row != bottomRow) newRowsBottomUp.push_back(shiftRow(row));
  newRowsBottomUp.push_back(r.rowTop);  // the inserted row, topmost of R'
  for (size_t i = 0; i < cols.size(); ++i) {
    int letter = shifted[static_cast<int>(i)];
    ones.insert(Box{newRowsBottomUp[static_cast<size_t>(letter - 1)], cols[i]});
  }
  return Filling::make(move.board, std::move(ones));
}

std::pair<MoonPolyomino, ReduceLog> reduceToFerrers(const MoonPolyomino& m) {
  MoonPolyomino cur = m;
  ReduceLog log;
  while (!cur.isStack()) {
    log.steps.push_back({MoveDirection::column, cur});
    cur = columnMove(cur).board;
  }
  while (!cur.isFerrersFrench()) {
    log.steps.push_back({MoveDirection::row, cur});
    cur = rowMove(cur).board;
  }
  return {cur, log};
}

Filling transportThroughLog(const Filling& f, const ReduceLog& log) {
  Filling cur = f;
  for (const ReduceStep& step : log.steps) {
    if (!(cur.board == step.before))
      throw std::invalid_argument("transportThroughLog: filling does not match the log");
    cur = transportFilling(cur, step.direction);
  }
  return cur;
}

std::vector<MoonPolyomino> enumerateMoonBoards(const std::vector<int>& rowLengths) {
  if (rowLengths.empty()) throw std::invalid_argument("enumerateMoonBoards: no rows");
  std::vector<int> lens = rowLengths;
  std::sort(lens.begin(), lens.end());
  int maxLen = lens.back();
  std::vector<MoonPolyomino> out;
  std::set<std::string> seen;
  do {
    // offsets for each row within [1, maxLen]
    std::vector<int> offset(lens.size(), 1);
    for (;;) {
      int minStart = *std::min_element(offset.begin(), offset.end());
      if (minStart == 1) {
        std::vector<RowSpan> rows;
        for (size_t i = 0; i < lens.size(); ++i)
          rows.push_back(RowSpan{static_cast<int>(i) + 1, offset[i], offset[i] + lens[i] - 1});
        try {
          MoonPolyomino m = MoonPolyomino::validate(std::move(rows));
          if (seen.insert(m.key()).second) out.push_back(std::move(m));
        } catch (const std::invalid_argument&) {
        }
      }
      size_t i = 0;
      while (i < offset.size() && offset[i] + lens[i] - 1 >= maxLen) {
        offset[i] = 1;
        ++i;
      }
      if (i == offset.size()) break;
      ++offset[i];
    }
  } while (std::next_permutation(lens.begin(), lens.end()));
  std::sort(out.begin(), out.end());
  return out;
}

InvarianceReport verifyInvariance(const std::vector<int>& rowMultiset, int nMax,
                                  const SearchBudget& budget) {
  InvarianceReport report;
  std::vector<MoonPolyomino> boards = enumerateMoonBoards(rowMultiset);
  report.arrangements = static_cast<int>(boards.size());
  bool first = true;
  for (const MoonPolyomino& board : boards) {
    std::map<std::tuple<int, int, int>, long> table;
    for (int n = 0; n <= nMax; ++n)
      for (auto [uv, count] : countTable(board, n, budget))
        table[{n, uv.first, uv.second}] = count;
    if (first) {
      report.table = std::move(table);
      first = false;
    } else if (table != report.table) {
      report.pass = false;
      report.detail = "count tables differ between arrangements";
      return report;
    }
  }
  return report;
}

}  // namespace ktab
