#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktab/word.hpp"

namespace ktab {

// Matrix coordinates throughout: box (row, col), 1-based, (1,1) top left.
struct Box {
  int row;
  int col;
  bool operator==(const Box&) const = default;
  auto operator<=>(const Box&) const = default;
};

struct Partition {
  std::vector<int> parts;  // strictly positive, weakly decreasing

  Partition() = default;
  explicit Partition(std::vector<int> p);  // drops trailing zeros, validates
  static Partition staircase(int n);       // sigma_n = (n, n-1, ..., 1)

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;          // number of boxes
  int part(int i) const;     // 1-based; 0 beyond the last part
  bool contains(const Partition& inner) const;  // part-wise
  bool containsBox(int r, int c) const;
  Partition conjugated() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
  std::string str() const;
};

struct SkewShape {
  Partition outer;
  Partition inner;  // inner ⊆ outer

  SkewShape() = default;
  SkewShape(Partition out, Partition in);
  int size() const { return outer.size() - inner.size(); }
  bool operator==(const SkewShape&) const = default;
};

// A filling of a skew shape.  Entries are positive; the absence of a box
// encodes both "0" and "infinity" conventions.  Trailing empty rows are
// normalized away so that equality means equality of the box->entry map.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);
  static SkewTableau straightShape(std::vector<std::vector<int>> rows);
  static SkewTableau fromBoxes(const std::map<Box, int>& boxes);

  bool empty() const { return rows_.empty(); }
  int numRows() const { return static_cast<int>(rows_.size()); }
  int numCols() const { return outer_.part(1); }
  int size() const;  // number of boxes
  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  SkewShape shape() const { return SkewShape(outer_, inner_); }
  bool isStraight() const { return inner_.length() == 0; }

  bool hasBox(int r, int c) const;
  int at(int r, int c) const;  // caller must check hasBox
  std::optional<int> entry(int r, int c) const;
  std::map<Box, int> boxes() const;
  void forEachBox(const std::function<void(Box, int)>& fn) const;

  int maxEntry() const;  // 0 when empty
  std::vector<int> entrySetSorted() const;

  bool isIncreasing() const;        // strict along rows and columns
  bool isSemistandard() const;      // weak along rows, strict down columns
  bool isStandardInterval() const;  // entry set is exactly [1, m]

  std::vector<int> column(int c) const;  // entries top to bottom
  SkewTableau conjugated() const;
  Word readingWord() const;  // rows bottom to top, each left to right

  bool operator==(const SkewTableau&) const = default;
  auto operator<=>(const SkewTableau&) const = default;
  std::string key() const;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> rows_;  // rows_[r] covers cols inner[r]+1..outer[r]
};

enum class NamedKind { minimal, column, superstandard, concatenated };

// M_n / I_n / S_n / N_n.
SkewTableau namedTableau(NamedKind kind, int n);
SkewTableau minimalTableau(const Partition& shape);  // box (i,j) holds i+j-1
const SkewTableau& minimalStaircase(int n);          // M_n, cached per n

// Word w of length n as the increasing tableau of shape sigma_n/sigma_{n-1}
// with w_i in box (n+1-i, i).
SkewTableau embedDiagonal(const Word& w);
// Inverse of embedDiagonal; throws if T is not an anti-diagonal tableau.
Word diagonalWord(const SkewTableau& t);

// Move every box (r,c) to (r+1, c-1).  Throws if a box sits in column 1.
SkewTableau shiftedDownLeft(const SkewTableau& t);
// Inverse of shiftedDownLeft.
SkewTableau shiftedUpRight(const SkewTableau& t);
// Move every box one column left (for translation-normalized comparisons).
SkewTableau shiftedLeft(const SkewTableau& t);

// All increasing fillings of outer/inner with entries in [1, maxEntry].
void forEachIncreasing(const Partition& outer, const Partition& inner, int maxEntry,
                       const std::function<void(const SkewTableau&)>& fn);
// All straight increasing fillings whose entries form an interval [1, m].
void forEachStandardIntervalTableau(const Partition& shape,
                                    const std::function<void(const SkewTableau&)>& fn);

}  // namespace ktab
