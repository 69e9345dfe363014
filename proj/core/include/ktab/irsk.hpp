#pragma once

#include <optional>
#include <vector>

#include "ktab/tableau.hpp"
#include "ktab/word.hpp"

namespace ktab {

// Single-row insertion: replace the leftmost entry larger than a, or append.
struct RowInsertResult {
  std::vector<int> row;
  std::optional<int> bumped;
};
RowInsertResult rowInsert(std::vector<int> row, int a);

// Insert the letters of a word left to right; collects every bumped letter
// in bump order.
struct RowWordInsertResult {
  std::vector<int> row;
  std::vector<int> bumped;
};
RowWordInsertResult rowInsertWord(std::vector<int> row, const std::vector<int>& letters);

// Bookkeeping from one i-insertion: per row, the inflated word that was
// inserted and the multiset of letters it bumped.
struct IInsertRecord {
  std::vector<std::vector<int>> inserted;
  std::vector<std::vector<int>> bumped;
};

// i-insertion: inflate each bumped set so that the rightmost new copy of a
// value lands in the column of that value's leftmost occurrence in the row
// above (before the update), then insert row by row until nothing bumps.
SkewTableau iInsert(const SkewTableau& p, int a, IInsertRecord* record = nullptr);

struct IrskPair {
  SkewTableau p;
  SkewTableau q;
  bool operator==(const IrskPair&) const = default;
};

// iRSK: iterated i-insertion; Q records the shape growth, entry j on every
// box added at step j.
IrskPair irsk(const Word& w, std::vector<IrskPair>* steps = nullptr,
              std::vector<IInsertRecord>* records = nullptr);

// Classical RSK on two-line arrays (row insertion of values, indices into Q).
struct RskPair {
  SkewTableau p;
  SkewTableau q;
  bool operator==(const RskPair&) const = default;
};
RskPair rsk(const TwoLineArray& a);
RskPair rsk(const Word& w);
// Exact inverse; throws std::invalid_argument on an incompatible pair.
TwoLineArray rskInverse(const RskPair& pair);

enum class InsertionVariant { rsk, irsk };

// bumped[0] is the array of w itself; bumped[i] collects the letters bumped
// from row i, indexed by the insertion step.
std::vector<TwoLineArray> bumpedArrays(const Word& w, InsertionVariant variant);

// The inflated companions A_i^+ of the bumped arrays of the irsk variant:
// values are the inflated insertion words recorded during each i-insertion.
std::vector<TwoLineArray> inflatedBumpedArrays(const Word& w);

// f(A) = (B, p, q): p,q the top rows of RSK(A), B the inverse image of the
// row-deleted pair.
struct FTriple {
  TwoLineArray b;
  std::vector<int> p;
  std::vector<int> q;
  bool operator==(const FTriple&) const = default;
};
FTriple fTriple(const TwoLineArray& a);

// Per-column comparison of the insertion tableau with the rectification
// trace, plus the column-count identity against M(w).
struct ColumnTraceReport {
  bool pass = true;
  std::string detail;  // first failing check, empty when pass
};
ColumnTraceReport columnTraceCheck(const Word& w);

}  // namespace ktab
