#include "ktab/tableau.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ktab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition Partition::staircase(int n) {
  std::vector<int> p;
  for (int i = n; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts[static_cast<size_t>(i - 1)];
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool Partition::containsBox(int r, int c) const { return r >= 1 && c >= 1 && c <= part(r); }

Partition Partition::conjugated() const {
  std::vector<int> q;
  for (int c = 1; c <= part(1); ++c) {
    int h = 0;
    while (h < length() && part(h + 1) >= c) ++h;
    q.push_back(h);
  }
  return Partition(std::move(q));
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner)) throw std::invalid_argument("skew shape: inner not inside outer");
}

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("tableau: inner not inside outer");
  if (static_cast<int>(rows_.size()) != outer_.length())
    throw std::invalid_argument("tableau: row count does not match outer shape");
  for (int r = 1; r <= outer_.length(); ++r) {
    int want = outer_.part(r) - inner_.part(r);
    if (static_cast<int>(rows_[static_cast<size_t>(r - 1)].size()) != want)
      throw std::invalid_argument("tableau: row " + std::to_string(r) + " has wrong length");
    for (int e : rows_[static_cast<size_t>(r - 1)])
      if (e < 1) throw std::invalid_argument("tableau entries must be positive");
  }
  // normalize: strip trailing rows with no boxes
  while (!rows_.empty() && rows_.back().empty()) {
    rows_.pop_back();
    std::vector<int> o = outer_.parts;
    o.pop_back();
    outer_ = Partition(std::move(o));
    std::vector<int> in;
    for (int r = 1; r <= outer_.length(); ++r) in.push_back(inner_.part(r));
    inner_ = Partition(std::move(in));
  }
}

SkewTableau SkewTableau::straightShape(std::vector<std::vector<int>> rows) {
  std::vector<int> outer;
  for (const auto& r : rows) outer.push_back(static_cast<int>(r.size()));
  return SkewTableau(Partition(std::move(outer)), Partition(), std::move(rows));
}

SkewTableau SkewTableau::fromBoxes(const std::map<Box, int>& boxes) {
  if (boxes.empty()) return SkewTableau();
  int maxRow = 0;
  for (const auto& [b, e] : boxes) {
    if (b.row < 1 || b.col < 1 || e < 1) throw std::invalid_argument("fromBoxes: bad box");
    maxRow = std::max(maxRow, b.row);
  }
  std::vector<int> lo(static_cast<size_t>(maxRow) + 1, 0);  // first col per row
  std::vector<int> hi(static_cast<size_t>(maxRow) + 1, 0);  // last col per row
  for (const auto& [b, e] : boxes) {
    auto r = static_cast<size_t>(b.row);
    if (lo[r] == 0 || b.col < lo[r]) lo[r] = b.col;
    if (b.col > hi[r]) hi[r] = b.col;
  }
  std::vector<std::vector<int>> rows(static_cast<size_t>(maxRow));
  for (int r = 1; r <= maxRow; ++r) {
    if (lo[static_cast<size_t>(r)] == 0) continue;
    for (int c = lo[static_cast<size_t>(r)]; c <= hi[static_cast<size_t>(r)]; ++c) {
      auto it = boxes.find(Box{r, c});
      if (it == boxes.end()) throw std::invalid_argument("fromBoxes: row not contiguous");
      rows[static_cast<size_t>(r - 1)].push_back(it->second);
    }
  }
  // Profiles: an empty row adopts the outer value of the row below so that
  // both boundary sequences stay weakly decreasing.
  std::vector<int> outer(static_cast<size_t>(maxRow), 0), inner(static_cast<size_t>(maxRow), 0);
  int below = 0;
  for (int r = maxRow; r >= 1; --r) {
    if (lo[static_cast<size_t>(r)] != 0) below = hi[static_cast<size_t>(r)];
    outer[static_cast<size_t>(r - 1)] = below;
  }
  for (int r = 1; r <= maxRow; ++r) {
    auto idx = static_cast<size_t>(r);
    inner[idx - 1] = lo[idx] == 0 ? outer[idx - 1] : lo[idx] - 1;
  }
  Partition op, ip;
  try {
    op = Partition(std::move(outer));
    ip = Partition(std::move(inner));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("fromBoxes: boxes do not form a skew shape");
  }
  if (!op.contains(ip)) throw std::invalid_argument("fromBoxes: boxes do not form a skew shape");
  return SkewTableau(std::move(op), std::move(ip), std::move(rows));
}

int SkewTableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

bool SkewTableau::hasBox(int r, int c) const {
  return r >= 1 && r <= numRows() && c > inner_.part(r) && c <= outer_.part(r);
}

int SkewTableau::at(int r, int c) const {
  return rows_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - inner_.part(r) - 1)];
}

std::optional<int> SkewTableau::entry(int r, int c) const {
  if (!hasBox(r, c)) return std::nullopt;
  return at(r, c);
}

std::map<Box, int> SkewTableau::boxes() const {
  std::map<Box, int> out;
  forEachBox([&](Box b, int e) { out[b] = e; });
  return out;
}

void SkewTableau::forEachBox(const std::function<void(Box, int)>& fn) const {
  for (int r = 1; r <= numRows(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) fn(Box{r, c}, at(r, c));
}

int SkewTableau::maxEntry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int e : row) m = std::max(m, e);
  return m;
}

std::vector<int> SkewTableau::entrySetSorted() const {
  std::vector<int> es;
  for (const auto& row : rows_) es.insert(es.end(), row.begin(), row.end());
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

bool SkewTableau::isIncreasing() const {
  for (int r = 1; r <= numRows(); ++r) {
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) {
      if (hasBox(r, c + 1) && at(r, c + 1) <= at(r, c)) return false;
      if (hasBox(r + 1, c) && at(r + 1, c) <= at(r, c)) return false;
    }
  }
  return true;
}

bool SkewTableau::isSemistandard() const {
  for (int r = 1; r <= numRows(); ++r) {
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) {
      if (hasBox(r, c + 1) && at(r, c + 1) < at(r, c)) return false;
      if (hasBox(r + 1, c) && at(r + 1, c) <= at(r, c)) return false;
    }
  }
  return true;
}

bool SkewTableau::isStandardInterval() const {
  std::vector<int> es = entrySetSorted();
  for (size_t i = 0; i < es.size(); ++i)
    if (es[i] != static_cast<int>(i) + 1) return false;
  return !es.empty();
}

std::vector<int> SkewTableau::column(int c) const {
  std::vector<int> out;
  for (int r = 1; r <= numRows(); ++r)
    if (hasBox(r, c)) out.push_back(at(r, c));
  return out;
}

SkewTableau SkewTableau::conjugated() const {
  std::map<Box, int> flipped;
  forEachBox([&](Box b, int e) { flipped[Box{b.col, b.row}] = e; });
  return fromBoxes(flipped);
}

Word SkewTableau::readingWord() const {
  std::vector<int> letters;
  for (int r = numRows(); r >= 1; --r)
    letters.insert(letters.end(), rows_[static_cast<size_t>(r - 1)].begin(),
                   rows_[static_cast<size_t>(r - 1)].end());
  return Word(std::move(letters));
}

std::string SkewTableau::key() const {
  std::ostringstream out;
  for (int r = 1; r <= numRows(); ++r) {
    out << inner_.part(r) << ':';
    for (int e : rows_[static_cast<size_t>(r - 1)]) out << e << ',';
    out << ';';
  }
  return out.str();
}

SkewTableau minimalTableau(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.length(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= shape.part(r); ++c) row.push_back(r + c - 1);
    rows.push_back(std::move(row));
  }
  return SkewTableau(shape, Partition(), std::move(rows));
}

const SkewTableau& minimalStaircase(int n) {
  static std::mutex mu;
  static std::map<int, SkewTableau> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, minimalTableau(Partition::staircase(n))).first;
  return it->second;
}

SkewTableau namedTableau(NamedKind kind, int n) {
  if (n < 1) throw std::invalid_argument("namedTableau: n must be positive");
  switch (kind) {
    case NamedKind::minimal:
      return minimalStaircase(n);
    case NamedKind::column: {
      std::vector<std::vector<int>> rows;
      for (int r = 1; r <= n; ++r) rows.push_back({r});
      return SkewTableau::straightShape(std::move(rows));
    }
    case NamedKind::superstandard: {
      // row r holds the next sigma_n row of consecutive integers
      std::vector<std::vector<int>> rows;
      int next = 1;
      for (int r = 1; r <= n; ++r) {
        std::vector<int> row;
        for (int c = 0; c < n + 1 - r; ++c) row.push_back(next++);
        rows.push_back(std::move(row));
      }
      return SkewTableau::straightShape(std::move(rows));
    }
    case NamedKind::concatenated: {
      // I_n in column 1, M_{n-1} + n to its right
      std::vector<std::vector<int>> rows;
      for (int r = 1; r <= n; ++r) {
        std::vector<int> row{r};
        for (int c = 1; c <= n - r; ++c) row.push_back(r + c - 1 + n);
        rows.push_back(std::move(row));
      }
      return SkewTableau::straightShape(std::move(rows));
    }
  }
  throw std::invalid_argument("namedTableau: bad kind");
}

SkewTableau embedDiagonal(const Word& w) {
  if (w.empty()) throw std::invalid_argument("embedDiagonal: empty word");
  int n = w.size();
  std::map<Box, int> boxes;
  for (int i = 1; i <= n; ++i) boxes[Box{n + 1 - i, i}] = w[i - 1];
  return SkewTableau::fromBoxes(boxes);
}

Word diagonalWord(const SkewTableau& t) {
  int n = t.size();
  std::vector<int> letters(static_cast<size_t>(n), 0);
  bool ok = t.numRows() == n;
  t.forEachBox([&](Box b, int e) {
    if (b.row + b.col != n + 1)
      ok = false;
    else
      letters[static_cast<size_t>(b.col - 1)] = e;
  });
  if (!ok) throw std::invalid_argument("diagonalWord: not an anti-diagonal tableau");
  return Word(std::move(letters));
}

SkewTableau shiftedDownLeft(const SkewTableau& t) {
  std::map<Box, int> moved;
  bool ok = true;
  t.forEachBox([&](Box b, int e) {
    if (b.col == 1) ok = false;
    moved[Box{b.row + 1, b.col - 1}] = e;
  });
  if (!ok) throw std::invalid_argument("shiftedDownLeft: box in column 1");
  return SkewTableau::fromBoxes(moved);
}

SkewTableau shiftedUpRight(const SkewTableau& t) {
  std::map<Box, int> moved;
  bool ok = true;
  t.forEachBox([&](Box b, int e) {
    if (b.row == 1) ok = false;
    moved[Box{b.row - 1, b.col + 1}] = e;
  });
  if (!ok) throw std::invalid_argument("shiftedUpRight: box in row 1");
  return SkewTableau::fromBoxes(moved);
}

SkewTableau shiftedLeft(const SkewTableau& t) {
  std::map<Box, int> moved;
  bool ok = true;
  t.forEachBox([&](Box b, int e) {
    if (b.col == 1) ok = false;
    moved[Box{b.row, b.col - 1}] = e;
  });
  if (!ok) throw std::invalid_argument("shiftedLeft: box in column 1");
  return SkewTableau::fromBoxes(moved);
}

namespace {

void fillIncreasing(const Partition& outer, const Partition& inner, int maxEntry,
                    std::map<Box, int>& partial, std::vector<Box>& order, size_t idx,
                    const std::function<void(const SkewTableau&)>& fn) {
  if (idx == order.size()) {
    fn(SkewTableau::fromBoxes(partial));
    return;
  }
  Box b = order[idx];
  int lo = 1;
  auto left = partial.find(Box{b.row, b.col - 1});
  if (left != partial.end()) lo = std::max(lo, left->second + 1);
  auto up = partial.find(Box{b.row - 1, b.col});
  if (up != partial.end()) lo = std::max(lo, up->second + 1);
  for (int e = lo; e <= maxEntry; ++e) {
    partial[b] = e;
    fillIncreasing(outer, inner, maxEntry, partial, order, idx + 1, fn);
    partial.erase(b);
  }
}

}  // namespace

void forEachIncreasing(const Partition& outer, const Partition& inner, int maxEntry,
                       const std::function<void(const SkewTableau&)>& fn) {
  if (!outer.contains(inner)) throw std::invalid_argument("forEachIncreasing: bad shape");
  std::vector<Box> order;  // row-major: left/up neighbors precede each box
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) order.push_back(Box{r, c});
  if (order.empty()) {
    fn(SkewTableau());
    return;
  }
  std::map<Box, int> partial;
  fillIncreasing(outer, inner, maxEntry, partial, order, 0, fn);
}

void forEachStandardIntervalTableau(const Partition& shape,
                                    const std::function<void(const SkewTableau&)>& fn) {
  forEachIncreasing(shape, Partition(), shape.size(), [&](const SkewTableau& t) {
    if (t.isStandardInterval()) fn(t);
  });
}

}  // namespace ktab
