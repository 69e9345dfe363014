#include "ktab/jdt.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ktab {

SearchBudget defaultBudget() {
  SearchBudget b;
  if (const char* env = std::getenv("KTAB_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.maxStates = v;
  }
  return b;
}

std::vector<Box> innerCornersOf(const SkewTableau& t) {
  const Partition& in = t.inner();
  std::vector<Box> out;
  for (int r = 1; r <= in.length(); ++r) {
    int c = in.part(r);
    if (c > 0 && in.part(r + 1) < c) out.push_back(Box{r, c});
  }
  return out;
}

std::vector<Box> outerCornersOf(const SkewTableau& t) {
  const Partition& out = t.outer();
  std::vector<Box> corners;
  for (int r = 1; r <= out.length() + 1; ++r) {
    int c = out.part(r) + 1;
    if (r == 1 || out.part(r - 1) >= c) corners.push_back(Box{r, c});
  }
  return corners;
}

namespace {

constexpr int kDot = -1;

// Dense working grid for the swap cascades.  Cell values: 0 absent, -1 dot,
// positive entry.
class Grid {
 public:
  Grid(int nRows, int nCols) : nRows_(nRows), nCols_(nCols) {
    cells_.assign(static_cast<size_t>(nRows + 2) * (nCols + 2), 0);
  }
  int get(int r, int c) const {
    if (r < 1 || r > nRows_ || c < 1 || c > nCols_) return 0;
    return cells_[idx(r, c)];
  }
  void set(int r, int c, int v) { cells_[idx(r, c)] = v; }
  int numRows() const { return nRows_; }
  int numCols() const { return nCols_; }

  DotState snapshot() const {
    DotState s;
    for (int r = 1; r <= nRows_; ++r)
      for (int c = 1; c <= nCols_; ++c) {
        int v = get(r, c);
        if (v == kDot)
          s.dots.insert(Box{r, c});
        else if (v > 0)
          s.entries[Box{r, c}] = v;
      }
    return s;
  }

  SkewTableau toTableau() const {
    std::map<Box, int> boxes;
    for (int r = 1; r <= nRows_; ++r)
      for (int c = 1; c <= nCols_; ++c) {
        int v = get(r, c);
        if (v == kDot) throw std::logic_error("cascade left a dot behind");
        if (v > 0) boxes[Box{r, c}] = v;
      }
    return SkewTableau::fromBoxes(boxes);
  }

  std::vector<Box> dots() const {
    std::vector<Box> out;
    for (int r = 1; r <= nRows_; ++r)
      for (int c = 1; c <= nCols_; ++c)
        if (get(r, c) == kDot) out.push_back(Box{r, c});
    return out;
  }

 private:
  size_t idx(int r, int c) const {
    return static_cast<size_t>(r) * (nCols_ + 2) + static_cast<size_t>(c);
  }
  int nRows_, nCols_;
  std::vector<int> cells_;
};

Grid gridOf(const SkewTableau& t, int extraRows = 0, int extraCols = 0) {
  Grid g(t.numRows() + extraRows, t.numCols() + extraCols);
  t.forEachBox([&](Box b, int e) { g.set(b.row, b.col, e); });
  return g;
}

// Dot positions are validated against the boxes actually present: a forward
// dot must sit strictly northwest of the filling (no entry weakly NW of it),
// a reverse dot strictly southeast.  This matches the inner/outer corner
// conditions on well-formed shapes and stays meaningful for tableaux whose
// empty rows make the boundary profile ambiguous.
bool validForwardDot(const SkewTableau& t, Box b) {
  if (b.row < 1 || b.col < 1 || b.row > t.numRows() || b.col > t.numCols()) return false;
  if (t.entry(b.row, b.col)) return false;
  bool clear = true;
  t.forEachBox([&](Box e, int) {
    if (e.row <= b.row && e.col <= b.col) clear = false;
  });
  return clear;
}

bool validReverseDot(const SkewTableau& t, Box b) {
  if (b.row < 1 || b.col < 1 || b.row > t.numRows() + 1 || b.col > t.numCols() + 1) return false;
  if (t.entry(b.row, b.col)) return false;
  bool clear = true;
  t.forEachBox([&](Box e, int) {
    if (e.row >= b.row && e.col >= b.col) clear = false;
  });
  return clear;
}

// One simultaneous pass for value v.  Forward: dots consume entries to their
// right/below; reverse: dots consume entries to their left/above.
bool swapPass(Grid& g, int v, bool forward) {
  std::vector<Box> dotsToFill, entriesToDot;
  int dr = forward ? 1 : -1;
  for (int r = 1; r <= g.numRows(); ++r) {
    for (int c = 1; c <= g.numCols(); ++c) {
      int cell = g.get(r, c);
      if (cell == kDot) {
        if (g.get(r + dr, c) == v || g.get(r, c + dr) == v) dotsToFill.push_back(Box{r, c});
      } else if (cell == v) {
        if (g.get(r - dr, c) == kDot || g.get(r, c - dr) == kDot) entriesToDot.push_back(Box{r, c});
      }
    }
  }
  for (Box b : dotsToFill) g.set(b.row, b.col, v);
  for (Box b : entriesToDot) g.set(b.row, b.col, kDot);
  return !dotsToFill.empty();
}

JdtResult runCascade(const SkewTableau& t, const std::vector<Box>& dots, bool forward,
                     std::vector<DotState>* trace) {
  for (size_t i = 0; i < dots.size(); ++i)
    for (size_t j = i + 1; j < dots.size(); ++j)
      if ((dots[i].row <= dots[j].row && dots[i].col <= dots[j].col) ||
          (dots[j].row <= dots[i].row && dots[j].col <= dots[i].col))
        throw std::invalid_argument("jdt: dot positions must be incomparable");
  Grid g = forward ? gridOf(t) : gridOf(t, 1, 1);
  for (Box b : dots) {
    if (forward ? !validForwardDot(t, b) : !validReverseDot(t, b))
      throw std::invalid_argument(forward ? "fjdt: box is not an inner corner"
                                          : "rjdt: box is not an outer corner");
    g.set(b.row, b.col, kDot);
  }
  if (trace) trace->push_back(g.snapshot());
  int maxV = t.maxEntry();
  if (forward) {
    for (int v = 1; v <= maxV; ++v) {
      swapPass(g, v, true);
      if (trace) trace->push_back(g.snapshot());
    }
  } else {
    for (int v = maxV; v >= 1; --v) {
      swapPass(g, v, false);
      if (trace) trace->push_back(g.snapshot());
    }
  }
  JdtResult res;
  res.exitDots = g.dots();
  for (Box b : res.exitDots) g.set(b.row, b.col, 0);
  res.tableau = g.toTableau();
  if (!res.tableau.isIncreasing())
    throw std::logic_error("jeu de taquin produced a non-increasing tableau");
  return res;
}

std::vector<std::vector<Box>> valueClasses(const SkewTableau& t) {
  std::vector<std::vector<Box>> classes(static_cast<size_t>(t.maxEntry()) + 1);
  t.forEachBox([&](Box b, int e) { classes[static_cast<size_t>(e)].push_back(b); });
  return classes;
}

}  // namespace

JdtResult fjdtStep(const SkewTableau& t, const std::vector<Box>& dots,
                   std::vector<DotState>* trace) {
  return runCascade(t, dots, true, trace);
}

JdtResult rjdtStep(const SkewTableau& s, const std::vector<Box>& dots,
                   std::vector<DotState>* trace) {
  return runCascade(s, dots, false, trace);
}

namespace {

// The inner boundary of U must agree with sh(T) on every row where U has a
// box; rows that U leaves empty carry no boundary information.
void requireNestedShapes(const SkewTableau& t, const SkewTableau& u, const char* who) {
  if (!t.isStraight()) throw std::invalid_argument(std::string(who) + ": T must be straight");
  for (int r = 1; r <= u.numRows(); ++r) {
    if (u.inner().part(r) >= u.outer().part(r)) continue;  // empty row
    if (u.inner().part(r) != t.outer().part(r))
      throw std::invalid_argument(std::string(who) + ": U does not sit on the boundary of T");
  }
}

}  // namespace

SkewTableau rectify(const SkewTableau& t, const SkewTableau& u) {
  requireNestedShapes(t, u, "rectify");
  if (u.empty()) return u;
  auto classes = valueClasses(t);
  SkewTableau cur = u;
  for (int v = static_cast<int>(classes.size()) - 1; v >= 1; --v) {
    if (classes[static_cast<size_t>(v)].empty()) continue;
    cur = fjdtStep(cur, classes[static_cast<size_t>(v)]).tableau;
  }
  return cur;
}

SkewTableau reverseRectify(const SkewTableau& u, const SkewTableau& t) {
  auto classes = valueClasses(u);
  SkewTableau cur = t;
  for (size_t v = 1; v < classes.size(); ++v) {
    if (classes[v].empty()) continue;
    cur = rjdtStep(cur, classes[v]).tableau;
  }
  return cur;
}

std::pair<SkewTableau, SkewTableau> infusion(const SkewTableau& t, const SkewTableau& u) {
  requireNestedShapes(t, u, "infusion");
  if (u.empty()) return {SkewTableau(), t};
  auto classes = valueClasses(t);
  SkewTableau cur = u;
  std::map<Box, int> second;
  for (int v = static_cast<int>(classes.size()) - 1; v >= 1; --v) {
    if (classes[static_cast<size_t>(v)].empty()) continue;
    JdtResult step = fjdtStep(cur, classes[static_cast<size_t>(v)]);
    cur = step.tableau;
    for (Box b : step.exitDots) second[b] = v;
  }
  return {cur, SkewTableau::fromBoxes(second)};
}

CorrespondencePair correspondenceWith(const SkewTableau& seedTableau, const Word& w) {
  if (w.empty()) throw std::invalid_argument("correspondence: empty word");
  int n = w.size();
  if (seedTableau.outer() != Partition::staircase(n - 1))
    throw std::invalid_argument("correspondence: seed must have staircase shape");
  auto [wTab, mTab] = infusion(seedTableau, embedDiagonal(w));
  if (!wTab.isStraight()) throw std::logic_error("correspondence: W is not straight");
  return CorrespondencePair{wTab, mTab};
}

namespace {

SkewTableau seedTableauFor(Seed seed, int n) {
  if (n <= 1) return SkewTableau();
  return seed == Seed::minimal ? minimalStaircase(n - 1)
                               : namedTableau(NamedKind::superstandard, n - 1);
}

}  // namespace

CorrespondencePair correspondence(const Word& w, Seed seed) {
  return correspondenceWith(seedTableauFor(seed, w.size()), w);
}

Word correspondenceInverse(const CorrespondencePair& pair, Seed seed) {
  int total = pair.w.size() + pair.m.size();
  // |sigma_n| = n(n+1)/2
  int n = 0;
  while (n * (n + 1) / 2 < total) ++n;
  if (n * (n + 1) / 2 != total)
    throw std::invalid_argument("correspondenceInverse: sizes do not tile a staircase");
  auto [seedBack, diag] = infusion(pair.w, pair.m);
  if (seedBack != seedTableauFor(seed, n))
    throw std::invalid_argument("correspondenceInverse: pair does not invert to the seed");
  return diagonalWord(diag);
}

IntermediateTrace wIntermediates(const Word& w) {
  if (w.empty()) throw std::invalid_argument("wIntermediates: empty word");
  int n = w.size();
  IntermediateTrace out;
  out.stages.push_back(embedDiagonal(w));
  if (n == 1) return out;
  const SkewTableau& seed = minimalStaircase(n - 1);
  auto classes = valueClasses(seed);
  for (int v = n - 1; v >= 1; --v) {
    std::vector<DotState> trace;
    JdtResult step = fjdtStep(out.stages.back(), classes[static_cast<size_t>(v)], &trace);
    out.dotted.push_back(std::move(trace));
    out.stages.push_back(step.tableau);
  }
  return out;
}

std::vector<SkewTableau> rectificationSet(const SkewTableau& u, const SearchBudget& budget) {
  if (u.size() > budget.maxSize)
    throw BudgetError("rectificationSet: tableau larger than the size cap");
  std::set<std::string> seen;
  std::set<std::string> resultKeys;
  std::vector<SkewTableau> results;
  std::vector<SkewTableau> stack{u};
  seen.insert(u.key());
  long visited = 0;
  while (!stack.empty()) {
    SkewTableau cur = std::move(stack.back());
    stack.pop_back();
    if (++visited > budget.maxStates)
      throw BudgetError("rectificationSet: state budget exhausted");
    std::vector<Box> corners = innerCornersOf(cur);
    if (corners.empty()) {
      if (resultKeys.insert(cur.key()).second) results.push_back(cur);
      continue;
    }
    for (Box b : corners) {
      SkewTableau next = fjdtStep(cur, {b}).tableau;
      if (seen.insert(next.key()).second) stack.push_back(next);
    }
  }
  return results;
}

bool rectifiesTo(const SkewTableau& u, const SkewTableau& target) {
  SkewTableau cur = u;
  for (;;) {
    std::vector<Box> corners = innerCornersOf(cur);
    if (corners.empty()) break;
    cur = fjdtStep(cur, {corners.front()}).tableau;
  }
  return cur == target;
}

}  // namespace ktab
