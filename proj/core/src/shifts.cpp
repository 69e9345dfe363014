#include "ktab/shifts.hpp"

#include <algorithm>
#include <map>

namespace ktab {

SkewTableau promoted(const SkewTableau& t) {
  if (t.empty()) throw std::invalid_argument("promote: empty tableau");
  if (!t.isStraight() || !t.isIncreasing() || !t.isStandardInterval())
    throw std::invalid_argument("promote: need a straight standard-interval increasing tableau");
  int m = t.maxEntry();
  if (t.at(1, 1) != 1) throw std::logic_error("promote: box (1,1) must hold 1");
  if (t.size() == 1) return t;  // single box {1} is a fixed point

  std::map<Box, int> decremented;
  t.forEachBox([&](Box b, int e) {
    if (b == Box{1, 1}) return;
    decremented[b] = e - 1;
  });
  // shape stays t.outer(); box (1,1) becomes the inner corner we slide from
  std::vector<std::vector<int>> rows;
  const Partition& outer = t.outer();
  for (int r = 1; r <= outer.length(); ++r) {
    std::vector<int> row;
    for (int c = (r == 1 ? 2 : 1); c <= outer.part(r); ++c) row.push_back(decremented.at(Box{r, c}));
    rows.push_back(std::move(row));
  }
  SkewTableau punctured(outer, Partition({1}), std::move(rows));
  JdtResult slid = fjdtStep(punctured, {Box{1, 1}});
  std::map<Box, int> result = slid.tableau.boxes();
  for (Box b : slid.exitDots) result[b] = m;
  SkewTableau out = SkewTableau::fromBoxes(result);
  if (out.outer() != t.outer() || !out.isStandardInterval() || !out.isIncreasing())
    throw std::logic_error("promote: result is not standard-interval on the same shape");
  return out;
}

namespace {

Word rowShiftStandard(const Word& w) {
  int n = w.size();
  CorrespondencePair pair = correspondence(w);
  pair.w = promoted(pair.w);
  Word u = correspondenceInverse(pair);
  if (u.size() != n) throw std::logic_error("rowShift: length changed");
  return u;
}

}  // namespace

Word rowShift(const Word& w) {
  if (w.empty()) throw std::invalid_argument("rowShift: empty word");
  if (w.size() == 1) return w;
  Standardized st = standardize(w);
  Word shifted = rowShiftStandard(st.word);
  std::vector<int> letters;
  letters.reserve(shifted.letters.size());
  for (int a : shifted.letters) letters.push_back(st.valueMap[static_cast<size_t>(a - 1)]);
  return Word(std::move(letters));
}

Partition muTilde(const Partition& mu, int n) {
  if (mu.length() != n) throw std::invalid_argument("muTilde: mu must have length n");
  if (!Partition::staircase(n).contains(mu))
    throw std::invalid_argument("muTilde: mu must sit inside the staircase");
  std::vector<int> parts{n};
  for (int i = 1; i <= n; ++i) parts.push_back(mu.part(i) - 1);
  return Partition(std::move(parts));
}

bool isVerticalStripShape(const Partition& mu, const Partition& lambda, int n) {
  if (mu.length() != n || !mu.contains(lambda)) return false;
  if (!Partition::staircase(n).contains(mu)) return false;
  int sz = mu.size() - lambda.size();
  if (sz != n && sz != n - 1) return false;
  for (int i = 1; i <= n; ++i)
    if (mu.part(i) - 1 > lambda.part(i)) return false;
  return true;
}

bool isHorizontalStripShape(const Partition& mu, const Partition& lambda, int n) {
  if (mu.part(1) != n || !mu.contains(lambda)) return false;
  int sz = mu.size() - lambda.size();
  if (sz != n && sz != n - 1) return false;
  for (int i = 1; i < mu.length(); ++i)
    if (mu.part(i + 1) > lambda.part(i)) return false;
  return true;
}

namespace {

// Strip boxes in fill order: top-to-bottom rows for vertical strips,
// left-to-right columns for horizontal ones.
std::vector<Box> stripBoxes(const Partition& mu, const Partition& lambda,
                            StripOrientation orientation) {
  std::vector<Box> boxes;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = lambda.part(r) + 1; c <= mu.part(r); ++c) boxes.push_back(Box{r, c});
  if (orientation == StripOrientation::horizontal)
    std::sort(boxes.begin(), boxes.end(),
              [](Box a, Box b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
  return boxes;
}

SkewTableau stripTableau(const std::vector<Box>& boxes, const std::vector<int>& entries) {
  std::map<Box, int> m;
  for (size_t i = 0; i < boxes.size(); ++i) m[boxes[i]] = entries[i];
  return SkewTableau::fromBoxes(m);
}

}  // namespace

std::vector<SkewTableau> stripSet(const Partition& mu, const Partition& lambda, int n,
                                  StripOrientation orientation) {
  bool ok = orientation == StripOrientation::vertical ? isVerticalStripShape(mu, lambda, n)
                                                      : isHorizontalStripShape(mu, lambda, n);
  if (!ok) throw std::invalid_argument("stripSet: shape is not a strip of the given kind");
  std::vector<Box> boxes = stripBoxes(mu, lambda, orientation);
  int sz = static_cast<int>(boxes.size());
  std::vector<SkewTableau> out;
  if (sz == n - 1) {
    std::vector<int> entries;
    for (int v = 1; v <= n - 1; ++v) entries.push_back(v);
    SkewTableau t = stripTableau(boxes, entries);
    if (!t.isIncreasing()) throw std::logic_error("stripSet: forced filling is not increasing");
    out.push_back(std::move(t));
    return out;
  }
  // one repeated value; validity is exactly the increasing-tableau check
  for (int rep = 1; rep <= n - 1; ++rep) {
    std::vector<int> entries;
    for (int v = 1; v <= rep; ++v) entries.push_back(v);
    for (int v = rep; v <= n - 1; ++v) entries.push_back(v);
    SkewTableau t = stripTableau(boxes, entries);
    if (t.isIncreasing()) out.push_back(std::move(t));
  }
  return out;
}

namespace {

// A tableau with empty rows does not remember its (mu, lambda) profile, so
// mu is rebuilt from the inner shape: mu_r = lambda_r + #boxes in row r.
Partition stripOuter(const SkewTableau& v, int n, const Partition& lambda) {
  std::vector<int> count(static_cast<size_t>(n) + 1, 0);
  bool ok = true;
  v.forEachBox([&](Box b, int) {
    if (b.row > n)
      ok = false;
    else
      ++count[static_cast<size_t>(b.row)];
  });
  if (!ok) throw std::invalid_argument("phi: strip does not fit the staircase");
  std::vector<int> mu;
  for (int r = 1; r <= n; ++r) mu.push_back(lambda.part(r) + count[static_cast<size_t>(r)]);
  return Partition(std::move(mu));
}

int repeatedValue(const SkewTableau& t) {
  std::vector<int> all;
  t.forEachBox([&](Box, int e) { all.push_back(e); });
  std::sort(all.begin(), all.end());
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1]) return all[i];
  return 0;
}

}  // namespace

SkewTableau phi(const SkewTableau& vertical, int n, const Partition& lambda) {
  Partition mu = stripOuter(vertical, n, lambda);
  if (!isVerticalStripShape(mu, lambda, n))
    throw std::invalid_argument("phi: not a vertical strip tableau");
  Partition target = muTilde(mu, n);
  std::vector<SkewTableau> horiz = stripSet(target, lambda, n, StripOrientation::horizontal);
  if (vertical.size() == n - 1) {
    if (horiz.size() != 1) throw std::logic_error("phi: horizontal side is not a singleton");
    return horiz.front();
  }
  // Repeated value r sits in rows r, r+1, marking the boundary corner of
  // lambda at (r, lambda_r); on the horizontal side the same corner marks
  // the repeat in columns lambda_r, lambda_r + 1.
  int r = repeatedValue(vertical);
  if (r == 0) throw std::logic_error("phi: size-n strip without a repeat");
  int target_rep = lambda.part(r);
  for (const SkewTableau& h : horiz)
    if (repeatedValue(h) == target_rep) return h;
  throw std::logic_error("phi: no matching horizontal strip tableau");
}

namespace {

// Split the second infusion component by the seed boundary: entries <= n-1
// form the strip, larger entries (shifted down by n-1) form M.
GTriple splitAtThreshold(const SkewTableau& w, const SkewTableau& t, int n) {
  std::map<Box, int> stripBoxes, mBoxes;
  t.forEachBox([&](Box b, int e) {
    if (e <= n - 1)
      stripBoxes[b] = e;
    else
      mBoxes[b] = e - (n - 1);
  });
  GTriple out;
  out.w = w;
  out.strip = SkewTableau::fromBoxes(stripBoxes);
  out.m = SkewTableau::fromBoxes(mBoxes);
  return out;
}

}  // namespace

GTriple gvDecompose(const Word& w) {
  int n = w.size();
  if (n < 3) throw std::invalid_argument("gvDecompose: need |w| >= 3");
  auto [wTab, t] = infusion(namedTableau(NamedKind::concatenated, n - 1), embedDiagonal(w));
  GTriple out = splitAtThreshold(wTab, t, n);
  if (!out.strip.isIncreasing() || !out.m.isIncreasing())
    throw std::logic_error("gvDecompose: components are not increasing");
  return out;
}

Word gvInverse(const GTriple& triple) {
  // reassemble the strip and M (entries shifted back up) and run the
  // infusion involution backwards
  std::map<Box, int> boxes = triple.strip.boxes();
  int total = triple.w.size() + triple.strip.size() + triple.m.size();
  int n = 0;
  while (n * (n + 1) / 2 < total) ++n;
  if (n * (n + 1) / 2 != total)
    throw std::invalid_argument("gvInverse: sizes do not tile a staircase");
  triple.m.forEachBox([&](Box b, int e) {
    if (boxes.count(b)) throw std::invalid_argument("gvInverse: overlapping components");
    boxes[b] = e + (n - 1);
  });
  SkewTableau t = SkewTableau::fromBoxes(boxes);
  auto [seedBack, diag] = infusion(triple.w, t);
  if (seedBack != namedTableau(NamedKind::concatenated, n - 1))
    throw std::invalid_argument("gvInverse: triple does not invert to the seed");
  return diagonalWord(diag);
}

GTriple ghDecompose(const Word& w) {
  GTriple t = gvDecompose(reversed(w));
  return GTriple{t.w.conjugated(), t.strip.conjugated(), t.m.conjugated()};
}

Word ghInverse(const GTriple& triple) {
  GTriple conj{triple.w.conjugated(), triple.strip.conjugated(), triple.m.conjugated()};
  return reversed(gvInverse(conj));
}

Word colShift(const Word& w) {
  if (w.empty()) throw std::invalid_argument("colShift: empty word");
  int n = w.size();
  if (n <= 2) return w;
  GTriple triple = gvDecompose(w);
  SkewTableau h = phi(triple.strip, n, triple.w.outer());
  SkewTableau mShifted = triple.m.empty() ? triple.m : shiftedDownLeft(triple.m);
  Word u = ghInverse(GTriple{triple.w, h, mShifted});
  if (u.size() != n) throw std::logic_error("colShift: length changed");
  return u;
}

}  // namespace ktab
