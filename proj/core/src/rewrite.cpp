#include "ktab/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "ktab/irsk.hpp"

namespace ktab {

RewriteSystem parseRewriteSystem(const std::string& name) {
  if (name == "knuth") return RewriteSystem::knuth;
  if (name == "kknuth") return RewriteSystem::kknuth;
  if (name == "iknuth") return RewriteSystem::iknuth;
  throw std::invalid_argument("unknown rewrite system: " + name);
}

namespace {

bool hasInflation(RewriteSystem sys) { return sys != RewriteSystem::knuth; }

// Triple moves of each system, applied at position i (letters x y z).
// Returns the rewritten triple when the pattern matches.
void tripleMoves(RewriteSystem sys, int x, int y, int z,
                 const std::function<void(int, int, int)>& emit) {
  bool strict = sys == RewriteSystem::kknuth;
  // bca <-> bac with a < b <= c (strict: a < b < c)
  auto k1 = [&](int a, int b, int c) { return a < b && (strict ? b < c : b <= c); };
  // acb <-> cab with a <= b < c (strict: a < b < c)
  auto k2 = [&](int a, int b, int c) { return (strict ? a < b : a <= b) && b < c; };
  if (k1(z, x, y)) emit(x, z, y);  // x y z = b c a -> b a c
  if (k1(y, x, z)) emit(x, z, y);  // x y z = b a c -> b c a
  if (k2(x, z, y)) emit(y, x, z);  // x y z = a c b -> c a b
  if (k2(y, z, x)) emit(y, x, z);  // x y z = c a b -> a c b
  if (sys == RewriteSystem::kknuth && x == z && x != y) emit(y, x, y);  // aba -> bab
}

}  // namespace

std::vector<Word> rewriteNeighbors(const Word& w, RewriteSystem sys, int maxLen) {
  std::vector<Word> out;
  const auto& ls = w.letters;
  int n = w.size();
  for (int i = 0; i + 2 < n; ++i) {
    tripleMoves(sys, ls[static_cast<size_t>(i)], ls[static_cast<size_t>(i + 1)],
                ls[static_cast<size_t>(i + 2)], [&](int x, int y, int z) {
                  std::vector<int> next = ls;
                  next[static_cast<size_t>(i)] = x;
                  next[static_cast<size_t>(i + 1)] = y;
                  next[static_cast<size_t>(i + 2)] = z;
                  out.push_back(Word(std::move(next)));
                });
  }
  if (hasInflation(sys)) {
    if (n + 1 <= maxLen) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> next = ls;
        next.insert(next.begin() + i, ls[static_cast<size_t>(i)]);
        out.push_back(Word(std::move(next)));
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      if (ls[static_cast<size_t>(i)] == ls[static_cast<size_t>(i + 1)]) {
        std::vector<int> next = ls;
        next.erase(next.begin() + i);
        out.push_back(Word(std::move(next)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool isOneMove(const Word& u, const Word& v, RewriteSystem sys) {
  if (u == v) return false;
  int du = u.size(), dv = v.size();
  if (du == dv) {
    for (const Word& nb : rewriteNeighbors(u, sys, du)) {
      if (nb == v) return true;
    }
    return false;
  }
  if (!hasInflation(sys) || std::abs(du - dv) != 1) return false;
  const Word& shorter = du < dv ? u : v;
  const Word& longer = du < dv ? v : u;
  for (int i = 0; i < longer.size() - 1; ++i) {
    if (longer[i] != longer[i + 1]) continue;
    std::vector<int> collapsed = longer.letters;
    collapsed.erase(collapsed.begin() + i);
    if (Word(std::move(collapsed)) == shorter) return true;
  }
  return false;
}

namespace {

std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (int a : w.letters) s.push_back(static_cast<char>(a));
  return s;
}

struct Frontier {
  std::deque<Word> queue;
  std::unordered_map<std::string, Word> parent;  // key -> predecessor word
  std::unordered_set<std::string> seen;
};

std::vector<Word> buildPath(const Frontier& side, Word meet, bool reverse) {
  std::vector<Word> path{meet};
  for (;;) {
    auto it = side.parent.find(encode(path.back()));
    if (it == side.parent.end() || it->second.empty()) break;
    path.push_back(it->second);
  }
  if (!reverse) std::reverse(path.begin(), path.end());
  return path;
}

std::string describeSeparation(RewriteSystem sys) {
  switch (sys) {
    case RewriteSystem::knuth:
      return "insertion tableaux differ";
    case RewriteSystem::kknuth:
      return "RID data differs";
    case RewriteSystem::iknuth:
      return "RD data differs";
  }
  return {};
}

bool separatedByInvariant(const Word& u, const Word& w, RewriteSystem sys) {
  switch (sys) {
    case RewriteSystem::knuth:
      if (u.size() != w.size()) return true;
      return !(rsk(u).p == rsk(w).p);
    case RewriteSystem::kknuth:
      return !related(u, w, Relation::rid);
    case RewriteSystem::iknuth:
      return !related(u, w, Relation::rd);
  }
  return false;
}

}  // namespace

EquivalenceResult equivalent(const Word& u, const Word& w, RewriteSystem sys, EquivBudget budget) {
  EquivalenceResult res;
  if (budget.maxLen <= 0) budget.maxLen = 2 * std::max(u.size(), w.size());
  budget.maxLen = std::max({budget.maxLen, u.size(), w.size()});
  if (budget.maxStates <= 0) budget.maxStates = defaultBudget().maxStates;

  if (u == w) {
    res.verdict = Verdict::yes;
    res.certificate = {u};
    return res;
  }
  if (separatedByInvariant(u, w, sys)) {
    res.verdict = Verdict::no;
    res.separating = describeSeparation(sys);
    return res;
  }

  Frontier a, b;
  a.queue.push_back(u);
  a.seen.insert(encode(u));
  a.parent[encode(u)] = Word();
  b.queue.push_back(w);
  b.seen.insert(encode(w));
  b.parent[encode(w)] = Word();
  long visited = 2;

  while (!a.queue.empty() && !b.queue.empty()) {
    Frontier& expand = a.queue.size() <= b.queue.size() ? a : b;
    Frontier& other = (&expand == &a) ? b : a;
    size_t layer = expand.queue.size();
    for (size_t k = 0; k < layer; ++k) {
      Word cur = std::move(expand.queue.front());
      expand.queue.pop_front();
      for (Word& nb : rewriteNeighbors(cur, sys, budget.maxLen)) {
        std::string key = encode(nb);
        if (expand.seen.count(key)) continue;
        expand.seen.insert(key);
        expand.parent[key] = cur;
        if (other.seen.count(key)) {
          // both sides know nb now; stitch the half-paths at the meeting word
          std::vector<Word> front = buildPath(a, nb, false);
          std::vector<Word> back = buildPath(b, nb, true);
          res.certificate = front;
          res.certificate.insert(res.certificate.end(), back.begin() + 1, back.end());
          res.verdict = Verdict::yes;
          res.statesVisited = visited;
          return res;
        }
        expand.queue.push_back(std::move(nb));
        if (++visited > budget.maxStates) {
          res.verdict = Verdict::unknown;
          res.statesVisited = visited;
          return res;
        }
      }
    }
  }
  res.verdict = Verdict::unknown;
  res.statesVisited = visited;
  return res;
}

namespace {

// Explicit Knuth moves realizing one row bump inside cur.  The row occupies
// [start, start + len) in reading-word layout and the incoming letter sits
// at start + len.  On a bump the expelled letter ends at position start with
// the updated row to its right; an append needs no moves.  Every
// intermediate word is pushed onto chain.
bool rowBumpMoves(std::vector<int>& cur, size_t start, size_t len,
                  std::vector<std::vector<int>>& chain) {
  size_t xPos = start + len;
  int x = cur[xPos];
  if (len == 0 || cur[xPos - 1] <= x) return false;
  size_t p = start;
  while (cur[p] <= x) ++p;  // leftmost row entry larger than x
  // x travels left: (b c a) -> (b a c) with a=x < b <= c
  while (xPos >= p + 2) {
    std::swap(cur[xPos - 1], cur[xPos]);
    chain.push_back(cur);
    --xPos;
  }
  // the bumped letter travels to the row head: (a c b) -> (c a b), a <= b < c
  for (size_t j = p; j > start; --j) {
    std::swap(cur[j - 1], cur[j]);
    chain.push_back(cur);
  }
  return true;
}

// Cascade the letter sitting just right of the top row's segment through the
// tableau laid out as a reading word (bottom rows first).  rowLens[0] is the
// top row.
void insertionMoves(std::vector<int>& cur, std::vector<size_t>& rowLens,
                    std::vector<std::vector<int>>& chain) {
  for (size_t r = 0;; ++r) {
    if (r == rowLens.size()) {
      rowLens.push_back(1);  // letter reached position 0: a new bottom row
      return;
    }
    size_t start = 0;
    for (size_t rr = r + 1; rr < rowLens.size(); ++rr) start += rowLens[rr];
    if (!rowBumpMoves(cur, start, rowLens[r], chain)) {
      rowLens[r] += 1;
      return;
    }
  }
}

// Transform cur[0, prefixLen) into the reading word of its insertion
// tableau; positions beyond prefixLen are never touched.
void readingMoves(std::vector<int>& cur, size_t prefixLen, std::vector<std::vector<int>>& chain) {
  std::vector<size_t> rowLens;
  for (size_t j = 0; j < prefixLen; ++j) insertionMoves(cur, rowLens, chain);
}

std::vector<int> coreOf(const std::vector<int>& ls, size_t limit) {
  std::vector<int> core;
  for (size_t i = 0; i < limit; ++i)
    if (core.empty() || core.back() != ls[i]) core.push_back(ls[i]);
  return core;
}

// Inflations/deflations turning cur[0, prefixLen) into target (same core);
// the suffix shifts but is never rewritten.
void multiplicityMoves(std::vector<int>& cur, size_t prefixLen, const std::vector<int>& target,
                       std::vector<std::vector<int>>& chain) {
  if (coreOf(cur, prefixLen) != coreOf(target, target.size()))
    throw std::logic_error("multiplicityMoves: cores differ");
  // deflate the prefix to its core
  for (size_t i = 1; i < prefixLen;) {
    if (cur[i] == cur[i - 1]) {
      cur.erase(cur.begin() + static_cast<long>(i));
      --prefixLen;
      chain.push_back(cur);
    } else {
      ++i;
    }
  }
  // inflate the core run by run up to the target multiplicities
  std::vector<int> core = coreOf(target, target.size());
  std::vector<size_t> runs(core.size(), 0);
  for (size_t i = 0, r = 0; i < target.size(); ++i) {
    if (i > 0 && target[i] != target[i - 1]) ++r;
    ++runs[r];
  }
  size_t pos = 0;
  for (size_t r = 0; r < core.size(); ++r) {
    for (size_t k = 1; k < runs[r]; ++k) {
      cur.insert(cur.begin() + static_cast<long>(pos), core[r]);
      chain.push_back(cur);
    }
    pos += runs[r];
  }
  if (std::vector<int>(cur.begin(), cur.begin() + static_cast<long>(target.size())) != target)
    throw std::logic_error("multiplicityMoves: did not land on the target");
}

std::vector<int> rowOf(const SkewTableau& t, int r) {
  std::vector<int> out;
  if (r <= t.numRows())
    for (int c = 1; c <= t.outer().part(r); ++c) out.push_back(t.at(r, c));
  return out;
}

std::vector<Word> toWords(std::vector<std::vector<int>> snaps) {
  std::vector<Word> out;
  out.reserve(snaps.size());
  for (auto& ls : snaps) out.push_back(Word(std::move(ls)));
  return out;
}

}  // namespace

std::vector<Word> knuthReadingChain(const Word& w) {
  if (w.empty()) throw std::invalid_argument("knuthReadingChain: empty word");
  std::vector<std::vector<int>> snaps{w.letters};
  std::vector<int> cur = w.letters;
  readingMoves(cur, cur.size(), snaps);
  if (cur != rsk(w).p.readingWord().letters)
    throw std::logic_error("knuthReadingChain: did not land on the reading word");
  return toWords(std::move(snaps));
}

std::vector<Word> iknuthReadingChain(const Word& w, bool starred) {
  if (w.empty()) throw std::invalid_argument("iknuthReadingChain: empty word");
  IrskPair pair = irsk(w);
  const SkewTableau& target = starred ? pair.q : pair.p;

  std::vector<TwoLineArray> levels = bumpedArrays(w, InsertionVariant::irsk);
  std::vector<TwoLineArray> inflated = inflatedBumpedArrays(w);
  if (starred) {
    for (auto& a : levels) a = arrayStar(a);
    for (auto& a : inflated) a = arrayStar(a);
  }

  std::vector<int> cur = levels.front().values().letters;
  std::vector<std::vector<int>> snaps{cur};
  size_t prefixLen = cur.size();

  for (size_t level = 0; prefixLen > 0; ++level) {
    if (level >= inflated.size())
      throw std::logic_error("iknuthReadingChain: ran out of inflation levels");
    // multiplicity adjustment to the inflated level word
    std::vector<int> plus = inflated[level].values().letters;
    multiplicityMoves(cur, prefixLen, plus, snaps);
    prefixLen = plus.size();
    // classical conversion of the prefix to its reading word
    readingMoves(cur, prefixLen, snaps);
    Word prefixWord(std::vector<int>(cur.begin(), cur.begin() + static_cast<long>(prefixLen)));
    RskPair pq = rsk(prefixWord);
    std::vector<int> top = rowOf(pq.p, 1);
    if (top != rowOf(target, static_cast<int>(level) + 1))
      throw std::logic_error("iknuthReadingChain: top row does not match the target tableau");
    size_t newPrefix = prefixLen - top.size();
    // reverse the classical chain of the next level word onto the prefix
    std::vector<int> next =
        level + 1 < levels.size() ? levels[level + 1].values().letters : std::vector<int>{};
    std::vector<std::vector<int>> sub{next};
    std::vector<int> tmp = next;
    readingMoves(tmp, tmp.size(), sub);
    if (tmp != std::vector<int>(cur.begin(), cur.begin() + static_cast<long>(newPrefix)))
      throw std::logic_error("iknuthReadingChain: row-deleted prefix mismatch");
    for (size_t k = sub.size(); k-- > 1;) {
      std::copy(sub[k - 1].begin(), sub[k - 1].end(), cur.begin());
      snaps.push_back(cur);
    }
    prefixLen = newPrefix;
  }
  if (cur != target.readingWord().letters)
    throw std::logic_error("iknuthReadingChain: did not land on the reading word");
  return toWords(std::move(snaps));
}

bool validCertificate(const std::vector<Word>& chain, RewriteSystem sys) {
  if (chain.empty()) return false;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!isOneMove(chain[i], chain[i + 1], sys)) return false;
  return true;
}

}  // namespace ktab
