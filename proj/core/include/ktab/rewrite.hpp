#pragma once

#include <string>
#include <vector>

#include "ktab/jdt.hpp"
#include "ktab/word.hpp"

namespace ktab {

// The three word-rewriting systems:
//   knuth  : bca<->bac (a<b<=c), acb<->cab (a<=b<c)
//   kknuth : the strict forms of both (a<b<c), a<->aa, aba<->bab
//   iknuth : a<->aa plus the two classical moves
enum class RewriteSystem { knuth, kknuth, iknuth };

RewriteSystem parseRewriteSystem(const std::string& name);

// All words reachable from w in one move whose length is <= maxLen.
std::vector<Word> rewriteNeighbors(const Word& w, RewriteSystem sys, int maxLen);

// True iff v is reachable from u in exactly one move (certificate checking).
bool isOneMove(const Word& u, const Word& v, RewriteSystem sys);

enum class Verdict { yes, no, unknown };

struct EquivalenceResult {
  Verdict verdict = Verdict::unknown;
  std::vector<Word> certificate;  // chain u = c_0, ..., c_k = w when yes
  std::string separating;         // description of the invariant when no
  long statesVisited = 0;
};

struct EquivBudget {
  int maxLen = 0;       // 0: defaults to 2 * max(|u|,|w|) (>= both lengths)
  long maxStates = 0;   // 0: default / KTAB_BUDGET
};

// Bounded bidirectional search over the rewriting system.  "no" is returned
// only when a system invariant separates u and w:
//   knuth : insertion tableaux differ
//   iknuth: RD data differs
//   kknuth: RID data differs
EquivalenceResult equivalent(const Word& u, const Word& w, RewriteSystem sys,
                             EquivBudget budget = {});

// Explicit move-by-move chain from w to the reading word of its classical
// insertion tableau, built from the row-bumping moves (no search).
std::vector<Word> knuthReadingChain(const Word& w);

// Explicit chain, in the inflation system, from w to the reading word of its
// i-insertion tableau; with starred = true, from wordStar(w) to the reading
// word of the i-recording tableau.
std::vector<Word> iknuthReadingChain(const Word& w, bool starred);

// Checks that consecutive chain entries are single moves of the system.
bool validCertificate(const std::vector<Word>& chain, RewriteSystem sys);

}  // namespace ktab
