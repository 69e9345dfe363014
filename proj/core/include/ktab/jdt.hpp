#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ktab/tableau.hpp"

namespace ktab {

// Raised when an exhaustive search exceeds its configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  int maxSize = 12;        // cap on |outer| for rectificationSet
  long maxStates = 500000; // cap on distinct states visited
};

// Reads KTAB_BUDGET (a state count) if set, otherwise returns defaults.
SearchBudget defaultBudget();

// A tableau together with a set of dot markers, as occurs in the middle of
// a jeu de taquin cascade.
struct DotState {
  std::map<Box, int> entries;
  std::set<Box> dots;
  bool operator==(const DotState&) const = default;
};

std::vector<Box> innerCornersOf(const SkewTableau& t);  // maximally SE boxes of inner
std::vector<Box> outerCornersOf(const SkewTableau& t);  // addable boxes of outer

struct JdtResult {
  SkewTableau tableau;
  std::vector<Box> exitDots;  // where the dots came to rest
};

// Forward K-jeu de taquin for one set of inner corners.  The swap cascade
// runs for values 1..max(T) with all dots processed simultaneously per
// value class.  If trace is non-null it receives the dotted state before
// the first swap and after each value pass.
JdtResult fjdtStep(const SkewTableau& t, const std::vector<Box>& dots,
                   std::vector<DotState>* trace = nullptr);

// Reverse cascade for values max(S)..1 from a set of outer corners.
JdtResult rjdtStep(const SkewTableau& s, const std::vector<Box>& dots,
                   std::vector<DotState>* trace = nullptr);

// fjdt_T(U): run fjdtStep for T's value classes max..1.  T straight on λ,
// U on μ/λ.  The result is straight ("rectification of U by T").
SkewTableau rectify(const SkewTableau& t, const SkewTableau& u);

// rjdt_U(T): run rjdtStep for U's value classes 1..max.
SkewTableau reverseRectify(const SkewTableau& u, const SkewTableau& t);

// K-infusion fus(T,U) = (fjdt_T(U), rjdt_U(T)), computed in one pass: the
// exit dots of the value-i stage carry entry i into the second component.
std::pair<SkewTableau, SkewTableau> infusion(const SkewTableau& t, const SkewTableau& u);

// The pair (W(w), M(w)): W straight on λ ⊆ σ_n, M on σ_n/λ.
struct CorrespondencePair {
  SkewTableau w;
  SkewTableau m;
  bool operator==(const CorrespondencePair&) const = default;
};

enum class Seed { minimal, superstandard };

CorrespondencePair correspondence(const Word& w, Seed seed = Seed::minimal);
// Variant taking an arbitrary straight increasing σ_{n-1} tableau as seed.
CorrespondencePair correspondenceWith(const SkewTableau& seedTableau, const Word& w);
// Recovers w from (W(w), M(w)); the infusion involution run backwards.
Word correspondenceInverse(const CorrespondencePair& pair, Seed seed = Seed::minimal);

// The stages W^(0..n-1) of rectifying the diagonal tableau of w by M_{n-1},
// together with the dotted intermediate states of each stage.
struct IntermediateTrace {
  std::vector<SkewTableau> stages;             // stages[j] = W^(j)
  std::vector<std::vector<DotState>> dotted;   // dotted[j][k] = W^(j,k)
};
IntermediateTrace wIntermediates(const Word& w);

// All straight tableaux reachable from U by sequences of single-inner-corner
// forward slides.  Throws BudgetError when the budget is exhausted.
std::vector<SkewTableau> rectificationSet(const SkewTableau& u,
                                          const SearchBudget& budget = defaultBudget());

// Convenience: does U rectify to the minimal tableau of its outer size?
// (Minimal tableaux are unique rectification targets, so one slide order
// suffices for the membership test.)
bool rectifiesTo(const SkewTableau& u, const SkewTableau& target);

}  // namespace ktab
