#pragma once

#include "ktab/jdt.hpp"
#include "ktab/tableau.hpp"
#include "ktab/word.hpp"

namespace ktab {

// Promotion on straight standard-interval increasing tableaux: delete the 1
// in box (1,1), decrement, slide from (1,1), fill the vacated boxes with the
// largest original entry.  Bijective on that set.
SkewTableau promoted(const SkewTableau& t);

// Row shift: on standard-interval words, conjugate promotion of W(w) by the
// correspondence; on general words, standardize, apply, relabel.  Preserves
// CID data and the value set; shifts RID data down.
Word rowShift(const Word& w);

// mu~ = (n, mu_1 - 1, ..., mu_n - 1) with trailing zeros dropped.
// Requires mu ⊆ sigma_n of length exactly n.
Partition muTilde(const Partition& mu, int n);

enum class StripOrientation { vertical, horizontal };

bool isVerticalStripShape(const Partition& mu, const Partition& lambda, int n);
bool isHorizontalStripShape(const Partition& mu, const Partition& lambda, int n);

// All fillings of mu/lambda with entries 1..n-1 weakly increasing along the
// strip that are increasing tableaux.  Size is 1 when |mu/lambda| = n-1.
std::vector<SkewTableau> stripSet(const Partition& mu, const Partition& lambda, int n,
                                  StripOrientation orientation);

// The strip bijection Vert_n(mu/lambda) -> Horiz_n(mu~/lambda): the unique
// element in the size-(n-1) case; otherwise the horizontal strip tableau
// whose repeated value corresponds to the same boundary corner of lambda.
// lambda is passed explicitly because a strip with an empty row does not
// remember its own profile.
SkewTableau phi(const SkewTableau& vertical, int n, const Partition& lambda);

// The decomposition w -> (W, V, M) through fus(N_{n-1}, w): V collects the
// entries 1..n-1 of the second component, M the rest decremented by n-1.
struct GTriple {
  SkewTableau w;      // straight increasing on lambda
  SkewTableau strip;  // on mu/lambda, entries 1..n-1
  SkewTableau m;      // on sigma_n/mu, rectifies to M_{n-2}
  bool operator==(const GTriple&) const = default;
};

GTriple gvDecompose(const Word& w);        // requires |w| >= 3
Word gvInverse(const GTriple& t);
GTriple ghDecompose(const Word& w);        // conjugates of gvDecompose(reverse)
Word ghInverse(const GTriple& t);

// Column shift: G_v, apply phi to the strip, shift M down-left, invert G_h.
// Preserves RID data and the value set; shifts CID data left.  Identity for
// |w| <= 2.
Word colShift(const Word& w);

}  // namespace ktab
