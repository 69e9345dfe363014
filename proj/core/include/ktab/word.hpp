#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ktab {

// A word: finite sequence of positive integers.  Positions are 1-based in
// the combinatorial conventions; operator[] is 0-based like the container.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls);
  Word(std::initializer_list<int> ls);

  // Accepts a digit string ("4231142", letters 1..9) or a comma-separated
  // list ("10,2,3").  Throws std::invalid_argument on malformed input.
  static Word parse(const std::string& s);

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  int operator[](int i) const { return letters[static_cast<size_t>(i)]; }
  int maxLetter() const;  // 0 for the empty word
  int minLetter() const;
  std::vector<int> valueSet() const;  // sorted distinct letters

  std::string str() const;  // digit string when alphabet <= 9, else commas

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

struct SubseqLengths {
  int lis = 0;
  int lds = 0;
  bool operator==(const SubseqLengths&) const = default;
};

// Longest strictly increasing / strictly decreasing subsequence lengths.
// The empty word yields (0,0).
SubseqLengths extremeSubseqLengths(const Word& w);

// lis/lds over every contiguous position interval [i,j], 1 <= i <= j <= n.
class CidTable {
 public:
  explicit CidTable(const Word& w);

  int length() const { return n_; }
  const SubseqLengths& at(int i, int j) const;  // 1-based positions

  // Fingerprints used when grouping words by (parts of) their tables.
  std::string key() const;
  std::string lisKey() const;
  std::string ldsKey() const;

  bool operator==(const CidTable&) const = default;

 private:
  int n_ = 0;
  std::vector<SubseqLengths> entries_;  // row-major triangle
};

// lis/lds of the restriction of w to each value interval [a,b].
class RidTable {
 public:
  // maxLetter == 0 means "use max(w)"; a larger bound lets two words with
  // different alphabets be compared over a common range.
  explicit RidTable(const Word& w, int maxLetter = 0);

  int maxLetter() const { return m_; }
  const SubseqLengths& at(int a, int b) const;

  std::string key() const;
  std::string lisKey() const;
  std::string ldsKey() const;

  bool operator==(const RidTable&) const = default;

 private:
  int m_ = 0;
  std::vector<SubseqLengths> entries_;
};

enum class Relation { cid, ci, cd, rid, rd };

Relation parseRelation(const std::string& name);

// True iff the corresponding tables agree.  Position-interval relations
// (cid/ci/cd) require |u| == |w| and throw std::invalid_argument otherwise.
bool related(const Word& u, const Word& w, Relation rel);

struct Standardized {
  Word word;                  // alphabet exactly {1..k}
  std::vector<int> valueMap;  // valueMap[i-1] is the original letter for i
};
Standardized standardize(const Word& w);

Word reversed(const Word& w);
Word deleteValue(const Word& w, int a);  // w \ a
Word restrictedTo(const Word& w, int a, int b);

// w with every letter decremented.  Throws if a 1 is present: letters must
// stay positive.  Use deleteMinRelabeled for the chain-relabeling form.
Word decremented(const Word& w);

// (w \ s)^-: delete all copies of the smallest letter s, then slide each
// remaining value down to the next smaller distinct value of w.
Word deleteMinRelabeled(const Word& w);

// Two-line array: lexicographically sorted (index, value) columns.
struct TwoLineArray {
  struct Column {
    int index;
    int value;
    bool operator==(const Column&) const = default;
    auto operator<=>(const Column&) const = default;
  };
  std::vector<Column> columns;

  TwoLineArray() = default;
  explicit TwoLineArray(std::vector<Column> cols);  // sorts and validates
  static TwoLineArray ofWord(const Word& w);  // indices 1..n, values w

  int size() const { return static_cast<int>(columns.size()); }
  Word values() const;
  Word indices() const;

  bool operator==(const TwoLineArray&) const = default;
};

// Swap the rows of A and re-sort columns lexicographically.
TwoLineArray arrayStar(const TwoLineArray& a);

// Values of arrayStar(ofWord(w)); always a permutation of {1..n}.
Word wordStar(const Word& w);

// Enumeration helpers shared by the exhaustive suites.  Visits every word
// of the given length over alphabet {1..alphabet} in lexicographic order.
void forEachWord(int length, int alphabet, const std::function<void(const Word&)>& fn);
// All words whose value set is {1..k} for some k (standard-interval words).
void forEachStandardIntervalWord(int length, const std::function<void(const Word&)>& fn);

}  // namespace ktab
