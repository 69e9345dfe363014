#include "ktab/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ktab {

namespace {

void requirePositive(const std::vector<int>& letters) {
  for (int a : letters) {
    if (a < 1) throw std::invalid_argument("word letters must be positive");
  }
}

}  // namespace

Word::Word(std::vector<int> ls) : letters(std::move(ls)) { requirePositive(letters); }

Word::Word(std::initializer_list<int> ls) : letters(ls) { requirePositive(letters); }

Word Word::parse(const std::string& s) {
  std::vector<int> letters;
  if (s.find(',') != std::string::npos || s.find(' ') != std::string::npos) {
    std::string piece;
    std::istringstream in(s);
    std::string norm = s;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream tokens(norm);
    while (tokens >> piece) {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument("bad letter: " + piece);
      letters.push_back(v);
    }
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad word: " + s);
      if (ch == '0')
        throw std::invalid_argument("digit-string words use letters 1..9; use the comma form");
      letters.push_back(ch - '0');
    }
  }
  if (letters.empty()) throw std::invalid_argument("empty word");
  return Word(std::move(letters));
}

int Word::maxLetter() const {
  return letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
}

int Word::minLetter() const {
  return letters.empty() ? 0 : *std::min_element(letters.begin(), letters.end());
}

std::vector<int> Word::valueSet() const {
  std::vector<int> vs(letters);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string Word::str() const {
  std::string out;
  if (maxLetter() <= 9) {
    for (int a : letters) out.push_back(static_cast<char>('0' + a));
  } else {
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

SubseqLengths extremeSubseqLengths(const Word& w) {
  if (w.empty()) return {0, 0};
  // Patience-style DP: tails[k] = smallest possible last letter of a strictly
  // increasing subsequence of length k+1 (and mirrored for decreasing).
  std::vector<int> incTails, decTails;
  incTails.reserve(w.letters.size());
  decTails.reserve(w.letters.size());
  for (int a : w.letters) {
    auto it = std::lower_bound(incTails.begin(), incTails.end(), a);
    if (it == incTails.end())
      incTails.push_back(a);
    else
      *it = a;
    int na = -a;
    auto jt = std::lower_bound(decTails.begin(), decTails.end(), na);
    if (jt == decTails.end())
      decTails.push_back(na);
    else
      *jt = na;
  }
  return {static_cast<int>(incTails.size()), static_cast<int>(decTails.size())};
}

namespace {

// Incremental variant used to fill a whole table row: feed letters one at a
// time and read off the current lengths.
struct RunningLengths {
  std::vector<int> incTails, decTails;
  void push(int a) {
    auto it = std::lower_bound(incTails.begin(), incTails.end(), a);
    if (it == incTails.end())
      incTails.push_back(a);
    else
      *it = a;
    int na = -a;
    auto jt = std::lower_bound(decTails.begin(), decTails.end(), na);
    if (jt == decTails.end())
      decTails.push_back(na);
    else
      *jt = na;
  }
  SubseqLengths lengths() const {
    return {static_cast<int>(incTails.size()), static_cast<int>(decTails.size())};
  }
};

std::string tableKey(const std::vector<SubseqLengths>& entries, bool lis, bool lds) {
  std::string out;
  out.reserve(entries.size() * 3);
  for (const auto& e : entries) {
    if (lis) out += static_cast<char>('0' + (e.lis % 64));
    if (lds) out += static_cast<char>('0' + (e.lds % 64));
  }
  return out;
}

}  // namespace

CidTable::CidTable(const Word& w) : n_(w.size()) {
  if (w.empty()) throw std::invalid_argument("cid table of the empty word");
  entries_.reserve(static_cast<size_t>(n_) * (n_ + 1) / 2);
  for (int i = 0; i < n_; ++i) {
    RunningLengths run;
    for (int j = i; j < n_; ++j) {
      run.push(w[j]);
      entries_.push_back(run.lengths());
    }
  }
}

const SubseqLengths& CidTable::at(int i, int j) const {
  if (i < 1 || j < i || j > n_) throw std::invalid_argument("cid table index");
  // row i occupies a block of n-i+1 entries
  size_t base = static_cast<size_t>(i - 1) * n_ - static_cast<size_t>(i - 1) * (i - 2) / 2;
  return entries_[base + static_cast<size_t>(j - i)];
}

std::string CidTable::key() const { return tableKey(entries_, true, true); }
std::string CidTable::lisKey() const { return tableKey(entries_, true, false); }
std::string CidTable::ldsKey() const { return tableKey(entries_, false, true); }

RidTable::RidTable(const Word& w, int maxLetter) {
  if (w.empty()) throw std::invalid_argument("rid table of the empty word");
  m_ = std::max(maxLetter, w.maxLetter());
  entries_.assign(static_cast<size_t>(m_) * (m_ + 1) / 2, SubseqLengths{});
  for (int a = 1; a <= m_; ++a) {
    size_t base = static_cast<size_t>(a - 1) * m_ - static_cast<size_t>(a - 1) * (a - 2) / 2;
    for (int b = a; b <= m_; ++b) {
      Word r = restrictedTo(w, a, b);
      entries_[base + static_cast<size_t>(b - a)] = extremeSubseqLengths(r);
    }
  }
}

const SubseqLengths& RidTable::at(int a, int b) const {
  if (a < 1 || b < a || b > m_) throw std::invalid_argument("rid table index");
  size_t base = static_cast<size_t>(a - 1) * m_ - static_cast<size_t>(a - 1) * (a - 2) / 2;
  return entries_[base + static_cast<size_t>(b - a)];
}

std::string RidTable::key() const { return tableKey(entries_, true, true); }
std::string RidTable::lisKey() const { return tableKey(entries_, true, false); }
std::string RidTable::ldsKey() const { return tableKey(entries_, false, true); }

Relation parseRelation(const std::string& name) {
  if (name == "cid") return Relation::cid;
  if (name == "ci") return Relation::ci;
  if (name == "cd") return Relation::cd;
  if (name == "rid") return Relation::rid;
  if (name == "rd") return Relation::rd;
  throw std::invalid_argument("unknown relation: " + name);
}

bool related(const Word& u, const Word& w, Relation rel) {
  if (u.empty() || w.empty()) throw std::invalid_argument("related: empty word");
  switch (rel) {
    case Relation::cid:
    case Relation::ci:
    case Relation::cd: {
      if (u.size() != w.size())
        throw std::invalid_argument("position-interval relations need equal lengths");
      CidTable tu(u), tw(w);
      if (rel == Relation::cid) return tu.key() == tw.key();
      if (rel == Relation::ci) return tu.lisKey() == tw.lisKey();
      return tu.ldsKey() == tw.ldsKey();
    }
    case Relation::rid:
    case Relation::rd: {
      int m = std::max(u.maxLetter(), w.maxLetter());
      RidTable tu(u, m), tw(w, m);
      if (rel == Relation::rid) return tu.key() == tw.key();
      return tu.ldsKey() == tw.ldsKey();
    }
  }
  return false;
}

Standardized standardize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("standardize: empty word");
  std::vector<int> values = w.valueSet();
  std::map<int, int> rank;
  for (size_t i = 0; i < values.size(); ++i) rank[values[i]] = static_cast<int>(i) + 1;
  std::vector<int> st;
  st.reserve(w.letters.size());
  for (int a : w.letters) st.push_back(rank[a]);
  return {Word(std::move(st)), std::move(values)};
}

Word reversed(const Word& w) {
  std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
  return Word(std::move(ls));
}

Word deleteValue(const Word& w, int a) {
  std::vector<int> ls;
  ls.reserve(w.letters.size());
  for (int x : w.letters)
    if (x != a) ls.push_back(x);
  return Word(std::move(ls));
}

Word restrictedTo(const Word& w, int a, int b) {
  if (a > b) throw std::invalid_argument("restrictedTo: empty interval");
  std::vector<int> ls;
  for (int x : w.letters)
    if (a <= x && x <= b) ls.push_back(x);
  return Word(std::move(ls));
}

Word decremented(const Word& w) {
  if (w.minLetter() < 2)
    throw std::invalid_argument("decrement of a word containing 1 (letters must stay positive)");
  std::vector<int> ls;
  ls.reserve(w.letters.size());
  for (int x : w.letters) ls.push_back(x - 1);
  return Word(std::move(ls));
}

Word deleteMinRelabeled(const Word& w) {
  if (w.empty()) throw std::invalid_argument("deleteMinRelabeled: empty word");
  std::vector<int> values = w.valueSet();  // v_1 < ... < v_k
  std::map<int, int> down;                 // v_i -> v_{i-1}
  for (size_t i = 1; i < values.size(); ++i) down[values[i]] = values[i - 1];
  std::vector<int> ls;
  for (int x : w.letters)
    if (x != values.front()) ls.push_back(down.at(x));
  return Word(std::move(ls));
}

TwoLineArray::TwoLineArray(std::vector<Column> cols) : columns(std::move(cols)) {
  for (const auto& c : columns) {
    if (c.index < 1 || c.value < 1)
      throw std::invalid_argument("two-line array entries must be positive");
  }
  std::sort(columns.begin(), columns.end());
}

TwoLineArray TwoLineArray::ofWord(const Word& w) {
  std::vector<Column> cols;
  cols.reserve(w.letters.size());
  for (int i = 0; i < w.size(); ++i) cols.push_back({i + 1, w[i]});
  return TwoLineArray(std::move(cols));
}

Word TwoLineArray::values() const {
  std::vector<int> ls;
  ls.reserve(columns.size());
  for (const auto& c : columns) ls.push_back(c.value);
  return Word(std::move(ls));
}

Word TwoLineArray::indices() const {
  std::vector<int> ls;
  ls.reserve(columns.size());
  for (const auto& c : columns) ls.push_back(c.index);
  return Word(std::move(ls));
}

TwoLineArray arrayStar(const TwoLineArray& a) {
  std::vector<TwoLineArray::Column> cols;
  cols.reserve(a.columns.size());
  for (const auto& c : a.columns) cols.push_back({c.value, c.index});
  return TwoLineArray(std::move(cols));
}

Word wordStar(const Word& w) { return arrayStar(TwoLineArray::ofWord(w)).values(); }

void forEachWord(int length, int alphabet, const std::function<void(const Word&)>& fn) {
  if (length < 1 || alphabet < 1) return;
  std::vector<int> letters(static_cast<size_t>(length), 1);
  for (;;) {
    fn(Word(letters));
    int i = length - 1;
    while (i >= 0 && letters[static_cast<size_t>(i)] == alphabet) {
      letters[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++letters[static_cast<size_t>(i)];
  }
}

void forEachStandardIntervalWord(int length, const std::function<void(const Word&)>& fn) {
  forEachWord(length, length, [&](const Word& w) {
    std::vector<int> vs = w.valueSet();
    for (size_t i = 0; i < vs.size(); ++i)
      if (vs[i] != static_cast<int>(i) + 1) return;
    fn(w);
  });
}

}  // namespace ktab
