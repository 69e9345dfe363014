#include "ktab/irsk.hpp"

#include <algorithm>
#include <map>

#include "ktab/jdt.hpp"

namespace ktab {

RowInsertResult rowInsert(std::vector<int> row, int a) {
  auto it = std::upper_bound(row.begin(), row.end(), a);
  if (it == row.end()) {
    row.push_back(a);
    return {std::move(row), std::nullopt};
  }
  int bumped = *it;
  *it = a;
  return {std::move(row), bumped};
}

RowWordInsertResult rowInsertWord(std::vector<int> row, const std::vector<int>& letters) {
  std::vector<int> bumped;
  for (int a : letters) {
    RowInsertResult step = rowInsert(std::move(row), a);
    row = std::move(step.row);
    if (step.bumped) bumped.push_back(*step.bumped);
  }
  return {std::move(row), std::move(bumped)};
}

namespace {

std::vector<std::vector<int>> tableauRows(const SkewTableau& t) {
  if (!t.isStraight()) throw std::invalid_argument("expected a straight tableau");
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.numRows(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= t.outer().part(r); ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

SkewTableau fromRows(std::vector<std::vector<int>> rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return SkewTableau::straightShape(std::move(rows));
}

// Column (1-based) of the rightmost occurrence of v, or 0 when absent.
int rightmostColumn(const std::vector<int>& row, int v) {
  auto it = std::upper_bound(row.begin(), row.end(), v);
  if (it == row.begin() || *(it - 1) != v) return 0;
  return static_cast<int>(it - row.begin());
}

// Column of the leftmost occurrence of v, or 0 when absent.
int leftmostColumn(const std::vector<int>& row, int v) {
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return 0;
  return static_cast<int>(it - row.begin()) + 1;
}

}  // namespace

SkewTableau iInsert(const SkewTableau& p, int a, IInsertRecord* record) {
  std::vector<std::vector<int>> rows = tableauRows(p);
  if (record) {
    record->inserted.clear();
    record->bumped.clear();
  }

  // Incoming values with their alignment targets.  For the seed letter the
  // target is one past the end of the old first row.
  std::vector<int> incoming{a};
  std::vector<int> targets{static_cast<int>(rows.empty() ? 0 : rows[0].size()) + 1};

  for (size_t i = 0; !incoming.empty(); ++i) {
    if (i == rows.size()) rows.emplace_back();
    const std::vector<int> oldRow = rows[i];
    std::vector<int> newRow = oldRow;
    std::vector<int> inserted, bumpedMultiset;
    for (size_t j = 0; j < incoming.size(); ++j) {
      int v = incoming[j];
      int target = targets[j];
      for (;;) {
        RowInsertResult step = rowInsert(std::move(newRow), v);
        newRow = std::move(step.row);
        inserted.push_back(v);
        if (step.bumped) bumpedMultiset.push_back(*step.bumped);
        int at = rightmostColumn(newRow, v);
        if (at == target) break;
        if (at > target) throw std::logic_error("iInsert: overshot the alignment column");
      }
    }
    if (record) {
      record->inserted.push_back(inserted);
      record->bumped.push_back(bumpedMultiset);
    }
    // next round: the distinct bumped values, aligned to their leftmost
    // occurrence in the row they were bumped from
    std::vector<int> nextIncoming(bumpedMultiset);
    std::sort(nextIncoming.begin(), nextIncoming.end());
    nextIncoming.erase(std::unique(nextIncoming.begin(), nextIncoming.end()), nextIncoming.end());
    std::vector<int> nextTargets;
    for (int v : nextIncoming) {
      int t = leftmostColumn(oldRow, v);
      if (t == 0) throw std::logic_error("iInsert: bumped value missing from its row");
      nextTargets.push_back(t);
    }
    rows[i] = std::move(newRow);
    incoming = std::move(nextIncoming);
    targets = std::move(nextTargets);
  }
  return fromRows(std::move(rows));
}

IrskPair irsk(const Word& w, std::vector<IrskPair>* steps, std::vector<IInsertRecord>* records) {
  if (w.empty()) throw std::invalid_argument("irsk: empty word");
  SkewTableau p;
  std::vector<std::vector<int>> qRows;
  if (steps) steps->clear();
  if (records) records->clear();
  for (int j = 1; j <= w.size(); ++j) {
    IInsertRecord rec;
    p = iInsert(p, w[j - 1], &rec);
    if (records) records->push_back(rec);
    // grow Q: entry j on every box added at this step
    qRows.resize(static_cast<size_t>(p.numRows()));
    for (int r = 1; r <= p.numRows(); ++r) {
      auto& qRow = qRows[static_cast<size_t>(r - 1)];
      while (static_cast<int>(qRow.size()) < p.outer().part(r)) qRow.push_back(j);
    }
    if (steps) steps->push_back(IrskPair{p, fromRows(qRows)});
  }
  IrskPair out{p, fromRows(qRows)};
  if (!out.p.isSemistandard() || !out.q.isSemistandard())
    throw std::logic_error("irsk produced a non-semistandard pair");
  return out;
}

namespace {

struct RskState {
  std::vector<std::vector<int>> p, q;
  // bumps[i] = (step, letter) pairs expelled from row i+1
  std::vector<std::vector<std::pair<int, int>>> bumps;

  void insert(int index, int value) {
    int x = value;
    for (size_t r = 0;; ++r) {
      if (r == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      RowInsertResult step = rowInsert(std::move(p[r]), x);
      p[r] = std::move(step.row);
      if (!step.bumped) {
        q[r].push_back(index);
        break;
      }
      if (bumps.size() <= r) bumps.resize(r + 1);
      bumps[r].push_back({index, *step.bumped});
      x = *step.bumped;
    }
  }
};

}  // namespace

RskPair rsk(const TwoLineArray& a) {
  RskState state;
  for (const auto& col : a.columns) state.insert(col.index, col.value);
  return RskPair{fromRows(state.p), fromRows(state.q)};
}

RskPair rsk(const Word& w) { return rsk(TwoLineArray::ofWord(w)); }

TwoLineArray rskInverse(const RskPair& pair) {
  if (pair.p.outer() != pair.q.outer() || !pair.p.isStraight() || !pair.q.isStraight())
    throw std::invalid_argument("rskInverse: shapes differ or are not straight");
  if (!pair.p.isSemistandard() || !pair.q.isSemistandard())
    throw std::invalid_argument("rskInverse: tableaux are not semistandard");
  std::vector<std::vector<int>> p = pair.p.empty() ? std::vector<std::vector<int>>{}
                                                   : tableauRows(pair.p);
  std::vector<std::vector<int>> q = pair.q.empty() ? std::vector<std::vector<int>>{}
                                                   : tableauRows(pair.q);
  // Undo boxes in reverse insertion order: largest recorded index first,
  // ties broken rightmost column first.  Equal indices must form a
  // horizontal strip for the pair to be a valid RSK image.
  struct Cell {
    int index, row, col;
  };
  std::vector<Cell> cells;
  for (size_t r = 0; r < q.size(); ++r)
    for (size_t c = 0; c < q[r].size(); ++c)
      cells.push_back({q[r][c], static_cast<int>(r), static_cast<int>(c)});
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.index != b.index) return a.index > b.index;
    return a.col > b.col;
  });
  for (size_t i = 0; i + 1 < cells.size(); ++i)
    if (cells[i].index == cells[i + 1].index && cells[i].col == cells[i + 1].col)
      throw std::invalid_argument("rskInverse: equal indices are not a horizontal strip");
  std::vector<TwoLineArray::Column> columns;
  for (const Cell& cell : cells) {
    auto r = static_cast<size_t>(cell.row);
    if (q[r].empty() || static_cast<int>(q[r].size()) - 1 != cell.col)
      throw std::invalid_argument("rskInverse: recording entries out of order");
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    for (size_t rr = r; rr-- > 0;) {
      // rightmost entry strictly smaller than x
      auto it = std::lower_bound(p[rr].begin(), p[rr].end(), x);
      if (it == p[rr].begin()) throw std::invalid_argument("rskInverse: reverse bump failed");
      --it;
      std::swap(*it, x);
    }
    columns.push_back({cell.index, x});
  }
  std::reverse(columns.begin(), columns.end());
  return TwoLineArray(std::move(columns));
}

std::vector<TwoLineArray> bumpedArrays(const Word& w, InsertionVariant variant) {
  if (w.empty()) throw std::invalid_argument("bumpedArrays: empty word");
  std::vector<TwoLineArray> out;
  out.push_back(TwoLineArray::ofWord(w));
  if (variant == InsertionVariant::rsk) {
    RskState state;
    for (int j = 1; j <= w.size(); ++j) state.insert(j, w[j - 1]);
    for (const auto& rowBumps : state.bumps) {
      std::vector<TwoLineArray::Column> cols;
      for (auto [index, value] : rowBumps) cols.push_back({index, value});
      if (!cols.empty()) out.push_back(TwoLineArray(std::move(cols)));
    }
    return out;
  }
  std::vector<IInsertRecord> records;
  irsk(w, nullptr, &records);
  size_t maxRows = 0;
  for (const auto& rec : records) maxRows = std::max(maxRows, rec.bumped.size());
  for (size_t i = 0; i < maxRows; ++i) {
    std::vector<TwoLineArray::Column> cols;
    for (size_t j = 0; j < records.size(); ++j) {
      if (i >= records[j].bumped.size()) continue;
      for (int v : records[j].bumped[i]) cols.push_back({static_cast<int>(j) + 1, v});
    }
    if (!cols.empty()) out.push_back(TwoLineArray(std::move(cols)));
  }
  return out;
}

std::vector<TwoLineArray> inflatedBumpedArrays(const Word& w) {
  if (w.empty()) throw std::invalid_argument("inflatedBumpedArrays: empty word");
  std::vector<IInsertRecord> records;
  irsk(w, nullptr, &records);
  size_t maxRows = 0;
  for (const auto& rec : records) maxRows = std::max(maxRows, rec.inserted.size());
  std::vector<TwoLineArray> out;
  for (size_t i = 0; i < maxRows; ++i) {
    std::vector<TwoLineArray::Column> cols;
    for (size_t j = 0; j < records.size(); ++j) {
      if (i >= records[j].inserted.size()) continue;
      for (int v : records[j].inserted[i]) cols.push_back({static_cast<int>(j) + 1, v});
    }
    if (!cols.empty()) out.push_back(TwoLineArray(std::move(cols)));
  }
  return out;
}

FTriple fTriple(const TwoLineArray& a) {
  if (a.columns.empty()) throw std::invalid_argument("fTriple: empty array");
  RskPair pq = rsk(a);
  std::vector<std::vector<int>> pRows = tableauRows(pq.p);
  std::vector<std::vector<int>> qRows = tableauRows(pq.q);
  FTriple out;
  out.p = pRows.front();
  out.q = qRows.front();
  pRows.erase(pRows.begin());
  qRows.erase(qRows.begin());
  out.b = rskInverse(RskPair{fromRows(pRows), fromRows(qRows)});
  return out;
}

namespace {

std::string describeMismatch(const char* what, const Word& w, int i, int j) {
  return std::string(what) + " failed for word " + w.str() + " at column " + std::to_string(i) +
         ", stage " + std::to_string(j);
}

}  // namespace

ColumnTraceReport columnTraceCheck(const Word& w) {
  ColumnTraceReport report;
  int n = w.size();
  IntermediateTrace trace = wIntermediates(w);
  SkewTableau p = irsk(w).p;

  // insertion tableau columns match the trace: column i of W^(n-i) is P_i
  for (int i = 1; i <= n; ++i) {
    if (trace.stages[static_cast<size_t>(n - i)].column(i) != p.column(i)) {
      report.pass = false;
      report.detail = describeMismatch("column/trace comparison", w, i, n - i);
      return report;
    }
  }

  // prefix stability: W_i^(j)(w) = W_i^(j)(w_1..w_m) whenever i + j <= m
  for (int m = 1; m < n; ++m) {
    Word prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + m));
    IntermediateTrace prefTrace = wIntermediates(prefix);
    for (int j = 0; j < m; ++j) {
      for (int i = 1; i + j <= m; ++i) {
        if (trace.stages[static_cast<size_t>(j)].column(i) !=
            prefTrace.stages[static_cast<size_t>(j)].column(i)) {
          report.pass = false;
          report.detail = describeMismatch("prefix stability", w, i, j);
          return report;
        }
      }
    }
  }

  // column-count identity against M(w)
  CorrespondencePair pair = correspondence(w);
  for (int j = 0; j < n; ++j) {
    for (int i = 1; i + j <= n; ++i) {
      std::vector<int> mcol = pair.m.column(i);
      int absent = 0;
      for (int x = n - j; x <= n; ++x)
        if (std::find(mcol.begin(), mcol.end(), x) == mcol.end()) ++absent;
      if (static_cast<int>(trace.stages[static_cast<size_t>(j)].column(i).size()) != absent) {
        report.pass = false;
        report.detail = describeMismatch("column count identity", w, i, j);
        return report;
      }
    }
  }
  return report;
}

}  // namespace ktab
