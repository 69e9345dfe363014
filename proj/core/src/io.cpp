#include "ktab/io.hpp"

#include <iomanip>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace ktab {

namespace {

int digitWidth(int v) { return static_cast<int>(std::to_string(v).size()); }

std::string renderCells(int numRows, int numCols,
                        const std::function<std::string(int, int)>& cell) {
  int width = 1;
  for (int r = 1; r <= numRows; ++r)
    for (int c = 1; c <= numCols; ++c) width = std::max(width, static_cast<int>(cell(r, c).size()));
  std::ostringstream out;
  for (int r = 1; r <= numRows; ++r) {
    std::string line;
    for (int c = 1; c <= numCols; ++c) {
      std::string s = cell(r, c);
      line += std::string(static_cast<size_t>(width - static_cast<int>(s.size())), ' ') + s;
      if (c < numCols) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::string render(const SkewTableau& t) {
  if (t.empty()) return "";
  return renderCells(t.numRows(), t.numCols(), [&](int r, int c) -> std::string {
    auto e = t.entry(r, c);
    return e ? std::to_string(*e) : "";
  });
}

std::string render(const DotState& s) {
  int numRows = 0, numCols = 0;
  for (const auto& [b, e] : s.entries) {
    numRows = std::max(numRows, b.row);
    numCols = std::max(numCols, b.col);
  }
  for (const Box& b : s.dots) {
    numRows = std::max(numRows, b.row);
    numCols = std::max(numCols, b.col);
  }
  return renderCells(numRows, numCols, [&](int r, int c) -> std::string {
    if (s.dots.count(Box{r, c})) return "*";
    auto it = s.entries.find(Box{r, c});
    return it == s.entries.end() ? "" : std::to_string(it->second);
  });
}

std::string render(const MoonPolyomino& m) {
  return renderCells(m.numRows(), m.numCols(),
                     [&](int r, int c) -> std::string { return m.hasCell(r, c) ? "#" : ""; });
}

std::string render(const Filling& f) {
  return renderCells(f.board.numRows(), f.board.numCols(), [&](int r, int c) -> std::string {
    if (!f.board.hasCell(r, c)) return "";
    return f.ones.count(Box{r, c}) ? "1" : ".";
  });
}

namespace {

nlohmann::json tableauJson(const SkewTableau& t) {
  nlohmann::json j;
  j["outer"] = t.outer().parts;
  j["inner"] = t.inner().parts;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= t.numRows(); ++r) {
    std::vector<int> row;
    for (int c = t.inner().part(r) + 1; c <= t.outer().part(r); ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  return j;
}

}  // namespace

std::string toJson(const SkewTableau& t) { return tableauJson(t).dump(); }

SkewTableau tableauFromJson(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  Partition outer(j.at("outer").get<std::vector<int>>());
  Partition inner(j.at("inner").get<std::vector<int>>());
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return SkewTableau(std::move(outer), std::move(inner), std::move(rows));
}

std::string toJson(const CorrespondencePair& pair) {
  nlohmann::json j;
  j["W"] = tableauJson(pair.w);
  j["M"] = tableauJson(pair.m);
  return j.dump();
}

std::string toJson(const IrskPair& pair) {
  nlohmann::json j;
  j["P"] = tableauJson(pair.p);
  j["Q"] = tableauJson(pair.q);
  return j.dump();
}

std::string toJson(const TwoLineArray& a) {
  nlohmann::json j;
  std::vector<int> idx, val;
  for (const auto& c : a.columns) {
    idx.push_back(c.index);
    val.push_back(c.value);
  }
  j["indices"] = idx;
  j["values"] = val;
  return j.dump();
}

MoonPolyomino boardFromStream(std::istream& in) {
  std::vector<RowSpan> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    RowSpan span{};
    if (ls >> span.row >> span.colStart >> span.colEnd) rows.push_back(span);
  }
  return MoonPolyomino::validate(std::move(rows));
}

std::string boardToText(const MoonPolyomino& m) {
  std::ostringstream out;
  for (const RowSpan& r : m.rows()) out << r.row << ' ' << r.colStart << ' ' << r.colEnd << '\n';
  return out.str();
}

}  // namespace ktab
