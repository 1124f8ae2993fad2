#include "arrtool/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "arrtool/errors.hpp"

namespace arrtool {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::empty: return "empty";
    case Classification::all_parallel: return "all-parallel";
    case Classification::connected_incidence: return "connected";
    case Classification::general: return "general";
  }
  return "?";
}

std::vector<Point> intersection_points(const std::vector<Line>& lines) {
  // (x, y) -> incident line ids; std::map keeps lexicographic order.
  std::map<std::pair<Rational, Rational>, std::set<std::size_t>> found;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& a = lines[i];
      const Line& b = lines[j];
      if (a.slope == b.slope) continue;
      Rational x = (b.intercept - a.intercept) / (a.slope - b.slope);
      Rational y = a.at(x);
      auto& ids = found[{x, y}];
      ids.insert(a.id);
      ids.insert(b.id);
    }
  }
  std::vector<Point> points;
  points.reserve(found.size());
  for (auto& [xy, ids] : found) {
    Point p;
    p.id = points.size();
    p.x = xy.first;
    p.y = xy.second;
    p.incident_lines.assign(ids.begin(), ids.end());
    points.push_back(std::move(p));
  }
  return points;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

Classification classify_parts(std::size_t line_count, const std::vector<Point>& points) {
  if (line_count == 0) return Classification::empty;
  if (points.empty()) return Classification::all_parallel;
  // Vertices: lines 0..k-1, points k..k+|P|-1.
  UnionFind uf(line_count + points.size());
  for (const Point& p : points)
    for (std::size_t l : p.incident_lines) uf.unite(l, line_count + p.id);
  std::size_t root = uf.find(0);
  for (std::size_t v = 1; v < line_count + points.size(); ++v)
    if (uf.find(v) != root) return Classification::general;
  return Classification::connected_incidence;
}

}  // namespace

Arrangement Arrangement::from_lines(std::vector<Line> lines) {
  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    lines[i].id = i;
    if (!seen.insert({lines[i].slope, lines[i].intercept}).second)
      throw DuplicateLine("line " + std::to_string(i) + " (y = " + lines[i].slope.str() + " x + " +
                          lines[i].intercept.str() + ") repeats an earlier line");
  }
  Arrangement a;
  a.lines_ = std::move(lines);
  a.points_ = intersection_points(a.lines_);
  a.classification_ = classify_parts(a.lines_.size(), a.points_);
  return a;
}

Classification classify(const Arrangement& arrangement) {
  return classify_parts(arrangement.line_count(), arrangement.points());
}

namespace {

bool names_infinity(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.erase(0, 1);
  return s == "inf" || s == ".inf" || s == "infinity" || s == "vertical" || s == "nan" || s == ".nan";
}

}  // namespace

Arrangement make_arrangement(const std::vector<LineSpec>& specs) {
  std::vector<Line> lines;
  lines.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const LineSpec& s = specs[i];
    if (s.vertical || names_infinity(s.slope))
      throw VerticalLineUnsupported("line " + std::to_string(i) + " is vertical or has a non-finite slope");
    if (names_infinity(s.intercept))
      throw VerticalLineUnsupported("line " + std::to_string(i) + " has a non-finite intercept");
    Line l;
    l.id = i;
    l.slope = Rational::parse(s.slope);
    l.intercept = Rational::parse(s.intercept);
    lines.push_back(std::move(l));
  }
  return Arrangement::from_lines(std::move(lines));
}

}  // namespace arrtool
