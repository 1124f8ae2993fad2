#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arrtool/rational.hpp"

namespace arrtool {

/// Non-vertical real line y = slope * x + intercept.
struct Line {
  std::size_t id = 0;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

/// Intersection point of at least two lines. `incident_lines` is sorted by id.
struct Point {
  std::size_t id = 0;
  Rational x;
  Rational y;
  std::vector<std::size_t> incident_lines;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Classification { empty, all_parallel, connected_incidence, general };

std::string_view to_string(Classification c);

/// Immutable real line arrangement with its intersection points.
/// Point ids follow lexicographic (x, y) order.
class Arrangement {
 public:
  Arrangement() = default;
  /// Validates (no duplicates) and computes intersection points.
  /// Throws DuplicateLine.
  static Arrangement from_lines(std::vector<Line> lines);

  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Point>& points() const { return points_; }
  Classification classification() const { return classification_; }
  std::size_t line_count() const { return lines_.size(); }
  std::size_t point_count() const { return points_.size(); }

 private:
  std::vector<Line> lines_;
  std::vector<Point> points_;
  Classification classification_ = Classification::empty;
};

/// Coefficient pair as written in an input document.
struct LineSpec {
  std::string slope;
  std::string intercept;
  bool vertical = false;
};

/// Builds an arrangement from textual coefficients. Throws ParseError,
/// DuplicateLine, VerticalLineUnsupported.
Arrangement make_arrangement(const std::vector<LineSpec>& specs);

/// Parses a structured-text document with a top-level `lines` list.
Arrangement parse_arrangement(std::string_view document);

/// Deduplicated intersection points; a point on r lines appears once.
std::vector<Point> intersection_points(const std::vector<Line>& lines);

Classification classify(const Arrangement& arrangement);

}  // namespace arrtool
