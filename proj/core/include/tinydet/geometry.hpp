#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tinydet {

/// Axis-aligned rectangle, continuous pixel coordinates, top-left origin.
struct Box {
  double x = 0;  // left edge
  double y = 0;  // top edge
  double w = 0;
  double h = 0;
  double score = 0;

  double x2() const { return x + w; }
  double y2() const { return y + h; }
  double cx() const { return x + 0.5 * w; }
  double cy() const { return y + 0.5 * h; }
  double area() const { return w * h; }
  bool valid() const { return w > 0 && h > 0; }
};

/// A bounding-box shape: dimensions only, position factored out.
struct Shape {
  double h = 0;
  double w = 0;
  bool operator==(const Shape&) const = default;
};

/// Rotated ellipse. theta is the major-axis angle in radians; the valid
/// range is (0, pi) so cot(theta) stays finite, with theta = pi/2 meaning
/// an axis-aligned, vertical-major ellipse.
struct Ellipse {
  double cx = 0;
  double cy = 0;
  double ra = 0;  // half major axis
  double rb = 0;  // half minor axis
  double theta = 0;
  double score = 0;

  bool valid() const;
};

/// Intersection-over-union of two boxes. Exact rectangle arithmetic.
double iou(const Box& a, const Box& b);

/// Jaccard distance between two shapes compared as concentric rectangles.
/// 0 iff equal, 1 iff (in the limit) disjoint areas; a metric.
double shape_jaccard_distance(const Shape& a, const Shape& b);

/// Greedy non-maximum suppression. Boxes are visited in descending score
/// order (ties keep the earlier input index); a box is kept iff its IoU with
/// every previously kept box is <= threshold. Output sorted by descending
/// score, same tie rule.
std::vector<Box> nms(std::span<const Box> dets, double threshold);

/// Axis-aligned ellipse inscribed in the box: ra = h/2, rb = w/2,
/// theta = pi/2. Score carries over.
Ellipse box_to_ellipse(const Box& b);

}  // namespace tinydet
