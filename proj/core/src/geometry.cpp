#include "tinydet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace tinydet {

bool Ellipse::valid() const {
  return ra >= rb && rb > 0 && theta > 0 && theta < std::numbers::pi &&
         std::isfinite(cx) && std::isfinite(cy);
}

double iou(const Box& a, const Box& b) {
  const double iw = std::min(a.x2(), b.x2()) - std::max(a.x, b.x);
  const double ih = std::min(a.y2(), b.y2()) - std::max(a.y, b.y);
  if (iw <= 0 || ih <= 0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

double shape_jaccard_distance(const Shape& a, const Shape& b) {
  // Concentric placement: the intersection of two centered rectangles is
  // min(h) x min(w).
  const double inter = std::min(a.h, b.h) * std::min(a.w, b.w);
  const double uni = a.h * a.w + b.h * b.w - inter;
  return 1.0 - inter / uni;
}

std::vector<Box> nms(std::span<const Box> dets, double threshold) {
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (dets[i].score != dets[j].score) return dets[i].score > dets[j].score;
    return i < j;
  });

  std::vector<Box> kept;
  kept.reserve(dets.size());
  for (std::size_t idx : order) {
    const Box& cand = dets[idx];
    bool suppressed = false;
    for (const Box& k : kept) {
      if (iou(cand, k) > threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(cand);
  }
  return kept;
}

Ellipse box_to_ellipse(const Box& b) {
  Ellipse e;
  e.cx = b.cx();
  e.cy = b.cy();
  e.ra = 0.5 * b.h;
  e.rb = 0.5 * b.w;
  e.theta = std::numbers::pi / 2;
  e.score = b.score;
  return e;
}

}  // namespace tinydet
