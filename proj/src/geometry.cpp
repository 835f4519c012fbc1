#include "aligndet/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace aligndet {

bool BBox::valid() const {
  return w > 0 && h > 0 && std::isfinite(cx) && std::isfinite(cy) &&
         std::isfinite(w) && std::isfinite(h);
}

double iou(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0()));
  const double iy = std::max(0.0, std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0()));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

std::vector<int> nms(const std::vector<ScoredBox>& boxes, double iou_threshold) {
  std::vector<int> order(boxes.size());
  for (size_t i = 0; i < boxes.size(); ++i) order[i] = int(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return boxes[a].score > boxes[b].score;
  });
  std::vector<int> kept;
  std::vector<char> suppressed(boxes.size(), 0);
  for (int i : order) {
    if (suppressed[i]) continue;
    kept.push_back(i);
    for (int j : order) {
      if (suppressed[j] || j == i) continue;
      if (iou(boxes[i].box, boxes[j].box) > iou_threshold) suppressed[j] = 1;
    }
  }
  return kept;
}

std::array<double, 4> encode_deltas(const BBox& anchor, const BBox& target) {
  return {(target.cx - anchor.cx) / anchor.w, (target.cy - anchor.cy) / anchor.h,
          std::log(target.w / anchor.w), std::log(target.h / anchor.h)};
}

BBox decode_deltas(const BBox& anchor, const std::array<double, 4>& d) {
  return BBox(anchor.cx + d[0] * anchor.w, anchor.cy + d[1] * anchor.h,
              anchor.w * std::exp(d[2]), anchor.h * std::exp(d[3]));
}

bool try_clip_to_image(const BBox& box, double width, double height, BBox* out) {
  const double x0 = std::clamp(box.x0(), 0.0, width);
  const double y0 = std::clamp(box.y0(), 0.0, height);
  const double x1 = std::clamp(box.x1(), 0.0, width);
  const double y1 = std::clamp(box.y1(), 0.0, height);
  if (x1 - x0 <= 0 || y1 - y0 <= 0) return false;
  if (out) *out = BBox::from_corners(x0, y0, x1, y1);
  return true;
}

BBox clip_to_image(const BBox& box, double width, double height) {
  BBox out;
  if (!try_clip_to_image(box, width, height, &out)) {
    throw EmptyBoxError("box lies outside the image after clipping");
  }
  return out;
}

}  // namespace aligndet
