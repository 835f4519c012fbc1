#pragma once

#include <array>
#include <vector>

#include "aligndet/common.hpp"

namespace aligndet {

// Axis-aligned box in center format. Corner format appears only at
// serialization boundaries.
struct BBox {
  double cx = 0, cy = 0, w = 0, h = 0;

  BBox() = default;
  BBox(double cx_, double cy_, double w_, double h_)
      : cx(cx_), cy(cy_), w(w_), h(h_) {}

  static BBox from_corners(double x0, double y0, double x1, double y1) {
    return BBox(0.5 * (x0 + x1), 0.5 * (y0 + y1), x1 - x0, y1 - y0);
  }

  double x0() const { return cx - 0.5 * w; }
  double y0() const { return cy - 0.5 * h; }
  double x1() const { return cx + 0.5 * w; }
  double y1() const { return cy + 0.5 * h; }
  double area() const { return w * h; }
  double max_side() const { return w > h ? w : h; }
  bool valid() const;
};

// Background sentinel for assignment labels.
constexpr int kBackground = -1;
// Entries between the positive and negative thresholds; excluded from
// every loss.
constexpr int kIgnore = -2;

// Box plus assigned proposal index (kBackground, or 0-based index into
// the batch's proposal set).
struct LabeledBox {
  BBox box;
  int label = kBackground;
};

struct ScoredBox {
  BBox box;
  double score = 0;
};

double iou(const BBox& a, const BBox& b);

// Greedy descending-score suppression. Ties broken by lower input index.
// Returns kept indices sorted by descending score.
std::vector<int> nms(const std::vector<ScoredBox>& boxes, double iou_threshold);

// (dx, dy, dw, dh) with dx = (t.cx - a.cx) / a.w, dw = ln(t.w / a.w).
std::array<double, 4> encode_deltas(const BBox& anchor, const BBox& target);
BBox decode_deltas(const BBox& anchor, const std::array<double, 4>& deltas);

// Clamps extents into [0, W] x [0, H]. Throws EmptyBoxError if the box
// lies entirely outside the image.
BBox clip_to_image(const BBox& box, double width, double height);

// Non-throwing variant: false when the clipped box would be empty.
bool try_clip_to_image(const BBox& box, double width, double height, BBox* out);

}  // namespace aligndet
