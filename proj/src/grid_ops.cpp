#include "expertseg/grid_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace expertseg {

DualField gradient(const Image& u, GridSpec grid) {
  if (u.channels != 1) throw std::invalid_argument("gradient: single-channel input required");
  if (grid.h <= 0.0) throw std::invalid_argument("gradient: grid spacing must be positive");
  const int H = u.height, W = u.width;
  const double inv_h = 1.0 / grid.h;
  DualField g(H, W);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      const std::size_t i = g.idx(y, x);
      g.v1[i] = (y < H - 1) ? (u.at(y + 1, x) - u.at(y, x)) * inv_h : 0.0;
      g.v2[i] = (x < W - 1) ? (u.at(y, x + 1) - u.at(y, x)) * inv_h : 0.0;
    }
  }
  return g;
}

Image divergence(const DualField& v, GridSpec grid) {
  if (grid.h <= 0.0) throw std::invalid_argument("divergence: grid spacing must be positive");
  const int H = v.height, W = v.width;
  const double inv_h = 1.0 / grid.h;
  Image d(H, W, 1);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      double d1;
      if (y == 0)
        d1 = v.v1[v.idx(0, x)];
      else if (y == H - 1)
        d1 = -v.v1[v.idx(H - 2, x)];
      else
        d1 = v.v1[v.idx(y, x)] - v.v1[v.idx(y - 1, x)];
      double d2;
      if (x == 0)
        d2 = v.v2[v.idx(y, 0)];
      else if (x == W - 1)
        d2 = -v.v2[v.idx(y, W - 2)];
      else
        d2 = v.v2[v.idx(y, x)] - v.v2[v.idx(y, x - 1)];
      d.at(y, x) = (d1 + d2) * inv_h;
    }
  }
  return d;
}

double tv_isotropic(const Image& u, GridSpec grid) {
  const DualField g = gradient(u, grid);
  double tv = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    tv += std::sqrt(g.v1[i] * g.v1[i] + g.v2[i] * g.v2[i]);
  return tv;
}

Mask project_interval(Mask u) {
  for (double& v : u.pix) v = std::clamp(v, 0.0, 1.0);
  return u;
}

DualField project_ball_2inf(DualField v, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("project_ball_2inf: radius must be positive");
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double norm = std::sqrt(v.v1[i] * v.v1[i] + v.v2[i] * v.v2[i]);
    const double f = std::max(1.0, norm / radius);
    v.v1[i] /= f;
    v.v2[i] /= f;
  }
  return v;
}

namespace {
// Mirror index into [0, n): -1 -> 0, n -> n-1 (edge-inclusive reflection).
inline int mirror(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - i - 1;
  }
  return i;
}
}  // namespace

Image mean_filter(const Image& img, int width) {
  if (width <= 0 || width % 2 == 0) throw std::invalid_argument("mean_filter: width must be odd and positive");
  if (width == 1) return img;
  const int H = img.height, W = img.width, r = width / 2;
  const double inv_area = 1.0 / (static_cast<double>(width) * width);
  Image out(H, W, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < H; ++y) {
      for (int x = 0; x < W; ++x) {
        double s = 0.0;
        for (int dy = -r; dy <= r; ++dy) {
          const int yy = mirror(y + dy, H);
          for (int dx = -r; dx <= r; ++dx) s += img.at(c, yy, mirror(x + dx, W));
        }
        out.at(c, y, x) = s * inv_area;
      }
    }
  }
  return out;
}

CheckerboardSplit checkerboard_split(const Image& img) {
  const int H = img.height, W = img.width;
  if (H % 2 != 0 || W % 2 != 0)
    throw std::invalid_argument("checkerboard_split: even height and width required (see crop_to_even)");
  CheckerboardSplit s{Image(H, W / 2, img.channels), Image(H, W / 2, img.channels),
                      Image(H / 2, W, img.channels), Image(H / 2, W, img.channels)};
  for (int c = 0; c < img.channels; ++c) {
    // Horizontal pair: row i of the even image holds the columns with
    // (row+col) even, compacted left; the odd image holds the complement.
    for (int y = 0; y < H; ++y) {
      const int off = y % 2;
      for (int x = 0; x < W / 2; ++x) {
        s.even.at(c, y, x) = img.at(c, y, 2 * x + off);
        s.odd.at(c, y, x) = img.at(c, y, 2 * x + (1 - off));
      }
    }
    // Vertical pair: same parity rule along rows.
    for (int y = 0; y < H / 2; ++y) {
      for (int x = 0; x < W; ++x) {
        const int off = x % 2;
        s.even_v.at(c, y, x) = img.at(c, 2 * y + off, x);
        s.odd_v.at(c, y, x) = img.at(c, 2 * y + (1 - off), x);
      }
    }
  }
  return s;
}

Image checkerboard_merge(const Image& even, const Image& odd) {
  if (!even.same_shape(odd)) throw std::invalid_argument("checkerboard_merge: shape mismatch");
  Image out(even.height, even.width * 2, even.channels);
  for (int c = 0; c < even.channels; ++c) {
    for (int y = 0; y < even.height; ++y) {
      const int off = y % 2;
      for (int x = 0; x < even.width; ++x) {
        out.at(c, y, 2 * x + off) = even.at(c, y, x);
        out.at(c, y, 2 * x + (1 - off)) = odd.at(c, y, x);
      }
    }
  }
  return out;
}

Image checkerboard_merge_v(const Image& even_v, const Image& odd_v) {
  if (!even_v.same_shape(odd_v)) throw std::invalid_argument("checkerboard_merge_v: shape mismatch");
  Image out(even_v.height * 2, even_v.width, even_v.channels);
  for (int c = 0; c < even_v.channels; ++c) {
    for (int y = 0; y < even_v.height; ++y) {
      for (int x = 0; x < even_v.width; ++x) {
        const int off = x % 2;
        out.at(c, 2 * y + off, x) = even_v.at(c, y, x);
        out.at(c, 2 * y + (1 - off), x) = odd_v.at(c, y, x);
      }
    }
  }
  return out;
}

Image crop_to_even(const Image& img) {
  const int H = img.height - img.height % 2, W = img.width - img.width % 2;
  if (H == img.height && W == img.width) return img;
  Image out(H, W, img.channels);
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x) out.at(c, y, x) = img.at(c, y, x);
  return out;
}

Mask rasterize_box(int height, int width, const Box& box) {
  if (box.w <= 0) throw std::invalid_argument("rasterize_box: box width " + std::to_string(box.w) + " must be positive");
  if (box.h <= 0) throw std::invalid_argument("rasterize_box: box height " + std::to_string(box.h) + " must be positive");
  if (box.x < 0) throw std::invalid_argument("rasterize_box: box x " + std::to_string(box.x) + " out of bounds");
  if (box.y < 0) throw std::invalid_argument("rasterize_box: box y " + std::to_string(box.y) + " out of bounds");
  if (box.x + box.w > width)
    throw std::invalid_argument("rasterize_box: box right edge " + std::to_string(box.x + box.w) +
                                " exceeds grid width " + std::to_string(width));
  if (box.y + box.h > height)
    throw std::invalid_argument("rasterize_box: box bottom edge " + std::to_string(box.y + box.h) +
                                " exceeds grid height " + std::to_string(height));
  Mask m(height, width, 1, 0.0);
  for (int y = box.y; y < box.y + box.h; ++y)
    for (int x = box.x; x < box.x + box.w; ++x) m.at(y, x) = 1.0;
  return m;
}

double dot(const Image& a, const Image& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("dot: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.pix.size(); ++i) s += a.pix[i] * b.pix[i];
  return s;
}

double dot(const DualField& a, const DualField& b) {
  if (a.height != b.height || a.width != b.width) throw std::invalid_argument("dot: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.v1[i] * b.v1[i] + a.v2[i] * b.v2[i];
  return s;
}

}  // namespace expertseg
