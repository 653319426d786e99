#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace expertseg {

struct GridSpec {
  double h = 1.0;
};

/// Row-major pixel grid, planar channel layout: channel c occupies
/// pix[c*H*W .. (c+1)*H*W). Intensities are expected in [0,1] once an
/// image has been ingested/normalized; raw ranges are allowed before that.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> pix;

  Image() = default;
  Image(int h, int w, int c = 1, double fill = 0.0)
      : height(h), width(w), channels(c),
        pix(static_cast<std::size_t>(h) * w * c, fill) {
    if (h <= 0 || w <= 0 || (c != 1 && c != 3))
      throw std::invalid_argument("Image: invalid shape");
  }

  std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
  std::size_t size() const { return pix.size(); }

  double& at(int y, int x) { return pix[static_cast<std::size_t>(y) * width + x]; }
  double at(int y, int x) const { return pix[static_cast<std::size_t>(y) * width + x]; }
  double& at(int c, int y, int x) { return pix[c * plane_size() + static_cast<std::size_t>(y) * width + x]; }
  double at(int c, int y, int x) const { return pix[c * plane_size() + static_cast<std::size_t>(y) * width + x]; }

  bool same_grid(const Image& o) const { return height == o.height && width == o.width; }
  bool same_shape(const Image& o) const { return same_grid(o) && channels == o.channels; }

  double min_value() const;
  double max_value() const;
  double mean_value() const;

  /// Affine rescale to [0,1]; constant images map to 0.
  void normalize();

  Image channel(int c) const;
};

/// Segmentation masks share the Image grid; values live in [0,1].
using Mask = Image;

/// Two-component per-pixel field, the dual variable of the TV term.
struct DualField {
  int height = 0;
  int width = 0;
  std::vector<double> v1, v2;

  DualField() = default;
  DualField(int h, int w)
      : height(h), width(w),
        v1(static_cast<std::size_t>(h) * w, 0.0),
        v2(static_cast<std::size_t>(h) * w, 0.0) {
    if (h <= 0 || w <= 0) throw std::invalid_argument("DualField: invalid shape");
  }

  std::size_t size() const { return v1.size(); }
  std::size_t idx(int y, int x) const { return static_cast<std::size_t>(y) * width + x; }
};

/// BT.601 luma of an RGB image; single-channel images pass through.
Image luma601(const Image& img);

/// True when every pixel is exactly 0 or 1.
bool is_binary(const Mask& m);

/// True when every pixel lies in [0,1] up to tol.
bool in_unit_interval(const Mask& m, double tol = 0.0);

Image operator-(const Image& a, const Image& b);
Mask complement(const Mask& m);

}  // namespace expertseg
