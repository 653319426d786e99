#include "expertseg/image.hpp"

#include <algorithm>
#include <cmath>

namespace expertseg {

double Image::min_value() const {
  return *std::min_element(pix.begin(), pix.end());
}

double Image::max_value() const {
  return *std::max_element(pix.begin(), pix.end());
}

double Image::mean_value() const {
  double s = 0.0;
  for (double v : pix) s += v;
  return s / static_cast<double>(pix.size());
}

void Image::normalize() {
  const double lo = min_value(), hi = max_value();
  if (hi <= lo) {
    std::fill(pix.begin(), pix.end(), 0.0);
    return;
  }
  const double scale = 1.0 / (hi - lo);
  for (double& v : pix) v = (v - lo) * scale;
}

Image Image::channel(int c) const {
  if (c < 0 || c >= channels) throw std::invalid_argument("Image::channel: index out of range");
  Image out(height, width, 1);
  std::copy(pix.begin() + c * plane_size(), pix.begin() + (c + 1) * plane_size(), out.pix.begin());
  return out;
}

Image luma601(const Image& img) {
  if (img.channels == 1) return img;
  Image out(img.height, img.width, 1);
  const std::size_t n = img.plane_size();
  for (std::size_t i = 0; i < n; ++i)
    out.pix[i] = 0.299 * img.pix[i] + 0.587 * img.pix[n + i] + 0.114 * img.pix[2 * n + i];
  return out;
}

bool is_binary(const Mask& m) {
  for (double v : m.pix)
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

bool in_unit_interval(const Mask& m, double tol) {
  for (double v : m.pix)
    if (!(v >= -tol && v <= 1.0 + tol)) return false;
  return true;
}

Image operator-(const Image& a, const Image& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("Image subtraction: shape mismatch");
  Image out = a;
  for (std::size_t i = 0; i < out.pix.size(); ++i) out.pix[i] -= b.pix[i];
  return out;
}

Mask complement(const Mask& m) {
  Mask out = m;
  for (double& v : out.pix) v = 1.0 - v;
  return out;
}

}  // namespace expertseg
