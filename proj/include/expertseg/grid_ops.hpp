#pragma once

#include "expertseg/image.hpp"

namespace expertseg {

/// Forward differences with Neumann boundary conditions, scaled by 1/h.
/// Component 1 differentiates along rows (last row zero), component 2
/// along columns (last column zero). Single-channel input only.
DualField gradient(const Image& u, GridSpec grid = {});

/// Discrete divergence, the negative adjoint of gradient: <grad u, v> == -<u, div v>.
Image divergence(const DualField& v, GridSpec grid = {});

/// Isotropic TV seminorm: sum over pixels of |grad u[i]|_2.
double tv_isotropic(const Image& u, GridSpec grid = {});

/// Pixelwise clamp to [0,1].
Mask project_interval(Mask u);

/// Pixelwise projection onto the radius-lambda 2-ball: v / max(1, |v|_2/lambda).
DualField project_ball_2inf(DualField v, double radius);

/// Box average of odd width with mirrored boundaries; width 1 is the identity.
Image mean_filter(const Image& img, int width);

struct CheckerboardSplit {
  Image even, odd;      // height x width/2
  Image even_v, odd_v;  // height/2 x width
};

/// Checkerboard downsampling into four half-size images. Requires even
/// height and width; crop_to_even() implements the training-side crop rule.
CheckerboardSplit checkerboard_split(const Image& img);

/// Inverse of the (even, odd) horizontal pair; recovers the original image.
Image checkerboard_merge(const Image& even, const Image& odd);

/// Inverse of the (even_v, odd_v) vertical pair.
Image checkerboard_merge_v(const Image& even_v, const Image& odd_v);

/// Drops a trailing row/column when the extent is odd.
Image crop_to_even(const Image& img);

struct Box {
  int x = 0, y = 0, w = 0, h = 0;
};

/// Binary mask of an axis-aligned box: 1 on rows [y, y+h) x cols [x, x+w).
Mask rasterize_box(int height, int width, const Box& box);

double dot(const Image& a, const Image& b);
double dot(const DualField& a, const DualField& b);

}  // namespace expertseg
