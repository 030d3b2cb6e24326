#pragma once

#include "lapdyn/spectrum.hpp"

#include <string>

namespace lapdyn::cli {

/// Self-contained SVG scatter of two spectra on the fixed window [-2.5, 2.5]^2,
/// with the unit circle and the disk of radius 1 about -1. Points outside the
/// window are drawn clamped to its edge as hollow markers.
std::string spectrum_svg(const Spectrum& stochastic, const Spectrum& minus_laplacian, const std::string& title);

}  // namespace lapdyn::cli
