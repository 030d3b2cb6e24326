#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lapdyn::cli {

namespace {

constexpr double kSize = 500.0;
constexpr double kHalf = 2.5;
constexpr double kScale = kSize / (2 * kHalf);

double px(double x) { return (x + kHalf) * kScale; }
double py(double y) { return (kHalf - y) * kScale; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void points(std::ostringstream& os, const Spectrum& s, const char* colour, bool cross) {
  for (Complex z : s.eigenvalues) {
    double x = std::clamp(z.real(), -kHalf, kHalf), y = std::clamp(z.imag(), -kHalf, kHalf);
    bool clipped = x != z.real() || y != z.imag();
    double cx = px(x), cy = py(y);
    if (cross) {
      os << "<path d=\"M" << num(cx - 5) << ' ' << num(cy - 5) << "L" << num(cx + 5) << ' ' << num(cy + 5) << "M"
         << num(cx - 5) << ' ' << num(cy + 5) << "L" << num(cx + 5) << ' ' << num(cy - 5) << "\" stroke=\"" << colour
         << "\" stroke-width=\"2\"" << (clipped ? " stroke-dasharray=\"2 2\"" : "") << "/>\n";
    } else {
      os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"4.5\" "
         << (clipped ? "fill=\"none\" stroke=\"" : "fill=\"") << colour << "\"/>\n";
    }
  }
}

}  // namespace

std::string spectrum_svg(const Spectrum& stochastic, const Spectrum& minus_laplacian, const std::string& title) {
  std::ostringstream os;
  const double h = kSize + 40;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(h) << "\">\n";
  os << "<title>" << escape(title) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // grid at integer coordinates
  for (int k = -2; k <= 2; ++k) {
    const char* stroke = k == 0 ? "#888" : "#e4e4e4";
    os << "<line x1=\"" << num(px(k)) << "\" y1=\"0\" x2=\"" << num(px(k)) << "\" y2=\"" << num(kSize)
       << "\" stroke=\"" << stroke << "\"/>\n";
    os << "<line x1=\"0\" y1=\"" << num(py(k)) << "\" x2=\"" << num(kSize) << "\" y2=\"" << num(py(k))
       << "\" stroke=\"" << stroke << "\"/>\n";
  }
  os << "<circle cx=\"" << num(px(0)) << "\" cy=\"" << num(py(0)) << "\" r=\"" << num(kScale)
     << "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-dasharray=\"6 4\"/>\n";
  os << "<circle cx=\"" << num(px(-1)) << "\" cy=\"" << num(py(0)) << "\" r=\"" << num(kScale)
     << "\" fill=\"#c0392b\" fill-opacity=\"0.08\" stroke=\"#c0392b\" stroke-dasharray=\"6 4\"/>\n";
  points(os, stochastic, "#1f5fa8", false);
  points(os, minus_laplacian, "#c0392b", true);
  os << "<text x=\"10\" y=\"" << num(kSize + 25) << "\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape(title) << ": dots = eigenvalues of S, crosses = eigenvalues of -L</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace lapdyn::cli
