#include "lapdyn/spectrum.hpp"

#include "lapdyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lapdyn {

namespace {

double sign(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

void sort_spectrum(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

Matrix hessenberg(const Matrix& m) {
  Matrix a = m;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    Vector x = a.col(k).tail(n - k - 1);
    double alpha = x.norm();
    if (alpha == 0.0) continue;
    if (x(0) > 0) alpha = -alpha;
    Vector v = x;
    v(0) -= alpha;
    double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;
    // A <- H A H with H = I - 2 v v^T acting on rows/cols k+1..n-1.
    auto rows = a.bottomRows(n - k - 1);
    rows -= 2.0 * v * (v.transpose() * rows);
    auto cols = a.rightCols(n - k - 1);
    cols -= 2.0 * (cols * v) * v.transpose();
    a.col(k).tail(n - k - 2).setZero();
    a(k + 1, k) = alpha;
  }
  return a;
}

// Francis double-shift QR on an upper Hessenberg matrix, after the EISPACK hqr scheme.
Spectrum eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix must be square");
  const int n = static_cast<int>(m.rows());
  Matrix a = hessenberg(m);
  std::vector<double> wr(n, 0.0), wi(n, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = 1e-14 * inf_norm(m);
  const long max_sweeps = 100L * std::max(n, 1);
  long sweeps = 0;

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l;
    do {
      for (l = nn; l > 0; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        double sub = std::abs(a(l, l - 1));
        if (sub <= eps * s || sub <= floor) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -z;
            wi[nn] = z;
          }
          nn -= 2;
        } else {
          if (++sweeps > max_sweeps) {
            std::vector<Complex> partial;
            for (int i = nn + 1; i < n; ++i) partial.emplace_back(wr[i], wi[i]);
            sort_spectrum(partial);
            throw NoConvergence("QR iteration did not converge within " + std::to_string(max_sweeps) + " sweeps",
                                std::move(partial));
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift.
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int mm;
          double p = 0.0, q = 0.0, r = 0.0, z;
          for (mm = nn - 2; mm >= l; --mm) {
            z = a(mm, mm);
            r = x - z;
            double s = y - z;
            p = (r * s - w) / a(mm + 1, mm) + a(mm, mm + 1);
            q = a(mm + 1, mm + 1) - z - r - s;
            r = a(mm + 2, mm + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (mm == l) break;
            double u = std::abs(a(mm, mm - 1)) * (std::abs(q) + std::abs(r));
            double v = std::abs(p) * (std::abs(a(mm - 1, mm - 1)) + std::abs(z) + std::abs(a(mm + 1, mm + 1)));
            if (u <= eps * v) break;
          }
          for (int i = mm; i < nn - 1; ++i) {
            a(i + 2, i) = 0.0;
            if (i != mm) a(i + 2, i - 1) = 0.0;
          }
          for (int k = mm; k < nn; ++k) {
            if (k != mm) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            double s = sign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == mm) {
              if (l != mm) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k + 1 != nn) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            int imax = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= imax; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k + 1 != nn) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (nn >= 0 && l + 1 < nn);
  }

  Spectrum out;
  out.eigenvalues.reserve(n);
  for (int i = 0; i < n; ++i) out.eigenvalues.emplace_back(wr[i], wi[i]);
  sort_spectrum(out.eigenvalues);
  return out;
}

Index zero_multiplicity(const Spectrum& s, double tol) {
  return static_cast<Index>(
      std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [tol](Complex z) { return std::abs(z) < tol; }));
}

GersgorinReport gersgorin_check(const LaplacianMatrix& l, const Spectrum& s) {
  GersgorinReport rep;
  for (Index i = 0; i < l.size(); ++i) rep.disks.push_back({l.eplus()(i), l.e()(i)});
  for (Index k = 0; k < s.size(); ++k) {
    Complex z = s.eigenvalues[k];
    bool inside = std::any_of(rep.disks.begin(), rep.disks.end(), [z](const GersgorinDisk& d) {
      return std::abs(z - d.center) <= d.radius + 1e-8;
    });
    if (!inside) rep.violations.push_back(k);
  }
  rep.consistent = rep.violations.empty();
  return rep;
}

namespace {

template <class Mat>
Index rank_from_qr(const Mat& m, double scale) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  const double tol = 1e-9 * scale;
  auto diag = qr.matrixQR().diagonal();
  Index r = 0;
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (std::abs(diag(i)) > tol) ++r;
  return r;
}

}  // namespace

Index numerical_rank(const Matrix& m, double scale) {
  return rank_from_qr(m, scale < 0.0 ? inf_norm(m) : scale);
}

Index numerical_rank(const Eigen::MatrixXcd& m, double scale) { return rank_from_qr(m, scale); }

Index geometric_multiplicity(const Matrix& m, Complex lambda) {
  const Index n = static_cast<Index>(m.rows());
  const double scale = inf_norm(m);
  if (lambda.imag() == 0.0) {
    Matrix shifted = m - lambda.real() * Matrix::Identity(m.rows(), m.cols());
    return n - numerical_rank(shifted, scale);
  }
  Eigen::MatrixXcd shifted = m.cast<Complex>();
  shifted.diagonal().array() -= lambda;
  return n - numerical_rank(shifted, scale);
}

std::vector<EigenvalueCluster> multiplicity_report(const Matrix& m, const Spectrum& s, double tol) {
  const Index n = s.size();
  std::vector<Index> parent(n);
  for (Index i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(s.eigenvalues[i] - s.eigenvalues[j]) < tol) parent[find(j)] = find(i);

  std::vector<EigenvalueCluster> out;
  std::vector<Index> seen;
  for (Index i = 0; i < n; ++i) {
    Index root = find(i);
    if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
    seen.push_back(root);
    Complex sum = 0.0;
    Index count = 0;
    for (Index j = 0; j < n; ++j)
      if (find(j) == root) {
        sum += s.eigenvalues[j];
        ++count;
      }
    Complex mean = sum / static_cast<double>(count);
    if (std::abs(mean.imag()) < tol) mean = {mean.real(), 0.0};
    out.push_back({mean, count, geometric_multiplicity(m, mean)});
  }
  return out;
}

}  // namespace lapdyn
