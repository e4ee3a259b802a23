#include "signless/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace signless {

SymMatrix::SymMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
  if (order < 1)
    throw std::invalid_argument("matrix order must be positive");
}

auto SymMatrix::from_rows(const std::vector<std::vector<double>> &rows) -> SymMatrix {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      m.a_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
  }
  return m;
}

auto SymMatrix::set(int i, int j, double value) -> void {
  a_[static_cast<std::size_t>(i) * n_ + j] = value;
  a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

auto SymMatrix::trace() const -> double {
  double t = 0.0;
  for (int i = 0; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

auto SymMatrix::frobenius_norm() const -> double {
  double s = 0.0;
  for (const double x : a_)
    s += x * x;
  return std::sqrt(s);
}

auto operator+(const SymMatrix &a, const SymMatrix &b) -> SymMatrix {
  if (a.order() != b.order())
    throw std::invalid_argument("matrix orders differ");
  SymMatrix c(a.order());
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

auto Spectrum::vector(int i) const -> std::span<const double> {
  if (!vectors)
    throw std::logic_error("spectrum was computed without eigenvectors");
  const std::size_t n = values.size();
  return std::span<const double>(*vectors).subspan(static_cast<std::size_t>(i) * n, n);
}

namespace {

auto off_diagonal_norm(const std::vector<double> &a, int n) -> double {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        s += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(s);
}

}  // namespace

auto eigen_sym(const SymMatrix &m, double tol, bool want_vectors) -> Spectrum {
  if (!(tol > 0.0))
    throw std::invalid_argument("eigen_sym: tol must be positive");
  const int n = m.order();
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      v[idx(i, i)] = 1.0;
  }

  const double threshold = tol * m.frobenius_norm();
  double off = off_diagonal_norm(a, n);
  int sweeps = 0;
  while (off > threshold) {
    if (sweeps == kMaxJacobiSweeps)
      throw EigenError("eigen_sym: no convergence after " + std::to_string(kMaxJacobiSweeps) +
                       " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[idx(p, q)];
        if (apq == 0.0)
          continue;
        const double theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[idx(p, p)] -= t * apq;
        a[idx(q, q)] += t * apq;
        a[idx(p, q)] = 0.0;
        a[idx(q, p)] = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q)
            continue;
          const double akp = a[idx(k, p)];
          const double akq = a[idx(k, q)];
          const double nkp = akp - s * (akq + tau * akp);
          const double nkq = akq + s * (akp - tau * akq);
          a[idx(k, p)] = nkp;
          a[idx(p, k)] = nkp;
          a[idx(k, q)] = nkq;
          a[idx(q, k)] = nkq;
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const double vkp = v[idx(k, p)];
            const double vkq = v[idx(k, q)];
            v[idx(k, p)] = vkp - s * (vkq + tau * vkp);
            v[idx(k, q)] = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[idx(x, x)] > a[idx(y, y)]; });

  Spectrum spec;
  spec.sweeps = sweeps;
  spec.values.resize(n);
  for (int i = 0; i < n; ++i)
    spec.values[i] = a[idx(order[i], order[i])];

  if (want_vectors) {
    std::vector<double> cols(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        cols[static_cast<std::size_t>(i) * n + k] = v[idx(k, order[i])];
    spec.vectors = std::move(cols);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, rayleigh_residual(m, spec.values[i], spec.vector(i)));
    spec.max_residual = worst;
  } else {
    spec.max_residual = off;
  }
  return spec;
}

auto signless_laplacian(const Graph &g) -> SymMatrix {
  const int n = g.order();
  SymMatrix q(n);
  for (int i = 0; i < n; ++i) {
    q.set(i, i, g.degree(i));
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j))
        q.set(i, j, 1.0);
  }
  return q;
}

auto q_extremes(const Graph &g, double tol) -> QExtremes {
  const Spectrum s = eigen_sym(signless_laplacian(g), tol);
  return {s.values.front(), s.values.back()};
}

auto rayleigh_residual(const SymMatrix &m, double value, std::span<const double> v) -> double {
  const int n = m.order();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("rayleigh_residual: vector length does not match matrix order");
  double vv = 0.0;
  for (const double x : v)
    vv += x * x;
  if (vv == 0.0)
    throw std::invalid_argument("rayleigh_residual: zero vector");
  double rr = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = -value * v[i];
    for (int j = 0; j < n; ++j)
      row += m(i, j) * v[j];
    rr += row * row;
  }
  return std::sqrt(rr / vv);
}

auto reduced_star_k2_cubic(int n) -> MonicCubic {
  if (n < 5)
    throw std::invalid_argument("reduced_star_k2_cubic: n must be at least 5");
  // Expanding the determinant with a = 2n-6, b = n-2 gives
  // -(q^3 - (a+b+2) q^2 + (ab+a+2b-2) q - 2a(b-2)).
  const double a = 2.0 * n - 6.0;
  const double b = n - 2.0;
  return {-(a + b + 2.0), a * b + a + 2.0 * b - 2.0, -2.0 * a * (b - 2.0)};
}

namespace {

auto bisect(const MonicCubic &p, double lo, double hi) -> double {
  double flo = p(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

auto polish(const MonicCubic &p, double x) -> double {
  for (int it = 0; it < 50; ++it) {
    const double d = p.derivative(x);
    if (d == 0.0)
      break;
    const double step = p(x) / d;
    x -= step;
    if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(x)))
      break;
  }
  return x;
}

}  // namespace

auto cubic_roots(const MonicCubic &p, double lo, double hi) -> std::vector<double> {
  if (!(lo < hi))
    throw std::invalid_argument("cubic_roots: empty interval");
  // Monotone pieces of p are separated by the roots of p'.
  std::vector<double> cuts{lo};
  const double qa = 3.0;
  const double qb = 2.0 * p.c2;
  const double qc = p.c1;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    for (const double x : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)})
      if (x > lo && x < hi)
        cuts.push_back(x);
  }
  cuts.push_back(hi);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double fa = p(a);
    const double fb = p(b);
    double r;
    if (fa == 0.0)
      r = a;
    else if (fb == 0.0)
      r = b;
    else if ((fa < 0.0) != (fb < 0.0))
      r = polish(p, bisect(p, a, b));
    else
      continue;
    if (roots.empty() || std::abs(roots.back() - r) > 1e-9)
      roots.push_back(r);
  }
  return roots;
}

}  // namespace signless
