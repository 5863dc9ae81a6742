#include "pcetd/legendre.hpp"

#include "pcetd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace pcetd {

namespace {

// Eigenvalues and first eigenvector components of a symmetric tridiagonal
// matrix (diagonal d, off-diagonal e with e[i] between rows i and i+1), by QL
// iteration with implicit Wilkinson shifts. z starts as the first unit vector;
// on exit z[j]^2 is the first-component weight of eigenvalue d[j].
void tridiagonal_eigen_first_row(std::vector<double>& d,
                                 std::vector<double>& e,
                                 std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  const double tol = 1e-14;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= tol * dd) break;
      }
      if (m == l) break;
      if (++iter > 50)
        throw NumericalFailure("tridiagonal eigen: QL did not converge", 0.0);
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
  // sort ascending, carrying z along
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    for (int j = i + 1; j < n; ++j)
      if (d[j] < d[k]) k = j;
    if (k != i) {
      std::swap(d[i], d[k]);
      std::swap(z[i], z[k]);
    }
  }
}

} // namespace

QuadratureRule gauss_legendre(int q, double a, double b) {
  if (q < 1) throw InvalidArgument("gauss_legendre: q must be >= 1");
  if (!(b > a)) throw InvalidArgument("gauss_legendre: requires b > a");

  // Jacobi matrix of the (monic) Legendre recurrence on [-1,1]:
  // diagonal 0, off-diagonal sqrt(n^2/(4n^2-1)).
  std::vector<double> d(q, 0.0), e(q > 1 ? q - 1 : 0), z(q, 0.0);
  z[0] = 1.0;
  for (int n = 1; n < q; ++n)
    e[n - 1] = n / std::sqrt(4.0 * n * n - 1.0);
  tridiagonal_eigen_first_row(d, e, z);

  QuadratureRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int j = 0; j < q; ++j) {
    rule.nodes[j] = mid + half * d[j];
    rule.weights[j] = z[j] * z[j]; // mu_0 = 1 in probability convention
  }
  // Enforce the exact reflection symmetry about the midpoint.
  for (int j = 0; j < q / 2; ++j) {
    const int r = q - 1 - j;
    const double off = 0.5 * ((rule.nodes[r] - mid) + (mid - rule.nodes[j]));
    rule.nodes[j] = mid - off;
    rule.nodes[r] = mid + off;
    const double w = 0.5 * (rule.weights[j] + rule.weights[r]);
    rule.weights[j] = w;
    rule.weights[r] = w;
  }
  if (q % 2 == 1) rule.nodes[q / 2] = mid;
  return rule;
}

LegendreBasis::LegendreBasis(double a, double b, int degree)
    : a_(a), b_(b), degree_(degree) {
  if (!(b > a)) throw InvalidArgument("LegendreBasis: requires b > a");
  if (degree < 0) throw InvalidArgument("LegendreBasis: degree must be >= 0");
}

std::vector<double> LegendreBasis::eval_up_to(double x, int max_degree) const {
  if (x < a_ || x > b_)
    throw InvalidArgument("LegendreBasis::eval: x outside [a,b]");
  const double s = (2.0 * x - (a_ + b_)) / (b_ - a_);
  std::vector<double> vals(max_degree + 1);
  // classical recurrence, then scale by sqrt(2n+1) to unit norm under the
  // probability density
  double lm = 1.0, l = s;
  vals[0] = 1.0;
  if (max_degree >= 1) vals[1] = std::sqrt(3.0) * s;
  for (int n = 1; n < max_degree; ++n) {
    const double lp = ((2.0 * n + 1.0) * s * l - n * lm) / (n + 1.0);
    vals[n + 1] = std::sqrt(2.0 * (n + 1.0) + 1.0) * lp;
    lm = l;
    l = lp;
  }
  return vals;
}

std::vector<double> LegendreBasis::eval(double x) const {
  return eval_up_to(x, degree_);
}

GalerkinTensors::GalerkinTensors(const LegendreBasis& basis,
                                 TensorWeight weight)
    : n_(basis.degree()), a_(basis.a()), b_(basis.b()), weight_(weight) {
  const int n1 = n_ + 1;
  k2_.assign(static_cast<std::size_t>(n1) * n1, 0.0);
  k3_.assign(static_cast<std::size_t>(n1) * n1 * n1, 0.0);
  k4_.assign(static_cast<std::size_t>(n1) * n1 * n1 * n1, 0.0);

  // q = 2N+2 exceeds the exactness threshold for degree 4N+1 integrands.
  const auto rule = gauss_legendre(2 * n_ + 2, a_, b_);
  const int q = static_cast<int>(rule.nodes.size());
  std::vector<std::vector<double>> pv(q);
  std::vector<double> kw(q);
  for (int m = 0; m < q; ++m) {
    pv[m] = basis.eval(rule.nodes[m]);
    kw[m] = rule.weights[m] *
            (weight_ == TensorWeight::Parameter ? rule.nodes[m] : 1.0);
  }
  for (int i = 0; i < n1; ++i)
    for (int eta = 0; eta < n1; ++eta) {
      double s = 0.0;
      for (int m = 0; m < q; ++m) s += kw[m] * pv[m][i] * pv[m][eta];
      k2_[idx2(i, eta)] = s;
    }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int eta = 0; eta < n1; ++eta) {
        double s = 0.0;
        for (int m = 0; m < q; ++m) s += kw[m] * pv[m][i] * pv[m][j] * pv[m][eta];
        k3_[idx3(i, j, eta)] = s;
      }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k)
        for (int eta = 0; eta < n1; ++eta) {
          double s = 0.0;
          for (int m = 0; m < q; ++m)
            s += kw[m] * pv[m][i] * pv[m][j] * pv[m][k] * pv[m][eta];
          k4_[idx4(i, j, k, eta)] = s;
        }
}

GalerkinTensors GalerkinTensors::via_linearization(const LegendreBasis& basis,
                                                   TensorWeight weight) {
  GalerkinTensors t(basis, weight);
  const int N = t.n_;
  // Second moments E[K P_r P_eta] for r up to 3N (integrands stay within the
  // exactness range of the 2N+2 rule).
  const auto rule = gauss_legendre(2 * N + 2, t.a_, t.b_);
  const int q = static_cast<int>(rule.nodes.size());
  const int rmax = 3 * N;
  std::vector<std::vector<double>> pv(q);
  std::vector<double> kw(q);
  for (int m = 0; m < q; ++m) {
    pv[m] = basis.eval_up_to(rule.nodes[m], rmax);
    kw[m] = rule.weights[m] *
            (weight == TensorWeight::Parameter ? rule.nodes[m] : 1.0);
  }
  std::vector<double> moment(static_cast<std::size_t>(rmax + 1) * (N + 1));
  for (int r = 0; r <= rmax; ++r)
    for (int eta = 0; eta <= N; ++eta) {
      double s = 0.0;
      for (int m = 0; m < q; ++m) s += kw[m] * pv[m][r] * pv[m][eta];
      moment[static_cast<std::size_t>(r) * (N + 1) + eta] = s;
    }
  // P_i P_j P_k = sum_p C(j,k,p) sum_n C(i, j+k-2p, n) P_{i+j+k-2p-2n}
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      for (int k = 0; k <= N; ++k) {
        std::vector<double> expans(rmax + 1, 0.0);
        for (int p = 0; p <= std::min(j, k); ++p) {
          const double cjk = legendre_product_coefficient(j, k, p);
          const int s = j + k - 2 * p;
          for (int n = 0; n <= std::min(i, s); ++n)
            expans[i + s - 2 * n] +=
                cjk * legendre_product_coefficient(i, s, n);
        }
        for (int eta = 0; eta <= N; ++eta) {
          double acc = 0.0;
          for (int r = 0; r <= rmax; ++r)
            acc += expans[r] * moment[static_cast<std::size_t>(r) * (N + 1) + eta];
          t.k4_[t.idx4(i, j, k, eta)] = acc;
        }
      }
  return t;
}

void GalerkinTensors::dump_csv(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw NumericalFailure("dump_csv: cannot open " + path, 0.0);
  std::fprintf(f, "i,j,k,eta,value\n");
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      for (int k = 0; k <= n_; ++k)
        for (int eta = 0; eta <= n_; ++eta)
          std::fprintf(f, "%d,%d,%d,%d,%.17g\n", i, j, k, eta,
                       k4(i, j, k, eta));
  std::fclose(f);
}

namespace {

// A_r = (1/2)_r / r!, the Pochhammer ratio in the product formula.
double pochhammer_half_ratio(int r) {
  double v = 1.0;
  for (int s = 0; s < r; ++s) v *= (0.5 + s) / (s + 1.0);
  return v;
}

} // namespace

double legendre_product_coefficient(int alpha, int beta, int p) {
  if (p < 0 || p > std::min(alpha, beta))
    throw InvalidArgument("legendre_product_coefficient: p out of range");
  const double A = pochhammer_half_ratio(p) * pochhammer_half_ratio(alpha - p) *
                   pochhammer_half_ratio(beta - p) /
                   pochhammer_half_ratio(alpha + beta - p);
  const double ratio = (2.0 * alpha + 2.0 * beta - 4.0 * p + 1.0) /
                       (2.0 * alpha + 2.0 * beta - 2.0 * p + 1.0);
  const double norm = std::sqrt((2.0 * alpha + 1.0) * (2.0 * beta + 1.0) /
                                (2.0 * (alpha + beta - 2 * p) + 1.0));
  return A * ratio * norm;
}

std::vector<double> legendre_product_expansion(int alpha, int beta) {
  std::vector<double> c(std::min(alpha, beta) + 1);
  for (int p = 0; p <= std::min(alpha, beta); ++p)
    c[p] = legendre_product_coefficient(alpha, beta, p);
  return c;
}

LinearizationTable linearization_table(int degree) {
  if (degree < 0) throw InvalidArgument("linearization_table: degree >= 0");
  LinearizationTable table;
  table.degree = degree;
  table.total_summands = 0;
  table.per_eta_counts.assign(degree + 1, 0);
  for (int eta = 0; eta <= degree; ++eta) {
    for (int l = 0; l <= degree; ++l)
      for (int m = 0; m <= l; ++m)
        for (int j = 0; j <= m; ++j)
          for (int p = 0; p <= std::min(j, m - j); ++p)
            for (int n = 0; n <= std::min(l - m, m - 2 * p); ++n) {
              ++table.total_summands;
              if (l - 2 * p - 2 * n != eta) continue;
              CubicSummand s;
              s.i1 = l - m;
              s.i2 = j;
              s.i3 = m - j;
              s.eta = eta;
              s.weight = legendre_product_coefficient(j, m - j, p) *
                         legendre_product_coefficient(l - m, m - 2 * p, n);
              table.summands.push_back(s);
              ++table.per_eta_counts[eta];
            }
  }
  return table;
}

} // namespace pcetd
