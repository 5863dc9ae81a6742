#pragma once

//==============================================================================
// Orthonormal Legendre family on [a,b] under the uniform probability density
// 1/(b-a), Gauss-Legendre quadrature in probability convention (weights sum
// to one), the Galerkin moment tensors E[K P_i P_j P_k P_eta], and the
// product-linearization machinery for cubic terms.
//==============================================================================

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcetd {

struct QuadratureRule {
  std::vector<double> nodes;   // ascending, symmetric about (a+b)/2
  std::vector<double> weights; // sum to 1
};

/// Nodes/weights of q-point Gauss-Legendre quadrature on [a,b], computed from
/// the Jacobi matrix eigenproblem (symmetric tridiagonal QL with Wilkinson
/// shifts, tolerance 1e-14). Exact for polynomial degree <= 2q-1.
QuadratureRule gauss_legendre(int q, double a, double b);

/// P_0..P_N with <P_i P_j> = delta_ij, P_0 = 1, evaluated by the three-term
/// recurrence on the mapped variable. Evaluation outside [a,b] is a domain
/// error for this toolkit.
class LegendreBasis {
public:
  LegendreBasis(double a, double b, int degree);

  double a() const { return a_; }
  double b() const { return b_; }
  int degree() const { return degree_; }

  /// (P_0(x), ..., P_N(x)); requires a <= x <= b.
  std::vector<double> eval(double x) const;
  /// Values up to an arbitrary degree (internal helpers, same domain check).
  std::vector<double> eval_up_to(double x, int max_degree) const;

private:
  double a_, b_;
  int degree_;
};

enum class TensorWeight {
  Parameter, // K(xi) = xi
  Unit       // K = 1
};

/// Dense moment tensors K2[i][eta], K3[i][j][eta], K4[i][j][k][eta] for the
/// chosen weight, exact by construction (2N+2-point quadrature against
/// integrands of degree <= 4N+1).
class GalerkinTensors {
public:
  GalerkinTensors(const LegendreBasis& basis, TensorWeight weight);

  /// Same tensors with K4 assembled through the product-linearization route
  /// (addition theorem applied twice, then one second-moment projection)
  /// instead of direct quadrature. Agrees with the quadrature build to
  /// round-off; kept as an alternative assembly path and cross-check.
  static GalerkinTensors via_linearization(const LegendreBasis& basis,
                                           TensorWeight weight);

  int degree() const { return n_; }
  double a() const { return a_; }
  double b() const { return b_; }
  TensorWeight weight() const { return weight_; }

  double k2(int i, int eta) const { return k2_[idx2(i, eta)]; }
  double k3(int i, int j, int eta) const { return k3_[idx3(i, j, eta)]; }
  double k4(int i, int j, int k, int eta) const {
    return k4_[idx4(i, j, k, eta)];
  }

  /// CSV debug dump with columns i,j,k,eta,value (K4 entries).
  void dump_csv(const std::string& path) const;

private:
  std::size_t idx2(int i, int eta) const {
    return static_cast<std::size_t>(i) * (n_ + 1) + eta;
  }
  std::size_t idx3(int i, int j, int eta) const {
    return (static_cast<std::size_t>(i) * (n_ + 1) + j) * (n_ + 1) + eta;
  }
  std::size_t idx4(int i, int j, int k, int eta) const {
    return ((static_cast<std::size_t>(i) * (n_ + 1) + j) * (n_ + 1) + k) *
               (n_ + 1) +
           eta;
  }

  int n_;
  double a_, b_;
  TensorWeight weight_;
  std::vector<double> k2_, k3_, k4_;
};

/// Coefficient C(alpha,beta,p) of the Legendre product formula
/// P_alpha P_beta = sum_p C(alpha,beta,p) P_{alpha+beta-2p}, for the
/// orthonormal family (interval-independent).
double legendre_product_coefficient(int alpha, int beta, int p);

/// Full expansion of P_alpha * P_beta: coefficient of P_r at r = alpha+beta-2p.
/// Returned vector is indexed by p = 0..min(alpha,beta).
std::vector<double> legendre_product_expansion(int alpha, int beta);

/// One summand of the truncated cubic expansion: u_{i1} u_{i2} u_{i3} lands on
/// target basis index eta with the given weight.
struct CubicSummand {
  int i1, i2, i3;
  int eta;
  double weight;
};

/// Flattened enumeration of the truncated cubic Galerkin expansion. The
/// enumeration runs once per eta over the quintuple index set; total_summands
/// counts every visit (Table-2 convention) while `summands` keeps only the
/// matched ones (total_summands / (N+1) entries).
struct LinearizationTable {
  int degree;
  std::int64_t total_summands; // N-tilde
  std::vector<CubicSummand> summands;
  std::vector<std::int64_t> per_eta_counts;
};

LinearizationTable linearization_table(int degree);

} // namespace pcetd
