#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nilskt/complex_structure.hpp"
#include "nilskt/linalg.hpp"

namespace nilskt {
namespace iwasawa {

/// The real algebra of the complex Heisenberg group: (0,0,0,0,13+42,14+23),
/// with d w3 = w1 ^ w2 for w_k = e^(2k-1) + i e^(2k).
RealLieAlgebra algebra();

/// The almost complex structure J_{X,x,y} spanned by
///   a1 = w1 + a conj(w1) + b conj(w2)
///   a2 = w2 + c conj(w1) + d conj(w2)
///   a3 = w3 + x conj(w1) + y conj(w2) + u conj(w3),  u = bc - ad.
/// Throws when |u|^2 = 1 or c(1) = 0 (J degenerate). Integrable by
/// construction of u.
ComplexStructure make_J(const Mat2& X, const Scalar& x = Scalar(0),
                        const Scalar& y = Scalar(0), double tol = kDefaultTol);

/// Derived data of X: u = -det X, the characteristic pair of X conj(X),
/// the moduli component, and the deformation rank.
struct Invariants {
  Scalar u;
  Scalar gamma;  // tr(X conj X), real
  Scalar delta;  // det(X conj X) = |u|^2
  Scalar c1;     // 1 - gamma + delta
  std::complex<double> lambda, mu;
  bool conjugate_pair = false;
  bool degenerate = false;   // delta = 1 or c(1) = 0
  bool stable = false;       // det X != 0
  int deformation_rank = 0;  // rank of Y; 2 iff u != 0
  std::string component;     // (sign c(1), |u| vs 1); "C+" = (+,inner)
};
Invariants invariants(const Mat2& X, double tol = kDefaultTol);

/// 1 - 6 delta + delta^2 + gamma + gamma delta.
Scalar de_residual(const Scalar& gamma, const Scalar& delta);
double de_residual(double gamma, double delta);

/// (1 + |z|^2) |1 + z|^2 - 8 |z|^2.
Scalar curve_residual(const Scalar& z);
double curve_residual(std::complex<double> z);

enum class Branch { inner, outer };

/// n points on the solution curve with |curve_residual| < 1e-10, via the
/// polar parametrisation about z = 1: r = -3 cos t +- sqrt(2 + cos^2 t).
/// Inner branch has |z| < 1, outer |z| > 1; the point z = 1 is excluded.
std::vector<std::complex<double>> curve_sample(int n, Branch branch);

/// SKT decision for J_X, computed three ways with mandatory agreement:
/// the (gamma, delta) residual, the eigenvalues-on-curve test, and the
/// box of the standard form on make_J(X). Throws on degenerate J.
bool is_skt(const Mat2& X, double tol = 1e-8);

/// Family parameters of the echelon basis of J_X:
/// c(1) Y = -X - u adj(conj X), c(1) E = 1 - delta.
std::pair<Mat2, Scalar> y_and_E(const Mat2& X);

/// X = P^-1 [[0, z], [1, 0]] conj(P); X conj(X) then has eigenvalues z, conj z.
Mat2 normal_form(const Scalar& z, const Mat2& P);

/// Consimilarity class data of X: the characteristic coefficients
/// (gamma, delta) of X conj(X).
std::pair<Scalar, Scalar> consim_invariants(const Mat2& X);

/// conj(X)^-1, representing -J_X. Eigenvalues map z -> 1/conj(z), 1/z.
Mat2 negate_J(const Mat2& X);

/// Whether P fixes [[0, z], [1, 0]] under X -> P^-1 X conj(P), i.e.
/// N conj(P) = P N. Requires z != 0 and P invertible.
bool stabilizer_member(const Mat2& P, const Scalar& z, double tol = kDefaultTol);

}  // namespace iwasawa
}  // namespace nilskt
