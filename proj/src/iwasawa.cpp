#include "nilskt/iwasawa.hpp"

#include <cmath>

#include "nilskt/hermitian.hpp"
#include "nilskt/skt_family.hpp"

namespace nilskt {
namespace iwasawa {

RealLieAlgebra algebra() {
  // d w3 = w1 ^ w2 expands to de5 = e13 + e42, de6 = e14 + e23.
  // One shared instance, so forms over different J's compare directly.
  static const RealLieAlgebra shared = [] {
    std::vector<TermMap> d(6);
    auto mono = [](int i, int j) { return (1u << (i - 1)) | (1u << (j - 1)); };
    d[4][mono(1, 3)] = Scalar(1);
    d[4][mono(2, 4)] = Scalar(-1);
    d[5][mono(1, 4)] = Scalar(1);
    d[5][mono(2, 3)] = Scalar(1);
    return RealLieAlgebra::from_terms(std::move(d));
  }();
  return shared;
}

namespace {

// Row of omega_k (or its conjugate) over e1..e6.
void add_omega(Mat& lambda, int row, int k, const Scalar& coeff, bool conjugated) {
  lambda.at(row, 2 * k) += coeff;
  Scalar im = conjugated ? -Scalar::i() : Scalar::i();
  lambda.at(row, 2 * k + 1) += coeff * im;
}

}  // namespace

ComplexStructure make_J(const Mat2& X, const Scalar& x, const Scalar& y, double tol) {
  Invariants inv = invariants(X, tol);
  if (inv.degenerate)
    throw Error("make_J: degenerate structure (delta = 1 or c(1) = 0)");
  Scalar u = inv.u;
  Mat lambda(3, 6);
  add_omega(lambda, 0, 0, Scalar(1), false);
  add_omega(lambda, 0, 0, X.a, true);
  add_omega(lambda, 0, 1, X.b, true);
  add_omega(lambda, 1, 1, Scalar(1), false);
  add_omega(lambda, 1, 0, X.c, true);
  add_omega(lambda, 1, 1, X.d, true);
  add_omega(lambda, 2, 2, Scalar(1), false);
  add_omega(lambda, 2, 0, x, true);
  add_omega(lambda, 2, 1, y, true);
  add_omega(lambda, 2, 2, u, true);
  return ComplexStructure(algebra(), std::move(lambda), tol);
}

Invariants invariants(const Mat2& X, double tol) {
  Invariants out;
  out.u = -X.det();
  Mat2 XXbar = X * X.conj();
  Scalar gamma = XXbar.tr();
  if (!gamma.is_real(tol * std::max(1.0, gamma.abs())))
    throw Error("invariants: tr(X conj X) not real");
  out.gamma = gamma.real_part();
  out.delta = out.u.abs2();
  out.c1 = Scalar(1) - out.gamma + out.delta;
  double g = out.gamma.to_complex().real();
  double dl = out.delta.to_complex().real();
  double disc = g * g - 4 * dl;
  double dscale = std::max(1.0, g * g + 4 * std::abs(dl));
  if (disc < -tol * dscale) {
    out.conjugate_pair = true;
    double s = std::sqrt(-disc);
    out.lambda = {g / 2, s / 2};
    out.mu = std::conj(out.lambda);
  } else {
    double s = std::sqrt(std::max(0.0, disc));
    out.lambda = {(g + s) / 2, 0};
    out.mu = {(g - s) / 2, 0};
  }
  double c1 = out.c1.to_complex().real();
  out.degenerate = std::abs(dl - 1.0) <= tol * std::max(1.0, dl) ||
                   std::abs(c1) <= tol * std::max(1.0, std::abs(g) + dl);
  out.stable = !X.det().is_zero(tol);
  if (!out.degenerate) {
    Mat2 Y = y_and_E(X).first;
    out.deformation_rank = Y.det().is_zero(tol) ? (Y.near(Mat2::zero(), tol) ? 0 : 1) : 2;
  }
  std::string sign = c1 > 0 ? "+" : "-";
  std::string part = dl < 1.0 ? "inner" : "outer";
  if (out.degenerate) out.component = "degenerate";
  else if (sign == "+" && part == "inner") out.component = "C+";
  else out.component = "(" + sign + "," + part + ")";
  return out;
}

Scalar de_residual(const Scalar& gamma, const Scalar& delta) {
  return Scalar(1) - Scalar(6) * delta + delta * delta + gamma + gamma * delta;
}

double de_residual(double gamma, double delta) {
  return de_residual(Scalar::floating(gamma), Scalar::floating(delta))
      .to_complex()
      .real();
}

Scalar curve_residual(const Scalar& z) {
  Scalar z2 = z.abs2();
  Scalar one_plus = (Scalar(1) + z).abs2();
  return (Scalar(1) + z2) * one_plus - Scalar(8) * z2;
}

double curve_residual(std::complex<double> z) {
  return curve_residual(Scalar::floating(z)).to_complex().real();
}

std::vector<std::complex<double>> curve_sample(int n, Branch branch) {
  if (n < 1) throw Error("curve_sample: n >= 1 required");
  std::vector<std::complex<double>> out;
  out.reserve(n);
  const double pi = std::acos(-1.0);
  double lo = branch == Branch::inner ? 2 * pi / 3 : pi / 3;
  double hi = branch == Branch::inner ? 4 * pi / 3 : 5 * pi / 3;
  for (int j = 0; j < n; ++j) {
    double t = lo + (j + 0.5) * (hi - lo) / n;
    double c = std::cos(t);
    double root = std::sqrt(2.0 + c * c);
    double r = branch == Branch::inner ? -3 * c - root : -3 * c + root;
    std::complex<double> z = 1.0 + r * std::exp(std::complex<double>(0, t));
    if (std::abs(z - 1.0) <= 1e-8) continue;  // the excluded node
    out.push_back(z);
  }
  return out;
}

bool is_skt(const Mat2& X, double tol) {
  Invariants inv = invariants(X, tol);
  if (inv.degenerate) throw Error("is_skt: degenerate J");
  double g = inv.gamma.to_complex().real();
  double dl = inv.delta.to_complex().real();
  double scale = std::max(1.0, (1 + std::abs(g)) * (1 + dl));

  bool via_de = std::abs(de_residual(g, dl)) <= tol * scale;
  bool via_curve = std::abs(curve_residual(inv.lambda)) <= tol * scale &&
                   std::abs(curve_residual(inv.mu)) <= tol * scale;
  bool via_box =
      skt_status(HermitianForm::standard(), make_J(X), false, tol) == SktStatus::skt;
  if (via_de != via_curve || via_de != via_box)
    throw Error("is_skt: the three decision routes disagree");
  return via_de;
}

std::pair<Mat2, Scalar> y_and_E(const Mat2& X) {
  Scalar u = -X.det();
  Scalar delta = u.abs2();
  Mat2 XXbar = X * X.conj();
  Scalar c1 = Scalar(1) - XXbar.tr().real_part() + delta;
  if (c1.is_zero(1e-14)) throw Error("y_and_E: degenerate J (c(1) = 0)");
  Scalar inv_c1 = Scalar(1) / c1;
  Mat2 Y = (X + X.conj().adj().scaled(u)).scaled(-inv_c1);
  Scalar E = (Scalar(1) - delta) * inv_c1;
  return {Y, E};
}

Mat2 normal_form(const Scalar& z, const Mat2& P) {
  if (z.near(Scalar(1), 1e-14)) throw Error("normal_form: z = 1 is excluded");
  Mat2 N{Scalar(0), z, Scalar(1), Scalar(0)};
  return P.inverse() * N * P.conj();
}

std::pair<Scalar, Scalar> consim_invariants(const Mat2& X) {
  Mat2 XXbar = X * X.conj();
  return {XXbar.tr().real_part(), XXbar.det().real_part()};
}

Mat2 negate_J(const Mat2& X) { return X.conj().inverse(); }

bool stabilizer_member(const Mat2& P, const Scalar& z, double tol) {
  if (z.is_zero(tol)) throw Error("stabilizer_member: z = 0 excluded");
  if (P.det().is_zero(tol)) throw Error("stabilizer_member: singular P");
  Mat2 N{Scalar(0), z, Scalar(1), Scalar(0)};
  Mat2 lhs = N * P.conj();
  Mat2 rhs = P * N;
  double scale = std::max({1.0, lhs.a.abs(), lhs.b.abs(), lhs.c.abs(), lhs.d.abs(),
                           rhs.a.abs(), rhs.b.abs(), rhs.c.abs(), rhs.d.abs()});
  return lhs.near(rhs, tol * scale);
}

}  // namespace iwasawa
}  // namespace nilskt
