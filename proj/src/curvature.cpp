#include "nilskt/curvature.hpp"

#include <bit>

#include "nilskt/hermitian.hpp"

namespace nilskt {

namespace {

// Structure constants c(k,i,j) with [e_i, e_j] = sum_k c(k,i,j) e_k.
std::vector<Scalar> structure_constants(const RealLieAlgebra& L) {
  int n = L.dim();
  std::vector<Scalar> C(n * n * n);
  auto at = [&C, n](int k, int i, int j) -> Scalar& { return C[(k * n + i) * n + j]; };
  for (int k = 0; k < n; ++k)
    for (const auto& [mo, c] : L.coframe->d_terms(k)) {
      int i = std::countr_zero(mo);
      int j = std::countr_zero(mo & (mo - 1));
      at(k, i, j) = -c;
      at(k, j, i) = c;
    }
  return C;
}

}  // namespace

double Riemann::max_abs() const {
  double m = 0;
  for (const auto& s : r_) m = std::max(m, s.abs());
  return m;
}

Christoffel koszul(const RealLieAlgebra& L, const Mat& h, double tol) {
  if (!L.jacobi()) throw Error("koszul: Jacobi fails");
  int n = L.dim();
  auto C = structure_constants(L);
  auto c = [&C, n](int k, int i, int j) -> const Scalar& { return C[(k * n + i) * n + j]; };
  auto hinv = h.inverse(tol);
  if (!hinv) throw Error("koszul: degenerate metric");
  static const Scalar half = Scalar::exact(mpq_class(1, 2));
  Christoffel gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // K_k = h([e_i,e_j], e_k) - h([e_j,e_k], e_i) + h([e_k,e_i], e_j)
      std::vector<Scalar> K(n);
      for (int k = 0; k < n; ++k) {
        Scalar acc(0);
        for (int m = 0; m < n; ++m)
          acc += c(m, i, j) * h.at(m, k) - c(m, j, k) * h.at(m, i) +
                 c(m, k, i) * h.at(m, j);
        K[k] = acc;
      }
      for (int l = 0; l < n; ++l) {
        Scalar acc(0);
        for (int k = 0; k < n; ++k) acc += hinv->at(l, k) * K[k];
        gamma.at(l, i, j) = acc * half;
      }
    }
  return gamma;
}

Riemann riemann(const RealLieAlgebra& L, const Mat& h, double tol) {
  int n = L.dim();
  auto C = structure_constants(L);
  auto c = [&C, n](int k, int i, int j) -> const Scalar& { return C[(k * n + i) * n + j]; };
  Christoffel g = koszul(L, h, tol);
  Riemann R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // upper: R^l_{ijk} e_l = R(e_i, e_j) e_k
        std::vector<Scalar> up(n);
        for (int l = 0; l < n; ++l) {
          Scalar acc(0);
          for (int m = 0; m < n; ++m)
            acc += g.at(m, j, k) * g.at(l, i, m) - g.at(m, i, k) * g.at(l, j, m) -
                   c(m, i, j) * g.at(l, m, k);
          up[l] = acc;
        }
        for (int l = 0; l < n; ++l) {
          Scalar acc(0);
          for (int m = 0; m < n; ++m) acc += up[m] * h.at(m, l);
          R.at(i, j, k, l) = acc;
        }
      }
  return R;
}

Mat ricci(const RealLieAlgebra& L, const Mat& h, double tol) {
  int n = L.dim();
  auto C = structure_constants(L);
  auto c = [&C, n](int k, int i, int j) -> const Scalar& { return C[(k * n + i) * n + j]; };
  Christoffel g = koszul(L, h, tol);
  Mat ric(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Scalar acc(0);
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m)
          acc += g.at(m, j, k) * g.at(i, i, m) - g.at(m, i, k) * g.at(i, j, m) -
                 c(m, i, j) * g.at(i, m, k);
      ric.at(j, k) = acc;
    }
  return ric;
}

Form ricci_form(const RealLieAlgebra& L, const Mat& h, const Mat& jmat, double tol) {
  int n = L.dim();
  auto C = structure_constants(L);
  auto c = [&C, n](int k, int i, int j) -> const Scalar& { return C[(k * n + i) * n + j]; };
  Christoffel g = koszul(L, h, tol);
  static const Scalar minus_half = Scalar::exact(mpq_class(-1, 2));
  Form rho(L.coframe);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // rho_ij = -1/2 tr(J R(e_i, e_j)) with R^l_{ijk} the endomorphism.
      Scalar tr(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar up(0);
          for (int m = 0; m < n; ++m)
            up += g.at(m, j, k) * g.at(l, i, m) - g.at(m, i, k) * g.at(l, j, m) -
                  c(m, i, j) * g.at(l, m, k);
          tr += jmat.at(k, l) * up;
        }
      rho = rho + Form::monomial(L.coframe, {i, j}, tr * minus_half);
    }
  return rho;
}

PseudoKahlerReport pseudo_kahler_check(const ComplexStructure& s, const Form& omega_real,
                                       double tol) {
  double scale = std::max(1.0, omega_real.max_abs());
  if (!omega_real.d().is_zero(tol * scale)) return {false, "dW != 0"};
  if (!s.maximally_complex()) return {false, "J degenerate"};
  if (!s.integrable()) return {false, "J not integrable"};
  Mat h = metric_from_real(omega_real, s);
  if (h.rank(tol) < h.rows()) return {false, "metric degenerate"};
  const Mat& J = s.j_matrix();
  Christoffel g = koszul(s.algebra(), h, tol);
  int n = s.algebra().dim();
  double gs = std::max(1.0, h.max_abs());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Scalar acc(0);
        for (int m = 0; m < n; ++m)
          acc += g.at(k, i, m) * J.at(m, j) - J.at(k, m) * g.at(m, i, j);
        if (!acc.is_zero(tol * gs)) return {false, "Levi-Civita does not parallelise J"};
      }
  return {true, ""};
}

std::vector<Form> closed_two_forms(const RealLieAlgebra& L, double tol) {
  int n = L.dim();
  std::vector<Mask> monos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) monos.push_back((1u << i) | (1u << j));
  std::map<Mask, int> coords;
  std::vector<Form> dmono;
  for (Mask mo : monos) {
    Form f(L.coframe, TermMap{{mo, Scalar(1)}});
    Form df = f.d();
    for (const auto& [m, c] : df.terms()) coords.try_emplace(m, 0);
    dmono.push_back(std::move(df));
  }
  int rows = 0;
  for (auto& [m, i] : coords) i = rows++;
  Mat M(std::max(rows, 1), static_cast<int>(monos.size()));
  for (size_t col = 0; col < monos.size(); ++col)
    for (const auto& [m, c] : dmono[col].terms()) M.at(coords[m], col) = c;
  Mat K = M.kernel(tol);
  std::vector<Form> basis;
  for (int colk = 0; colk < K.cols(); ++colk) {
    TermMap t;
    for (size_t row = 0; row < monos.size(); ++row) {
      const Scalar& c = K.at(static_cast<int>(row), colk);
      if (!c.is_zero(0.0)) t[monos[row]] = c;
    }
    basis.emplace_back(L.coframe, std::move(t));
  }
  return basis;
}

bool has_invariant_symplectic(const RealLieAlgebra& L, double tol) {
  int n = L.dim();
  if (n != 6) throw Error("has_invariant_symplectic: implemented for dim 6");
  auto basis = closed_two_forms(L, tol);
  Mask full = (1u << n) - 1;
  double scale = 1.0;
  for (const auto& f : basis) scale = std::max(scale, f.max_abs());
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a; b < basis.size(); ++b)
      for (size_t c = b; c < basis.size(); ++c) {
        Scalar top = basis[a].wedge(basis[b]).wedge(basis[c]).coefficient(full);
        if (!top.is_zero(tol * scale * scale * scale)) return true;
      }
  return false;
}

}  // namespace nilskt
