#include "nilskt/complex_structure.hpp"

#include <bit>

namespace nilskt {

RealLieAlgebra RealLieAlgebra::from_terms(std::vector<TermMap> diffs) {
  int n = static_cast<int>(diffs.size());
  return {Coframe::real_frame(n, std::move(diffs))};
}

Scalar RealLieAlgebra::bracket_coeff(int k, int i, int j) const {
  // de^k = sum_{a<b} c_ab e^a ^ e^b evaluates on (e_i, e_j) as c_ij.
  Form dk = coframe->d_generator(k);
  if (i == j) return Scalar(0);
  Scalar v = (i < j) ? dk.coefficient((1u << i) | (1u << j))
                     : -dk.coefficient((1u << j) | (1u << i));
  return -v;
}

ComplexStructure::ComplexStructure(RealLieAlgebra algebra, Mat lambda, double tol)
    : alg_(std::move(algebra)), lambda_(std::move(lambda)), tol_(tol) {
  int n = lambda_.rows();
  int dim = alg_.dim();
  if (lambda_.cols() != dim || 2 * n != dim)
    throw Error("lambda must be n x 2n over the real coframe");
  // Stack lambda over its conjugate and invert; existence of the inverse
  // is exactly maximal complexity.
  Mat S(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) {
      S.at(i, j) = lambda_.at(i, j);
      S.at(n + i, j) = lambda_.at(i, j).conj();
    }
  inv_ = S.inverse(tol_);
  if (!inv_) return;

  Mat D(dim, dim);
  for (int i = 0; i < n; ++i) {
    D.at(i, i) = Scalar::i();
    D.at(n + i, n + i) = -Scalar::i();
  }
  jmat_ = (*inv_) * D * S;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (!jmat_.at(i, j).imag_part().is_zero(1e-12 * std::max(1.0, jmat_.max_abs())))
        throw Error("J matrix not real");
      jmat_.at(i, j) = jmat_.at(i, j).real_part();
    }

  complex_to_real_ = S;
  real_to_complex_ = *inv_;
  // Induced differentials of a1..an in the complex basis.
  std::vector<TermMap> d_hol(n);
  for (int k = 0; k < n; ++k) {
    Form da = alg_.coframe->zero();
    for (int j = 0; j < dim; ++j) {
      const Scalar& w = lambda_.at(k, j);
      if (w.is_zero(0.0)) continue;
      da = da + alg_.coframe->d_generator(j).scaled(w);
    }
    d_hol[k] = change_terms(da.terms(), real_to_complex_);
  }
  complex_cf_ = Coframe::complex_frame(n, std::move(d_hol));
}

const Mat& ComplexStructure::j_matrix() const {
  if (!inv_) throw Error("not maximally complex");
  return jmat_;
}

const CoframePtr& ComplexStructure::complex_coframe() const {
  if (!complex_cf_) throw Error("not maximally complex");
  return complex_cf_;
}

Form ComplexStructure::to_complex(const Form& real_form) const {
  if (!inv_) throw Error("not maximally complex");
  return change_basis(real_form, real_to_complex_, complex_cf_);
}

Form ComplexStructure::to_real(const Form& complex_form) const {
  if (!inv_) throw Error("not maximally complex");
  return change_basis(complex_form, complex_to_real_, alg_.coframe);
}

bool ComplexStructure::integrable() const {
  if (!inv_) throw Error("not maximally complex");
  double scale = 0;
  for (int k = 0; k < n(); ++k)
    scale = std::max(scale, complex_cf_->d_generator(k).max_abs());
  for (int k = 0; k < n(); ++k) {
    Form bad = complex_cf_->d_generator(k).type_component(0, 2);
    if (!bad.is_zero(tol_ * std::max(1.0, scale))) return false;
  }
  return true;
}

bool ComplexStructure::abelian() const {
  if (!integrable()) throw Error("not integrable");
  double scale = 0;
  for (int k = 0; k < n(); ++k)
    scale = std::max(scale, complex_cf_->d_generator(k).max_abs());
  for (int k = 0; k < n(); ++k) {
    Form d = complex_cf_->d_generator(k);
    if (!(d - d.type_component(1, 1)).is_zero(tol_ * std::max(1.0, scale))) return false;
  }
  return true;
}

namespace {

// Matrix whose kernel is { t : (sum_k t_k d a_k) ^ w = 0 }, with the
// wedge taken over the real coframe.
Mat ideal_constraint_matrix(const ComplexStructure& s, const Form& w) {
  int n = s.n();
  std::vector<Form> products;
  products.reserve(n);
  std::map<Mask, int> coords;
  for (int k = 0; k < n; ++k) {
    Form da = s.algebra().coframe->zero();
    for (int j = 0; j < s.algebra().dim(); ++j) {
      const Scalar& c = s.lambda().at(k, j);
      if (!c.is_zero(0.0)) da = da + s.algebra().coframe->d_generator(j).scaled(c);
    }
    Form p = da.wedge(w);
    for (const auto& [mo, c] : p.terms()) coords.try_emplace(mo, 0);
    products.push_back(std::move(p));
  }
  int row = 0;
  for (auto& [mo, idx] : coords) idx = row++;
  Mat M(std::max<int>(row, 1), n);
  for (int k = 0; k < n; ++k)
    for (const auto& [mo, c] : products[k].terms()) M.at(coords[mo], k) = c;
  return M;
}

}  // namespace

ComplexStructure echelon_basis(const ComplexStructure& s) {
  if (!s.integrable()) throw Error("echelon_basis: not integrable");
  int n = s.n();
  double tol = s.tol();
  std::vector<std::vector<Scalar>> chosen;  // coefficient rows over a_1..a_n
  auto chosen_rank = [&](const std::vector<Scalar>* extra) {
    Mat m(static_cast<int>(chosen.size()) + (extra ? 1 : 0), n);
    for (int i = 0; i < static_cast<int>(chosen.size()); ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = chosen[i][j];
    if (extra)
      for (int j = 0; j < n; ++j) m.at(m.rows() - 1, j) = (*extra)[j];
    return m.rank(tol);
  };
  for (int stage = 0; stage < n && static_cast<int>(chosen.size()) < n; ++stage) {
    // w = wedge of the already chosen 1-forms over the real coframe.
    Form w = s.algebra().coframe->make({{0u, Scalar(1)}});
    for (const auto& t : chosen) {
      Form beta = s.algebra().coframe->zero();
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < s.algebra().dim(); ++j) {
          Scalar c = t[k] * s.lambda().at(k, j);
          if (!c.is_zero(0.0)) beta = beta + Form::monomial(s.algebra().coframe, {j}, c);
        }
      w = w.wedge(beta);
    }
    Mat K = ideal_constraint_matrix(s, w).kernel(tol);
    size_t before = chosen.size();
    for (int col = 0; col < K.cols() && static_cast<int>(chosen.size()) < n; ++col) {
      std::vector<Scalar> t(n);
      for (int k = 0; k < n; ++k) t[k] = K.at(k, col);
      if (chosen_rank(&t) > chosen_rank(nullptr)) chosen.push_back(std::move(t));
    }
    if (chosen.size() == before)
      throw Error("echelon_basis: stalled (algebra not nilpotent?)");
  }
  if (static_cast<int>(chosen.size()) < n)
    throw Error("echelon_basis: did not terminate in n steps");
  Mat new_lambda(n, s.algebra().dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < s.algebra().dim(); ++j) {
      Scalar v(0);
      for (int k = 0; k < n; ++k) v += chosen[i][k] * s.lambda().at(k, j);
      new_lambda.at(i, j) = v;
    }
  return ComplexStructure(s.algebra(), std::move(new_lambda), tol);
}

RealLieAlgebra real_structure_constants(const ComplexStructure& s) {
  int n = s.n();
  const CoframePtr& cf = s.complex_coframe();
  // a_k = f_(2k-1) + i f_(2k): rows of the complex basis over the f's.
  Mat rows(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    rows.at(k, 2 * k) = Scalar(1);
    rows.at(k, 2 * k + 1) = Scalar::i();
    rows.at(n + k, 2 * k) = Scalar(1);
    rows.at(n + k, 2 * k + 1) = -Scalar::i();
  }
  static const Scalar half = Scalar::exact(mpq_class(1, 2));
  static const Scalar half_over_i = Scalar::exact(0, mpq_class(-1, 2));
  std::vector<TermMap> diffs(2 * n);
  for (int k = 0; k < n; ++k) {
    Form da = cf->d_generator(k);
    Form dc = cf->d_generator(n + k);
    Form re = (da + dc).scaled(half);
    Form im = (da - dc).scaled(half_over_i);
    diffs[2 * k] = change_terms(re.terms(), rows);
    diffs[2 * k + 1] = change_terms(im.terms(), rows);
  }
  return RealLieAlgebra::from_terms(std::move(diffs));
}

int betti_b1(const RealLieAlgebra& L, double tol) {
  if (!L.jacobi()) throw Error("betti_b1: Jacobi fails");
  int n = L.dim();
  std::map<Mask, int> coords;
  for (int k = 0; k < n; ++k)
    for (const auto& [mo, c] : L.coframe->d_terms(k)) coords.try_emplace(mo, 0);
  int row = 0;
  for (auto& [mo, idx] : coords) idx = row++;
  Mat M(std::max(row, 1), n);
  for (int k = 0; k < n; ++k)
    for (const auto& [mo, c] : L.coframe->d_terms(k)) M.at(coords[mo], k) = c;
  return n - M.rank(tol);
}

bool is_two_step(const RealLieAlgebra& L, double tol) {
  int n = L.dim();
  std::vector<std::vector<std::vector<Scalar>>> C(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  for (int k = 0; k < n; ++k) {
    Form dk = L.coframe->d_generator(k);
    for (const auto& [mo, c] : dk.terms()) {
      int i = std::countr_zero(mo);
      int j = std::countr_zero(mo & (mo - 1));
      C[k][i][j] = -c;
      C[k][j][i] = c;
    }
  }
  // Derived algebra = span of all brackets; 2-step iff it is central.
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          Scalar acc(0);
          for (int j = 0; j < n; ++j) acc += C[j][p][q] * C[k][i][j];
          if (!acc.is_zero(tol)) return false;
        }
  return true;
}

ComplexStructure from_coframe_action(RealLieAlgebra algebra, const Mat& F, double tol) {
  int dim = algebra.dim();
  if (F.rows() != dim || F.cols() != dim) throw Error("J matrix shape mismatch");
  Mat mm = F * F + Mat::identity(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!mm.at(i, j).is_zero(tol)) throw Error("J^2 != -1");
  // Rows of (F + iI) span the +i row-eigenspace.
  Mat G = F;
  for (int i = 0; i < dim; ++i) G.at(i, i) += Scalar::i();
  // Pick dim/2 independent rows.
  Mat lambda(dim / 2, dim);
  int taken = 0;
  for (int i = 0; i < dim && taken < dim / 2; ++i) {
    Mat probe(taken + 1, dim);
    for (int r = 0; r < taken; ++r)
      for (int j = 0; j < dim; ++j) probe.at(r, j) = lambda.at(r, j);
    for (int j = 0; j < dim; ++j) probe.at(taken, j) = G.at(i, j);
    if (probe.rank(tol) == taken + 1) {
      for (int j = 0; j < dim; ++j) lambda.at(taken, j) = G.at(i, j);
      ++taken;
    }
  }
  if (taken < dim / 2) throw Error("could not extract (1,0) space from J");
  return ComplexStructure(std::move(algebra), std::move(lambda), tol);
}

}  // namespace nilskt
