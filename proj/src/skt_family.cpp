#include "nilskt/skt_family.hpp"

namespace nilskt {

namespace {

// Differential of a3 over the complex coframe indices (a1,a2,a3,c1,c2,c3).
TermMap d_a3_terms(const SktParams& p) {
  TermMap t;
  auto put = [&t](Mask mo, const Scalar& c) {
    if (!c.is_zero(0.0)) t[mo] = c;
  };
  // C a1^c1 + D a1^c2 - A a2^c1 - B a2^c2 + E a1^a2, canonical order
  // a1<a2<a3<c1<c2<c3 = bits 0..5.
  put((1u << 0) | (1u << 3), p.C);
  put((1u << 0) | (1u << 4), p.D);
  put((1u << 1) | (1u << 3), -p.A);
  put((1u << 1) | (1u << 4), -p.B);
  put((1u << 0) | (1u << 1), p.E);
  return t;
}

// Adapted real algebra of a directly-given complex coframe, via
// a^k = e^(2k-1) + i e^(2k).
RealLieAlgebra realify(const CoframePtr& cf) {
  int n = cf->pairs();
  Mat rows(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    rows.at(k, 2 * k) = Scalar(1);
    rows.at(k, 2 * k + 1) = Scalar::i();
    rows.at(n + k, 2 * k) = Scalar(1);
    rows.at(n + k, 2 * k + 1) = -Scalar::i();
  }
  static const Scalar half = Scalar::exact(mpq_class(1, 2));
  static const Scalar minus_half_i = Scalar::exact(0, mpq_class(-1, 2));
  std::vector<TermMap> diffs(2 * n);
  for (int k = 0; k < n; ++k) {
    Form da = cf->d_generator(k);
    Form dc = cf->d_generator(n + k);
    diffs[2 * k] = change_terms(((da + dc).scaled(half)).terms(), rows);
    diffs[2 * k + 1] = change_terms(((da - dc).scaled(minus_half_i)).terms(), rows);
  }
  return RealLieAlgebra::from_terms(std::move(diffs));
}

}  // namespace

ComplexStructure build_family(const SktParams& p, double tol) {
  auto cf = Coframe::complex_frame(3, {TermMap{}, TermMap{}, d_a3_terms(p)});
  RealLieAlgebra alg = realify(cf);
  Mat lambda(3, 6);
  for (int k = 0; k < 3; ++k) {
    lambda.at(k, 2 * k) = Scalar(1);
    lambda.at(k, 2 * k + 1) = Scalar::i();
  }
  return ComplexStructure(std::move(alg), std::move(lambda), tol);
}

Scalar skt2_residual(const SktParams& p) {
  return p.A.abs2() + p.D.abs2() + p.E.abs2() +
         Scalar(2) * (p.B.conj() * p.C).real_part();
}

Form matrix_form(const Mat2& m, const CoframePtr& cf) {
  if (cf->pairs() < 2) throw Error("matrix_form needs a complex coframe");
  int n = cf->pairs();
  Form f(cf);
  f = f + Form::monomial(cf, {0, n + 0}, m.c);
  f = f + Form::monomial(cf, {0, n + 1}, m.d);
  f = f + Form::monomial(cf, {1, n + 0}, -m.a);
  f = f + Form::monomial(cf, {1, n + 1}, -m.b);
  return f;
}

Form volume4(const CoframePtr& cf) {
  int n = cf->pairs();
  return Form::monomial(cf, {0, n, 1, n + 1});
}

Form volume6(const CoframePtr& cf) {
  return Form::monomial(cf, {0, 1, 2, 3, 4, 5});
}

Scalar coeff_wrt(const Form& f, const Form& unit, double tol) {
  if (unit.terms().size() != 1) throw Error("coeff_wrt: reference must be a monomial");
  Mask mo = unit.terms().begin()->first;
  Scalar u = unit.terms().begin()->second;
  double scale = std::max(1.0, f.max_abs());
  for (const auto& [m, c] : f.terms())
    if (m != mo && !c.is_zero(tol * scale))
      throw Error("coeff_wrt: form not proportional to reference");
  return f.coefficient(mo) / u;
}

TripleCoeffs triple_identities(const SktParams& p) {
  ComplexStructure s = build_family(p);
  const CoframePtr& cf = s.complex_coframe();
  Form da3 = cf->d_generator(2);
  Form dc3 = cf->d_generator(5);
  Form vol = volume4(cf);
  return {coeff_wrt(da3.wedge(dc3), vol), coeff_wrt(da3.apply_J().wedge(dc3), vol),
          coeff_wrt(da3.wedge(da3), vol)};
}

Mat b_matrix(const SktParams& p) {
  Scalar U = p.B * p.C - p.A * p.D;
  Scalar e2 = p.E.abs2();
  Mat b(2, 2);
  b.at(0, 0) = -(e2 + U.real_part());
  b.at(0, 1) = -U.imag_part();
  b.at(1, 0) = -U.imag_part();
  b.at(1, 1) = -(e2 - U.real_part());
  return b;
}

std::string classify_real(const SktParams& p, double tol) {
  if (p.all_zero()) throw Error("abelian Lie algebra: nothing to classify (d a3 = 0)");
  return classify_real(real_structure_constants(build_family(p, tol)), tol);
}

std::string classify_real(const RealLieAlgebra& L, double tol) {
  int n = L.dim();
  // Basis of the image of d on 1-forms.
  std::vector<Form> sigma;
  std::map<Mask, int> coords;
  for (int k = 0; k < n; ++k)
    for (const auto& [mo, c] : L.coframe->d_terms(k)) coords.try_emplace(mo, 0);
  int idx = 0;
  for (auto& [mo, i] : coords) i = idx++;
  auto coord_rank = [&](const std::vector<Form>& fs) {
    Mat m(std::max<int>(1, static_cast<int>(fs.size())), std::max(1, idx));
    for (int r = 0; r < static_cast<int>(fs.size()); ++r)
      for (const auto& [mo, c] : fs[r].terms()) m.at(r, coords[mo]) = c;
    return m.rank(tol);
  };
  for (int k = 0; k < n; ++k) {
    Form dk = L.coframe->d_generator(k);
    if (dk.is_zero(tol)) continue;
    auto trial = sigma;
    trial.push_back(dk);
    if (coord_rank(trial) > coord_rank(sigma)) sigma.push_back(dk);
  }
  int r = static_cast<int>(sigma.size());
  if (r == 0) throw Error("abelian Lie algebra: nothing to classify");
  if (r > 2) throw Error("classify_real: image of d has rank > 2 (outside the family)");

  // Gram matrix of the image 2-forms: sigma_i ^ sigma_j = g_ij * VOL.
  std::vector<std::vector<Form>> prod(r, std::vector<Form>(r));
  double scale = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      prod[i][j] = sigma[i].wedge(sigma[j]);
      scale = std::max(scale, prod[i][j].max_abs());
    }
  bool all_zero = true;
  for (int i = 0; i < r && all_zero; ++i)
    for (int j = i; j < r; ++j)
      if (!prod[i][j].is_zero(tol * std::max(1.0, scale))) {
        all_zero = false;
        break;
      }
  if (all_zero) return r == 1 ? "(0,0,0,0,0,12)" : "(0,0,0,0,12,13)";  // (v), (i)

  // Reference 4-form: largest coefficient among the products.
  Mask ref_mask = 0;
  Scalar ref_c(0);
  double best = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      for (const auto& [mo, c] : prod[i][j].terms())
        if (c.abs() > best) {
          best = c.abs();
          ref_mask = mo;
          ref_c = c;
        }
  Mat g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Scalar t = prod[i][j].coefficient(ref_mask) / ref_c;
      Form rem = prod[i][j] - Form(L.coframe, TermMap{{ref_mask, t * ref_c}});
      if (!rem.is_zero(tol * std::max(1.0, scale)))
        throw Error("classify_real: image wedges not collinear (outside the family)");
      if (!t.is_real(tol)) throw Error("classify_real: non-real Gram entry");
      g.at(i, j) = t.real_part();
      g.at(j, i) = t.real_part();
    }
  if (r == 1) return "(0,0,0,0,0,12+34)";  // (vi): rank-1 Gram
  double gs = std::max(1.0, g.max_abs());
  Scalar det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
  int sign = det.sign_real(tol * gs * gs);
  if (sign == 0) return "(0,0,0,0,12,14+23)";    // (iii): rank-1 Gram
  if (sign > 0) return "(0,0,0,0,13+42,14+23)";  // (ii): definite
  return "(0,0,0,0,12,34)";                      // (iv): indefinite
}

Scalar balanced_residual(const SktParams& p, const Scalar& x, const Scalar& y,
                         const Scalar& z) {
  if (!x.is_real() || !y.is_real()) throw Error("balanced_residual: x, y must be real");
  if (x.sign_real() <= 0 || y.sign_real() <= 0 || (x * y - z.abs2()).sign_real() <= 0)
    throw Error("balanced_residual: positivity violated");
  return p.A * z + Scalar::i() * (p.B * x - p.C * y) + p.D * z.conj();
}

}  // namespace nilskt
