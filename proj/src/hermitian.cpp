#include "nilskt/hermitian.hpp"

#include <bit>

namespace nilskt {

HermitianForm::HermitianForm(Mat x, double tol) : x_(std::move(x)) {
  if (x_.rows() != x_.cols()) throw Error("HermitianForm: square matrix required");
  double scale = std::max(1.0, x_.max_abs());
  for (int i = 0; i < x_.rows(); ++i)
    for (int j = 0; j < x_.cols(); ++j)
      if (!(x_.at(j, i).conj() + x_.at(i, j)).is_zero(tol * scale))
        throw Error("HermitianForm: conj(x_ji) = -x_ij violated");
}

HermitianForm HermitianForm::standard(int n) {
  Mat x(n, n);
  for (int i = 0; i < n; ++i) x.at(i, i) = Scalar::exact(0, mpq_class(1, 2));
  return HermitianForm(std::move(x));
}

HermitianForm HermitianForm::from_xyz(const Scalar& x, const Scalar& y, const Scalar& z,
                                      const Scalar& x33) {
  Mat m(3, 3);
  m.at(0, 0) = Scalar::i() * x;
  m.at(1, 1) = Scalar::i() * y;
  m.at(0, 1) = z;
  m.at(1, 0) = -z.conj();
  m.at(2, 2) = x33;
  return HermitianForm(std::move(m));
}

bool HermitianForm::positive(double tol) const {
  Mat h = this->h();
  double scale = std::max(1.0, h.max_abs());
  for (int k = 1; k <= h.rows(); ++k) {
    Mat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = h.at(i, j);
    Scalar d = lead.det();
    if (!d.is_real(tol * scale)) throw Error("positivity: minor not real");
    if (d.real_part().sign_real(tol * scale) <= 0) return false;
  }
  return true;
}

Form omega_form(const HermitianForm& w, const CoframePtr& cf) {
  int n = cf->pairs();
  if (n != w.dim()) throw Error("omega_form: dimension mismatch");
  Form f(cf);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f = f + Form::monomial(cf, {i, n + j}, w.x().at(i, j));
  return f;
}

HermitianForm hermitian_from_real(const Form& omega_real, const ComplexStructure& s,
                                  double tol) {
  Form oc = s.to_complex(omega_real);
  double scale = std::max(1.0, oc.max_abs());
  if (!(oc - oc.type_component(1, 1)).is_zero(tol * scale))
    throw Error("hermitian_from_real: form has components off type (1,1)");
  int n = s.n();
  Mat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mask mo = (1u << i) | (1u << (n + j));
      x.at(i, j) = oc.coefficient(mo);
    }
  return HermitianForm(std::move(x), tol);
}

Mat metric_tensor(const HermitianForm& w, const ComplexStructure& s) {
  return metric_from_real(s.to_real(omega_form(w, s.complex_coframe())), s);
}

Mat metric_from_real(const Form& omega_real, const ComplexStructure& s) {
  int dim = s.algebra().dim();
  Mat om(dim, dim);
  for (const auto& [mo, c] : omega_real.terms()) {
    if (std::popcount(mo) != 2) throw Error("metric: not a 2-form");
    int i = std::countr_zero(mo);
    int j = std::countr_zero(mo & (mo - 1));
    om.at(i, j) = c;
    om.at(j, i) = -c;
  }
  Mat g = om * s.j_matrix();
  double scale = std::max(1.0, g.max_abs());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (!g.at(i, j).is_real(1e-12 * scale)) throw Error("metric tensor not real");
      g.at(i, j) = g.at(i, j).real_part();
    }
  return g;
}

const char* to_string(SktStatus st) {
  switch (st) {
    case SktStatus::kahler: return "kahler";
    case SktStatus::skt: return "skt";
    default: return "neither";
  }
}

SktStatus skt_status_on(const Form& omega, double tol) {
  const CoframePtr& cf = omega.coframe();
  double dscale = 0;
  for (int i = 0; i < cf->size(); ++i)
    dscale = std::max(dscale, cf->d_generator(i).max_abs());
  double scale = std::max(1.0, omega.max_abs() * std::max(1.0, dscale));
  Form dw = omega.d();
  if (dw.is_zero(tol * scale)) return SktStatus::kahler;
  double scale2 = std::max(scale, scale * dscale);
  if (omega.box().is_zero(tol * scale2)) return SktStatus::skt;
  return SktStatus::neither;
}

SktStatus skt_status(const HermitianForm& w, const ComplexStructure& s,
                     bool allow_pseudo, double tol) {
  if (!allow_pseudo && !w.positive(tol))
    throw Error("skt_status: form is not positive (pass allow_pseudo to override)");
  return skt_status_on(omega_form(w, s.complex_coframe()), tol);
}

Form lee_form_on(const Form& omega, double tol) {
  const CoframePtr& cf = omega.coframe();
  int n = cf->size();
  Form om2 = omega.wedge(omega);
  Form rhs = om2.d();
  // theta ^ W^2 = d(W^2) as a linear system over the (n-1)-form coordinates.
  std::map<Mask, int> coords;
  std::vector<Form> cols(n);
  for (int i = 0; i < n; ++i) {
    cols[i] = cf->generator(i).wedge(om2);
    for (const auto& [mo, c] : cols[i].terms()) coords.try_emplace(mo, 0);
  }
  for (const auto& [mo, c] : rhs.terms()) coords.try_emplace(mo, 0);
  int rows = 0;
  for (auto& [mo, idx] : coords) idx = rows++;
  Mat M(std::max(rows, 1), n), b(std::max(rows, 1), 1);
  for (int i = 0; i < n; ++i)
    for (const auto& [mo, c] : cols[i].terms()) M.at(coords[mo], i) = c;
  for (const auto& [mo, c] : rhs.terms()) b.at(coords[mo], 0) = c;
  auto sol = M.solve(b, tol);
  if (!sol) throw Error("lee_form: degenerate fundamental form");
  Form theta(cf);
  for (int i = 0; i < n; ++i) theta = theta + Form::monomial(cf, {i}, sol->at(i, 0));
  return theta;
}

Form lee_form(const HermitianForm& w, const ComplexStructure& s, double tol) {
  return lee_form_on(omega_form(w, s.complex_coframe()), tol);
}

Form bismut_torsion(const Form& omega) { return omega.d().apply_J(); }

Form primitive_defect_on(const Form& omega, double tol) {
  const CoframePtr& cf = omega.coframe();
  int n = cf->pairs();
  if (n < 2) throw Error("primitive_defect: need complex dimension >= 2");
  Form theta = lee_form_on(omega, tol);
  Scalar inv_nm1 = Scalar(1) / Scalar(n - 1);
  return omega.d() - theta.wedge(omega).scaled(inv_nm1);
}

}  // namespace nilskt
