#include "nilskt/form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "nilskt/linalg.hpp"

namespace nilskt {

namespace {

// Conjugate a term map over a coframe given only its conjugation pairing.
TermMap conj_terms(const TermMap& terms, int n, int m) {
  TermMap out;
  for (const auto& [mo, c] : terms) {
    Mask img = 0;
    int sign = 1;
    // Map indices in increasing order, counting inversions of the image.
    std::vector<int> image;
    for (int i = 0; i < n; ++i) {
      if (!(mo >> i & 1u)) continue;
      int j = (m == 0) ? i : (i < m ? i + m : i - m);
      for (int prev : image)
        if (prev > j) sign = -sign;
      image.push_back(j);
      img |= (1u << j);
    }
    Scalar v = c.conj();
    if (sign < 0) v = -v;
    auto [it, fresh] = out.try_emplace(img, v);
    if (!fresh) it->second += v;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero(0.0) ? out.erase(it) : std::next(it);
  return out;
}

bool dd_vanishes(const std::shared_ptr<const Coframe>& cf) {
  for (int i = 0; i < cf->size(); ++i)
    if (!cf->d_generator(i).d().structurally_zero()) return false;
  return true;
}

}  // namespace

std::shared_ptr<const Coframe> Coframe::complex_frame(int m,
                                                      std::vector<TermMap> d_holomorphic) {
  if (static_cast<int>(d_holomorphic.size()) != m)
    throw Error("complex_frame: need one differential per holomorphic generator");
  auto cf = std::shared_ptr<Coframe>(new Coframe());
  cf->m_ = m;
  cf->diffs_ = std::move(d_holomorphic);
  cf->diffs_.resize(2 * m);
  for (int i = 0; i < m; ++i) cf->diffs_[m + i] = conj_terms(cf->diffs_[i], 2 * m, m);
  for (int i = 0; i < m; ++i) cf->names_.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) cf->names_.push_back("c" + std::to_string(i + 1));
  cf->jacobi_ = dd_vanishes(cf);
  return cf;
}

std::shared_ptr<const Coframe> Coframe::real_frame(int n, std::vector<TermMap> diffs) {
  if (static_cast<int>(diffs.size()) != n)
    throw Error("real_frame: need one differential per generator");
  auto cf = std::shared_ptr<Coframe>(new Coframe());
  cf->m_ = 0;
  cf->diffs_ = std::move(diffs);
  for (int i = 0; i < n; ++i) cf->names_.push_back("e" + std::to_string(i + 1));
  cf->jacobi_ = dd_vanishes(cf);
  return cf;
}

Form Coframe::d_generator(int i) const { return Form(shared_from_this(), diffs_[i]); }

Form Coframe::generator(int i) const {
  TermMap t;
  t[1u << i] = Scalar(1);
  return Form(shared_from_this(), std::move(t));
}

Form Coframe::zero() const { return Form(shared_from_this()); }

Form Coframe::make(TermMap terms) const { return Form(shared_from_this(), std::move(terms)); }

bool jacobi_check(const Coframe& cf) { return cf.jacobi(); }

int merge_sign(Mask a, Mask b) {
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Form::Form(CoframePtr cf, TermMap terms) : cf_(std::move(cf)) {
  for (auto& [mo, c] : terms)
    if (!c.is_zero(0.0)) terms_.emplace(mo, std::move(c));
}

Form Form::monomial(const CoframePtr& cf, std::initializer_list<int> indices, Scalar coeff) {
  return monomial(cf, std::vector<int>(indices), std::move(coeff));
}

Form Form::monomial(const CoframePtr& cf, const std::vector<int>& indices, Scalar coeff) {
  Mask mo = 0;
  int sign = 1;
  for (size_t k = 0; k < indices.size(); ++k) {
    int i = indices[k];
    if (i < 0 || i >= cf->size()) throw Error("monomial index out of range");
    Mask bit = 1u << i;
    if (mo & bit) return Form(cf);  // repeated generator
    sign *= merge_sign(mo, bit);
    mo |= bit;
  }
  TermMap t;
  Scalar c = sign < 0 ? -coeff : coeff;
  if (!c.is_zero(0.0)) t[mo] = c;
  return Form(cf, std::move(t));
}

void Form::insert(Mask mo, const Scalar& c) {
  auto [it, fresh] = terms_.try_emplace(mo, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero(0.0)) terms_.erase(it);
  } else if (it->second.is_zero(0.0)) {
    terms_.erase(it);
  }
}

bool Form::is_zero(double tol) const {
  for (const auto& [mo, c] : terms_)
    if (!c.is_zero(tol)) return false;
  return true;
}

double Form::max_abs() const {
  double m = 0;
  for (const auto& [mo, c] : terms_) m = std::max(m, c.abs());
  return m;
}

Scalar Form::coefficient(Mask mo) const {
  auto it = terms_.find(mo);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Form::coefficient(std::initializer_list<int> indices) const {
  Mask mo = 0;
  int sign = 1;
  for (int i : indices) {
    Mask bit = 1u << i;
    if (mo & bit) throw Error("coefficient: repeated index");
    sign *= merge_sign(mo, bit);
    mo |= bit;
  }
  Scalar c = coefficient(mo);
  return sign < 0 ? -c : c;
}

Form Form::operator+(const Form& o) const {
  if (cf_ != o.cf_) throw Error("coframe mismatch");
  Form r = *this;
  for (const auto& [mo, c] : o.terms_) r.insert(mo, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
  Form r(cf_);
  for (const auto& [mo, c] : terms_) r.terms_.emplace(mo, -c);
  return r;
}

Form Form::scaled(const Scalar& s) const {
  Form r(cf_);
  if (s.is_zero(0.0)) return r;
  for (const auto& [mo, c] : terms_) {
    Scalar v = c * s;
    if (!v.is_zero(0.0)) r.terms_.emplace(mo, v);
  }
  return r;
}

Form Form::wedge(const Form& o) const {
  if (cf_ != o.cf_) throw Error("coframe mismatch");
  Form r(cf_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;
      Scalar v = ca * cb;
      if (merge_sign(ma, mb) < 0) v = -v;
      r.insert(ma | mb, v);
    }
  return r;
}

Form Form::d() const {
  Form r(cf_);
  for (const auto& [mo, c] : terms_) {
    int pos = 0;
    Mask rest = mo;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      // d g_i is even, so it slides to the front with only the (-1)^pos
      // from moving d past the preceding 1-forms.
      Mask others = mo & ~(1u << i);
      Scalar sc = (pos % 2 == 0) ? c : -c;
      Form tail(cf_, TermMap{{others, sc}});
      r = r + cf_->d_generator(i).wedge(tail);
      ++pos;
    }
  }
  return r;
}

Form Form::conj() const {
  return Form(cf_, conj_terms(terms_, cf_->size(), cf_->pairs()));
}

Form Form::apply_J() const {
  int m = cf_->pairs();
  if (m == 0) throw Error("apply_J needs a complex coframe");
  Mask unbar = (1u << m) - 1;
  Form r(cf_);
  for (const auto& [mo, c] : terms_) {
    int p = std::popcount(mo & unbar);
    int q = std::popcount(mo & ~unbar);
    r.terms_.emplace(mo, c * Scalar::ipow(p - q));
  }
  return r;
}

Form Form::box() const {
  static const Scalar half_i = Scalar::exact(0, mpq_class(1, 2));
  return d().apply_J().d().scaled(half_i);
}

Form Form::type_component(int p, int q) const {
  int m = cf_->pairs();
  if (m == 0) throw Error("type_component needs a complex coframe");
  Mask unbar = (1u << m) - 1;
  Form r(cf_);
  for (const auto& [mo, c] : terms_) {
    if (std::popcount(mo & unbar) == p && std::popcount(mo & ~unbar) == q)
      r.terms_.emplace(mo, c);
  }
  return r;
}

int Form::degree() const {
  int deg = -1;
  for (const auto& [mo, c] : terms_) {
    int d = std::popcount(mo);
    if (deg < 0) deg = d;
    else if (deg != d) throw Error("degree of mixed-degree form");
  }
  if (deg < 0) throw Error("degree of zero form");
  return deg;
}

bool Form::homogeneous_of_degree(int k) const {
  for (const auto& [mo, c] : terms_)
    if (std::popcount(mo) != k) return false;
  return true;
}

bool Form::near(const Form& o, double tol) const {
  if (cf_ != o.cf_) return false;
  return (*this - o).is_zero(tol);
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print by (degree, mask) for readability.
  std::vector<std::pair<Mask, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = std::popcount(x.first), dy = std::popcount(y.first);
    return dx != dy ? dx < dy : x.first < y.first;
  });
  for (const auto& [mo, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < cf_->size(); ++i)
      if (mo >> i & 1u) os << " " << cf_->name(i);
  }
  return os.str();
}

TermMap change_terms(const TermMap& terms, const Mat& old_in_new) {
  TermMap out;
  for (const auto& [mo, c] : terms) {
    // Expand the product of substituted 1-forms, factor by factor.
    TermMap acc{{0u, c}};
    Mask rest = mo;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      TermMap next;
      for (const auto& [ma, ca] : acc)
        for (int l = 0; l < old_in_new.cols(); ++l) {
          const Scalar& w = old_in_new.at(j, l);
          if (w.is_zero(0.0)) continue;
          Mask bit = 1u << l;
          if (ma & bit) continue;
          Scalar v = ca * w;
          if (merge_sign(ma, bit) < 0) v = -v;
          auto [it, fresh] = next.try_emplace(ma | bit, v);
          if (!fresh) it->second += v;
        }
      acc = std::move(next);
    }
    for (const auto& [ma, ca] : acc) {
      auto [it, fresh] = out.try_emplace(ma, ca);
      if (!fresh) it->second += ca;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero(0.0) ? out.erase(it) : std::next(it);
  return out;
}

Form change_basis(const Form& f, const Mat& old_in_new, const CoframePtr& target) {
  if (old_in_new.rows() != f.coframe()->size() || old_in_new.cols() != target->size())
    throw Error("change_basis shape mismatch");
  return Form(target, change_terms(f.terms(), old_in_new));
}

Scalar top_coefficient(const Form& w, int i, int j) {
  const CoframePtr& cf = w.coframe();
  int m = cf->pairs();
  if (m == 0) throw Error("top_coefficient needs a complex coframe");
  if (!w.structurally_zero() && !w.homogeneous_of_degree(2 * m - 2))
    throw Error("top_coefficient: degree mismatch");
  Form lead = cf->generator(i - 1).wedge(cf->generator(m + j - 1));
  Mask full = (1u << (2 * m)) - 1;
  return lead.wedge(w).coefficient(full);
}

}  // namespace nilskt
