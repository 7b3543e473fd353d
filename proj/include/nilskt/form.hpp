#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nilskt/scalar.hpp"

namespace nilskt {

/// A wedge monomial is a subset of generator indices, encoded as a bitmask.
/// Coefficients are stored for the index-increasing ordering of each subset.
using Mask = std::uint32_t;
using TermMap = std::map<Mask, Scalar>;

class Form;

/// A fixed coframe of invariant 1-forms with prescribed differentials.
/// Encodes a Lie algebra (via its structure equations) together with an
/// almost complex structure when the generators come in conjugate pairs:
/// generators 0..m-1 are the (1,0) half, m..2m-1 their conjugates.
/// Real coframes are self-conjugate (pairs() == 0).
class Coframe : public std::enable_shared_from_this<Coframe> {
 public:
  /// m holomorphic generators a1..am plus conjugates c1..cm; the
  /// differentials of the conjugates are derived by conjugation.
  static std::shared_ptr<const Coframe> complex_frame(int m,
                                                      std::vector<TermMap> d_holomorphic);
  static std::shared_ptr<const Coframe> real_frame(int n, std::vector<TermMap> diffs);

  int size() const { return static_cast<int>(diffs_.size()); }
  int pairs() const { return m_; }
  bool is_complex() const { return m_ > 0; }
  int conj_index(int i) const { return m_ == 0 ? i : (i < m_ ? i + m_ : i - m_); }
  const std::string& name(int i) const { return names_[i]; }

  Form d_generator(int i) const;
  /// The stored differential of generator i, as raw terms.
  const TermMap& d_terms(int i) const { return diffs_[i]; }
  Form generator(int i) const;
  Form zero() const;
  Form make(TermMap terms) const;

  /// True when d(d g) = 0 for every generator (the structure constants
  /// satisfy Jacobi and define a Lie algebra).
  bool jacobi() const { return jacobi_; }

 private:
  Coframe() = default;
  int m_ = 0;
  std::vector<TermMap> diffs_;
  std::vector<std::string> names_;
  bool jacobi_ = false;
};

using CoframePtr = std::shared_ptr<const Coframe>;

/// A differential form: finite sum of scalar multiples of wedge monomials
/// over a fixed coframe. Mixed degrees are allowed. Immutable coframe,
/// value semantics, no zero coefficients stored.
class Form {
 public:
  Form() = default;
  explicit Form(CoframePtr cf) : cf_(std::move(cf)) {}
  Form(CoframePtr cf, TermMap terms);

  static Form monomial(const CoframePtr& cf, std::initializer_list<int> indices,
                       Scalar coeff = Scalar(1));
  static Form monomial(const CoframePtr& cf, const std::vector<int>& indices,
                       Scalar coeff = Scalar(1));

  const CoframePtr& coframe() const { return cf_; }
  const TermMap& terms() const { return terms_; }
  bool structurally_zero() const { return terms_.empty(); }
  bool is_zero(double tol = 0.0) const;
  /// Largest coefficient magnitude; 0 for the zero form.
  double max_abs() const;

  Scalar coefficient(Mask mo) const;
  Scalar coefficient(std::initializer_list<int> indices) const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form scaled(const Scalar& s) const;

  /// Graded-anticommutative product; throws on coframe mismatch.
  Form wedge(const Form& o) const;
  /// Exterior derivative, extended from the generators by Leibniz.
  Form d() const;
  /// Antilinear conjugation (swaps each generator with its partner).
  Form conj() const;
  /// Multiplicative J: each (p,q) monomial scales by i^(p-q).
  Form apply_J() const;
  /// (1/2) i d(J(d .)); acts as del-delbar on (p,p) forms when d^2 = 0.
  Form box() const;
  /// Sum of monomials with exactly p unbarred and q barred generators.
  Form type_component(int p, int q) const;
  /// Degree of a homogeneous form; throws if mixed or zero.
  int degree() const;
  bool homogeneous_of_degree(int k) const;

  bool near(const Form& o, double tol = kDefaultTol) const;
  std::string str() const;

 private:
  void insert(Mask mo, const Scalar& c);
  CoframePtr cf_;
  TermMap terms_;
};

/// Sign of concatenating two disjoint increasing index sets, as a +-1 int.
int merge_sign(Mask a, Mask b);

bool jacobi_check(const Coframe& cf);
inline Form wedge(const Form& a, const Form& b) { return a.wedge(b); }
inline Form exterior_d(const Form& a) { return a.d(); }
inline Form conjugate(const Form& a) { return a.conj(); }
inline Form apply_J(const Form& a) { return a.apply_J(); }
inline Form box(const Form& a) { return a.box(); }
inline Form type_component(const Form& a, int p, int q) { return a.type_component(p, q); }

/// Coefficient of a^i wedge conj(a^j) wedge w relative to the standard
/// top form a1^...^am^c1^...^cm. Indices are 1-based; w must be a
/// (2m-4)-form (degree mismatch otherwise).
Scalar top_coefficient(const Form& w, int i, int j);

class Mat;

/// Rewrite `terms` through the substitution old_j = sum_l old_in_new[j][l] new_l.
TermMap change_terms(const TermMap& terms, const Mat& old_in_new);
/// Same substitution at the Form level, landing on the `target` coframe.
Form change_basis(const Form& f, const Mat& old_in_new, const CoframePtr& target);

}  // namespace nilskt
