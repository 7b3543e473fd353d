#pragma once

#include <random>

#include "nilskt/hermitian.hpp"
#include "nilskt/skt_family.hpp"

namespace nilskt::testutil {

using Rng = std::mt19937_64;

inline mpq_class rand_q(Rng& rng, int hi = 6, int den = 4) {
  std::uniform_int_distribution<int> num(-hi, hi), d(1, den);
  mpq_class q(num(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Scalar rand_scalar(Rng& rng) { return Scalar::exact(rand_q(rng), rand_q(rng)); }
inline Scalar rand_real(Rng& rng) { return Scalar::exact(rand_q(rng)); }

inline Scalar rand_nonzero(Rng& rng) {
  Scalar s = rand_scalar(rng);
  return s.is_zero() ? Scalar(1) : s;
}

inline SktParams rand_params(Rng& rng) {
  return {rand_scalar(rng), rand_scalar(rng), rand_scalar(rng), rand_scalar(rng),
          rand_scalar(rng)};
}

/// Random tuple with skt2_residual exactly zero. Occasionally picks the
/// C-only branch; otherwise solves Re(conj(B) C) for random A, D, E, B.
inline SktParams rand_skt_params(Rng& rng) {
  if (rng() % 8 == 0) return {Scalar(0), Scalar(0), rand_nonzero(rng), Scalar(0), Scalar(0)};
  SktParams p{rand_scalar(rng), rand_nonzero(rng), Scalar(0), rand_scalar(rng),
              rand_scalar(rng)};
  Scalar s = p.A.abs2() + p.D.abs2() + p.E.abs2();
  Scalar re = -s / (Scalar(2) * p.B.abs2());
  p.C = p.B * (re + Scalar::i() * rand_real(rng));
  return p;
}

inline Mat rand_mat(Rng& rng, int r, int c) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rand_scalar(rng);
  return m;
}

inline Mat2 rand_mat2(Rng& rng) {
  return {rand_scalar(rng), rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)};
}

inline Mat2 rand_invertible2(Rng& rng) {
  for (int tries = 0; tries < 32; ++tries) {
    Mat2 m = rand_mat2(rng);
    if (!m.det().is_zero()) return m;
  }
  return Mat2::identity();
}

/// H = I + L^dagger L is positive definite; x = iH is the coefficient matrix.
inline HermitianForm rand_positive(Rng& rng, int n = 3) {
  Mat L = rand_mat(rng, n, n);
  Mat H = Mat::identity(n) + L.conj().transpose() * L;
  return HermitianForm(H.scaled(Scalar::i()));
}

inline Form rand_form(Rng& rng, const CoframePtr& cf, int degree, int terms = 4) {
  Form f(cf);
  int n = cf->size();
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx;
    while (static_cast<int>(idx.size()) < degree) {
      int g = pick(rng);
      bool dup = false;
      for (int e : idx) dup |= (e == g);
      if (!dup) idx.push_back(g);
    }
    f = f + Form::monomial(cf, idx, rand_scalar(rng));
  }
  return f;
}

inline Mat2 to_float(const Mat2& m) {
  return {Scalar::floating(m.a.to_complex()), Scalar::floating(m.b.to_complex()),
          Scalar::floating(m.c.to_complex()), Scalar::floating(m.d.to_complex())};
}

}  // namespace nilskt::testutil
