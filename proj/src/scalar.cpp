#include "nilskt/scalar.hpp"

#include <sstream>

namespace nilskt {

Scalar Scalar::rational(const std::string& re, const std::string& im) {
  mpq_class r, i;
  if (r.set_str(re, 10) != 0) throw Error("bad rational literal: " + re);
  if (i.set_str(im, 10) != 0) throw Error("bad rational literal: " + im);
  return exact(std::move(r), std::move(i));
}

Scalar Scalar::ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return exact(0, 1);
    case 2: return Scalar(-1);
    default: return exact(0, -1);
  }
}

const mpq_class& Scalar::exact_re() const {
  if (!exact_) throw Error("exact_re on float-mode scalar");
  return re_;
}

const mpq_class& Scalar::exact_im() const {
  if (!exact_) throw Error("exact_im on float-mode scalar");
  return im_;
}

Scalar Scalar::operator-() const {
  if (exact_) return exact(-re_, -im_);
  return floating(-f_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(re_ + o.re_, im_ + o.im_);
  return floating(to_complex() + o.to_complex());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(re_ - o.re_, im_ - o.im_);
  return floating(to_complex() - o.to_complex());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_)
    return exact(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  return floating(to_complex() * o.to_complex());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (exact_ && o.exact_) {
    mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2 == 0) throw Error("division by zero scalar");
    return exact((re_ * o.re_ + im_ * o.im_) / n2, (im_ * o.re_ - re_ * o.im_) / n2);
  }
  std::complex<double> d = o.to_complex();
  if (d == std::complex<double>(0)) throw Error("division by zero scalar");
  return floating(to_complex() / d);
}

Scalar Scalar::conj() const {
  if (exact_) return exact(re_, -im_);
  return floating(std::conj(f_));
}

Scalar Scalar::abs2() const {
  if (exact_) return exact(re_ * re_ + im_ * im_, 0);
  return floating(std::norm(f_), 0);
}

Scalar Scalar::real_part() const {
  if (exact_) return exact(re_, 0);
  return floating(f_.real(), 0);
}

Scalar Scalar::imag_part() const {
  if (exact_) return exact(im_, 0);
  return floating(f_.imag(), 0);
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact_ && o.exact_) return re_ == o.re_ && im_ == o.im_;
  return to_complex() == o.to_complex();
}

int Scalar::sign_real(double tol) const {
  if (exact_) {
    if (im_ != 0) throw Error("sign_real on non-real scalar");
    return sgn(re_);
  }
  if (std::abs(f_.imag()) > tol) throw Error("sign_real on non-real scalar");
  if (std::abs(f_.real()) <= tol) return 0;
  return f_.real() > 0 ? 1 : -1;
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (exact_) {
    os << re_.get_str();
    if (im_ != 0) os << (im_ > 0 ? "+" : "") << im_.get_str() << "i";
  } else {
    os.precision(17);
    os << f_.real();
    if (f_.imag() != 0) os << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
  }
  return os.str();
}

}  // namespace nilskt
