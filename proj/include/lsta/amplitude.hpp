#ifndef LSTA_AMPLITUDE_HPP
#define LSTA_AMPLITUDE_HPP

#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "lsta/errors.hpp"

namespace lsta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact complex number (sum_j a_j w^j) / sqrt(2)^k with w = e^{i pi/8}.
///
/// Values are kept in a unique normal form: the numerator is divided by
/// sqrt(2) for as long as the division is exact and k > 0, and zero has k = 0.
/// Structural equality is therefore value equality.
class AlgebraicComplex {
 public:
  using Coeffs = std::array<BigInt, 8>;

  AlgebraicComplex() = default;
  AlgebraicComplex(long long v) { c_[0] = v; }  // NOLINT: implicit on purpose
  AlgebraicComplex(Coeffs coeffs, unsigned k) : c_(std::move(coeffs)), k_(k) { normalize(); }

  /// w^j for any integer j.
  static AlgebraicComplex omega(long long j) {
    AlgebraicComplex r;
    long long e = ((j % 16) + 16) % 16;
    if (e < 8) {
      r.c_[e] = 1;
    } else {
      r.c_[e - 8] = -1;
    }
    return r;
  }
  static AlgebraicComplex inv_sqrt2() { return AlgebraicComplex(Coeffs{1}, 1); }
  static AlgebraicComplex sqrt2() { return AlgebraicComplex(Coeffs{0, 0, 1, 0, 0, 0, -1, 0}, 0); }
  static AlgebraicComplex i() { return omega(4); }

  const Coeffs& coeffs() const noexcept { return c_; }
  unsigned sqrt2_exp() const noexcept { return k_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend AlgebraicComplex operator+(const AlgebraicComplex& x, const AlgebraicComplex& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    Coeffs a = x.c_, b = y.c_;
    unsigned k = x.k_;
    for (unsigned e = x.k_; e < y.k_; ++e) a = times_sqrt2(a);
    for (unsigned e = y.k_; e < x.k_; ++e) b = times_sqrt2(b);
    if (y.k_ > k) k = y.k_;
    for (std::size_t j = 0; j < 8; ++j) a[j] += b[j];
    return AlgebraicComplex(std::move(a), k);
  }

  friend AlgebraicComplex operator-(const AlgebraicComplex& x) {
    AlgebraicComplex r = x;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend AlgebraicComplex operator-(const AlgebraicComplex& x, const AlgebraicComplex& y) { return x + (-y); }

  friend AlgebraicComplex operator*(const AlgebraicComplex& x, const AlgebraicComplex& y) {
    if (x.is_zero() || y.is_zero()) return {};
    Coeffs r;
    for (std::size_t i = 0; i < 8; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        if (y.c_[j] == 0) continue;
        // w^8 = -1
        if (i + j < 8) {
          r[i + j] += x.c_[i] * y.c_[j];
        } else {
          r[i + j - 8] -= x.c_[i] * y.c_[j];
        }
      }
    }
    return AlgebraicComplex(std::move(r), x.k_ + y.k_);
  }

  AlgebraicComplex& operator+=(const AlgebraicComplex& o) { return *this = *this + o; }
  AlgebraicComplex& operator*=(const AlgebraicComplex& o) { return *this = *this * o; }

  /// Complex conjugate: w^j -> w^{-j} = -w^{8-j}.
  AlgebraicComplex conjugate() const {
    Coeffs r;
    r[0] = c_[0];
    for (std::size_t j = 1; j < 8; ++j) r[8 - j] = -c_[j];
    return AlgebraicComplex(std::move(r), k_);
  }

  std::complex<double> to_float() const {
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
      if (c_[j] == 0) continue;
      double a = c_[j].convert_to<double>();
      s += a * std::polar(1.0, M_PI * static_cast<double>(j) / 8.0);
    }
    return s * std::pow(2.0, -0.5 * static_cast<double>(k_));
  }

  friend bool operator==(const AlgebraicComplex& x, const AlgebraicComplex& y) {
    return x.k_ == y.k_ && x.c_ == y.c_;
  }
  friend bool operator!=(const AlgebraicComplex& x, const AlgebraicComplex& y) { return !(x == y); }

  /// Arbitrary but total order, for use in ordered containers.
  friend bool operator<(const AlgebraicComplex& x, const AlgebraicComplex& y) {
    if (x.k_ != y.k_) return x.k_ < y.k_;
    return x.c_ < y.c_;
  }

  std::size_t hash() const {
    std::size_t h = k_;
    for (const auto& v : c_) boost::hash_combine(h, boost::multiprecision::hash_value(v));
    return h;
  }

  /// Literal in the textual grammar; sugar forms where they apply.
  std::string str() const;

  static AlgebraicComplex parse(std::string_view text);

 private:
  // Multiply by sqrt(2) = w^2 - w^6.
  static Coeffs times_sqrt2(const Coeffs& a) {
    Coeffs r;
    for (std::size_t j = 0; j < 8; ++j) {
      if (a[j] == 0) continue;
      std::size_t p = j + 2;
      if (p < 8) {
        r[p] += a[j];
      } else {
        r[p - 8] -= a[j];
      }
      std::size_t q = j + 6;
      if (q < 8) {
        r[q] -= a[j];
      } else {
        r[q - 8] += a[j];
      }
    }
    return r;
  }

  void normalize() {
    if (is_zero()) {
      k_ = 0;
      return;
    }
    while (k_ > 0) {
      Coeffs t = times_sqrt2(c_);
      bool even = true;
      for (const auto& v : t) {
        if (bit_test(v, 0)) {
          even = false;
          break;
        }
      }
      if (!even) break;
      for (auto& v : t) v /= 2;
      c_ = std::move(t);
      --k_;
    }
  }

  static bool bit_test(const BigInt& v, unsigned b) { return boost::multiprecision::bit_test(v, b); }

  Coeffs c_{};
  unsigned k_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraicComplex& v) { return os << v.str(); }

namespace detail {

inline std::string coeffs_literal(const AlgebraicComplex& v) {
  std::string s = "C(";
  for (std::size_t j = 0; j < 8; ++j) {
    if (j) s += ',';
    s += v.coeffs()[j].str();
  }
  s += ')';
  if (v.sqrt2_exp() > 0) s += "/s2^" + std::to_string(v.sqrt2_exp());
  return s;
}

}  // namespace detail

inline std::string AlgebraicComplex::str() const {
  if (is_zero()) return "0";
  // single-term values with a coefficient of +-1
  int term = -1;
  for (int j = 0; j < 8; ++j) {
    if (c_[j] == 0) continue;
    if (term >= 0) return detail::coeffs_literal(*this);
    term = j;
  }
  if (c_[term] != 1 && c_[term] != -1) return detail::coeffs_literal(*this);
  std::string sign = c_[term] == -1 ? "-" : "";
  if (term == 0 && k_ == 0) return sign + "1";
  if (term == 0 && k_ == 1) return sign + "1/s2";
  if (term == 4 && k_ == 0) return sign + "i";
  if (k_ == 0) return sign + "w^" + std::to_string(term);
  return detail::coeffs_literal(*this);
}

inline AlgebraicComplex AlgebraicComplex::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> InvalidArgument { return InvalidArgument("bad amplitude literal '" + std::string(text) + "'"); };
  auto parse_int = [&](const std::string& t, bool allow_sign) -> BigInt {
    std::size_t p = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) p = 1;
    if (p == t.size()) throw fail();
    for (std::size_t q = p; q < t.size(); ++q)
      if (!std::isdigit(static_cast<unsigned char>(t[q]))) throw fail();
    return BigInt(t);
  };
  if (s.empty()) throw fail();

  bool neg = false;
  std::string body = s;
  if (s[0] == '-' && s.size() > 1) {
    neg = true;
    body = s.substr(1);
  }
  AlgebraicComplex v;
  if (body == "0") return {};
  if (body == "1") {
    v = AlgebraicComplex(1);
  } else if (body == "i") {
    v = i();
  } else if (body == "1/s2") {
    v = inv_sqrt2();
  } else if (body.rfind("w^", 0) == 0) {
    v = omega(static_cast<long long>(parse_int(body.substr(2), true)));
  } else if (body.rfind("C(", 0) == 0) {
    auto close = body.find(')');
    if (close == std::string::npos) throw fail();
    std::string inner = body.substr(2, close - 2);
    Coeffs c;
    std::size_t j = 0, start = 0;
    for (;;) {
      auto comma = inner.find(',', start);
      if (j >= 8) throw fail();
      c[j++] = parse_int(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start), true);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (j != 8) throw fail();
    std::string rest = body.substr(close + 1);
    unsigned k = 0;
    if (!rest.empty()) {
      if (rest.rfind("/s2^", 0) != 0) throw fail();
      BigInt e = parse_int(rest.substr(4), false);
      if (e > 4096) throw fail();
      k = e.convert_to<unsigned>();
    }
    v = AlgebraicComplex(std::move(c), k);
  } else {
    throw fail();
  }
  return neg ? -v : v;
}

/// Row-major 2x2 matrix (u1 u2; u3 u4).
struct GateMatrix {
  std::array<AlgebraicComplex, 4> u;

  const AlgebraicComplex& operator[](std::size_t i) const { return u[i]; }

  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
    return {{a.u[0] * b.u[0] + a.u[1] * b.u[2], a.u[0] * b.u[1] + a.u[1] * b.u[3],
             a.u[2] * b.u[0] + a.u[3] * b.u[2], a.u[2] * b.u[1] + a.u[3] * b.u[3]}};
  }
  friend bool operator==(const GateMatrix& a, const GateMatrix& b) { return a.u == b.u; }
  friend bool operator!=(const GateMatrix& a, const GateMatrix& b) { return !(a == b); }

  GateMatrix dagger() const { return {{u[0].conjugate(), u[2].conjugate(), u[1].conjugate(), u[3].conjugate()}}; }
  bool is_diagonal() const { return u[1].is_zero() && u[2].is_zero(); }
  bool is_antidiagonal() const { return u[0].is_zero() && u[3].is_zero(); }
  bool is_unitary() const;
};

namespace gates {

inline GateMatrix diag(AlgebraicComplex r0, AlgebraicComplex r1) { return {{std::move(r0), 0, 0, std::move(r1)}}; }
inline GateMatrix identity() { return diag(1, 1); }
inline GateMatrix x() { return {{0, 1, 1, 0}}; }
inline GateMatrix y() { return {{0, -AlgebraicComplex::i(), AlgebraicComplex::i(), 0}}; }
inline GateMatrix z() { return diag(1, -1); }
inline GateMatrix s() { return diag(1, AlgebraicComplex::omega(4)); }
inline GateMatrix sdg() { return diag(1, AlgebraicComplex::omega(12)); }
inline GateMatrix t() { return diag(1, AlgebraicComplex::omega(2)); }
inline GateMatrix tdg() { return diag(1, AlgebraicComplex::omega(14)); }
inline GateMatrix h() {
  auto r = AlgebraicComplex::inv_sqrt2();
  return {{r, r, r, -r}};
}

// Rotations take n for the angle n*pi/4, so the half angle is n*pi/8 = w^n.
inline GateMatrix rz(long long n) { return diag(AlgebraicComplex::omega(-n), AlgebraicComplex::omega(n)); }
inline GateMatrix rx(long long n) {
  AlgebraicComplex half(AlgebraicComplex::Coeffs{1}, 2);
  auto c = (AlgebraicComplex::omega(n) + AlgebraicComplex::omega(-n)) * half;
  auto s = (AlgebraicComplex::omega(-n) - AlgebraicComplex::omega(n)) * half;
  return {{c, s, s, c}};
}
inline GateMatrix ph(long long n) {
  auto p = AlgebraicComplex::omega(2 * n);
  return diag(p, p);
}

}  // namespace gates

inline bool GateMatrix::is_unitary() const { return *this * dagger() == gates::identity(); }

/// n such that (num/den)*pi = n*pi/4. Throws UnsupportedAngle otherwise.
inline long long quarter_pi_multiple(long long num, long long den) {
  if (den == 0) throw UnsupportedAngle("zero denominator in angle");
  if ((4 * num) % den != 0)
    throw UnsupportedAngle("angle " + std::to_string(num) + "*pi/" + std::to_string(den) + " is not a multiple of pi/4");
  return 4 * num / den;
}

}  // namespace lsta

template <>
struct std::hash<lsta::AlgebraicComplex> {
  std::size_t operator()(const lsta::AlgebraicComplex& v) const { return v.hash(); }
};

#endif  // LSTA_AMPLITUDE_HPP
