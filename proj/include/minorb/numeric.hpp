#ifndef MINORB_NUMERIC_HPP
#define MINORB_NUMERIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorb {

using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "n" or "n/d" (exact, throws on malformed input).
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Rising factorial (a)_p = a(a+1)...(a+p-1).
inline Rat pochhammer(const Rat& a, int p) {
  Rat acc = 1;
  for (int i = 0; i < p; ++i) acc *= a + i;
  return acc;
}

inline Rat rat_pow(const Rat& a, int p) {
  Rat acc = 1;
  for (int i = 0; i < p; ++i) acc *= a;
  return acc;
}

inline double rat_double(const Rat& r) { return r.get_d(); }

/// Gaussian rational: re + im*i with arbitrary-precision rational parts.
struct GQ {
  Rat re, im;

  GQ() : re(0), im(0) {}
  GQ(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GQ(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GQ conj() const { return GQ(re, -im); }

  GQ operator-() const { return GQ(-re, -im); }
  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re *= o.re;
      return *this;
    }
    Rat a = re * o.re - im * o.im;
    Rat b = re * o.im + im * o.re;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }
  GQ& operator/=(const GQ& o) {
    if (o.is_zero()) throw std::domain_error("GQ division by zero");
    if (sgn(o.im) == 0) {
      re /= o.re;
      im /= o.re;
      return *this;
    }
    Rat n = o.re * o.re + o.im * o.im;
    Rat a = (re * o.re + im * o.im) / n;
    Rat b = (im * o.re - re * o.im) / n;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  GQ inv() const {
    GQ one(1);
    return one / *this;
  }

  /// |z|^2 as a rational.
  Rat norm() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  /// "a/b" for real values, "a/b,c/d" otherwise (exact, parseable).
  std::string str() const {
    if (is_real()) return re.get_str();
    return re.get_str() + "," + im.get_str();
  }
  static GQ parse(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return GQ(rat_parse(s));
    return GQ(rat_parse(s.substr(0, comma)), rat_parse(s.substr(comma + 1)));
  }
};

inline GQ gq_i() { return GQ(Rat(0), Rat(1)); }

/// Deterministic splitmix64 stream; used everywhere randomness is needed so
/// runs are reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return lo + static_cast<std::int64_t>(v % span);
  }

  /// Small nonzero rational from a fixed box (numerator in [-3,3]\{0}, denominator 1 or 2).
  Rat small_rat_nonzero() {
    long num = 0;
    while (num == 0) num = uniform(-3, 3);
    long den = uniform(0, 1) ? 2 : 1;
    return rat_of(num, den);
  }

  Rat small_rat() { return uniform(0, 3) == 0 ? Rat(0) : small_rat_nonzero(); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace minorb

#endif
