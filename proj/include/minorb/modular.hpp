#ifndef MINORB_MODULAR_HPP
#define MINORB_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "minorb/matrix.hpp"
#include "minorb/numeric.hpp"

namespace minorb {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// Primes p = 3 (mod 4) just below 2^62, so F_p[i] is a field and Gaussian
/// rationals reduce componentwise.
inline std::vector<std::uint64_t> modular_primes(int count, std::uint64_t skip_below_index = 0) {
  std::vector<std::uint64_t> out;
  std::uint64_t candidate = (1ULL << 62) - 1;
  std::uint64_t seen = 0;
  while (static_cast<int>(out.size()) < count) {
    if (candidate % 4 == 3 && detail::is_prime_u64(candidate)) {
      if (seen++ >= skip_below_index) out.push_back(candidate);
    }
    candidate -= 2;
  }
  return out;
}

/// Element of F_p[i] = F_p[x]/(x^2+1); a field for p = 3 (mod 4).
struct Fp2 {
  std::uint64_t re = 0, im = 0;
};

class Fp2Ring {
 public:
  explicit Fp2Ring(std::uint64_t p) : p_(p) {}

  std::uint64_t p() const { return p_; }

  Fp2 add(Fp2 a, Fp2 b) const { return {addm(a.re, b.re), addm(a.im, b.im)}; }
  Fp2 sub(Fp2 a, Fp2 b) const { return {subm(a.re, b.re), subm(a.im, b.im)}; }
  Fp2 neg(Fp2 a) const { return {a.re ? p_ - a.re : 0, a.im ? p_ - a.im : 0}; }
  Fp2 mul(Fp2 a, Fp2 b) const {
    std::uint64_t ac = detail::mulmod(a.re, b.re, p_);
    std::uint64_t bd = detail::mulmod(a.im, b.im, p_);
    std::uint64_t ad = detail::mulmod(a.re, b.im, p_);
    std::uint64_t bc = detail::mulmod(a.im, b.re, p_);
    return {subm(ac, bd), addm(ad, bc)};
  }
  bool is_zero(Fp2 a) const { return a.re == 0 && a.im == 0; }
  Fp2 inv(Fp2 a) const {
    // 1/(x+iy) = (x-iy)/(x^2+y^2); the norm is invertible since p = 3 mod 4
    std::uint64_t n = addm(detail::mulmod(a.re, a.re, p_), detail::mulmod(a.im, a.im, p_));
    std::uint64_t ninv = detail::powmod(n, p_ - 2, p_);
    return {detail::mulmod(a.re, ninv, p_), a.im ? detail::mulmod(p_ - a.im, ninv, p_) : 0};
  }

  /// Image of a Gaussian rational; nullopt when a denominator vanishes mod p.
  std::optional<Fp2> reduce(const GQ& q) const {
    auto red = [&](const Rat& r) -> std::optional<std::uint64_t> {
      mpz_class num = r.get_num(), den = r.get_den();
      mpz_class pz(static_cast<unsigned long>(p_));
      mpz_class dm = den % pz;
      if (dm == 0) return std::nullopt;
      std::uint64_t d = dm.get_ui();
      mpz_class nm = num % pz;
      if (nm < 0) nm += pz;
      std::uint64_t n = nm.get_ui();
      return detail::mulmod(n, detail::powmod(d, p_ - 2, p_), p_);
    };
    auto re = red(q.re);
    auto im = red(q.im);
    if (!re || !im) return std::nullopt;
    return Fp2{*re, *im};
  }

 private:
  std::uint64_t addm(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  std::uint64_t subm(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

  std::uint64_t p_;
};

/// Rank of an exact matrix reduced mod p (advisory: never exceeds the exact
/// rank).  nullopt when some denominator is divisible by p.
inline std::optional<int> rank_mod(const Mat& m, std::uint64_t p) {
  Fp2Ring F(p);
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Fp2>> a(rows, std::vector<Fp2>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto v = F.reduce(m(r, c));
      if (!v) return std::nullopt;
      a[r][c] = *v;
    }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!F.is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Fp2 inv = F.inv(a[rank][c]);
    for (int j = c; j < cols; ++j) a[rank][j] = F.mul(a[rank][j], inv);
    for (int r = rank + 1; r < rows; ++r) {
      Fp2 f = a[r][c];
      if (F.is_zero(f)) continue;
      for (int j = c; j < cols; ++j) a[r][j] = F.sub(a[r][j], F.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// Greedy independent-column preselection mod p: returns the grlex-greedy set
/// of column indices that are independent mod p (a subset of any exact
/// greedy set; exact verification stays with the caller).
inline std::optional<std::vector<int>> greedy_columns_mod(const Mat& m, std::uint64_t p, int want) {
  Fp2Ring F(p);
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Fp2>> red(rows, std::vector<Fp2>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto v = F.reduce(m(r, c));
      if (!v) return std::nullopt;
      red[r][c] = *v;
    }
  // column-by-column elimination keeping track of pivot rows
  std::vector<int> chosen;
  int rank = 0;
  for (int c = 0; c < cols && rank < want; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!F.is_zero(red[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(red[piv][j], red[rank][j]);
    Fp2 inv = F.inv(red[rank][c]);
    for (int j = 0; j < cols; ++j) red[rank][j] = F.mul(red[rank][j], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Fp2 f = red[r][c];
      if (F.is_zero(f)) continue;
      for (int j = 0; j < cols; ++j) red[r][j] = F.sub(red[r][j], F.mul(f, red[rank][j]));
    }
    chosen.push_back(c);
    ++rank;
  }
  return chosen;
}

}  // namespace minorb

#endif
