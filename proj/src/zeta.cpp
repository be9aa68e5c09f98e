#include "sl1d/zeta.hpp"

#include <cmath>
#include <numeric>

#include "sl1d/error.hpp"
#include "sl1d/gf.hpp"

namespace sl1d {

namespace {

BigInt bpow(std::uint64_t b, long e) {
  BigInt r = 1, x = b;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= x;
    x *= x;
  }
  return r;
}

long ceil_div_l(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void check_params(std::uint64_t q, int ell) {
  if (q < 2 || ell < 2) raise(ErrorKind::BadInput, "need q >= 2 and l >= 2");
}

BigInt geometric_a0(std::uint64_t q, int ell) { return (bpow(q, ell) - 1) / (q - 1); }

BigRational rpow(const BigRational& x, long e) {
  if (e < 0) {
    if (x == 0) raise(ErrorKind::PoleAt, "zero raised to a negative power");
    return rpow(1 / x, -e);
  }
  BigRational r = 1, b = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

int iota(std::uint64_t q, int ell) { return static_cast<int>(std::gcd<std::uint64_t>(q - 1, ell)); }

BigInt a_m(std::uint64_t q, int ell, int m) {
  check_params(q, ell);
  if (m < 0) raise(ErrorKind::BadInput, "level must be non-negative");
  if (m == 0) return geometric_a0(q, ell);
  if (m % ell != 0) {
    const int i = iota(q, ell);
    return BigInt(i * i) * (q - 1) * bpow(q, m - ceil_div_l(m, ell));
  }
  return geometric_a0(q, ell) * (bpow(q, ell - 1) - 1) * bpow(q, static_cast<long>(ell - 1) * (m / ell - 1));
}

BigInt d_m(std::uint64_t q, int ell, int m) {
  check_params(q, ell);
  if (m < 0) raise(ErrorKind::BadInput, "level must be non-negative");
  if (m == 0) return 1;
  if (m % ell != 0) {
    // (l-1)(m-1) is even: l odd, or l = 2 with m odd.
    return geometric_a0(q, ell) / iota(q, ell) * bpow(q, static_cast<long>(ell - 1) * (m - 1) / 2);
  }
  return bpow(q, static_cast<long>(ell - 1) * m / 2);
}

BigInt group_order(std::uint64_t q, int ell, int r) {
  check_params(q, ell);
  if (r < 1) raise(ErrorKind::BadInput, "group order needs r >= 1");
  return geometric_a0(q, ell) * bpow(q, static_cast<long>(r - 1) * ell - ceil_div_l(r, ell) + 1);
}

std::vector<TelescopingRow> telescoping_table(std::uint64_t q, int ell, int max_level) {
  std::vector<TelescopingRow> rows;
  BigInt sa = 0, sad = 0;
  for (int m = 0; m <= max_level; ++m) {
    TelescopingRow row;
    row.m = m;
    row.a = a_m(q, ell, m);
    row.d = d_m(q, ell, m);
    sa += row.a;
    sad += row.a * row.d * row.d;
    row.sum_a = sa;
    row.sum_ad2 = sad;
    row.order_next = group_order(q, ell, m + 1);
    row.ok = row.sum_ad2 == row.order_next;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool telescoping_check(std::uint64_t q, int ell, int max_level) {
  for (const auto& r : telescoping_table(q, ell, max_level))
    if (!r.ok) return false;
  return true;
}

boost::rational<long long> pole(std::uint64_t q, int ell) {
  check_params(q, ell);
  // 1 - q^{(l-1) - C s} = 0 on the real line iff (l-1) - C s = 0.
  const long long C = static_cast<long long>(ell) * (ell - 1) / 2;
  return boost::rational<long long>(ell - 1, C);
}

double pole_period(std::uint64_t q, int ell) {
  const double C = ell * (ell - 1) / 2.0;
  return 2 * M_PI / (C * std::log(static_cast<double>(q)));
}

BigRational zeta_closed_form_exact(std::uint64_t q, int ell, long s) {
  check_params(q, ell);
  const long C = static_cast<long>(ell) * (ell - 1) / 2;
  const BigRational Q = BigRational(BigInt(q));
  const int i = iota(q, ell);
  const BigInt A = geometric_a0(q, ell);
  const BigRational den = 1 - rpow(Q, (ell - 1) - C * s);
  if (den == 0)
    raise(ErrorKind::PoleAt, "closed form has a pole at s = " + std::to_string(s));
  // q^{lambda (1 - (l-1)s/2)} is integral in the exponent: l odd, or l = 2 where only lambda = 0 occurs.
  BigRational inner = 0;
  for (int lam = 0; lam <= ell - 2; ++lam) {
    const long twice = static_cast<long>(lam) * (2 - (ell - 1) * s);
    inner += rpow(Q, twice / 2);
  }
  const BigRational num = BigRational(A) * (1 - rpow(Q, -C * s)) +
                          rpow(BigRational(A / i), -s) * (i * i) * BigRational(BigInt(q - 1)) * inner;
  return num / den;
}

std::complex<double> zeta_closed_form(std::uint64_t q, int ell, std::complex<double> s) {
  check_params(q, ell);
  using cd = std::complex<double>;
  const double C = ell * (ell - 1) / 2.0;
  const double lq = std::log(static_cast<double>(q));
  const double i = iota(q, ell);
  const double A = static_cast<double>(geometric_a0(q, ell));
  const cd den = 1.0 - std::exp((static_cast<double>(ell - 1) - C * s) * lq);
  const auto p = pole(q, ell);
  const double pr = static_cast<double>(p.numerator()) / static_cast<double>(p.denominator());
  const double k = s.imag() / pole_period(q, ell);
  if (std::abs(s.real() - pr) < 1e-12 && std::abs(k - std::round(k)) < 1e-12)
    raise(ErrorKind::PoleAt, "closed form has a pole at s = 2/l + 2 pi i k / (binom(l,2) log q)");
  cd inner = 0;
  for (int lam = 0; lam <= ell - 2; ++lam) inner += std::exp(static_cast<double>(lam) * (1.0 - (ell - 1) / 2.0 * s) * lq);
  const cd num = A * (1.0 - std::exp(-C * s * lq)) + std::exp(-s * std::log(A / i)) * (i * i) * (q - 1.0) * inner;
  return num / den;
}

BigRational zeta_partial_sum_exact(std::uint64_t q, int ell, long s, int terms) {
  BigRational sum = 0;
  for (int m = 0; m <= terms; ++m) sum += BigRational(a_m(q, ell, m)) * rpow(BigRational(d_m(q, ell, m)), -s);
  return sum;
}

std::complex<double> zeta_partial_sum(std::uint64_t q, int ell, std::complex<double> s, int terms) {
  check_params(q, ell);
  const double lq = std::log(static_cast<double>(q));
  const int i = iota(q, ell);
  const double lA = std::log(static_cast<double>(geometric_a0(q, ell)));
  std::complex<double> sum = 0;
  // Summed from the smallest terms up to limit rounding; logs avoid overflow of a_m and d_m.
  for (int m = terms; m >= 0; --m) {
    double la, ld;
    if (m == 0) {
      la = lA;
      ld = 0;
    } else if (m % ell != 0) {
      la = 2 * std::log(static_cast<double>(i)) + std::log(q - 1.0) + (m - ceil_div_l(m, ell)) * lq;
      ld = lA - std::log(static_cast<double>(i)) + (ell - 1) * (m - 1) / 2.0 * lq;
    } else {
      la = lA + std::log(std::pow(static_cast<double>(q), ell - 1) - 1) + (ell - 1) * (m / ell - 1.0) * lq;
      ld = (ell - 1) * m / 2.0 * lq;
    }
    sum += std::exp(la - s * ld);
  }
  return sum;
}

double convergence_rate(std::uint64_t q, int ell, double s) {
  const double C = ell * (ell - 1) / 2.0;
  return std::pow(static_cast<double>(q), ((ell - 1) - C * s) / ell);
}

}  // namespace sl1d
