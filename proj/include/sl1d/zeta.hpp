#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <vector>

namespace sl1d {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// gcd(q - 1, l): number of l-th roots of unity in K.
int iota(std::uint64_t q, int ell);

/// Number of irreducible characters of level m.
BigInt a_m(std::uint64_t q, int ell, int m);
/// Common degree of the characters of level m.
BigInt d_m(std::uint64_t q, int ell, int m);
/// |G / G^r| for r >= 1.
BigInt group_order(std::uint64_t q, int ell, int r);

struct TelescopingRow {
  int m;
  BigInt a, d, sum_a, sum_ad2, order_next;
  bool ok;  ///< sum_ad2 == |G_{m+1}|
};
std::vector<TelescopingRow> telescoping_table(std::uint64_t q, int ell, int max_level);
bool telescoping_check(std::uint64_t q, int ell, int max_level);

/// Real pole of the closed form, solved exactly from the denominator exponent.
boost::rational<long long> pole(std::uint64_t q, int ell);
/// Imaginary period of the pole lattice: 2 pi / (binom(l,2) log q).
double pole_period(std::uint64_t q, int ell);

/// Closed form at an integer s, exactly. PoleAt when the denominator vanishes.
BigRational zeta_closed_form_exact(std::uint64_t q, int ell, long s);
/// Closed form at a complex s. PoleAt on the pole lattice.
std::complex<double> zeta_closed_form(std::uint64_t q, int ell, std::complex<double> s);

/// sum_{m=0}^{M} a_m d_m^{-s}.
BigRational zeta_partial_sum_exact(std::uint64_t q, int ell, long s, int terms);
std::complex<double> zeta_partial_sum(std::uint64_t q, int ell, std::complex<double> s, int terms);

/// Geometric ratio per level of the terms a_m d_m^{-s} for real s.
double convergence_rate(std::uint64_t q, int ell, double s);

}  // namespace sl1d
