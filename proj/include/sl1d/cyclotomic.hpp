#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl1d {

/// Element of Z[zeta_N] as coefficients of zeta^0 .. zeta^{N-1}; not reduced.
class Cyclo {
 public:
  Cyclo() = default;
  explicit Cyclo(int N) : c_(N, 0) {}
  static Cyclo integer(int N, long long v);
  static Cyclo root(int N, long long k);

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<long long>& coeffs() const { return c_; }

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  /// Adds zeta^k.
  void add_root(long long k, long long mult = 1);
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo scaled(long long s) const;
  /// Complex conjugate: zeta^k -> zeta^{-k}.
  Cyclo conj() const;

  /// Canonical coordinates modulo the N-th cyclotomic polynomial.
  std::vector<long long> reduced() const;
  bool operator==(const Cyclo& o) const { return reduced() == o.reduced(); }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  bool equals_integer(long long v) const;
  std::string str() const;

 private:
  std::vector<long long> c_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, little-endian.
const std::vector<long long>& cyclotomic_polynomial(int N);

}  // namespace sl1d
