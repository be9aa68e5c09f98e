#pragma once

#include <cstdint>
#include <vector>

namespace sl1d {

/// Element of F_{q^l}: base-p digits of its power-basis coordinates.
using Fql = std::uint32_t;

/// Polynomial over F_p, little-endian coefficients in [0, p).
using Poly = std::vector<int>;

namespace fp_poly {

Poly trim(Poly a);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, int p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod, int p);
Poly gcd(Poly a, Poly b, int p);
bool is_irreducible(const Poly& f, int p);
/// f irreducible and x has order p^deg - 1 modulo f.
bool is_primitive(const Poly& f, int p);
/// Conway polynomial C(p, n), computed from its definition and cached.
const Poly& conway(int p, int n);

}  // namespace fp_poly

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);

struct TowerSpec {
  int p = 3;
  int f = 1;
  int ell = 2;
  Poly modulus_q;     ///< empty: Conway C(p, f)
  Poly modulus_qell;  ///< empty: Conway C(p, f*ell)
};

/// The tower F_p <= F_q <= F_{q^l}. Immutable after construction.
class FieldTower {
 public:
  static constexpr std::uint64_t kMaxFieldSize = 1u << 20;

  explicit FieldTower(const TowerSpec& spec);
  /// Factors q = p^f; rejects q that is not an odd prime power or l == p.
  static TowerSpec spec_for(std::uint64_t q, int ell);

  int p() const { return p_; }
  int f() const { return f_; }
  int ell() const { return ell_; }
  int q() const { return q_; }
  int size() const { return n_; }
  int degree() const { return f_ * ell_; }
  int iota() const;
  const Poly& modulus_q() const { return mod_q_; }
  const Poly& modulus_qell() const { return mod_qell_; }

  Fql scalar(long long c) const;
  Fql add(Fql a, Fql b) const;
  Fql sub(Fql a, Fql b) const { return add(a, neg(b)); }
  Fql neg(Fql a) const { return neg_[a]; }
  Fql mul(Fql a, Fql b) const;
  Fql inv(Fql a) const;
  Fql div(Fql a, Fql b) const { return mul(a, inv(b)); }
  Fql pow(Fql a, long long e) const;
  /// a * c for c in F_p.
  Fql smul(int c, Fql a) const;

  /// x^{q^k}; k may be negative.
  Fql frobenius(Fql x, int k) const;
  Fql galois_trace(Fql x) const;
  Fql galois_norm(Fql x) const;
  /// Tr_{F_q/F_p}(a) for a in the embedded F_q, as an integer mod p.
  int trace_fq_to_fp(Fql a) const;
  bool in_fq(Fql x) const { return fq_index_[x] >= 0; }
  /// All x with x / frobenius(x, k) == u.
  std::vector<Fql> hilbert90_fiber(Fql u, int k) const;

  /// Image of an F_q element given by coordinates over modulus_q.
  Fql embed(const Poly& a) const;
  Poly fq_coords(Fql x) const;
  Poly coords(Fql x) const;
  Fql from_coords(const Poly& c) const;

  Fql generator() const { return exp_[1]; }
  int log(Fql x) const { return log_[x]; }
  Fql exp(long long k) const;
  /// Embedded F_q in increasing order of F_q code.
  const std::vector<Fql>& fq_elements() const { return fq_elems_; }
  /// Elements with Tr_{F_{q^l}/F_q} = 0.
  std::vector<Fql> traceless() const;
  /// Constant c with Tr_{F_q/F_p}(c) != 0 used by the additive character.
  Fql psi_constant() const { return psi_c_; }

 private:
  int p_, f_, ell_, q_, n_;
  Poly mod_q_, mod_qell_;
  std::vector<Fql> exp_;   // 2(n-1) entries
  std::vector<int> log_;   // log_[0] = -1
  std::vector<Fql> neg_;
  std::vector<std::uint16_t> add_;  // n*n when n <= 1024
  std::vector<int> pw_;    // p^i
  std::vector<Fql> fq_embed_;  // F_q code -> F_{q^l} code
  std::vector<int> fq_index_;  // F_{q^l} code -> F_q code or -1
  std::vector<Fql> fq_elems_;
  Fql psi_c_ = 1;

  Fql add_digits(Fql a, Fql b) const;
};

}  // namespace sl1d
