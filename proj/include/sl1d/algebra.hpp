#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sl1d/gf.hpp"

namespace sl1d {

/// Precision sentinel for exactly known (finite) series.
inline constexpr int kExact = 1 << 28;

/// Element of D = (L, sigma, pi) known modulo P^prec: sum of nu^e * c_e with
/// c_e in F_{q^l}, multiplied by (nu^i a)(nu^j b) = nu^{i+j} sigma^j(a) b.
class DElem {
 public:
  DElem() = default;
  /// Zero known modulo P^prec.
  DElem(const FieldTower& F, int prec);

  static DElem zero(const FieldTower& F, int prec = kExact) { return DElem(F, prec); }
  static DElem constant(const FieldTower& F, Fql c, int prec = kExact);
  static DElem one(const FieldTower& F, int prec = kExact) { return constant(F, 1, prec); }
  static DElem monomial(const FieldTower& F, int e, Fql c, int prec = kExact);
  static DElem nu_power(const FieldTower& F, int e) { return monomial(F, e, 1); }
  static DElem pi_power(const FieldTower& F, int k) { return monomial(F, k * F.ell(), 1); }
  /// coeffs[i] is the coefficient of nu^{lo+i}.
  static DElem from_coeffs(const FieldTower& F, int lo, std::vector<Fql> coeffs, int prec = kExact);

  const FieldTower& tower() const { return *F_; }
  bool has_tower() const { return F_ != nullptr; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  bool is_zero() const { return c_.empty(); }
  /// Least stored exponent (l * val); equals prec for zero.
  int lo() const { return lo_; }
  /// One past the last nonzero exponent.
  int hi() const { return lo_ + static_cast<int>(c_.size()); }
  Fql coeff(int e) const;
  const std::vector<Fql>& coeffs() const { return c_; }

  DElem truncated(int k) const;
  /// Precision set to k: truncates, or pads with zeros (choice of lift) when k > prec.
  DElem with_precision(int k) const;
  DElem exact_lift() const { return with_precision(kExact); }

  /// Canonical bytes; equal iff elements are equal.
  std::string key() const;
  bool operator==(const DElem& o) const;
  bool operator!=(const DElem& o) const { return !(*this == o); }

 private:
  const FieldTower* F_ = nullptr;
  int prec_ = kExact;
  int lo_ = kExact;
  std::vector<Fql> c_;

  void canonicalize();
  friend DElem operator+(const DElem&, const DElem&);
  friend DElem operator*(const DElem&, const DElem&);
  friend DElem operator-(const DElem&);
};

DElem operator+(const DElem& x, const DElem& y);
DElem operator-(const DElem& x);
DElem operator-(const DElem& x, const DElem& y);
DElem operator*(const DElem& x, const DElem& y);
/// Multiplication by an F_p scalar.
DElem scale(const DElem& x, int c);
DElem power(const DElem& x, int e);
DElem commutator_bracket(const DElem& x, const DElem& y);
/// Equality modulo the smaller of the two precisions.
bool congruent(const DElem& x, const DElem& y);

/// l * val(x) as a rational, nullopt for zero.
std::optional<boost::rational<int>> val(const DElem& x);

/// Inverse of a unit (val 0). Exact non-monomial input has no finite inverse.
DElem inv(const DElem& x);
/// Inverse of any nonzero element.
DElem inv_any(const DElem& x);

bool is_central(const DElem& x);
DElem trd(const DElem& x);
/// Reduced norm with the precision tracked through the determinant.
DElem nrd(const DElem& x);
/// Reduced norm known modulo p^central_prec; InsufficientPrecision if not supported.
DElem nrd(const DElem& x, int central_prec);

/// Least non-central index; nullopt means +infinity (exact central input only).
std::optional<int> jump(const DElem& y);
struct JumpBound {
  bool determined;
  int value;  ///< the jump if determined, else a lower bound
};
JumpBound jump_bound(const DElem& y);

enum class Kind { Central, Ramified, Unramified };
const char* kind_name(Kind k);
Kind classify(const DElem& y);
bool jump_traceless_check(const DElem& y);

DElem ell_th_root_unit(const DElem& u);

struct Normalized {
  DElem h;
  Fql t0;
  DElem xi;
};
/// x = t0 * xi * h with h in G^1 and xi central in 1 + p.
Normalized normalize_to_G1(const DElem& x);

/// h in G^1 and y_L in L with h y_L h^{-1} = y at y's precision.
std::pair<DElem, DElem> conjugate_unramified_into_L(const DElem& y);

/// Coset x + g^m with x in g^r.
struct LieElem {
  DElem x;
  int r;
  int m;
};
LieElem make_lie(const DElem& x, int r, int m);
DElem texp(const LieElem& x);
LieElem tlog(const DElem& g, int r, int m);
/// Checks both the truncated BCH identity and the commutator identity.
bool bch_check(const LieElem& x, const LieElem& y);

/// Unit with nrd congruent to 1 modulo p^{ceil(m/l)}.
bool is_group_element(const DElem& u, int m);

/// All elements with exponents in [lo, hi), known modulo P^hi.
std::vector<DElem> enumerate_residues(const FieldTower& F, int lo, int hi);
/// All traceless cosets in g^r / g^m.
std::vector<DElem> enumerate_lie(const FieldTower& F, int r, int m);

int ceil_div(int a, int b);
int floor_div(int a, int b);

}  // namespace sl1d
