#pragma once

#include <functional>
#include <vector>

#include "sl1d/algebra.hpp"
#include "sl1d/zeta.hpp"

namespace sl1d {

/// Exponent in Z/p of a value of an additive character: e means exp(2 pi i e / p).
using CharExp = int;

/// Psi(sum a_j pi^j) = Tr_{F_q/F_p}(c a_{-1}). NotCentral for non-central input.
CharExp psi(const DElem& x);

/// Coset y + g^{-r+1} with y in g^{-m+1}: the dual of the window (r, m).
struct DualElement {
  DElem y;
  int r;
  int m;
};
DualElement make_dual(const DElem& y, int r, int m);

/// |g^r_m| = q^{l(m-r) - (ceil(m/l) - ceil(r/l))}.
BigInt lie_layer_size(std::uint64_t q, int ell, int r, int m);
/// All elements of the dual window of (r, m).
std::vector<DualElement> enumerate_dual(const FieldTower& F, int r, int m);

/// Psi(pi^{-1} trd(X Y)) on exact lifts. WindowMismatch if the windows differ.
CharExp pairing(const LieElem& x, const DualElement& y);
/// Dual element Y = Y' - (1/l) trd(Y') with Y' = (1/l) X^{-1}, pairing to Psi(pi^{-1}).
DualElement nondegeneracy_witness(const LieElem& x);

/// g -> pairing(tlog g, y) on G^r_m; requires m <= 2r.
std::function<CharExp(const DElem&)> phi_y_as_character(const DualElement& y);

/// Layer G^r_{2r+1} / G^{r+1}_{2r+1} identified with F_{q^l}, with residue y' of Y nu^{2r}.
struct HeisenbergLayer {
  const FieldTower* F;
  int r;
  Fql y_residue;
  Fql tau(Fql x) const { return F->frobenius(x, r); }
};
HeisenbergLayer make_layer(const FieldTower& F, int r, Fql y_residue);
/// Layer attached to a dual element of the window (r + 1, 2r + 1).
HeisenbergLayer layer_from_dual(const DualElement& y);
/// Residue of X in F_{q^l} for a Lie element X nu^r of g^r_{2r+1}.
Fql layer_coordinate(const HeisenbergLayer& layer, const DElem& x);
/// Lie element nu^r tau(a) (mod g^{2r+1}) whose layer coordinate is a.
DElem layer_lift(const HeisenbergLayer& layer, Fql a);

/// Tr((tau^2(x1) tau(x2) - tau(x1) tau^2(x2)) y'), an element of the embedded F_q.
Fql beta_form(const HeisenbergLayer& layer, Fql x1, Fql x2);

/// F_q-subspace of F_{q^l}.
struct Subspace {
  std::vector<Fql> basis;
  std::vector<Fql> elements;  ///< sorted
  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(Fql x) const;
};
/// F_q-basis 1, a, ..., a^{l-1} of F_{q^l} with a the field generator.
std::vector<Fql> fq_basis(const FieldTower& F);
Subspace span(const FieldTower& F, const std::vector<Fql>& vectors);

/// Kernel of the Gram matrix of beta_form. DegenerateLayer if it is everything.
Subspace radical(const HeisenbergLayer& layer);
/// Radical line {x : x / tau^2(x) = y' / tau^{-1}(y')} plus 0, from the Hilbert 90 fiber.
Subspace radical_hilbert90(const HeisenbergLayer& layer);
/// Greedy maximal isotropic extension of the radical; candidates scanned in increasing
/// (or decreasing) code order.
Subspace isotropic_complete(const HeisenbergLayer& layer, bool descending = false);

struct LiftDatum {
  BigInt R_size;
  BigInt J_size;
  BigInt extension_count;
  BigInt lift_degree;
};
LiftDatum heisenberg_lift_data(const HeisenbergLayer& layer);

/// Inverse of a unit mod p.
int inv_mod(int a, int p);

}  // namespace sl1d
