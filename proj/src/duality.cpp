#include "sl1d/duality.hpp"

#include <algorithm>

#include "sl1d/error.hpp"

namespace sl1d {

namespace {

BigInt bpow(std::uint64_t b, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

/// Null space over F_q of a rows x cols matrix with entries in the embedded F_q.
std::vector<std::vector<Fql>> null_space(const FieldTower& F, std::vector<std::vector<Fql>> A, int cols) {
  const int rows = static_cast<int>(A.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (A[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    const Fql s = F.inv(A[row][c]);
    for (auto& v : A[row]) v = F.mul(v, s);
    for (int i = 0; i < rows; ++i) {
      if (i == row || A[i][c] == 0) continue;
      const Fql f = A[i][c];
      for (int k = 0; k < cols; ++k) A[i][k] = F.sub(A[i][k], F.mul(f, A[row][k]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<Fql>> out;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Fql> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(A[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

int inv_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  raise(ErrorKind::BadInput, "not invertible mod p");
}

CharExp psi(const DElem& x) {
  if (!is_central(x)) raise(ErrorKind::NotCentral, "psi is defined on central elements only");
  const FieldTower& F = x.tower();
  if (x.prec() <= -F.ell()) raise(ErrorKind::InsufficientPrecision, "pi^{-1} coefficient is not known");
  return F.trace_fq_to_fp(F.mul(F.psi_constant(), x.coeff(-F.ell())));
}

DualElement make_dual(const DElem& y, int r, int m) {
  if (r < 1 || m < r) raise(ErrorKind::WindowViolation, "dual window needs 1 <= r <= m");
  if (y.prec() < -r + 1) raise(ErrorKind::InsufficientPrecision, "dual element not known modulo P^{-r+1}");
  const DElem yy = y.with_precision(-r + 1);
  if (!yy.is_zero() && yy.lo() < -m + 1) raise(ErrorKind::BadInput, "dual element not in g^{-m+1}");
  if (!trd(yy).is_zero()) raise(ErrorKind::BadInput, "dual element is not traceless");
  return {yy, r, m};
}

BigInt lie_layer_size(std::uint64_t q, int ell, int r, int m) {
  return bpow(q, static_cast<long>(ell) * (m - r) - (ceil_div(m, ell) - ceil_div(r, ell)));
}

std::vector<DualElement> enumerate_dual(const FieldTower& F, int r, int m) {
  std::vector<DualElement> out;
  for (auto& y : enumerate_lie(F, -m + 1, -r + 1)) out.push_back({std::move(y), r, m});
  return out;
}

CharExp pairing(const LieElem& x, const DualElement& y) {
  if (x.r != y.r || x.m != y.m) raise(ErrorKind::WindowMismatch, "pairing windows differ");
  const FieldTower& F = x.x.tower();
  const DElem t = trd(x.x.exact_lift() * y.y.exact_lift());
  return psi(DElem::pi_power(F, -1) * t);
}

DualElement nondegeneracy_witness(const LieElem& x) {
  const DElem X = x.x.exact_lift();
  if (X.is_zero()) raise(ErrorKind::BadInput, "zero has no witness");
  const FieldTower& F = X.tower();
  const int v = X.lo();
  const int W = std::max(2 * v - x.r + 1, v + 1);
  const int linv = inv_mod(F.ell(), F.p());
  const DElem Yp = scale(inv_any(X.with_precision(W)), linv);
  const DElem Y = Yp - scale(trd(Yp), linv);
  return make_dual(Y, x.r, x.m);
}

std::function<CharExp(const DElem&)> phi_y_as_character(const DualElement& y) {
  if (y.m > 2 * y.r) raise(ErrorKind::WindowViolation, "phi_y is a character only when m <= 2r");
  return [y](const DElem& g) { return pairing(tlog(g, y.r, y.m), y); };
}

HeisenbergLayer make_layer(const FieldTower& F, int r, Fql y_residue) {
  if (r < 1 || r % F.ell() == 0) raise(ErrorKind::BadInput, "layer index r must be positive and prime to l");
  if (y_residue == 0) raise(ErrorKind::DegenerateLayer, "y' = 0 gives a trivial character on the top layer");
  return {&F, r, y_residue};
}

HeisenbergLayer layer_from_dual(const DualElement& y) {
  const int r = y.r - 1;
  if (r < 1 || y.m != 2 * r + 1) raise(ErrorKind::WindowMismatch, "dual element is not on a (r+1, 2r+1) window");
  const FieldTower& F = y.y.tower();
  return make_layer(F, r, F.frobenius(y.y.coeff(-2 * r), 2 * r));
}

Fql layer_coordinate(const HeisenbergLayer& layer, const DElem& x) {
  return layer.F->frobenius(x.coeff(layer.r), -layer.r);
}

DElem layer_lift(const HeisenbergLayer& layer, Fql a) {
  return DElem::monomial(*layer.F, layer.r, layer.tau(a), 2 * layer.r + 1);
}

Fql beta_form(const HeisenbergLayer& layer, Fql x1, Fql x2) {
  const FieldTower& F = *layer.F;
  const Fql t1 = layer.tau(x1), t2 = layer.tau(x2);
  const Fql s1 = layer.tau(t1), s2 = layer.tau(t2);
  const Fql d = F.sub(F.mul(s1, t2), F.mul(t1, s2));
  return F.galois_trace(F.mul(d, layer.y_residue));
}

bool Subspace::contains(Fql x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::vector<Fql> fq_basis(const FieldTower& F) {
  std::vector<Fql> b;
  for (int i = 0; i < F.ell(); ++i) b.push_back(F.pow(F.generator(), i));
  return b;
}

Subspace span(const FieldTower& F, const std::vector<Fql>& vectors) {
  Subspace s;
  s.elements = {0};
  for (Fql v : vectors) {
    if (s.contains(v)) continue;
    s.basis.push_back(v);
    std::vector<Fql> next;
    for (Fql c : F.fq_elements())
      for (Fql e : s.elements) next.push_back(F.add(e, F.mul(c, v)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    s.elements = std::move(next);
  }
  return s;
}

Subspace radical(const HeisenbergLayer& layer) {
  const FieldTower& F = *layer.F;
  const std::vector<Fql> e = fq_basis(F);
  const int n = F.ell();
  // Row j: the functional x -> beta(x, e_j) in coordinates over e.
  std::vector<std::vector<Fql>> A(n, std::vector<Fql>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) A[j][i] = beta_form(layer, e[i], e[j]);
  std::vector<Fql> vecs;
  for (const auto& c : null_space(F, A, n)) {
    Fql v = 0;
    for (int i = 0; i < n; ++i) v = F.add(v, F.mul(c[i], e[i]));
    vecs.push_back(v);
  }
  if (static_cast<int>(vecs.size()) == n) raise(ErrorKind::DegenerateLayer, "beta vanishes identically");
  return span(F, vecs);
}

Subspace radical_hilbert90(const HeisenbergLayer& layer) {
  const FieldTower& F = *layer.F;
  if (F.ell() == 2) raise(ErrorKind::BadInput, "the Hilbert 90 description of the radical needs odd l");
  const Fql u = F.div(layer.y_residue, F.frobenius(layer.y_residue, -layer.r));
  const std::vector<Fql> fiber = F.hilbert90_fiber(u, 2 * layer.r);
  Subspace s = span(F, fiber);
  std::vector<Fql> line = fiber;
  line.push_back(0);
  std::sort(line.begin(), line.end());
  if (line != s.elements) raise(ErrorKind::VerificationFailed, "Hilbert 90 fiber is not a line");
  return s;
}

Subspace isotropic_complete(const HeisenbergLayer& layer, bool descending) {
  const FieldTower& F = *layer.F;
  Subspace J = radical(layer);
  const int target = J.dim() + (F.ell() - J.dim()) / 2;
  for (int k = 1; k < F.size() && J.dim() < target; ++k) {
    const Fql v = static_cast<Fql>(descending ? F.size() - k : k);
    if (J.contains(v)) continue;
    bool iso = true;
    for (Fql b : J.basis) iso = iso && beta_form(layer, v, b) == 0;
    if (!iso) continue;
    std::vector<Fql> b = J.basis;
    b.push_back(v);
    J = span(F, b);
  }
  return J;
}

LiftDatum heisenberg_lift_data(const HeisenbergLayer& layer) {
  const FieldTower& F = *layer.F;
  const Subspace R = radical(layer);
  const Subspace J = isotropic_complete(layer);
  const BigInt top = lie_layer_size(F.q(), F.ell(), layer.r + 1, 2 * layer.r + 1);
  LiftDatum d;
  d.R_size = top * R.elements.size();
  d.J_size = top * J.elements.size();
  d.extension_count = R.elements.size();
  d.lift_degree = bpow(F.q(), F.ell() - J.dim());
  return d;
}

}  // namespace sl1d
