#include "sl1d/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "sl1d/error.hpp"

namespace sl1d {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

namespace {

int sat_add(int a, int b) {
  if (a >= kExact || b >= kExact) return kExact;
  long long s = static_cast<long long>(a) + b;
  if (s >= kExact) return kExact;
  if (s <= -kExact) return -kExact + 1;
  return static_cast<int>(s);
}

int mod_ell(int e, int ell) { return ((e % ell) + ell) % ell; }

void same_tower(const DElem& x, const DElem& y) {
  if (!x.has_tower() || !y.has_tower() || &x.tower() != &y.tower())
    raise(ErrorKind::PrecisionMismatch, "operands live over different towers");
}

// Series in pi over F_{q^l}, known modulo pi^prec; c[i] is the coefficient of pi^{v+i}.
struct LSeries {
  int prec = kExact;
  int v = kExact;
  std::vector<Fql> c;

  int val() const { return c.empty() ? prec : v; }
};

void lnormalize(LSeries& s) {
  std::size_t first = 0;
  while (first < s.c.size() && s.c[first] == 0) ++first;
  s.c.erase(s.c.begin(), s.c.begin() + static_cast<std::ptrdiff_t>(first));
  s.v += static_cast<int>(first);
  while (!s.c.empty() && s.v + static_cast<int>(s.c.size()) > s.prec) s.c.pop_back();
  while (!s.c.empty() && s.c.back() == 0) s.c.pop_back();
  if (s.c.empty()) s.v = s.prec;
}

LSeries lmul(const FieldTower& F, const LSeries& a, const LSeries& b) {
  LSeries r;
  r.prec = std::min(sat_add(a.prec, b.val()), sat_add(b.prec, a.val()));
  if (a.c.empty() || b.c.empty()) {
    r.v = r.prec;
    return r;
  }
  r.v = a.v + b.v;
  const long long room = static_cast<long long>(r.prec) - r.v;
  const long long len = static_cast<long long>(a.c.size() + b.c.size() - 1);
  const int top = static_cast<int>(std::max<long long>(0, std::min(room, len)));
  r.c.assign(top, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size() && static_cast<int>(i + j) < top; ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  lnormalize(r);
  return r;
}

LSeries ladd(const FieldTower& F, const LSeries& a, const LSeries& b, bool negate_b) {
  LSeries r;
  r.prec = std::min(a.prec, b.prec);
  const int lo = std::min(a.val(), b.val());
  if (lo >= r.prec) {
    r.v = r.prec;
    return r;
  }
  const int hi = std::min<long long>(
      r.prec, std::max<long long>(a.c.empty() ? lo : a.v + static_cast<long long>(a.c.size()),
                                  b.c.empty() ? lo : b.v + static_cast<long long>(b.c.size())));
  r.v = lo;
  r.c.assign(std::max(0, hi - lo), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const int e = a.v + static_cast<int>(i);
    if (e < hi) r.c[e - lo] = F.add(r.c[e - lo], a.c[i]);
  }
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    const int e = b.v + static_cast<int>(i);
    if (e < hi) r.c[e - lo] = F.add(r.c[e - lo], negate_b ? F.neg(b.c[i]) : b.c[i]);
  }
  lnormalize(r);
  return r;
}

// Reduced norm of x with lo >= 0 via the determinant of its l x l matrix over L.
DElem nrd_integral(const DElem& x) {
  const FieldTower& F = x.tower();
  const int ell = F.ell();
  const int P = x.prec();
  std::vector<LSeries> comp(ell);
  for (int j = 0; j < ell; ++j) {
    LSeries s;
    s.prec = x.exact() ? kExact : ceil_div(P - j, ell);
    s.v = 0;
    const int kmax = x.exact() ? ceil_div(x.hi() - j, ell) : s.prec;
    for (int k = 0; k < kmax; ++k) s.c.push_back(x.coeff(ell * k + j));
    lnormalize(s);
    comp[j] = s;
  }
  auto entry = [&](int r, int c) {
    LSeries s = comp[r >= c ? r - c : ell + r - c];
    for (Fql& t : s.c) t = F.frobenius(t, c);
    if (r < c) {
      s.v = sat_add(s.v, 1);
      s.prec = sat_add(s.prec, 1);
    }
    lnormalize(s);
    return s;
  };
  std::vector<std::vector<LSeries>> M(ell, std::vector<LSeries>(ell));
  for (int r = 0; r < ell; ++r)
    for (int c = 0; c < ell; ++c) M[r][c] = entry(r, c);

  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  LSeries det;
  det.prec = kExact;
  det.v = kExact;
  do {
    int inversions = 0;
    for (int a = 0; a < ell; ++a)
      for (int b = a + 1; b < ell; ++b) inversions += perm[a] > perm[b];
    LSeries term;
    term.prec = kExact;
    term.v = 0;
    term.c = {1};
    for (int c = 0; c < ell; ++c) term = lmul(F, term, M[perm[c]][c]);
    det = ladd(F, det, term, inversions % 2 == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Fql> coeffs;
  int lo = 0;
  if (!det.c.empty()) {
    lo = ell * det.v;
    for (std::size_t i = 0; i < det.c.size(); ++i) {
      if (!F.in_fq(det.c[i])) raise(ErrorKind::VerificationFailed, "reduced norm left the centre");
      coeffs.push_back(det.c[i]);
      if (i + 1 < det.c.size())
        for (int z = 1; z < ell; ++z) coeffs.push_back(0);
    }
  }
  const int prec = det.prec >= kExact ? kExact : ell * det.prec;
  return DElem::from_coeffs(F, lo, coeffs, prec);
}

}  // namespace

DElem::DElem(const FieldTower& F, int prec) : F_(&F), prec_(std::min(prec, kExact)), lo_(prec_) {}

DElem DElem::constant(const FieldTower& F, Fql c, int prec) { return monomial(F, 0, c, prec); }

DElem DElem::monomial(const FieldTower& F, int e, Fql c, int prec) {
  return from_coeffs(F, e, {c}, prec);
}

DElem DElem::from_coeffs(const FieldTower& F, int lo, std::vector<Fql> coeffs, int prec) {
  DElem d(F, prec);
  d.lo_ = lo;
  d.c_ = std::move(coeffs);
  d.canonicalize();
  return d;
}

void DElem::canonicalize() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = prec_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
  lo_ += static_cast<int>(first);
  if (lo_ >= prec_) {
    c_.clear();
    lo_ = prec_;
    return;
  }
  if (static_cast<long long>(lo_) + static_cast<long long>(c_.size()) > prec_)
    c_.resize(static_cast<std::size_t>(prec_ - lo_));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lo_ = prec_;
}

Fql DElem::coeff(int e) const {
  if (e < lo_ || e >= hi()) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

DElem DElem::truncated(int k) const {
  if (k >= prec_) return *this;
  DElem d = *this;
  d.prec_ = k;
  d.canonicalize();
  return d;
}

DElem DElem::with_precision(int k) const {
  if (k <= prec_) return truncated(k);
  DElem d = *this;
  d.prec_ = std::min(k, kExact);
  if (d.c_.empty()) d.lo_ = d.prec_;
  return d;
}

std::string DElem::key() const {
  std::string s;
  s.reserve(8 + 4 * c_.size());
  auto put = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(static_cast<std::uint32_t>(prec_));
  put(static_cast<std::uint32_t>(lo_));
  for (Fql c : c_) put(c);
  return s;
}

bool DElem::operator==(const DElem& o) const {
  return F_ == o.F_ && prec_ == o.prec_ && lo_ == o.lo_ && c_ == o.c_;
}

DElem operator+(const DElem& x, const DElem& y) {
  same_tower(x, y);
  const FieldTower& F = x.tower();
  DElem r(F, std::min(x.prec_, y.prec_));
  const int lo = std::min(x.lo_, y.lo_);
  const int hi = std::min(r.prec_, std::max(x.c_.empty() ? lo : x.hi(), y.c_.empty() ? lo : y.hi()));
  if (lo >= hi) return r;
  r.lo_ = lo;
  r.c_.assign(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    const int e = x.lo_ + static_cast<int>(i);
    if (e < hi) r.c_[e - lo] = x.c_[i];
  }
  for (std::size_t i = 0; i < y.c_.size(); ++i) {
    const int e = y.lo_ + static_cast<int>(i);
    if (e < hi) r.c_[e - lo] = F.add(r.c_[e - lo], y.c_[i]);
  }
  r.canonicalize();
  return r;
}

DElem operator-(const DElem& x) {
  DElem r = x;
  for (Fql& c : r.c_) c = x.tower().neg(c);
  return r;
}

DElem operator-(const DElem& x, const DElem& y) { return x + (-y); }

DElem operator*(const DElem& x, const DElem& y) {
  same_tower(x, y);
  const FieldTower& F = x.tower();
  const int vx = x.c_.empty() ? x.prec_ : x.lo_;
  const int vy = y.c_.empty() ? y.prec_ : y.lo_;
  DElem r(F, std::min(sat_add(x.prec_, vy), sat_add(y.prec_, vx)));
  if (x.c_.empty() || y.c_.empty()) return r;
  const long long lo = static_cast<long long>(x.lo_) + y.lo_;
  const long long hi = std::min<long long>(r.prec_, static_cast<long long>(x.hi()) + y.hi() - 1);
  if (lo >= hi) return r;
  r.lo_ = static_cast<int>(lo);
  r.c_.assign(static_cast<std::size_t>(hi - lo), 0);
  const int ell = F.ell();
  for (std::size_t j = 0; j < y.c_.size(); ++j) {
    const Fql b = y.c_[j];
    if (b == 0) continue;
    const int ej = y.lo_ + static_cast<int>(j);
    const int sh = mod_ell(ej, ell);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      const long long e = static_cast<long long>(x.lo_) + static_cast<long long>(i) + ej;
      if (e >= hi) break;
      const Fql a = x.c_[i];
      if (a == 0) continue;
      Fql& t = r.c_[static_cast<std::size_t>(e - lo)];
      t = F.add(t, F.mul(F.frobenius(a, sh), b));
    }
  }
  r.canonicalize();
  return r;
}

DElem scale(const DElem& x, int c) {
  const FieldTower& F = x.tower();
  std::vector<Fql> cs = x.coeffs();
  for (Fql& t : cs) t = F.smul(c, t);
  return DElem::from_coeffs(F, x.lo(), std::move(cs), x.prec());
}

DElem power(const DElem& x, int e) {
  if (e < 0) return power(inv_any(x), -e);
  DElem r = DElem::one(x.tower());
  DElem b = x;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  if (r.exact() && !x.exact()) r = r.truncated(x.prec());
  return r;
}

DElem commutator_bracket(const DElem& x, const DElem& y) { return x * y - y * x; }

bool congruent(const DElem& x, const DElem& y) {
  const int k = std::min(x.prec(), y.prec());
  return x.truncated(k) == y.truncated(k);
}

std::optional<boost::rational<int>> val(const DElem& x) {
  if (x.is_zero()) return std::nullopt;
  return boost::rational<int>(x.lo(), x.tower().ell());
}

DElem inv(const DElem& x) {
  if (x.is_zero() || x.lo() != 0) raise(ErrorKind::NotAUnit, "inverse requires val(x) = 0");
  const FieldTower& F = x.tower();
  const Fql t0i = F.inv(x.coeffs()[0]);
  if (x.exact()) {
    if (x.coeffs().size() == 1) return DElem::constant(F, t0i);
    raise(ErrorKind::InsufficientPrecision, "inverse of an exact non-monomial is an infinite series");
  }
  const int m = x.prec();
  const DElem one = DElem::one(F, m);
  const DElem w = DElem::constant(F, t0i) * x - one;
  DElem y = one;
  for (int k = 1; k < m; ++k) y = one - w * y;
  return y * DElem::constant(F, t0i);
}

DElem inv_any(const DElem& x) {
  if (x.is_zero()) raise(ErrorKind::NotAUnit, "zero is not invertible");
  const int k = x.lo();
  if (k == 0) return inv(x);
  const FieldTower& F = x.tower();
  const DElem u = DElem::nu_power(F, -k) * x;
  return inv(u) * DElem::nu_power(F, -k);
}

bool is_central(const DElem& x) {
  const FieldTower& F = x.tower();
  for (int e = x.lo(); e < x.hi(); ++e) {
    const Fql c = x.coeff(e);
    if (c == 0) continue;
    if (mod_ell(e, F.ell()) != 0 || !F.in_fq(c)) return false;
  }
  return true;
}

DElem trd(const DElem& x) {
  const FieldTower& F = x.tower();
  const int ell = F.ell();
  const int prec = x.exact() ? kExact : ell * ceil_div(x.prec(), ell);
  if (x.is_zero()) return DElem(F, prec);
  const int k0 = ceil_div(x.lo(), ell);
  const int k1 = ceil_div(x.hi(), ell);
  std::vector<Fql> cs;
  for (int k = k0; k < k1; ++k) {
    cs.push_back(F.galois_trace(x.coeff(ell * k)));
    if (k + 1 < k1)
      for (int z = 1; z < ell; ++z) cs.push_back(0);
  }
  return DElem::from_coeffs(F, ell * k0, std::move(cs), prec);
}

DElem nrd(const DElem& x) {
  const FieldTower& F = x.tower();
  const int ell = F.ell();
  const int base = x.is_zero() ? x.prec() : x.lo();
  if (base >= 0) return nrd_integral(x);
  const int sh = ceil_div(-base, ell);
  const DElem y = DElem::pi_power(F, sh) * x;
  return DElem::pi_power(F, -sh * ell) * nrd_integral(y);
}

DElem nrd(const DElem& x, int central_prec) {
  DElem n = nrd(x);
  const long long need = static_cast<long long>(central_prec) * x.tower().ell();
  if (need > n.prec())
    raise(ErrorKind::InsufficientPrecision,
          "reduced norm known to nu-precision " + std::to_string(n.prec()) + ", requested " +
              std::to_string(need));
  return n.truncated(static_cast<int>(need));
}

JumpBound jump_bound(const DElem& y) {
  const FieldTower& F = y.tower();
  for (int e = y.lo(); e < y.hi(); ++e) {
    const Fql c = y.coeff(e);
    if (c == 0) continue;
    if (mod_ell(e, F.ell()) != 0 || !F.in_fq(c)) return {true, e};
  }
  if (y.exact()) return {true, kExact};
  return {false, y.prec()};
}

std::optional<int> jump(const DElem& y) {
  const JumpBound b = jump_bound(y);
  if (!b.determined)
    raise(ErrorKind::UndeterminedAtPrecision,
          "all coefficients below nu^" + std::to_string(b.value) + " are central");
  if (b.value >= kExact) return std::nullopt;
  return b.value;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Central: return "Central";
    case Kind::Ramified: return "Ramified";
    case Kind::Unramified: return "Unramified";
  }
  return "?";
}

Kind classify(const DElem& y) {
  const auto j = jump(y);
  if (!j) return Kind::Central;
  return mod_ell(*j, y.tower().ell()) != 0 ? Kind::Ramified : Kind::Unramified;
}

bool jump_traceless_check(const DElem& y) {
  const auto j = jump(y);
  return j && *j == y.lo();
}

DElem ell_th_root_unit(const DElem& u) {
  const FieldTower& F = u.tower();
  if (!is_central(u)) raise(ErrorKind::BadInput, "ell-th root requires a central element");
  if (u.is_zero() || u.lo() != 0 || u.coeff(0) != 1)
    raise(ErrorKind::BadInput, "ell-th root requires u = 1 mod p");
  const int ell = F.ell();
  if (u.exact() && u.hi() == 1) return DElem::one(F);
  const int P = u.exact() ? 2 * ell * (u.hi() + 1) : u.prec();
  const DElem uu = u.with_precision(P);
  DElem xi = DElem::one(F, P);
  for (int it = 0; it < 64; ++it) {
    const DElem f = power(xi, ell) - uu;
    if (f.is_zero()) break;
    const DElem d = scale(power(xi, ell - 1), ell);
    DElem next = (xi - f * inv(d)).truncated(P);
    if (next == xi) break;
    xi = next;
  }
  if (u.exact()) {
    const DElem lift = xi.exact_lift();
    if (power(lift, ell) == u) return lift;
  }
  return xi;
}

Normalized normalize_to_G1(const DElem& x) {
  if (x.is_zero() || x.lo() != 0) raise(ErrorKind::NotAUnit, "normalize_to_G1 requires a unit");
  const FieldTower& F = x.tower();
  const int ell = F.ell();
  const Fql t0 = x.coeffs()[0];
  const DElem w = DElem::constant(F, F.inv(t0)) * x;
  if (w.exact() && w.hi() == 1) return {DElem::one(F), t0, DElem::one(F)};
  // Exact input: h is an infinite series, returned at a working precision.
  const int P = x.exact() ? std::max(2 * ell * (x.hi() + 1), ell) : x.prec();
  const DElem wP = w.with_precision(P);
  const DElem xi = ell_th_root_unit(nrd(wP));
  const DElem h = (inv(xi.with_precision(P)) * wP).truncated(P);
  return {h, t0, xi};
}

std::pair<DElem, DElem> conjugate_unramified_into_L(const DElem& y) {
  const FieldTower& F = y.tower();
  const int ell = F.ell();
  if (classify(y) != Kind::Unramified) raise(ErrorKind::NotUnramified, "element is not unramified");
  bool in_L = true;
  for (int e = y.lo(); e < y.hi(); ++e)
    if (y.coeff(e) != 0 && mod_ell(e, ell) != 0) in_L = false;
  if (in_L) return {DElem::one(F, y.prec()), y};
  if (y.exact())
    raise(ErrorKind::InsufficientPrecision, "conjugation into L needs a finite working precision");

  const int k = std::max(0, ceil_div(-y.lo(), ell));
  DElem z = DElem::pi_power(F, k) * y;
  const int P = z.prec();
  const int j = *jump(z);
  const Fql omega = z.coeff(j);
  DElem H = DElem::one(F, P);
  for (int guard = 0; guard <= P; ++guard) {
    int e = -1;
    for (int t = z.lo(); t < z.hi(); ++t)
      if (z.coeff(t) != 0 && mod_ell(t, ell) != 0) {
        e = t;
        break;
      }
    if (e < 0) break;
    const int d = e - j;
    const Fql denom = F.sub(omega, F.frobenius(omega, d));
    const Fql s = F.neg(F.div(z.coeff(e), denom));
    const DElem g = (DElem::one(F) + DElem::monomial(F, d, s)).with_precision(P);
    z = (g * z * inv(g)).truncated(P);
    H = (g * H).truncated(P);
  }
  const DElem yL = (DElem::pi_power(F, -k) * z).truncated(y.prec());
  DElem h = normalize_to_G1(inv(H)).h;
  return {h, yL};
}

LieElem make_lie(const DElem& x, int r, int m) {
  if (r > m) raise(ErrorKind::WindowViolation, "window requires r <= m");
  const DElem xm = x.with_precision(m);
  if (!xm.is_zero() && xm.lo() < r) raise(ErrorKind::BadInput, "element not in g^r");
  if (!trd(xm).is_zero()) raise(ErrorKind::BadInput, "element is not traceless");
  return {xm, r, m};
}

namespace {

void check_window(int r, int m) {
  if (r < 1 || m < r || m > 3 * r)
    raise(ErrorKind::WindowViolation,
          "window (" + std::to_string(r) + "," + std::to_string(m) + ") needs 1 <= r <= m <= 3r");
}

}  // namespace

DElem texp(const LieElem& X) {
  check_window(X.r, X.m);
  const FieldTower& F = X.x.tower();
  const DElem x = X.x.with_precision(X.m);
  const int half = (F.p() + 1) / 2;
  return (DElem::one(F, X.m) + x + scale(x * x, half)).truncated(X.m);
}

LieElem tlog(const DElem& g, int r, int m) {
  check_window(r, m);
  const FieldTower& F = g.tower();
  const DElem X = g.with_precision(m) - DElem::one(F, m);
  if (!X.is_zero() && X.lo() < r) raise(ErrorKind::BadInput, "element not in G^r");
  const int half = (F.p() + 1) / 2;
  return {(X - scale(X * X, half)).truncated(m), r, m};
}

bool bch_check(const LieElem& x, const LieElem& y) {
  if (x.r != y.r || x.m != y.m) raise(ErrorKind::WindowViolation, "windows differ");
  check_window(x.r, x.m);
  const FieldTower& F = x.x.tower();
  const int half = (F.p() + 1) / 2;
  const DElem a = texp(x), b = texp(y);
  const DElem br = commutator_bracket(x.x, y.x).truncated(x.m);
  const DElem lhs1 = tlog(a * b, x.r, x.m).x;
  const DElem rhs1 = (x.x + y.x + scale(br, half)).truncated(x.m);
  const DElem comm = (a * b * inv(a) * inv(b)).truncated(x.m);
  const DElem lhs2 = tlog(comm, x.r, x.m).x;
  return lhs1 == rhs1 && lhs2 == br;
}

std::vector<DElem> enumerate_residues(const FieldTower& F, int lo, int hi) {
  const int span = std::max(0, hi - lo);
  std::uint64_t total = 1;
  for (int i = 0; i < span; ++i) {
    total *= static_cast<std::uint64_t>(F.size());
    if (total > 50'000'000ull) raise(ErrorKind::TooLarge, "residue enumeration too large");
  }
  std::vector<DElem> out;
  out.reserve(total);
  std::vector<Fql> cs(span, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < span; ++i) {
      cs[i] = static_cast<Fql>(t % F.size());
      t /= F.size();
    }
    out.push_back(DElem::from_coeffs(F, lo, cs, hi));
  }
  return out;
}

std::vector<DElem> enumerate_lie(const FieldTower& F, int r, int m) {
  const int ell = F.ell();
  const std::vector<Fql> tl = F.traceless();
  std::vector<std::vector<Fql>> choices;
  std::uint64_t total = 1;
  for (int e = r; e < m; ++e) {
    if (mod_ell(e, ell) == 0) {
      choices.push_back(tl);
    } else {
      std::vector<Fql> all(F.size());
      std::iota(all.begin(), all.end(), 0u);
      choices.push_back(std::move(all));
    }
    total *= choices.back().size();
    if (total > 50'000'000ull) raise(ErrorKind::TooLarge, "Lie layer enumeration too large");
  }
  std::vector<DElem> out;
  out.reserve(total);
  std::vector<Fql> cs(choices.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      cs[i] = choices[i][t % choices[i].size()];
      t /= choices[i].size();
    }
    out.push_back(DElem::from_coeffs(F, r, cs, m));
  }
  return out;
}

bool is_group_element(const DElem& u, int m) {
  if (u.is_zero() || u.lo() != 0) return false;
  const FieldTower& F = u.tower();
  const int c = ceil_div(m, F.ell());
  const DElem n = nrd(u.with_precision(m), c);
  return (n - DElem::one(F)).is_zero();
}

}  // namespace sl1d
