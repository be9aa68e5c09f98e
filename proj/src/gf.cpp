#include "sl1d/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "sl1d/error.hpp"

namespace sl1d {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace fp_poly {
namespace {

int inv_mod(int a, int p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

Poly reduce(Poly a, const Poly& mod, int p) {
  a = trim(std::move(a));
  const int dm = static_cast<int>(mod.size()) - 1;
  const int lead_inv = inv_mod(mod.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      int& t = a[shift + i];
      t = ((t - c * mod[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(std::move(r));
}

Poly sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  return trim(std::move(a));
}

// Evaluates c(y) modulo mod.
Poly compose(const Poly& c, const Poly& y, const Poly& mod, int p) {
  Poly acc;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    acc = mulmod(acc, y, mod, p);
    if (acc.empty()) acc.push_back(0);
    acc[0] = (acc[0] + c[i]) % p;
    acc = trim(std::move(acc));
  }
  return acc;
}

}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  return reduce(mul(a, b, p), mod, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod, int p) {
  Poly r{1};
  r = reduce(r, mod, p);
  Poly b = reduce(base, mod, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, mod, p);
    e >>= 1;
    if (e) b = mulmod(b, b, mod, p);
  }
  return r;
}

Poly gcd(Poly a, Poly b, int p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const int li = inv_mod(a.back(), p);
    for (int& c : a) c = c * li % p;
  }
  return a;
}

bool is_irreducible(const Poly& f0, int p) {
  const Poly f = trim(f0);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  if (powmod(x, ipow(p, n), f, p) != reduce(x, f, p)) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = sub(powmod(x, ipow(p, n / static_cast<int>(r)), f, p), x, p);
    if (gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

bool is_primitive(const Poly& f0, int p) {
  const Poly f = trim(f0);
  if (!is_irreducible(f, p)) return false;
  const int n = static_cast<int>(f.size()) - 1;
  const std::uint64_t order = ipow(p, n) - 1;
  const Poly x{0, 1};
  const Poly one = reduce(Poly{1}, f, p);
  for (auto r : prime_factors(order))
    if (powmod(x, order / r, f, p) == one) return false;
  return true;
}

const Poly& conway(int p, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::pair<int, Poly>> sub_polys;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) sub_polys.emplace_back(d, conway(p, d));

  const std::uint64_t total = ipow(p, n);
  Poly found;
  for (std::uint64_t idx = 0; idx < total && found.empty(); ++idx) {
    // idx digits, most significant first, are (a_{n-1}, ..., a_0).
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      const int a = static_cast<int>(t % p);
      t /= p;
      const int sign = ((n - i) % 2 == 0) ? 1 : -1;
      f[i] = ((sign * a) % p + p) % p;
    }
    if (f[0] == 0) continue;
    if (!is_primitive(f, p)) continue;
    bool ok = true;
    for (const auto& [d, cd] : sub_polys) {
      const std::uint64_t e = (total - 1) / (ipow(p, d) - 1);
      const Poly y = powmod(Poly{0, 1}, e, f, p);
      if (!compose(cd, y, f, p).empty()) {
        ok = false;
        break;
      }
    }
    if (ok) found = f;
  }
  if (found.empty()) raise(ErrorKind::ConfigError, "no Conway polynomial found");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, n), found).first->second;
}

}  // namespace fp_poly

namespace {

Poly monic(Poly f, int p) {
  f = fp_poly::trim(std::move(f));
  for (int& c : f) c = ((c % p) + p) % p;
  f = fp_poly::trim(std::move(f));
  if (f.empty()) raise(ErrorKind::ConfigError, "zero modulus");
  long long li = 1, b = f.back(), e = p - 2;
  while (e > 0) {
    if (e & 1) li = li * b % p;
    b = b * b % p;
    e >>= 1;
  }
  for (int& c : f) c = static_cast<int>(c * li % p);
  return f;
}

}  // namespace

TowerSpec FieldTower::spec_for(std::uint64_t q, int ell) {
  if (q < 3) raise(ErrorKind::ConfigError, "q must be a power of an odd prime");
  auto pf = prime_factors(q);
  if (pf.size() != 1 || pf[0] == 2)
    raise(ErrorKind::ConfigError, "q must be a power of an odd prime, got " + std::to_string(q));
  TowerSpec s;
  s.p = static_cast<int>(pf[0]);
  s.f = 0;
  for (std::uint64_t t = q; t > 1; t /= pf[0]) ++s.f;
  s.ell = ell;
  return s;
}

FieldTower::FieldTower(const TowerSpec& spec) : p_(spec.p), f_(spec.f), ell_(spec.ell) {
  if (p_ < 3 || !is_prime(static_cast<std::uint64_t>(p_)))
    raise(ErrorKind::ConfigError, "p must be an odd prime");
  if (f_ < 1) raise(ErrorKind::ConfigError, "f must be positive");
  if (ell_ < 2 || !is_prime(static_cast<std::uint64_t>(ell_)))
    raise(ErrorKind::ConfigError, "ell must be prime");
  if (ell_ == p_) raise(ErrorKind::ConfigError, "ell must differ from p");
  const std::uint64_t big = ipow(p_, f_ * ell_);
  if (big > kMaxFieldSize) raise(ErrorKind::ConfigError, "field F_{q^l} too large for tables");
  q_ = static_cast<int>(ipow(p_, f_));
  n_ = static_cast<int>(big);

  mod_q_ = monic(spec.modulus_q.empty() ? fp_poly::conway(p_, f_) : spec.modulus_q, p_);
  mod_qell_ = monic(spec.modulus_qell.empty() ? fp_poly::conway(p_, f_ * ell_) : spec.modulus_qell, p_);
  if (static_cast<int>(mod_q_.size()) != f_ + 1 || !fp_poly::is_irreducible(mod_q_, p_))
    raise(ErrorKind::ConfigError, "modulus_q must be irreducible of degree f");
  if (static_cast<int>(mod_qell_.size()) != f_ * ell_ + 1 || !fp_poly::is_irreducible(mod_qell_, p_))
    raise(ErrorKind::ConfigError, "modulus_qell must be irreducible of degree f*ell");

  pw_.resize(f_ * ell_ + 1);
  pw_[0] = 1;
  for (int i = 1; i <= f_ * ell_; ++i) pw_[i] = pw_[i - 1] * p_;

  auto to_code = [&](const Poly& c) {
    Fql code = 0;
    for (std::size_t i = 0; i < c.size(); ++i) code += static_cast<Fql>(c[i] * pw_[i]);
    return code;
  };

  // Primitive element: x when the modulus is primitive, else the least primitive code.
  Poly g{0, 1};
  if (!fp_poly::is_primitive(mod_qell_, p_)) {
    const auto factors = prime_factors(static_cast<std::uint64_t>(n_ - 1));
    const Poly one{1};
    bool found = false;
    for (int code = 2; code < n_ && !found; ++code) {
      Poly c = coords(static_cast<Fql>(code));
      c = fp_poly::trim(c);
      bool prim = true;
      for (auto r : factors)
        if (fp_poly::powmod(c, (n_ - 1) / r, mod_qell_, p_) == one) {
          prim = false;
          break;
        }
      if (prim) {
        g = c;
        found = true;
      }
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(n_ - 1), 0);
  log_.assign(n_, -1);
  Poly cur{1};
  for (int i = 0; i < n_ - 1; ++i) {
    const Fql code = to_code(cur);
    if (log_[code] != -1) raise(ErrorKind::ConfigError, "generator is not primitive");
    exp_[i] = code;
    log_[code] = i;
    cur = fp_poly::mulmod(cur, g, mod_qell_, p_);
  }
  for (int i = 0; i < n_ - 1; ++i) exp_[i + n_ - 1] = exp_[i];

  neg_.resize(n_);
  for (int x = 0; x < n_; ++x) {
    Fql r = 0;
    int t = x;
    for (int i = 0; i < f_ * ell_; ++i) {
      const int d = t % p_;
      t /= p_;
      r += static_cast<Fql>(((p_ - d) % p_) * pw_[i]);
    }
    neg_[x] = r;
  }
  if (n_ <= 1024) {
    add_.resize(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        add_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }

  // Embedding of F_q: a root of modulus_q, preferring the Conway-compatible power.
  auto is_root = [&](Fql b) {
    Fql acc = 0;
    for (int i = f_; i >= 0; --i) acc = add(mul(acc, b), scalar(mod_q_[i]));
    return acc == 0;
  };
  Fql beta = exp((n_ - 1) / (q_ - 1));
  if (!is_root(beta)) {
    bool found = false;
    for (int c = 0; c < n_ && !found; ++c)
      if (frobenius(static_cast<Fql>(c), 1) == static_cast<Fql>(c) && is_root(static_cast<Fql>(c))) {
        beta = static_cast<Fql>(c);
        found = true;
      }
    if (!found) raise(ErrorKind::ConfigError, "modulus_q has no root in F_{q^l}");
  }
  fq_embed_.resize(q_);
  fq_index_.assign(n_, -1);
  for (int code = 0; code < q_; ++code) {
    Fql acc = 0, bp = 1;
    int t = code;
    for (int i = 0; i < f_; ++i) {
      acc = add(acc, smul(t % p_, bp));
      t /= p_;
      bp = mul(bp, beta);
    }
    fq_embed_[code] = acc;
    if (fq_index_[acc] != -1) raise(ErrorKind::ConfigError, "embedding of F_q is not injective");
    fq_index_[acc] = code;
  }
  fq_elems_ = fq_embed_;

  psi_c_ = 0;
  for (Fql c : fq_elems_)
    if (trace_fq_to_fp(c) != 0) {
      psi_c_ = c;
      break;
    }
  if (trace_fq_to_fp(1) != 0) psi_c_ = 1;
}

int FieldTower::iota() const { return std::gcd(q_ - 1, ell_); }

Fql FieldTower::scalar(long long c) const {
  return static_cast<Fql>(((c % p_) + p_) % p_);
}

Fql FieldTower::add_digits(Fql a, Fql b) const {
  Fql r = 0;
  for (int i = 0; i < f_ * ell_; ++i) {
    const int d = static_cast<int>(a % p_) + static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
    r += static_cast<Fql>((d % p_) * pw_[i]);
  }
  return r;
}

Fql FieldTower::add(Fql a, Fql b) const {
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * n_ + b];
  return add_digits(a, b);
}

Fql FieldTower::mul(Fql a, Fql b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Fql FieldTower::inv(Fql a) const {
  if (a == 0) raise(ErrorKind::NotAUnit, "inverse of zero in F_{q^l}");
  return exp_[(n_ - 1 - log_[a]) % (n_ - 1)];
}

Fql FieldTower::exp(long long k) const {
  const long long m = n_ - 1;
  return exp_[static_cast<std::size_t>(((k % m) + m) % m)];
}

Fql FieldTower::pow(Fql a, long long e) const {
  if (a == 0) {
    if (e < 0) raise(ErrorKind::NotAUnit, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long m = n_ - 1;
  const long long le = static_cast<long long>(log_[a]) * (((e % m) + m) % m) % m;
  return exp_[le];
}

Fql FieldTower::smul(int c, Fql a) const { return mul(scalar(c), a); }

Fql FieldTower::frobenius(Fql x, int k) const {
  if (x == 0) return 0;
  const int kk = ((k % ell_) + ell_) % ell_;
  const long long m = n_ - 1;
  long long qk = 1;
  for (int i = 0; i < kk; ++i) qk = qk * q_ % m;
  return exp_[static_cast<long long>(log_[x]) * qk % m];
}

Fql FieldTower::galois_trace(Fql x) const {
  Fql s = 0;
  for (int k = 0; k < ell_; ++k) s = add(s, frobenius(x, k));
  return s;
}

Fql FieldTower::galois_norm(Fql x) const {
  Fql s = 1;
  for (int k = 0; k < ell_; ++k) s = mul(s, frobenius(x, k));
  return s;
}

int FieldTower::trace_fq_to_fp(Fql a) const {
  Fql s = 0, t = a;
  for (int i = 0; i < f_; ++i) {
    s = add(s, t);
    t = pow(t, p_);
  }
  return static_cast<int>(s);
}

std::vector<Fql> FieldTower::hilbert90_fiber(Fql u, int k) const {
  std::vector<Fql> out;
  for (int x = 1; x < n_; ++x)
    if (div(static_cast<Fql>(x), frobenius(static_cast<Fql>(x), k)) == u) out.push_back(static_cast<Fql>(x));
  if (out.empty()) raise(ErrorKind::EmptyFiber, "u is not of the form x/frobenius(x,k)");
  return out;
}

Fql FieldTower::embed(const Poly& a) const {
  int code = 0, pw = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) >= f_) raise(ErrorKind::BadInput, "F_q coordinates longer than f");
    code += (((a[i] % p_) + p_) % p_) * pw;
    pw *= p_;
  }
  return fq_embed_[code];
}

Poly FieldTower::fq_coords(Fql x) const {
  const int code = fq_index_[x];
  if (code < 0) raise(ErrorKind::BadInput, "element not in F_q");
  Poly out(f_);
  int t = code;
  for (int i = 0; i < f_; ++i) {
    out[i] = t % p_;
    t /= p_;
  }
  return out;
}

Poly FieldTower::coords(Fql x) const {
  Poly out(f_ * ell_);
  for (int i = 0; i < f_ * ell_; ++i) {
    out[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return out;
}

Fql FieldTower::from_coords(const Poly& c) const {
  if (static_cast<int>(c.size()) > f_ * ell_) raise(ErrorKind::BadInput, "too many coordinates");
  Fql code = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    code += static_cast<Fql>((((c[i] % p_) + p_) % p_) * pw_[i]);
  return code;
}

std::vector<Fql> FieldTower::traceless() const {
  std::vector<Fql> out;
  for (int x = 0; x < n_; ++x)
    if (galois_trace(static_cast<Fql>(x)) == 0) out.push_back(static_cast<Fql>(x));
  return out;
}

}  // namespace sl1d
