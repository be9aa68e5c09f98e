#include "sl1d/construction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sl1d/duality.hpp"
#include "sl1d/error.hpp"
#include "sl1d/orbits.hpp"
#include "sl1d/parallel.hpp"

namespace sl1d {

namespace {

BigInt qpow(const FieldTower& F, long e) {
  if (e < 0) raise(ErrorKind::BadInput, "negative exponent");
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= F.q();
  return r;
}

BigInt layer_order(const FieldTower& F, int k, int m) {
  return group_order(F.q(), F.ell(), m) / group_order(F.q(), F.ell(), k);
}

[[noreturn]] void fail(const std::string& what) { raise(ErrorKind::VerificationFailed, what); }

// ---- subgroups and linear characters ----

struct Sub {
  std::vector<int> elems;
  std::vector<char> in;
};

Sub make_sub(const QuotientGroup& G, std::vector<int> elems) {
  Sub s;
  s.in.assign(G.size(), 0);
  for (int x : elems) s.in[x] = 1;
  std::sort(elems.begin(), elems.end());
  s.elems = std::move(elems);
  return s;
}

std::vector<int> filter(const QuotientGroup& G, const std::vector<int>& from, const std::function<bool(int)>& pred) {
  std::vector<int> out;
  for (int x : from)
    if (pred(x)) out.push_back(x);
  (void)G;
  return out;
}

/// Extends base by elements of target until the closure is all of target.
std::vector<int> greedy_generators(const QuotientGroup& G, const std::vector<int>& target, std::vector<int> base) {
  Sub cur = make_sub(G, G.closure(base));
  for (int x : target) {
    if (cur.in[x]) continue;
    base.push_back(x);
    cur = make_sub(G, G.closure(base));
  }
  if (cur.elems.size() != target.size()) fail("generating set does not close up to the target subgroup");
  return base;
}

std::vector<int> indices_of(const QuotientGroup& G, const std::vector<DElem>& xs) {
  std::vector<int> out;
  for (const auto& x : xs) {
    const auto i = G.find(x.truncated(G.level()));
    if (i && *i != 0) out.push_back(*i);
  }
  return out;
}

/// Linear characters (exponents mod E, -1 outside H) of H = <N, extra> extending theta on N.
std::vector<std::vector<int>> linear_extensions(const QuotientGroup& G, const Sub& H, const Sub& N,
                                                const std::vector<int>& ngens, const std::vector<int>& extra,
                                                const std::vector<int>& theta, int E, std::size_t limit) {
  std::vector<std::vector<int>> cands;
  for (int c : extra) {
    int o = 1, x = c;
    while (!N.in[x]) {
      x = G.mul(x, c);
      ++o;
    }
    std::vector<int> vs;
    if (E % o == 0 && theta[x] % o == 0)
      for (int i = 0; i < o; ++i) vs.push_back((theta[x] / o + i * (E / o)) % E);
    if (vs.empty()) return {};
    cands.push_back(std::move(vs));
  }
  std::vector<std::pair<int, int>> gens;
  for (int g : ngens) gens.push_back({g, theta[g]});
  for (int c : extra) gens.push_back({c, 0});
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> idx(extra.size(), 0);
  std::vector<int> val(G.size());
  for (;;) {
    for (std::size_t j = 0; j < extra.size(); ++j) gens[ngens.size() + j].second = cands[j][idx[j]];
    std::fill(val.begin(), val.end(), -1);
    val[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const int x = queue[i];
      for (const auto& [g, v] : gens) {
        const int y = G.mul(x, g);
        const int w = (val[x] + v) % E;
        if (val[y] < 0) {
          val[y] = w;
          queue.push_back(y);
        } else if (val[y] != w) {
          ok = false;
          break;
        }
      }
    }
    ok = ok && queue.size() == H.elems.size();
    for (std::size_t i = 0; ok && i < N.elems.size(); ++i) ok = val[N.elems[i]] == theta[N.elems[i]];
    if (ok) {
      out.push_back(val);
      if (out.size() >= limit) return out;
    }
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == cands[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return out;
}

std::vector<int> left_transversal(const QuotientGroup& G, const Sub& big, const Sub& H, std::vector<int>* coset_of) {
  std::vector<int> T;
  std::vector<char> covered(G.size(), 0);
  if (coset_of) coset_of->assign(G.size(), -1);
  for (int t : big.elems) {
    if (covered[t]) continue;
    for (int h : H.elems) {
      const int x = G.mul(t, h);
      covered[x] = 1;
      if (coset_of) (*coset_of)[x] = static_cast<int>(T.size());
    }
    T.push_back(t);
  }
  return T;
}

/// Induced class function on the classes of G; f adds the value at an element of H.
std::vector<Cyclo> induce(const QuotientGroup& G, const Sub& H, const std::vector<int>& T, int E,
                          const std::function<void(int, Cyclo&)>& add) {
  const auto& cls = G.classes();
  std::vector<Cyclo> chi(cls.size(), Cyclo(E));
  std::vector<int> tinv;
  for (int t : T) tinv.push_back(G.inv(t));
  parallel_for(cls.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const int g = cls[c].front();
      for (std::size_t i = 0; i < T.size(); ++i) {
        const int x = G.mul(G.mul(tinv[i], g), T[i]);
        if (H.in[x]) add(x, chi[c]);
      }
    }
  });
  return chi;
}

struct CharCheck {
  long long degree;
  bool norm_one;
  bool level_exact;
};

CharCheck check_character(const QuotientGroup& G, const std::vector<Cyclo>& chi, int m) {
  const auto& cls = G.classes();
  const int E = chi.front().order();
  Cyclo s(E);
  for (std::size_t c = 0; c < cls.size(); ++c)
    s += (chi[c] * chi[c].conj()).scaled(static_cast<long long>(cls[c].size()));
  CharCheck r{};
  const auto deg = chi[G.class_of(0)].reduced();
  r.degree = deg.empty() ? 0 : deg[0];
  for (std::size_t i = 1; i < deg.size(); ++i)
    if (deg[i] != 0) r.degree = -1;
  r.norm_one = s.equals_integer(G.size());
  const DElem one = DElem::one(G.tower(), G.level());
  const Cyclo& at1 = chi[G.class_of(0)];
  r.level_exact = false;
  for (std::size_t c = 0; c < cls.size() && !r.level_exact; ++c) {
    const DElem d = G.element(cls[c].front()) - one;
    if (d.is_zero() || d.lo() >= m) r.level_exact = chi[c] != at1;
  }
  if (G.level() != m + 1) r.level_exact = false;
  return r;
}

std::string value_key(const std::vector<Cyclo>& chi) {
  std::string k;
  for (const auto& v : chi) {
    for (long long x : v.reduced()) k += std::to_string(x) + ",";
    k += ";";
  }
  return k;
}

// ---- linear algebra over F_l' ----

using Mat = std::vector<long long>;  // k x k, row major

struct ModField {
  long long P;
  long long mul(long long a, long long b) const { return a * b % P; }
  long long add(long long a, long long b) const { return (a + b) % P; }
  long long pow(long long a, long long e) const {
    long long r = 1;
    a %= P;
    for (; e > 0; e >>= 1, a = a * a % P)
      if (e & 1) r = r * a % P;
    return r;
  }
  long long inv(long long a) const { return pow(a, P - 2); }
};

Mat mat_mul(const ModField& K, const Mat& a, const Mat& b, int k) {
  Mat c(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      const long long x = a[i * k + l];
      if (x == 0) continue;
      for (int j = 0; j < k; ++j) c[i * k + j] = (c[i * k + j] + x * b[l * k + j]) % K.P;
    }
  return c;
}

Mat mat_id(int k) {
  Mat m(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) m[i * k + i] = 1;
  return m;
}

/// Null space basis of rows (each of length n).
std::vector<std::vector<long long>> null_space(const ModField& K, std::vector<std::vector<long long>> rows, int n) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const long long iv = K.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = K.mul(v, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const long long f = rows[i][col];
      for (int j = 0; j < n; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % K.P + K.P) % K.P;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_piv(n, 0);
  for (int c : pivot_col) is_piv[c] = 1;
  std::vector<std::vector<long long>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<long long> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (K.P - rows[i][free]) % K.P;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Smallest prime P > floor with E | P - 1, and an element of order E.
std::pair<ModField, long long> field_with_roots(int E, long long floor) {
  long long P = (floor / E + 1) * E + 1;
  while (!is_prime(static_cast<std::uint64_t>(P))) P += E;
  ModField K{P};
  const auto fac = prime_factors(static_cast<std::uint64_t>(P - 1));
  for (long long g = 2;; ++g) {
    bool prim = true;
    for (auto f : fac) prim = prim && K.pow(g, (P - 1) / static_cast<long long>(f)) != 1;
    if (prim) return {K, K.pow(g, (P - 1) / E)};
  }
}

/// Character value of a matrix of order dividing E from its eigenvalue multiplicities.
Cyclo trace_to_cyclo(const ModField& K, long long w, const Mat& M, int k, int E) {
  std::vector<long long> tr(E);
  Mat pw = mat_id(k);
  for (int u = 0; u < E; ++u) {
    long long t = 0;
    for (int i = 0; i < k; ++i) t += pw[i * k + i];
    tr[u] = t % K.P;
    pw = mat_mul(K, pw, M, k);
  }
  if (pw != mat_id(k)) fail("matrix order does not divide the group exponent");
  const long long Einv = K.inv(E);
  const long long winv = K.inv(w);
  Cyclo out(E);
  long long total = 0;
  for (int a = 0; a < E; ++a) {
    long long s = 0;
    const long long step = K.pow(winv, a);
    long long z = 1;
    for (int u = 0; u < E; ++u) {
      s = (s + tr[u] * z) % K.P;
      z = K.mul(z, step);
    }
    const long long n = K.mul(s, Einv);
    if (n > k) fail("eigenvalue multiplicity out of range");
    total += n;
    out.add_root(a, n);
  }
  if (total != k) fail("eigenvalue multiplicities do not add up to the dimension");
  return out;
}

bool ramified_level(const FieldTower& F, int m) { return m % F.ell() != 0; }

std::vector<int> theta_values(const QuotientGroup& G, const Sub& N, const DElem& Y, int k, int E) {
  const FieldTower& F = G.tower();
  const int M = G.level();
  const DualElement y = make_dual(Y, k, M);
  std::vector<int> theta(G.size(), -1);
  const int scale = E / F.p();
  for (int n : N.elems) theta[n] = pairing(tlog(G.element(n), k, M), y) * scale % E;
  return theta;
}

}  // namespace

const char* construction_case_name(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::Odd: return "Odd";
    case ConstructionCase::DivisibleBy2ell: return "DivisibleBy2ell";
    case ConstructionCase::EvenOddEll: return "EvenOddEll";
    case ConstructionCase::EvenQuaternion: return "EvenQuaternion";
  }
  return "?";
}

ConstructionCase construction_case(int ell, int m) {
  if (m < 1) raise(ErrorKind::BadInput, "construction needs level m >= 1");
  if (m % 2 == 1) return ConstructionCase::Odd;
  if (m % (2 * ell) == 0) return ConstructionCase::DivisibleBy2ell;
  return ell == 2 ? ConstructionCase::EvenQuaternion : ConstructionCase::EvenOddEll;
}

int kernel_index(int m) { return m / 2 + 1; }
int inertia_index(int m) { return (m + 1) / 2; }

DElem canonical_representative(const FieldTower& F, int m) {
  if (m < 1) raise(ErrorKind::BadInput, "level must be >= 1");
  if (m % F.ell() != 0) return DElem::nu_power(F, -m);
  Fql w = 0;
  for (Fql x : F.traceless())
    if (x != 0 && !F.in_fq(x)) {
      w = x;
      break;
    }
  return DElem::monomial(F, -m, w);
}

BigInt level_dual_count(std::uint64_t q, int ell, int m) {
  const int k = kernel_index(m);
  return lie_layer_size(q, ell, k, m + 1) - lie_layer_size(q, ell, k, m);
}

BigInt centralizer_image_order(const FieldTower& F, int m, int k) {
  const int ell = F.ell();
  const int top = ceil_div(m + 1, ell);
  if (k > m + 1) k = m + 1;
  if (ramified_level(F, m)) {
    if (k <= 0) return BigInt(F.iota()) * qpow(F, m - top + 1);
    return qpow(F, (m + 1 - k) - (top - ceil_div(k, ell)));
  }
  const BigInt A = BigInt((static_cast<long long>(F.size()) - 1) / (F.q() - 1));
  if (k <= 0) return A * qpow(F, static_cast<long>(ell - 1) * (top - 1));
  return qpow(F, static_cast<long>(ell - 1) * (top - ceil_div(k, ell)));
}

InducingDatum construct_inducing_datum(const FieldTower& F, int m, const DElem& Y) {
  if (m < 1) raise(ErrorKind::BadRepresentative, "level must be >= 1");
  if (!Y.has_tower() || !trd(Y).is_zero()) raise(ErrorKind::BadRepresentative, "representative is not traceless");
  const auto j = jump(Y.exact_lift());
  if (!j || *j != -m)
    raise(ErrorKind::BadRepresentative, "representative jump is not -" + std::to_string(m));
  const std::uint64_t q = F.q();
  const int ell = F.ell();
  InducingDatum d;
  d.F = &F;
  d.m = m;
  d.kase = construction_case(ell, m);
  d.Y = Y.exact_lift();
  const int R = inertia_index(m), k = kernel_index(m);
  d.group_order = group_order(q, ell, m + 1);
  d.predicted_degree = d_m(q, ell, m);
  auto& s = d.subgroup;
  s.congruence_index = R;
  s.kernel_index = k;
  s.centralizer_order = centralizer_image_order(F, m, 0);
  const BigInt CR = centralizer_image_order(F, m, R);
  s.inertia_order = s.centralizer_order * layer_order(F, R, m + 1) / CR;
  d.predicted_inertia_index = d.group_order / s.inertia_order;
  const BigInt over_kernel = s.inertia_order / layer_order(F, k, m + 1);
  switch (d.kase) {
    case ConstructionCase::Odd:
    case ConstructionCase::DivisibleBy2ell:
      s.shape = "C*G^" + std::to_string(R);
      s.order = s.inertia_order;
      d.formula_degree = d.predicted_inertia_index;
      d.characters_per_orbit = over_kernel;
      d.linear_character = d.kase == ConstructionCase::Odd
                               ? "phi_Y(log g) on G^" + std::to_string(k) + ", glued with a character of C"
                               : "extension of phi_Y(log g) from G^" + std::to_string(k) + " to C*G^" +
                                     std::to_string(R);
      break;
    case ConstructionCase::EvenOddEll:
    case ConstructionCase::EvenQuaternion: {
      const int r = m / 2;
      const HeisenbergLayer layer = layer_from_dual(make_dual(Y, r + 1, m + 1));
      const int jd = isotropic_complete(layer).dim();
      s.isotropic_dim = jd;
      const BigInt J = layer_order(F, r + 1, m + 1) * qpow(F, jd);
      const BigInt inner = qpow(F, ell - jd);
      if (d.kase == ConstructionCase::EvenOddEll) {
        s.shape = "C*J";
        s.order = s.centralizer_order * J / CR;
        d.formula_degree = d.group_order / s.order;
        d.linear_character = "extension of phi_Y(log g) from G^" + std::to_string(k) +
                             " to J, glued with a character of C";
      } else {
        const BigInt P = centralizer_image_order(F, m, 1);
        s.shape = "P*J, extended over C*G^" + std::to_string(R);
        s.order = P * J / CR;
        d.formula_degree = inner * d.predicted_inertia_index;
        d.monomial = false;
        d.linear_character = "extension of phi_Y(log g) from G^" + std::to_string(k) +
                             " to P*J, induced to P*G^" + std::to_string(R) + " and extended to C*G^" +
                             std::to_string(R);
      }
      d.characters_per_orbit = over_kernel / (inner * inner);
      break;
    }
  }
  if (d.formula_degree != d.predicted_degree)
    raise(ErrorKind::VerificationFailed, "subgroup orders give degree " + d.formula_degree.str() + ", expected " +
                                             d.predicted_degree.str());
  return d;
}

std::vector<DElem> level_representatives(const FieldTower& F, int m, std::uint64_t guard) {
  const int k = kernel_index(m);
  const BigInt total = lie_layer_size(F.q(), F.ell(), k, m + 1);
  if (total > guard) raise(ErrorKind::TooLarge, "dual window has " + total.str() + " elements");
  std::set<std::string> seen;
  std::vector<DElem> reps;
  for (const auto& y : enumerate_lie(F, -m, -k + 1)) {
    if (y.is_zero() || y.lo() != -m || seen.count(y.key())) continue;
    const auto orbit = brute_force_orbit(y, -k + 1, Acting::G, guard);
    for (const auto& z : orbit) seen.insert(z.key());
    reps.push_back(orbit.front());
  }
  return reps;
}

VerificationReport induce_and_verify(const QuotientGroup& G, const InducingDatum& d) {
  const FieldTower& F = G.tower();
  if (G.level() != d.m + 1) fail("group level is not m + 1");
  VerificationReport rep;
  rep.m = d.m;
  rep.kase = d.kase;
  rep.representative = d.Y.key();
  rep.group_order = G.size();
  rep.monomial = d.monomial;
  const int E = G.exponent();
  rep.exponent = E;
  const int M = d.m + 1;
  const int k = d.subgroup.kernel_index, R = d.subgroup.congruence_index;

  const Sub N = make_sub(G, G.congruence_subgroup(k));
  const std::vector<int> ngens = greedy_generators(G, N.elems, indices_of(G, congruence_generators(F, k, M)));
  const std::vector<int> theta = theta_values(G, N, d.Y, k, E);

  std::vector<int> C;
  for (const auto& c : centralizer_units(d.Y, M, 1'000'000)) {
    const auto i = G.find(c);
    if (i) C.push_back(*i);
  }
  if (BigInt(C.size()) != d.subgroup.centralizer_order)
    fail("explicit centralizer has " + std::to_string(C.size()) + " elements, formula " +
         d.subgroup.centralizer_order.str());
  const Sub Csub = make_sub(G, C);
  const Sub GR = make_sub(G, G.congruence_subgroup(R));
  const std::vector<int> rgens = greedy_generators(G, GR.elems, indices_of(G, congruence_generators(F, R, M)));
  std::vector<int> igens = rgens;
  for (int c : greedy_generators(G, C, {})) igens.push_back(c);
  const Sub I = make_sub(G, G.closure(igens));
  if (BigInt(I.elems.size()) != d.subgroup.inertia_order) fail("inertia group order differs from the formula");

  // Brute-force inertia group of theta.
  {
    bool same = true;
    for (int g = 0; g < G.size() && same; ++g) {
      bool fixes = true;
      for (int n : ngens) fixes = fixes && theta[G.conj(g, n)] == theta[n];
      same = fixes == static_cast<bool>(I.in[g]);
    }
    rep.inertia_matches = same;
    if (!same) fail("inertia group of theta is not C*G^r");
  }

  std::vector<std::vector<Cyclo>> chars;
  std::set<std::string> keys;
  auto record = [&](const std::vector<Cyclo>& chi) {
    const CharCheck cc = check_character(G, chi, d.m);
    if (BigInt(cc.degree) != d.predicted_degree)
      fail("induced degree " + std::to_string(cc.degree) + " differs from " + d.predicted_degree.str());
    if (!cc.norm_one) fail("induced character has norm different from 1");
    if (!cc.level_exact) fail("induced character is trivial on G^m");
    rep.degree = cc.degree;
    ++rep.characters_checked;
    if (keys.insert(value_key(chi)).second) chars.push_back(chi);
  };

  if (d.kase != ConstructionCase::EvenQuaternion) {
    Sub H;
    if (d.kase == ConstructionCase::EvenOddEll) {
      const int r = d.m / 2;
      const HeisenbergLayer layer = layer_from_dual(make_dual(d.Y, r + 1, M));
      const Subspace jsp = isotropic_complete(layer);
      const std::vector<int> gam = G.congruence_subgroup(r);
      const std::vector<int> J =
          filter(G, gam, [&](int g) { return jsp.contains(layer_coordinate(layer, G.element(g))); });
      std::vector<int> hg = greedy_generators(G, J, ngens);
      for (int c : C) hg.push_back(c);
      H = make_sub(G, G.closure(hg));
    } else {
      H = I;
    }
    rep.subgroup_order = static_cast<int>(H.elems.size());
    if (BigInt(rep.subgroup_order) != d.subgroup.order) fail("inducing subgroup order differs from the formula");
    const std::vector<int> hgens = greedy_generators(G, H.elems, ngens);
    const std::vector<int> extra(hgens.begin() + static_cast<long>(ngens.size()), hgens.end());
    const auto lambdas = linear_extensions(G, H, N, ngens, extra, theta, E, static_cast<std::size_t>(-1));
    rep.linear_extensions = static_cast<int>(lambdas.size());
    if (lambdas.empty()) fail("theta has no linear extension to the inducing subgroup");
    const std::vector<int> T = left_transversal(G, make_sub(G, [&] {
                                                  std::vector<int> v(G.size());
                                                  std::iota(v.begin(), v.end(), 0);
                                                  return v;
                                                }()),
                                                H, nullptr);
    for (const auto& lam : lambdas)
      record(induce(G, H, T, E, [&](int x, Cyclo& acc) { acc.add_root(lam[x]); }));
  } else {
    const int r = d.m / 2;
    const HeisenbergLayer layer = layer_from_dual(make_dual(d.Y, r + 1, M));
    const Subspace jsp = isotropic_complete(layer);
    const std::vector<int> gam = G.congruence_subgroup(r);
    const std::vector<int> J =
        filter(G, gam, [&](int g) { return jsp.contains(layer_coordinate(layer, G.element(g))); });
    const std::vector<int> P = filter(G, C, [&](int c) {
      const DElem x = G.element(c) - DElem::one(F, M);
      return x.is_zero() || x.lo() >= 1;
    });
    std::vector<int> h0g = greedy_generators(G, J, ngens);
    for (int x : P) h0g.push_back(x);
    const Sub H0 = make_sub(G, G.closure(h0g));
    rep.subgroup_order = static_cast<int>(H0.elems.size());
    if (BigInt(rep.subgroup_order) != d.subgroup.order) fail("P*J order differs from the formula");
    std::vector<int> mg = rgens;
    for (int x : P) mg.push_back(x);
    const Sub Msub = make_sub(G, G.closure(mg));
    const std::vector<int> h0gens = greedy_generators(G, H0.elems, ngens);
    const std::vector<int> extra(h0gens.begin() + static_cast<long>(ngens.size()), h0gens.end());
    const auto hats = linear_extensions(G, H0, N, ngens, extra, theta, E, 1);
    if (hats.empty()) fail("theta has no linear extension to P*J");
    rep.linear_extensions = 1;
    const std::vector<int>& lam = hats.front();

    // Monomial representation of Theta = Ind_{P J}^{P Gamma^1} lambda over F_l'.
    std::vector<int> coset;
    const std::vector<int> T = left_transversal(G, Msub, H0, &coset);
    const int kdim = static_cast<int>(T.size());
    const auto [K, w] = field_with_roots(E, std::max<long long>(1000, 4LL * F.q()));
    std::vector<long long> wp(E);
    for (int i = 0; i < E; ++i) wp[i] = K.pow(w, i);
    auto rho = [&](int g) {
      Mat a(static_cast<std::size_t>(kdim) * kdim, 0);
      for (int j = 0; j < kdim; ++j) {
        const int x = G.mul(g, T[j]);
        const int i = coset[x];
        const int h = G.mul(G.inv(T[i]), x);
        a[i * kdim + j] = wp[lam[h]];
      }
      return a;
    };
    const int e = static_cast<int>(I.elems.size() / Msub.elems.size());
    int c = -1;
    for (int x : C) {
      int o = 1, y = x;
      while (!Msub.in[y]) {
        y = G.mul(y, x);
        ++o;
      }
      if (o == e) {
        c = x;
        break;
      }
    }
    if (c < 0) fail("C*G^r / P*G^r is not cyclic");
    // Intertwiner A rho(n) = rho(c n c^{-1}) A on generators of P Gamma^1.
    const std::vector<int> mgens = greedy_generators(G, Msub.elems, {});
    std::vector<std::vector<long long>> rows;
    const int n2 = kdim * kdim;
    for (int n : mgens) {
      const Mat a = rho(n), b = rho(G.conj(c, n));
      for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < kdim; ++j) {
          std::vector<long long> row(n2, 0);
          for (int l = 0; l < kdim; ++l) {
            row[i * kdim + l] = (row[i * kdim + l] + a[l * kdim + j]) % K.P;
            row[l * kdim + j] = (row[l * kdim + j] + K.P - b[i * kdim + l]) % K.P;
          }
          rows.push_back(std::move(row));
        }
    }
    const auto ns = null_space(K, rows, n2);
    if (ns.size() != 1) fail("intertwiner space is not one-dimensional: Theta is not irreducible and invariant");
    const Mat A(ns.front().begin(), ns.front().end());
    Mat Ae = mat_id(kdim);
    for (int i = 0; i < e; ++i) Ae = mat_mul(K, Ae, A, kdim);
    const Mat ce = rho(G.power(c, e));
    long long mu = -1;
    for (int i = 0; i < n2 && mu < 0; ++i)
      if (ce[i] != 0) mu = K.mul(Ae[i], K.inv(ce[i]));
    for (int i = 0; i < n2; ++i)
      if (Ae[i] != K.mul(mu, ce[i])) fail("A^e is not a scalar multiple of rho(c^e)");
    std::vector<long long> scalars;
    for (long long s = 1; s < K.P; ++s)
      if (K.mul(K.pow(s, e), mu) == 1) scalars.push_back(s);
    rep.extension_values = static_cast<int>(scalars.size());
    if (scalars.empty()) fail("no extension value on the generator");

    std::vector<int> jof(G.size(), -1), nof(G.size(), -1);
    {
      std::vector<int> cinv{0};
      for (int j = 1; j < e; ++j) cinv.push_back(G.mul(cinv.back(), G.inv(c)));
      for (int g : I.elems)
        for (int j = 0; j < e; ++j) {
          const int n = G.mul(cinv[j], g);
          if (Msub.in[n]) {
            jof[g] = j;
            nof[g] = n;
            break;
          }
        }
    }
    const std::vector<int> igen_all = greedy_generators(G, I.elems, {});
    const std::vector<int> TI = left_transversal(G, make_sub(G, [&] {
                                                   std::vector<int> v(G.size());
                                                   std::iota(v.begin(), v.end(), 0);
                                                   return v;
                                                 }()),
                                                 I, nullptr);
    for (long long s : scalars) {
      Mat S = A;
      for (auto& v : S) v = K.mul(v, s);
      std::vector<Mat> Sp{mat_id(kdim)};
      for (int j = 1; j < e; ++j) Sp.push_back(mat_mul(K, Sp.back(), S, kdim));
      std::vector<Mat> hat(G.size());
      for (int g : I.elems) hat[g] = mat_mul(K, Sp[jof[g]], rho(nof[g]), kdim);
      for (int g : I.elems)
        for (int h : igen_all)
          if (mat_mul(K, hat[g], hat[h], kdim) != hat[G.mul(g, h)]) fail("extension of Theta is not a homomorphism");
      std::vector<Cyclo> vals(G.size());
      for (int g : I.elems) vals[g] = trace_to_cyclo(K, w, hat[g], kdim, E);
      record(induce(G, I, TI, E, [&](int x, Cyclo& acc) { acc += vals[x]; }));
    }
  }
  rep.distinct_characters = static_cast<int>(chars.size());
  rep.characters = std::move(chars);
  rep.norm_one = true;
  rep.level_exact = true;
  return rep;
}

HeisenbergCheck heisenberg_check(const FieldTower& F, int r, const DElem& Y, std::uint64_t guard) {
  if (F.ell() == 2) raise(ErrorKind::BadInput, "the Heisenberg check is for odd l");
  const int M = 2 * r + 1;
  const BigInt order = layer_order(F, r, M);
  if (order > guard) raise(ErrorKind::TooLarge, "|Gamma^1| = " + order.str() + " exceeds the guard");
  const DElem one = DElem::one(F, M);
  std::vector<DElem> elems{one};
  for (const auto& x : enumerate_residues(F, r, M)) {
    if (x.is_zero()) continue;
    const DElem g = (one + x).truncated(M);
    if (is_group_element(g, M)) elems.push_back(g);
  }
  if (BigInt(elems.size()) != order) fail("Gamma^1 enumeration has the wrong order");
  std::sort(elems.begin() + 1, elems.end(), [](const DElem& a, const DElem& b) { return a.key() < b.key(); });
  const QuotientGroup G(F, M, std::move(elems), congruence_generators(F, r, M));
  HeisenbergCheck out;
  out.gamma_order = G.size();
  const Sub N = make_sub(G, G.congruence_subgroup(r + 1));
  const std::vector<int> ngens = greedy_generators(G, N.elems, indices_of(G, congruence_generators(F, r + 1, M)));
  int E = 1;
  for (int g : G.generators()) E = std::lcm(E, G.element_order(g));
  for (int g = 0; g < G.size(); g += 97) E = std::lcm(E, G.element_order(g));
  const HeisenbergLayer layer = layer_from_dual(make_dual(Y, r + 1, M));
  const Subspace jsp = isotropic_complete(layer);
  out.isotropic_dim = jsp.dim();
  std::vector<int> all(G.size());
  std::iota(all.begin(), all.end(), 0);
  const std::vector<int> J =
      filter(G, all, [&](int g) { return jsp.contains(layer_coordinate(layer, G.element(g))); });
  out.J_order = static_cast<int>(J.size());
  const Sub Jsub = make_sub(G, J);
  const std::vector<int> theta = theta_values(G, N, Y, r + 1, E);
  const std::vector<int> jg = greedy_generators(G, J, ngens);
  const std::vector<int> extra(jg.begin() + static_cast<long>(ngens.size()), jg.end());
  const auto lam = linear_extensions(G, Jsub, N, ngens, extra, theta, E, 1);
  out.linear_on_J = !lam.empty();
  if (lam.empty()) fail("theta does not extend linearly to J");
  const std::vector<int> T = left_transversal(G, make_sub(G, all), Jsub, nullptr);
  const auto& l0 = lam.front();
  const auto chi = induce(G, Jsub, T, E, [&](int x, Cyclo& acc) { acc.add_root(l0[x]); });
  const auto& cls = G.classes();
  Cyclo s(E);
  for (std::size_t c = 0; c < cls.size(); ++c)
    s += (chi[c] * chi[c].conj()).scaled(static_cast<long long>(cls[c].size()));
  out.norm_one = s.equals_integer(G.size());
  out.degree = static_cast<long long>(T.size());
  return out;
}

Census census(const FieldTower& F, int max_level, bool explicit_construction, std::uint64_t guard) {
  Census c;
  c.q = F.q();
  c.ell = F.ell();
  BigInt sum_a = 0;
  for (int m = 0; m <= max_level; ++m) {
    LevelCensus L;
    L.m = m;
    L.a = a_m(c.q, c.ell, m);
    L.d = d_m(c.q, c.ell, m);
    sum_a += L.a;
    if (m == 0) {
      L.orbit_formula_count = group_order(c.q, c.ell, 1);
    } else {
      // |G_{m+1} : G^k_{m+1}| = |G_k|
      const BigInt idx = group_order(c.q, c.ell, kernel_index(m));
      L.orbit_formula_count = level_dual_count(c.q, c.ell, m) * idx / (L.d * L.d);
    }
    L.ok = L.orbit_formula_count == L.a;
    if (explicit_construction && m >= 1 && group_order(c.q, c.ell, m + 1) <= guard) {
      const QuotientGroup G = build_quotient_group(F, m + 1, guard);
      const auto reps = level_representatives(F, m);
      L.representatives = static_cast<int>(reps.size());
      std::set<std::string> keys;
      for (const auto& y : reps) {
        const auto rep = induce_and_verify(G, construct_inducing_datum(F, m, y));
        for (const auto& chi : rep.characters) keys.insert(value_key(chi));
      }
      L.explicit_count = static_cast<int>(keys.size());
      L.ok = L.ok && BigInt(*L.explicit_count) == L.a;
    }
    c.ok = c.ok && L.ok;
    c.levels.push_back(std::move(L));
  }
  if (explicit_construction && group_order(c.q, c.ell, max_level + 1) <= guard) {
    const QuotientGroup G = build_quotient_group(F, max_level + 1, guard);
    c.class_count = G.class_count();
    c.ok = c.ok && BigInt(*c.class_count) == sum_a;
  }
  return c;
}

}  // namespace sl1d
