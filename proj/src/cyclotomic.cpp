#include "sl1d/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "sl1d/error.hpp"

namespace sl1d {

namespace {

using IPoly = std::vector<long long>;

IPoly exact_div(IPoly a, const IPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  IPoly q(a.size() - db, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const long long f = a[i] / b[db];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int N) {
  static std::mutex mu;
  static std::map<int, IPoly> cache;
  if (N < 1) raise(ErrorKind::BadInput, "cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  IPoly num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) num = exact_div(num, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(num)).first->second;
}

Cyclo Cyclo::integer(int N, long long v) {
  Cyclo c(N);
  c.c_[0] = v;
  return c;
}

Cyclo Cyclo::root(int N, long long k) {
  Cyclo c(N);
  c.add_root(k);
  return c;
}

void Cyclo::add_root(long long k, long long mult) {
  const long long N = order();
  c_[((k % N) + N) % N] += mult;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.order() != order()) raise(ErrorKind::BadInput, "cyclotomic orders differ");
  for (int i = 0; i < order(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.order() != order()) raise(ErrorKind::BadInput, "cyclotomic orders differ");
  for (int i = 0; i < order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r = *this;
  return r += o;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r = *this;
  return r -= o;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (o.order() != order()) raise(ErrorKind::BadInput, "cyclotomic orders differ");
  const int N = order();
  Cyclo r(N);
  for (int i = 0; i < N; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < N; ++j)
      if (o.c_[j] != 0) r.c_[(i + j) % N] += c_[i] * o.c_[j];
  }
  return r;
}

Cyclo Cyclo::scaled(long long s) const {
  Cyclo r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Cyclo Cyclo::conj() const {
  const int N = order();
  Cyclo r(N);
  for (int i = 0; i < N; ++i) r.c_[(N - i) % N] += c_[i];
  return r;
}

std::vector<long long> Cyclo::reduced() const {
  const IPoly& phi = cyclotomic_polynomial(order());
  const int d = static_cast<int>(phi.size()) - 1;
  IPoly a = c_;
  for (int i = order() - 1; i >= d; --i) {
    const long long f = a[i];
    if (f == 0) continue;
    for (int j = 0; j <= d; ++j) a[i - d + j] -= f * phi[j];
  }
  a.resize(d);
  return a;
}

bool Cyclo::equals_integer(long long v) const { return *this == integer(order(), v); }

std::string Cyclo::str() const {
  std::ostringstream os;
  const auto r = reduced();
  bool first = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!first) os << (r[i] > 0 ? "+" : "");
    os << r[i];
    if (i > 0) os << "*z" << order() << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sl1d
