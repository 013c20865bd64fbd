#include "modrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

using RPoly = std::vector<Rational>;  // low degree first

int rpoly_deg(const RPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

void rpoly_trim(RPoly& f) {
  int d = rpoly_deg(f);
  f.resize(static_cast<size_t>(std::max(d + 1, 1)));
}

// f mod g, g nonzero.
RPoly rpoly_rem(RPoly f, const RPoly& g) {
  int dg = rpoly_deg(g);
  if (dg < 0) throw ZeroElement("polynomial division by zero");
  const Rational lead = g[dg];
  for (int i = rpoly_deg(f); i >= dg; --i) {
    if (f[i] == 0) continue;
    Rational c = f[i] / lead;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
    f[i] = 0;
  }
  rpoly_trim(f);
  return f;
}

std::pair<RPoly, RPoly> rpoly_divmod(RPoly f, const RPoly& g) {
  int dg = rpoly_deg(g);
  if (dg < 0) throw ZeroElement("polynomial division by zero");
  int df = rpoly_deg(f);
  RPoly q(static_cast<size_t>(std::max(df - dg + 1, 1)), Rational(0));
  const Rational lead = g[dg];
  for (int i = df; i >= dg; --i) {
    if (f[i] == 0) continue;
    Rational c = f[i] / lead;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  rpoly_trim(f);
  return {q, f};
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  RPoly out(a.size() + b.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  rpoly_trim(out);
  return out;
}

// Extended gcd: returns (g, s) with s*a ≡ g (mod b), g = gcd(a, b).
std::pair<RPoly, RPoly> rpoly_half_xgcd(RPoly a, RPoly b) {
  RPoly s0 = {Rational(1)}, s1 = {Rational(0)};
  while (rpoly_deg(b) >= 0) {
    auto [q, r] = rpoly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    RPoly qs1 = rpoly_mul(q, s1);
    RPoly s2 = s0;
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    rpoly_trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {a, s0};
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<BigInt>>& cache =
      *new std::map<std::int64_t, std::vector<BigInt>>;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  if (m < 1) throw Error("cyclotomic order must be positive");

  // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
  std::vector<BigInt> num(static_cast<size_t>(m) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<BigInt>& phi_d = cyclotomic_polynomial(d);
    // exact division, divisor monic
    std::vector<BigInt> q(num.size() - phi_d.size() + 1, BigInt(0));
    std::vector<BigInt> rem = num;
    for (int i = static_cast<int>(rem.size()) - 1;
         i >= static_cast<int>(phi_d.size()) - 1; --i) {
      BigInt c = rem[i];
      if (c == 0) continue;
      q[i - (phi_d.size() - 1)] = c;
      for (size_t j = 0; j < phi_d.size(); ++j)
        rem[i - (phi_d.size() - 1) + j] -= c * phi_d[j];
    }
    num = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(num));
  (void)inserted;
  return it->second;
}

Cyclotomic::Cyclotomic(std::int64_t m, std::vector<Rational> coords)
    : order_(m), c_(static_cast<size_t>(m), Rational(0)) {
  if (m < 1) throw Error("cyclotomic order must be positive");
  for (size_t i = 0; i < coords.size(); ++i)
    c_[i % static_cast<size_t>(m)] += coords[i];
}

Cyclotomic Cyclotomic::zeta(std::int64_t m, std::int64_t power) {
  if (m < 1) throw Error("cyclotomic order must be positive");
  std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
  std::int64_t k = ((power % m) + m) % m;
  c[static_cast<size_t>(k)] = 1;
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::embedded(std::int64_t n) const {
  if (n % order_ != 0) throw Error("target order not a multiple");
  if (n == order_) return *this;
  std::int64_t k = n / order_;
  std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
  for (std::int64_t i = 0; i < order_; ++i)
    c[static_cast<size_t>(i * k)] = c_[static_cast<size_t>(i)];
  return Cyclotomic(n, std::move(c));
}

std::vector<Rational> Cyclotomic::canonical_coords() const {
  const std::vector<BigInt>& phi = cyclotomic_polynomial(order_);
  RPoly p(c_.begin(), c_.end());
  RPoly phi_r(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phi_r[i] = Rational(phi[i]);
  RPoly r = rpoly_rem(std::move(p), phi_r);
  r.resize(static_cast<size_t>(order_), Rational(0));
  return r;
}

bool Cyclotomic::is_zero() const {
  bool plain_zero = true;
  for (const auto& x : c_)
    if (x != 0) {
      plain_zero = false;
      break;
    }
  if (plain_zero) return true;
  auto r = canonical_coords();
  return std::all_of(r.begin(), r.end(),
                     [](const Rational& x) { return x == 0; });
}

bool Cyclotomic::is_rational() const {
  auto r = canonical_coords();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  auto r = canonical_coords();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) throw Error("value is not rational: " + str());
  return r[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> c(static_cast<size_t>(order_), Rational(0));
  for (std::int64_t i = 0; i < order_; ++i) {
    std::int64_t j = (order_ - i) % order_;
    c[static_cast<size_t>(j)] = c_[static_cast<size_t>(i)];
  }
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  const std::vector<BigInt>& phi = cyclotomic_polynomial(order_);
  RPoly phi_r(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phi_r[i] = Rational(phi[i]);
  RPoly a = rpoly_rem(RPoly(c_.begin(), c_.end()), phi_r);
  if (rpoly_deg(a) < 0) throw ZeroElement("inverse of zero");
  auto [g, s] = rpoly_half_xgcd(a, phi_r);
  if (rpoly_deg(g) != 0)
    throw Error("cyclotomic inverse: gcd not constant");  // cannot happen
  RPoly inv = s;
  for (auto& x : inv) x /= g[0];
  inv.resize(static_cast<size_t>(order_), Rational(0));
  return Cyclotomic(order_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  Cyclotomic acc(Rational(1));
  Cyclotomic b = *this;
  std::uint64_t e = static_cast<std::uint64_t>(n);
  while (e != 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm64(a.order_, b.order_);
  Cyclotomic x = a.embedded(m), y = b.embedded(m);
  for (std::int64_t i = 0; i < m; ++i)
    x.c_[static_cast<size_t>(i)] += y.c_[static_cast<size_t>(i)];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm64(a.order_, b.order_);
  Cyclotomic x = a.embedded(m), y = b.embedded(m);
  for (std::int64_t i = 0; i < m; ++i)
    x.c_[static_cast<size_t>(i)] -= y.c_[static_cast<size_t>(i)];
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm64(a.order_, b.order_);
  Cyclotomic x = a.embedded(m), y = b.embedded(m);
  // cyclic convolution over a common denominator to keep gcd work per
  // coefficient instead of per partial product
  BigInt da(1), db(1);
  for (const auto& v : x.c_) da = boost::multiprecision::lcm(da, denominator(v));
  for (const auto& v : y.c_) db = boost::multiprecision::lcm(db, denominator(v));
  std::vector<BigInt> na(static_cast<size_t>(m)), nb(static_cast<size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const Rational &va = x.c_[static_cast<size_t>(i)],
                   &vb = y.c_[static_cast<size_t>(i)];
    na[static_cast<size_t>(i)] = numerator(va) * (da / denominator(va));
    nb[static_cast<size_t>(i)] = numerator(vb) * (db / denominator(vb));
  }
  std::vector<BigInt> conv(static_cast<size_t>(m), BigInt(0));
  for (std::int64_t i = 0; i < m; ++i) {
    if (na[static_cast<size_t>(i)] == 0) continue;
    for (std::int64_t j = 0; j < m; ++j) {
      if (nb[static_cast<size_t>(j)] == 0) continue;
      std::int64_t k = i + j;
      if (k >= m) k -= m;
      conv[static_cast<size_t>(k)] +=
          na[static_cast<size_t>(i)] * nb[static_cast<size_t>(j)];
    }
  }
  BigInt d = da * db;
  std::vector<Rational> out(static_cast<size_t>(m));
  for (std::int64_t i = 0; i < m; ++i)
    out[static_cast<size_t>(i)] = Rational(conv[static_cast<size_t>(i)], d);
  return Cyclotomic(m, std::move(out));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm64(a.order_, b.order_);
  return a.embedded(m) * b.embedded(m).inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return (a - b).is_zero();
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm64(a.order_, b.order_);
  auto ca = a.embedded(m).canonical_coords();
  auto cb = b.embedded(m).canonical_coords();
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] < cb[i]) return -1;
    if (ca[i] > cb[i]) return 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  auto r = canonical_coords();
  std::ostringstream os;
  bool first = true;
  for (std::int64_t i = 0; i < order_; ++i) {
    const Rational& v = r[static_cast<size_t>(i)];
    if (v == 0) continue;
    if (!first) os << " + ";
    os << rational_to_string(v);
    if (i > 0) os << "*z" << order_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace modrep
