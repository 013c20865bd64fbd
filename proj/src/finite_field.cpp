#include "modrep/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "modrep/cyclotomic.hpp"

namespace modrep {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::int64_t>;  // coefficients mod p, low degree first

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g over 𝔽_p; g monic of degree >= 1.
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  int dg = poly_deg(g);
  for (int i = poly_deg(f); i >= dg; --i) {
    std::int64_t c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
  }
  f.resize(std::max(dg, 1));
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::int64_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(prod), mod, p);
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::int64_t p) {
  int df = poly_deg(f);
  if (df == 1) return true;
  for (int d = 1; 2 * d <= df; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_deg(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::string field_key(std::int64_t p, int e, const Poly& modulus) {
  std::ostringstream os;
  os << p << ":" << e;
  for (auto c : modulus) os << ":" << c;
  return os.str();
}

}  // namespace

std::int32_t FiniteField::add(std::int32_t a, std::int32_t b) const {
  if (e_ == 1) {
    std::int64_t s = a + b;
    return static_cast<std::int32_t>(s >= p_ ? s - p_ : s);
  }
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    std::int64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    a = static_cast<std::int32_t>(a / p_);
    b = static_cast<std::int32_t>(b / p_);
  }
  return static_cast<std::int32_t>(out);
}

std::int32_t FiniteField::neg(std::int32_t a) const {
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    std::int64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a = static_cast<std::int32_t>(a / p_);
  }
  return static_cast<std::int32_t>(out);
}

std::int32_t FiniteField::sub(std::int32_t a, std::int32_t b) const {
  return add(a, neg(b));
}

std::int32_t FiniteField::pow(std::int32_t a, std::int64_t n) const {
  if (a == 0) {
    if (n == 0) return one_;
    if (n < 0) throw NotInvertible("0^negative");
    return 0;
  }
  std::int64_t l = log_[a];
  std::int64_t m = q_ - 1;
  std::int64_t ln = (l % m) * (n % m) % m;
  if (ln < 0) ln += m;
  return exp_[ln];
}

std::int64_t FiniteField::mult_order(std::int32_t a) const {
  if (a == 0) throw ZeroElement("order of zero");
  std::int64_t m = q_ - 1;
  std::int64_t l = log_[a];
  if (l == 0) return 1;
  std::int64_t g = std::__gcd(l, m);
  return m / g;
}

std::vector<std::int64_t> FiniteField::coords(std::int32_t code) const {
  std::vector<std::int64_t> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = code % p_;
    code = static_cast<std::int32_t>(code / p_);
  }
  return c;
}

std::int32_t FiniteField::from_coords(const std::vector<std::int64_t>& c) const {
  if (static_cast<int>(c.size()) != e_)
    throw Error("coordinate tuple has wrong length");
  std::int64_t code = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    std::int64_t d = ((c[i] % p_) + p_) % p_;
    code += d * mult;
    mult *= p_;
  }
  return static_cast<std::int32_t>(code);
}

std::int32_t FiniteField::from_int(std::int64_t n) const {
  std::int64_t d = ((n % p_) + p_) % p_;
  return static_cast<std::int32_t>(d);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (e_ > 1) os << "^" << e_;
  os << ")";
  return os.str();
}

const FiniteField& make_field(
    std::int64_t p, int e,
    const std::optional<std::vector<std::int64_t>>& modulus_opt) {
  if (!is_prime(p)) throw Error("characteristic must be prime");
  if (e < 1) throw Error("extension degree must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder)
      throw ExtensionTooLarge("field order exceeds " +
                              std::to_string(FiniteField::kMaxOrder));
  }

  Poly modulus;
  if (modulus_opt) {
    modulus = *modulus_opt;
    if (static_cast<int>(modulus.size()) != e + 1)
      throw Error("modulus must have degree e");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (modulus[e] != 1) throw Error("modulus must be monic");
    if (!poly_irreducible(modulus, p))
      throw NonIrreducibleModulus("supplied polynomial factors over GF(" +
                                  std::to_string(p) + ")");
  } else if (e == 1) {
    modulus = {0, 1};  // x
  } else {
    // smallest packed coefficient code first
    bool found = false;
    for (std::int64_t code = 0; code < q && !found; ++code) {
      Poly f(e + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < e; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[e] = 1;
      if (poly_irreducible(f, p)) {
        modulus = f;
        found = true;
      }
    }
    if (!found) throw Error("no irreducible modulus found");  // unreachable
  }

  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<FiniteField>>& registry =
      *new std::map<std::string, std::unique_ptr<FiniteField>>;
  std::lock_guard<std::mutex> lock(registry_mutex);
  const std::string key = field_key(p, e, modulus);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;

  auto field = std::unique_ptr<FiniteField>(new FiniteField());
  FiniteField& f = *field;
  f.p_ = p;
  f.e_ = e;
  f.q_ = q;
  f.modulus_ = modulus;
  f.one_ = 1;  // constant polynomial 1 packs to code 1

  auto code_to_poly = [&](std::int64_t code) {
    Poly g(e, 0);
    for (int i = 0; i < e; ++i) {
      g[i] = code % p;
      code /= p;
    }
    return g;
  };
  auto poly_to_code = [&](const Poly& g) {
    std::int64_t code = 0, mult = 1;
    for (int i = 0; i < e; ++i) {
      code += (i < static_cast<int>(g.size()) ? g[i] : 0) * mult;
      mult *= p;
    }
    return code;
  };

  // generator: smallest code whose multiplicative order is q-1
  std::int64_t gen = -1;
  for (std::int64_t cand = 1; cand < q && gen < 0; ++cand) {
    Poly x = code_to_poly(cand);
    Poly acc = x;
    std::int64_t ord = 1;
    while (poly_to_code(acc) != 1) {
      acc = poly_mul_mod(acc, x, modulus, p);
      ++ord;
      if (ord > q) break;
    }
    if (ord == q - 1) gen = cand;
  }
  if (gen < 0) throw NoGeneratorFound(f.describe());  // impossible for a field
  f.gen_ = static_cast<std::int32_t>(gen);

  f.exp_.resize(q - 1);
  f.log_.assign(q, 0);
  Poly g = code_to_poly(gen);
  Poly acc = {1};
  for (std::int64_t i = 0; i < q - 1; ++i) {
    std::int64_t code = poly_to_code(acc);
    f.exp_[i] = static_cast<std::int32_t>(code);
    f.log_[code] = i;
    acc = poly_mul_mod(acc, g, modulus, p);
  }

  auto [pos, inserted] = registry.emplace(key, std::move(field));
  (void)inserted;
  return *pos->second;
}

namespace {
const FiniteField& common_field(const FFElem& a, const FFElem& b) {
  const FiniteField* fa = a.field();
  const FiniteField* fb = b.field();
  if (fa && fb) {
    if (fa != fb) throw FieldMismatch("elements of different fields");
    return *fa;
  }
  if (fa) return *fa;
  if (fb) return *fb;
  throw Error("field-less elements; no context");
}
}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
  if (!a.field() && !b.field()) return FFElem();
  const FiniteField& f = common_field(a, b);
  return FFElem(f, f.add(a.code(), b.code()));
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  if (!a.field() && !b.field()) return FFElem();
  const FiniteField& f = common_field(a, b);
  return FFElem(f, f.sub(a.code(), b.code()));
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  if (!a.field() && !b.field()) return FFElem();
  const FiniteField& f = common_field(a, b);
  return FFElem(f, f.mul(a.code(), b.code()));
}

FFElem operator/(const FFElem& a, const FFElem& b) {
  const FiniteField& f = common_field(a, b);
  return FFElem(f, f.mul(a.code(), f.inv(b.code())));
}

FFElem FFElem::operator-() const {
  if (!f_) return FFElem();
  return FFElem(*f_, f_->neg(code_));
}

bool operator==(const FFElem& a, const FFElem& b) {
  if (a.field() && b.field() && a.field() != b.field()) return false;
  return a.code() == b.code();
}

std::vector<std::int64_t> FFElem::coords() const {
  if (!f_) throw Error("field-less element has no coordinates");
  return f_->coords(code_);
}

std::int64_t discrete_log(const FFElem& x) {
  if (!x.field() || x.is_zero()) throw ZeroElement("discrete_log(0)");
  return x.field()->dlog(x.code());
}

Cyclotomic teichmuller_lift(const FFElem& x) {
  if (!x.field() || x.is_zero()) throw ZeroElement("teichmuller_lift(0)");
  const FiniteField& f = *x.field();
  return Cyclotomic::zeta(f.order() - 1, f.dlog(x.code()));
}

}  // namespace modrep
