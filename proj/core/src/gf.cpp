#include "sympgeo/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace sympgeo {
namespace {

struct ModulusEntry {
  int p, m;
  std::vector<int> coeffs;  // lowest degree first, monic
};

// Fixed moduli for the supported extension fields.
const ModulusEntry kModuli[] = {
    {2, 2, {1, 1, 1}},        // x^2 + x + 1
    {2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
    {2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
    {3, 2, {1, 0, 1}},        // x^2 + 1
    {5, 2, {2, 0, 1}},        // x^2 + 2
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_p(long long v, int p) {
  int r = int(v % p);
  return r < 0 ? r + p : r;
}

// Polynomials over GF(p): vector<int> of coefficients, lowest degree first.
// Trailing zeros allowed; deg() ignores them.
int poly_deg(const std::vector<int>& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a modulo b (b nonzero, arbitrary leading coefficient).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = poly_deg(b);
  int lead = b[db];
  // lead^{-1} mod p by Fermat
  int lead_inv = 1;
  for (int i = 0; i < p - 2; ++i) lead_inv = mod_p(1LL * lead_inv * lead, p);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    int c = mod_p(1LL * a[da] * lead_inv, p);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = mod_p(a[da - db + j] - 1LL * c * b[j], p);
  }
  return a;
}

bool poly_is_irreducible(const std::vector<int>& mod, int p) {
  int m = poly_deg(mod);
  if (m < 1) return false;
  if (m == 1) return true;
  // Trial division by all monic polynomials of degree 1 .. m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    // Odometer over the d low coefficients; leading coefficient fixed to 1.
    std::vector<int> div(d + 1, 0);
    div[d] = 1;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = int(v % p);
        v /= p;
      }
      if (poly_deg(poly_rem(mod, div, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<int> code_digits(int code, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int digits_code(const std::vector<int>& d, int p, int m) {
  int code = 0;
  for (int i = m - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

// Table-free product of element codes, used only while building tables.
int code_mul_slow(int p, int m, const std::vector<int>& mod, int a, int b) {
  std::vector<int> da = code_digits(a, p, m), db = code_digits(b, p, m);
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      prod[i + j] = mod_p(prod[i + j] + 1LL * da[i] * db[j], p);
  // Reduce by the monic modulus: x^m = -(mod[0] + ... + mod[m-1] x^{m-1}).
  for (int i = 2 * m - 2; i >= m; --i) {
    int c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < m; ++j)
      prod[i - m + j] = mod_p(prod[i - m + j] - 1LL * c * mod[j], p);
  }
  prod.resize(m);
  return digits_code(prod, p, m);
}

int code_pow_slow(int p, int m, const std::vector<int>& mod, int a, long long k) {
  int r = 1, base = a;
  while (k > 0) {
    if (k & 1) r = code_mul_slow(p, m, mod, r, base);
    base = code_mul_slow(p, m, mod, base, base);
    k >>= 1;
  }
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> fs;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

felem Gf::pow(felem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t e = (std::uint64_t(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
  return exp_[e];
}

const Gf& make_field(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Gf>> registry;

  if (!is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw InputError("field extension degree must be at least 1");

  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw InputError("field order exceeds the supported bound " + std::to_string(kMaxFieldOrder));
  }

  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find({p, m});
  if (it != registry.end()) return *it->second;

  std::vector<int> modulus;
  if (m == 1) {
    modulus = {0, 1};  // placeholder x; arithmetic is plain mod p
  } else {
    for (const auto& e : kModuli)
      if (e.p == p && e.m == m) modulus = e.coeffs;
    if (modulus.empty())
      throw InputError("no modulus table entry for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  }
  if (!poly_is_irreducible(modulus, p))
    throw VerificationError("modulus table entry is reducible");

  auto f = std::unique_ptr<Gf>(new Gf());
  f->p_ = p;
  f->m_ = m;
  f->q_ = int(q);
  f->modulus_ = modulus;

  const int Q = f->q_;

  // Addition and negation are digit-wise mod p.
  f->add_.resize(size_t(Q) * Q);
  f->neg_.resize(Q);
  for (int a = 0; a < Q; ++a) {
    auto da = code_digits(a, p, m);
    for (auto& d : da) d = mod_p(-d, p);
    f->neg_[a] = felem(digits_code(da, p, m));
  }
  for (int a = 0; a < Q; ++a) {
    auto da = code_digits(a, p, m);
    for (int b = 0; b < Q; ++b) {
      auto db = code_digits(b, p, m);
      std::vector<int> ds(m);
      for (int i = 0; i < m; ++i) ds[i] = mod_p(da[i] + db[i], p);
      f->add_[size_t(a) * Q + b] = felem(digits_code(ds, p, m));
    }
  }

  // Discrete-log tables over a fixed generator: the smallest code whose
  // order is q-1.
  int gen = 0;
  auto factors = prime_factors(Q - 1);
  for (int c = 1; c < Q && gen == 0; ++c) {
    bool ok = true;
    for (int r : factors)
      if (code_pow_slow(p, m, modulus, c, (Q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) gen = c;
  }
  if (gen == 0 && Q == 2) gen = 1;  // trivial group
  if (gen == 0) throw VerificationError("no generator found");

  f->exp_.resize(Q - 1);
  f->log_.assign(Q, 0);
  int cur = 1;
  for (int i = 0; i < Q - 1; ++i) {
    f->exp_[i] = felem(cur);
    f->log_[cur] = i;
    cur = code_mul_slow(p, m, modulus, cur, gen);
  }
  if (cur != 1) throw VerificationError("generator order mismatch");

  // Frobenius orbit tables.
  f->frob_.resize(size_t(m) * Q);
  for (int e = 0; e < m; ++e) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    for (int a = 0; a < Q; ++a)
      f->frob_[size_t(e) * Q + a] = felem(code_pow_slow(p, m, modulus, a, pe));
  }

  auto& slot = registry[{p, m}];
  slot = std::move(f);
  return *slot;
}

const Gf& field_of_order(int q) {
  if (q < 2 || q > kMaxFieldOrder) throw InputError("field order out of range: " + std::to_string(q));
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  int v = q;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) throw InputError(std::to_string(q) + " is not a prime power");
  return make_field(p, m);
}

}  // namespace sympgeo
