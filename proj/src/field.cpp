#include "field.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

namespace crb {
namespace {

constexpr Fel kTableCap = 1024;  // build multiplication tables up to this order

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p, little-endian coefficient vectors without trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mod_inv(int a, int p) {
  // p is a small prime
  int r = 1, e = p - 2;
  long long base = a % p;
  while (e) {
    if (e & 1) r = (int)(r * base % p);
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (int)((c[i + j] + (long long)a[i] * b[j]) % p);
  trim(c);
  return c;
}

// f mod g, g monic-izable (leading coefficient invertible)
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  int lg = (int)g.size() - 1;
  int lead_inv = mod_inv(g.back(), p);
  while ((int)f.size() - 1 >= lg && !f.empty()) {
    int shift = (int)f.size() - 1 - lg;
    int c = (int)((long long)f.back() * lead_inv % p);
    for (int i = 0; i <= lg; ++i) {
      long long v = f[shift + i] - (long long)c * g[i];
      f[shift + i] = (int)((v % p + p) % p);
    }
    trim(f);
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
  int deg = (int)f.size() - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long v = code;
      for (int i = 0; i < d; ++i) {
        g[i] = (int)(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly decode(Fel a, int p) {
  Poly f;
  while (a) {
    f.push_back((int)(a % (Fel)p));
    a /= (Fel)p;
  }
  return f;
}

Fel encode(const Poly& f, int p) {
  Fel v = 0;
  for (size_t i = f.size(); i-- > 0;) v = v * (Fel)p + (Fel)f[i];
  return v;
}

// Extended Euclid over F_p[x]: returns s with s*a = gcd (mod b), for gcd = 1.
Poly poly_inverse(const Poly& a, const Poly& mod, int p) {
  Poly r0 = mod, r1 = a, s0 = {}, s1 = {1};
  while (!poly_is_zero(r1)) {
    // r0 = q*r1 + r2
    Poly q;
    {
      Poly rem = r0;
      int l1 = (int)r1.size() - 1;
      int lead_inv = mod_inv(r1.back(), p);
      q.assign(std::max<size_t>(rem.size(), 1), 0);
      while ((int)rem.size() - 1 >= l1 && !rem.empty()) {
        int shift = (int)rem.size() - 1 - l1;
        int c = (int)((long long)rem.back() * lead_inv % p);
        q[shift] = c;
        for (int i = 0; i <= l1; ++i) {
          long long v = rem[shift + i] - (long long)c * r1[i];
          rem[shift + i] = (int)((v % p + p) % p);
        }
        trim(rem);
      }
      trim(q);
      r0 = r1;
      r1 = rem;
    }
    Poly qs = poly_mul(q, s1, p);
    Poly s2(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < s2.size(); ++i) {
      long long v = (i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0);
      s2[i] = (int)((v % p + p) % p);
    }
    trim(s2);
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd, a nonzero unit mod an irreducible modulus => constant
  int g_inv = mod_inv(r0[0], p);
  Poly out;
  for (int c : s0) out.push_back((int)((long long)c * g_inv % p));
  trim(out);
  return poly_mod(out, mod, p);
}

}  // namespace

Field::Field(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw Error(Errc::invalid_argument, "field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::cap_exceeded, "field order p^m exceeds cap " + std::to_string(kMaxOrder));
  }
  q_ = (Fel)q;
  bits_ = std::max(1, (int)std::bit_width((unsigned)(q_ - 1)));

  // first monic irreducible of degree m in code order
  long long pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  for (long long code = 0; code < pm; ++code) {
    Poly f(m + 1, 0);
    long long v = code;
    for (int i = 0; i < m; ++i) {
      f[i] = (int)(v % p);
      v /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      break;
    }
  }
  if (modulus_.empty()) throw Error(Errc::internal, "no irreducible modulus found");

  if (q_ <= kTableCap) {
    tabled_ = true;
    mul_table_.assign((size_t)q_ * q_, 0);
    for (Fel a = 0; a < q_; ++a)
      for (Fel b = a; b < q_; ++b) {
        Fel v = mul_raw(a, b);
        mul_table_[(size_t)a * q_ + b] = v;
        mul_table_[(size_t)b * q_ + a] = v;
      }
    inv_table_.assign(q_, 0);
    for (Fel a = 1; a < q_; ++a)
      for (Fel b = 1; b < q_; ++b)
        if (mul_table_[(size_t)a * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
  }
}

const Field& Field::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, m))).first;
  return *it->second;
}

Fel Field::add(Fel a, Fel b) const {
  if (m_ == 1) return (Fel)(((long long)a + b) % p_);
  // coefficientwise addition, no carries across digits
  Fel out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    Fel da = a % (Fel)p_, db = b % (Fel)p_;
    a /= (Fel)p_;
    b /= (Fel)p_;
    out += ((da + db) % (Fel)p_) * mult;
    mult *= (Fel)p_;
  }
  return out;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::neg(Fel a) const {
  if (m_ == 1) return a == 0 ? 0 : (Fel)(p_ - (int)a);
  Fel out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    Fel d = a % (Fel)p_;
    a /= (Fel)p_;
    out += (d == 0 ? 0 : (Fel)p_ - d) * mult;
    mult *= (Fel)p_;
  }
  return out;
}

Fel Field::mul_raw(Fel a, Fel b) const {
  if (m_ == 1) return (Fel)((long long)a * b % p_);
  Poly f = poly_mul(decode(a, p_), decode(b, p_), p_);
  Poly mod(modulus_.begin(), modulus_.end());
  return encode(poly_mod(f, mod, p_), p_);
}

Fel Field::mul(Fel a, Fel b) const {
  if (tabled_) return mul_table_[(size_t)a * q_ + b];
  return mul_raw(a, b);
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw Error(Errc::singular, "zero has no inverse");
  if (tabled_) return inv_table_[a];
  if (m_ == 1) return (Fel)mod_inv((int)a, p_);
  Poly mod(modulus_.begin(), modulus_.end());
  return encode(poly_inverse(decode(a, p_), mod, p_), p_);
}

Fel Field::pow(Fel a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fel r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel Field::frobenius(Fel a, int r) const {
  if (r < 0) throw Error(Errc::invalid_argument, "frobenius power must be >= 0");
  if (a == 0) return 0;
  // exponent p^r taken mod q-1 on the multiplicative group
  long long e = 1;
  for (int i = 0; i < r; ++i) e = e * p_ % (long long)(q_ - 1);
  if (e == 0) e = q_ - 1;  // only when q-1 == 1, i.e. F_2
  return pow(a, e);
}

Fel Field::from_int(long long v) const {
  if (m_ == 1) {
    long long r = v % p_;
    if (r < 0) r += p_;
    return (Fel)r;
  }
  if (v < 0) throw Error(Errc::invalid_argument, "negative entries are only defined over prime fields");
  Poly f;
  long long w = v;
  while (w) {
    f.push_back((int)(w % p_));
    w /= p_;
  }
  Poly mod(modulus_.begin(), modulus_.end());
  return encode(poly_mod(f, mod, p_), p_);
}

Embedding make_embedding(const Field& src, const Field& dst) {
  if (src.p() != dst.p() || dst.m() % src.m() != 0)
    throw Error(Errc::invalid_argument, "no embedding: degree of the small field must divide the big one");
  Embedding e;
  e.src = &src;
  e.dst = &dst;
  // least root of the source modulus in the destination field
  Fel root = 0;
  bool found = false;
  for (Fel x = 0; x < dst.q() && !found; ++x) {
    Fel v = 0;
    for (size_t i = src.modulus().size(); i-- > 0;) v = dst.add(dst.mul(v, x), dst.from_int(src.modulus()[i]));
    if (v == 0) {
      root = x;
      found = true;
    }
  }
  if (!found) throw Error(Errc::internal, "embedding root not found");
  e.map.assign(src.q(), 0);
  for (Fel a = 0; a < src.q(); ++a) {
    Fel acc = 0, pw = 1;
    Fel rest = a;
    for (int i = 0; i < src.m(); ++i) {
      Fel digit = rest % (Fel)src.p();
      rest /= (Fel)src.p();
      acc = dst.add(acc, dst.mul(dst.from_int(digit), pw));
      pw = dst.mul(pw, root);
    }
    e.map[a] = acc;
  }
  return e;
}

}  // namespace crb
