#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crb {

enum class Errc {
  invalid_argument = 1,
  parse = 2,
  cap_exceeded = 3,
  singular = 4,
  precondition = 5,
  invariant = 6,
  io = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Field element code. Encodes the polynomial sum c_i x^i as sum c_i p^i,
// so codes 0..p-1 are the prime subfield.
using Fel = std::uint32_t;

// Exact arithmetic in F_{p^m}. The modulus is the first monic irreducible of
// degree m under the base-p code ordering, so (p, m) always names the same
// field and element codes are portable across runs.
class Field {
 public:
  // Interned; returned reference lives for the whole program.
  static const Field& get(int p, int m);

  static constexpr long long kMaxOrder = 1LL << 16;

  int p() const { return p_; }
  int m() const { return m_; }
  Fel q() const { return q_; }
  int bits() const { return bits_; }           // bits per element code
  const std::vector<int>& modulus() const { return modulus_; }  // c_0..c_m, monic

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;  // throws on 0
  Fel pow(Fel a, long long e) const;
  Fel frobenius(Fel a, int r) const;  // x -> x^{p^r}

  // Reduce an integer into the field. For m = 1 this is v mod p (negatives
  // allowed); for m > 1, v >= 0 is read as base-p digits of a polynomial and
  // reduced modulo the field modulus.
  Fel from_int(long long v) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

 private:
  Field(int p, int m);

  Fel mul_raw(Fel a, Fel b) const;

  int p_ = 0, m_ = 0;
  Fel q_ = 0;
  int bits_ = 1;
  std::vector<int> modulus_;
  bool tabled_ = false;
  std::vector<Fel> mul_table_;  // q*q when tabled
  std::vector<Fel> inv_table_;  // q when tabled
};

// Canonical embedding F_{p^a} -> F_{p^b} for a | b: the small field's
// generator is sent to the least root of its modulus in the big field.
struct Embedding {
  const Field* src = nullptr;
  const Field* dst = nullptr;
  std::vector<Fel> map;  // indexed by src code

  Fel operator()(Fel a) const { return map[a]; }
};

Embedding make_embedding(const Field& src, const Field& dst);

}  // namespace crb
