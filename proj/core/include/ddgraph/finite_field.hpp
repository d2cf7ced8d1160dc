#pragma once

#include <cstdint>
#include <vector>

#include "ddgraph/errors.hpp"

namespace ddgraph {

// Finite field of prime-power order q = p^e.  Elements are the integers
// 0..q-1.  For e == 1 an element is its residue mod p.  For e > 1 an element
// encodes the coefficient vector of its polynomial representative packed in
// base p (element sum c_i * p^i stands for the polynomial sum c_i * x^i), and
// arithmetic is carried out modulo a fixed monic irreducible modulus: the one
// of degree e whose packed encoding (with the leading coefficient included)
// is smallest.  Construction is deterministic, so equal q always yields the
// identical field.
class FiniteField {
 public:
  // Throws ErrorKind::NotPrimePower when q is not p^e with p prime, e >= 1.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  // Packed encoding of the modulus polynomial; p_^e_ + ... (e==1: p itself).
  long long modulus() const { return modulus_; }

  int add(int a, int b) const { check(a); check(b); return add_[a * q_ + b]; }
  int sub(int a, int b) const { check(a); check(b); return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { check(a); check(b); return mul_[a * q_ + b]; }
  int neg(int a) const { check(a); return neg_[a]; }

  // Multiplicative inverse; ErrorKind::DivisionByZero for a == 0.
  int inv(int a) const {
    check(a);
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }

  int pow(int a, long long n) const;

 private:
  void check(int a) const {
    if (a < 0 || a >= q_)
      fail(ErrorKind::OutOfRange, "element " + std::to_string(a) + " outside GF(" + std::to_string(q_) + ")");
  }

  int q_ = 0, p_ = 0, e_ = 0;
  long long modulus_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Returns (p, e) with q == p^e, or (0, 0) when q is not a prime power >= 2.
std::pair<int, int> prime_power_split(int q);

}  // namespace ddgraph
