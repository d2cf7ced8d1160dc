#include "ddgraph/finite_field.hpp"

#include <numeric>

namespace ddgraph {

std::pair<int, int> prime_power_split(int q) {
  if (q < 2) return {0, 0};
  int p = 0;
  int n = q;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return {0, 0};
  return {p, e};
}

namespace {

// Polynomials over GF(p) packed in base p, least significant coefficient in
// the lowest digit.  Degrees stay tiny (q <= a few thousand), so plain
// digit juggling is fine.

std::vector<int> unpack(long long v, int p) {
  std::vector<int> c;
  while (v > 0) {
    c.push_back(static_cast<int>(v % p));
    v /= p;
  }
  return c;
}

long long pack(const std::vector<int>& c, int p) {
  long long v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

int poly_degree(const std::vector<int>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;
}

// a mod m over GF(p); m monic of degree e.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = poly_degree(m);
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int& t = a[i - dm + j];
      t = (t - c * m[j]) % p;
      if (t < 0) t += p;
    }
  }
  a.resize(dm);
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), m, p);
}

bool is_irreducible(const std::vector<int>& m, int p, int e) {
  // Degree <= 4 in practice (q <= 64 must be exact; larger q still works).
  // A monic polynomial of degree e is reducible iff it has a factor of degree
  // <= e/2; test by trial division with every monic polynomial of such degree.
  for (int df = 1; df * 2 <= e; ++df) {
    long long count = 1;
    for (int i = 0; i < df; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
      std::vector<int> f = unpack(low, p);
      f.resize(df + 1, 0);
      f[df] = 1;
      // Remainder of m / f: reuse poly_mod with a degree-df modulus.
      std::vector<int> rem = poly_mod(m, f, p);
      if (poly_degree(rem) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) {
  auto [p, e] = prime_power_split(q);
  if (p == 0)
    fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  q_ = q;
  p_ = p;
  e_ = e;

  std::vector<int> mod_poly;
  if (e_ == 1) {
    modulus_ = p_;
  } else {
    // Smallest packed monic irreducible of degree e (leading digit included
    // in the packed value, so candidates scan p^e .. 2*p^e - 1 in order).
    long long pe = 1;
    for (int i = 0; i < e_; ++i) pe *= p_;
    for (long long low = 0; low < pe; ++low) {
      std::vector<int> cand = unpack(low, p_);
      cand.resize(e_ + 1, 0);
      cand[e_] = 1;
      if (is_irreducible(cand, p_, e_)) {
        mod_poly = cand;
        modulus_ = pack(cand, p_);
        break;
      }
    }
    // A monic irreducible of every degree exists over every prime field.
  }

  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  if (e_ == 1) {
    for (int a = 0; a < q_; ++a) {
      neg_[a] = (q_ - a) % q_;
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = (a + b) % q_;
        mul_[a * q_ + b] = (a * b) % q_;
      }
    }
  } else {
    for (int a = 0; a < q_; ++a) {
      std::vector<int> ca = unpack(a, p_);
      ca.resize(e_, 0);
      std::vector<int> na(e_);
      for (int i = 0; i < e_; ++i) na[i] = (p_ - ca[i]) % p_;
      neg_[a] = static_cast<int>(pack(na, p_));
      for (int b = 0; b < q_; ++b) {
        std::vector<int> cb = unpack(b, p_);
        cb.resize(e_, 0);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = static_cast<int>(pack(s, p_));
        mul_[a * q_ + b] = static_cast<int>(pack(poly_mul_mod(ca, cb, mod_poly, p_), p_));
      }
    }
  }

  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

int FiniteField::pow(int a, long long n) const {
  check(a);
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  int r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotHadamard: return "NotHadamard";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadBijection: return "BadBijection";
    case ErrorKind::DiagonalViolation: return "DiagonalViolation";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NoPartition: return "NoPartition";
    case ErrorKind::NotSrg: return "NotSrg";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::WrongParameters: return "WrongParameters";
    case ErrorKind::NotGraphical: return "NotGraphical";
    case ErrorKind::NotRegularRows: return "NotRegularRows";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Error";
}

}  // namespace ddgraph
