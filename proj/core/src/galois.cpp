#include "monoidchar/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monoidchar/errors.hpp"

namespace monoidchar {

FieldSpec FieldSpec::algebraically_closed(long p) {
  return FieldSpec{Kind::AlgebraicallyClosed, p, 0};
}

FieldSpec FieldSpec::rationals() { return FieldSpec{Kind::Rationals, 0, 0}; }

FieldSpec FieldSpec::finite_field(long q) {
  if (q < 2) throw UnsupportedField("finite field order must be at least 2");
  long p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  long r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw UnsupportedField(std::to_string(q) + " is not a prime power");
  return FieldSpec{Kind::FiniteField, p, q};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  try {
    if (text == "Q") return rationals();
    if (text.size() >= 3 && text[0] == 'A' && text[1] == 'C')
      return algebraically_closed(std::stol(text.substr(2)));
    if (text.size() >= 2 && text[0] == 'F') return finite_field(std::stol(text.substr(1)));
  } catch (const std::logic_error&) {
  }
  throw UnsupportedField("unrecognized field spec '" + text +
                         "' (expected Q, F<q>, AC0 or AC<p>)");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::Rationals:
      return "Q";
    case Kind::FiniteField:
      return "F" + std::to_string(order);
    case Kind::AlgebraicallyClosed:
      return "AC" + std::to_string(characteristic);
  }
  return "?";
}

bool GaloisImage::contains(long j) const {
  long r = j % modulus;
  if (r < 0) r += modulus;
  return std::binary_search(members.begin(), members.end(), r);
}

long lcm_p_regular_orders(const FiniteMonoid& M, long p) {
  long n = 1;
  for (int m = 0; m < M.size; ++m)
    if (is_p_regular(M, m, p)) n = std::lcm(n, static_cast<long>(group_order(M, m)));
  return n;
}

GaloisImage galois_image(const FieldSpec& fs, long n) {
  GaloisImage T;
  T.modulus = n;
  switch (fs.kind) {
    case FieldSpec::Kind::AlgebraicallyClosed:
      T.members = {1 % n};
      break;
    case FieldSpec::Kind::Rationals:
      for (long j = 1 % n; j < n; ++j)
        if (std::gcd(j, n) == 1) T.members.push_back(j);
      if (n == 1) T.members = {0};
      break;
    case FieldSpec::Kind::FiniteField: {
      if (std::gcd(fs.order % n == 0 && n == 1 ? 1 : fs.order, n) != 1)
        throw NotCoprime("field order " + std::to_string(fs.order) +
                         " shares a factor with n = " + std::to_string(n));
      std::set<long> gen;
      long cur = 1 % n;
      long q = fs.order % n;
      do {
        gen.insert(cur);
        cur = (cur * q) % n;
      } while (!gen.count(cur));
      T.members.assign(gen.begin(), gen.end());
      break;
    }
  }
  std::sort(T.members.begin(), T.members.end());
  return T;
}

GaloisImage galois_image_reduce(const GaloisImage& T_at_t, long t, long n) {
  if (t % n != 0)
    throw NotDivisor(std::to_string(n) + " does not divide " + std::to_string(t));
  std::set<long> reduced;
  for (long j : T_at_t.members) reduced.insert(j % n);
  GaloisImage T;
  T.modulus = n;
  T.members.assign(reduced.begin(), reduced.end());
  return T;
}

}  // namespace monoidchar
