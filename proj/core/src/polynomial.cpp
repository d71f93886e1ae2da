#include "monoidchar/polynomial.hpp"

#include <sstream>

#include "monoidchar/errors.hpp"

namespace monoidchar {

Polynomial Polynomial::constant(const mpq_class& v) {
  Polynomial p;
  if (v != 0) p.coeffs = {v};
  return p;
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

mpq_class Polynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  Polynomial out;
  out.coeffs.assign(coeffs.size() + rhs.coeffs.size() - 1, mpq_class(0));
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs.size(); ++j)
      out.coeffs[i + j] += coeffs[i] * rhs.coeffs[j];
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  if (out.coeffs.size() < rhs.coeffs.size()) out.coeffs.resize(rhs.coeffs.size(), mpq_class(0));
  for (size_t i = 0; i < rhs.coeffs.size(); ++i) out.coeffs[i] -= rhs.coeffs[i];
  out.trim();
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const mpq_class& c = coeffs[k];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && k > 0;
    if (!unit) os << a.get_str();
    if (k >= 1) {
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    mpq_class q = r.coeffs.back() / b.coeffs.back();
    int shift = r.degree() - b.degree();
    for (size_t i = 0; i < b.coeffs.size(); ++i)
      r.coeffs[shift + i] -= q * b.coeffs[i];
    r.trim();
  }
  return r;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    mpq_class lead = a.coeffs.back();
    for (auto& c : a.coeffs) c /= lead;
  }
  return a;
}

RationalFunction RationalFunction::normalized(Polynomial p, Polynomial q) {
  if (q.at(0) == 0) throw Error("denominator must be nonzero at 0");
  Polynomial g = poly_gcd(p, q);
  if (g.degree() > 0) {
    // exact division by the gcd
    auto divide = [&](const Polynomial& f) {
      Polynomial quot;
      Polynomial rem = f;
      quot.coeffs.assign(std::max(0, f.degree() - g.degree() + 1), mpq_class(0));
      while (!rem.is_zero() && rem.degree() >= g.degree()) {
        mpq_class c = rem.coeffs.back() / g.coeffs.back();
        int shift = rem.degree() - g.degree();
        quot.coeffs[shift] = c;
        for (size_t i = 0; i < g.coeffs.size(); ++i)
          rem.coeffs[shift + i] -= c * g.coeffs[i];
        rem.trim();
      }
      quot.trim();
      return quot;
    };
    p = divide(p);
    q = divide(q);
  }
  mpq_class q0 = q.at(0);
  for (auto& c : p.coeffs) c /= q0;
  for (auto& c : q.coeffs) c /= q0;
  return RationalFunction{std::move(p), std::move(q)};
}

std::vector<mpq_class> RationalFunction::series(int N) const {
  std::vector<mpq_class> out(N + 1, mpq_class(0));
  // c_k = (P_k - sum_{i=1..k} Q_i c_{k-i}) / Q_0, with Q_0 = 1
  for (int k = 0; k <= N; ++k) {
    mpq_class acc = numerator.at(k);
    for (int i = 1; i <= std::min(k, denominator.degree()); ++i)
      acc -= denominator.at(i) * out[k - i];
    out[k] = acc;
  }
  return out;
}

std::string RationalFunction::to_string() const {
  return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
}

}  // namespace monoidchar
