#include "monoidchar/class_functions.hpp"

#include "monoidchar/errors.hpp"

namespace monoidchar {

mpq_class reduce_into_field(const mpz_class& v, const FieldSpec& fs) {
  if (fs.characteristic == 0) return mpq_class(v);
  mpz_class r = v % fs.characteristic;
  if (r < 0) r += fs.characteristic;
  return mpq_class(r);
}

namespace {

void check_homomorphism(const MatrixRep& rep) {
  const FiniteMonoid& M = *rep.host;
  int d = rep.degree;
  long p = rep.field.characteristic;
  // identity image
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (rep.entry(M.identity, r, c) != (r == c ? 1 : 0))
        throw Error("representation does not map the identity to I");
  for (int a = 0; a < M.size; ++a)
    for (int b = 0; b < M.size; ++b) {
      int ab = M.mul(a, b);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          mpz_class acc = 0;
          for (int k = 0; k < d; ++k) acc += rep.entry(a, r, k) * rep.entry(b, k, c);
          if (p > 0) {
            acc %= p;
            if (acc < 0) acc += p;
          }
          if (acc != rep.entry(ab, r, c))
            throw Error("representation is not multiplicative at (" +
                        std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    }
}

}  // namespace

MatrixRep right_regular_rep(const FiniteMonoid& M, const FieldSpec& fs) {
  MatrixRep rep;
  rep.host = &M;
  rep.field = fs;
  rep.degree = M.size;
  rep.images.assign(M.size, std::vector<mpz_class>(static_cast<size_t>(M.size) * M.size, 0));
  for (int m = 0; m < M.size; ++m)
    for (int x = 0; x < M.size; ++x) rep.images[m][x * M.size + M.mul(x, m)] = 1;
  check_homomorphism(rep);
  return rep;
}

MatrixRep natural_rep(const FiniteMonoid& M, const FieldSpec& fs) {
  if (!M.has_transformations())
    throw NoTransformationData("monoid carries no transformation images");
  MatrixRep rep;
  rep.host = &M;
  rep.field = fs;
  rep.degree = M.degree;
  rep.images.assign(M.size,
                    std::vector<mpz_class>(static_cast<size_t>(M.degree) * M.degree, 0));
  for (int m = 0; m < M.size; ++m)
    for (int x = 0; x < M.degree; ++x) rep.images[m][x * M.degree + M.images[m][x]] = 1;
  check_homomorphism(rep);
  return rep;
}

ClassFunction natural_character(const FiniteMonoid& M, const FieldSpec& fs) {
  if (!M.has_transformations())
    throw NoTransformationData("monoid carries no transformation images");
  ClassFunction chi;
  chi.host = &M;
  chi.field = fs;
  chi.values.reserve(M.size);
  for (int m = 0; m < M.size; ++m) {
    mpz_class fixed = 0;
    for (int x = 0; x < M.degree; ++x)
      if (M.images[m][x] == x) ++fixed;
    chi.values.push_back(reduce_into_field(fixed, fs));
  }
  return chi;
}

ClassFunction char_of_rep(const MatrixRep& rep) {
  ClassFunction chi;
  chi.host = rep.host;
  chi.field = rep.field;
  chi.values.reserve(rep.host->size);
  for (int m = 0; m < rep.host->size; ++m) {
    mpz_class tr = 0;
    for (int r = 0; r < rep.degree; ++r) tr += rep.entry(m, r, r);
    chi.values.push_back(reduce_into_field(tr, rep.field));
  }
  return chi;
}

std::vector<IdentityViolationRecord> verify_character_identities(const ClassFunction& chi) {
  const FiniteMonoid& M = *chi.host;
  long p = chi.field.characteristic;
  long n = lcm_p_regular_orders(M, p);
  GaloisImage T = galois_image(chi.field, n);

  std::vector<IdentityViolationRecord> out;
  for (int a = 0; a < M.size; ++a)
    for (int b = 0; b < M.size; ++b)
      if (chi(M.mul(a, b)) != chi(M.mul(b, a)))
        out.push_back({"commutation", a, b, 0});
  for (int a = 0; a < M.size; ++a)
    if (chi(a) != chi(p_regular_part(M, a, p)))
      out.push_back({"p-part", a, 0, 0});
  for (int a = 0; a < M.size; ++a)
    if (is_p_regular(M, a, p))
      for (long j : T.members)
        if (chi(a) != chi(group_power(M, a, j)))
          out.push_back({"galois-twist", a, 0, j});
  return out;
}

std::vector<std::pair<int, mpq_class>> restrict_to_group(const ClassFunction& f, int e) {
  GroupView G = maximal_subgroup(*f.host, e);
  std::vector<std::pair<int, mpq_class>> out;
  out.reserve(G.elements.size());
  for (int g : G.elements) out.push_back({g, f(g)});
  return out;
}

std::string CyclicCounterexample::describe() const {
  if (kind == Kind::Power)
    return "power: m=" + std::to_string(m) + " s=" + std::to_string(s);
  return "commutation: m1=" + std::to_string(m1) + " m2=" + std::to_string(m2);
}

std::optional<CyclicCounterexample> cyclic_subset_check(const FiniteMonoid& M,
                                                        const std::vector<bool>& X) {
  // Condition i): powers of m repeat past index+period, so s up to that
  // bound covers all s > 0.
  for (int m = 0; m < M.size; ++m) {
    IndexPeriod ip = index_period(M, m);
    int cur = m;
    for (int s = 1; s <= ip.index + ip.period; ++s) {
      if (X[m] != X[cur]) {
        CyclicCounterexample ce;
        ce.kind = CyclicCounterexample::Kind::Power;
        ce.m = m;
        ce.s = s;
        return ce;
      }
      cur = M.mul(cur, m);
    }
  }
  for (int m1 = 0; m1 < M.size; ++m1)
    for (int m2 = 0; m2 < M.size; ++m2)
      if (X[M.mul(m1, m2)] != X[M.mul(m2, m1)]) {
        CyclicCounterexample ce;
        ce.kind = CyclicCounterexample::Kind::Commutation;
        ce.m1 = m1;
        ce.m2 = m2;
        return ce;
      }
  return std::nullopt;
}

VirtualCertificate indicator_virtual_certificate(const FiniteMonoid& M,
                                                 const std::vector<bool>& X,
                                                 const FieldSpec& fs) {
  if (auto ce = cyclic_subset_check(M, X))
    throw NotCyclic("subset is not cyclic: " + ce->describe());

  VirtualCertificate cert;
  cert.indicator.host = &M;
  cert.indicator.field = fs;
  for (int m = 0; m < M.size; ++m)
    cert.indicator.values.push_back(mpq_class(X[m] ? 1 : 0));

  EquivPartition P = equiv_closure(M, fs);
  for (const auto& cls : P.classes)
    for (int m : cls)
      if (X[m] != X[cls[0]])
        throw NotClassConstant("indicator varies on an equivalence class");

  cert.d_class_reps = d_class_idempotent_reps(M);
  for (int e : cert.d_class_reps) {
    GroupView G = maximal_subgroup(M, e);
    bool in = X[G.elements[0]];
    for (int g : G.elements)
      if (X[g] != in)
        throw NotClassConstant("maximal subgroup at " + std::to_string(e) +
                               " straddles the subset");
    cert.restriction_trivial.push_back(in);
  }
  return cert;
}

}  // namespace monoidchar
