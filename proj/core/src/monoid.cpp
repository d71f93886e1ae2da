#include "monoidchar/monoid.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "monoidchar/errors.hpp"

namespace monoidchar {

int FiniteMonoid::pow(int m, std::uint64_t e) const {
  int acc = identity;
  int base = m;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FiniteMonoid monoid_from_table(int size, const std::vector<std::vector<int>>& table_rows,
                               int identity) {
  if (size <= 0) throw IndexOutOfRange("monoid size must be positive");
  if (identity < 0 || identity >= size) throw IndexOutOfRange("identity index out of range");
  if (static_cast<int>(table_rows.size()) != size)
    throw IndexOutOfRange("table must have one row per element");

  FiniteMonoid M;
  M.size = size;
  M.identity = identity;
  M.table.resize(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    if (static_cast<int>(table_rows[a].size()) != size)
      throw IndexOutOfRange("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < size; ++b) {
      int v = table_rows[a][b];
      if (v < 0 || v >= size)
        throw IndexOutOfRange("table entry (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") out of range");
      M.table[a * size + b] = v;
    }
  }
  for (int a = 0; a < size; ++a)
    if (M.mul(identity, a) != a || M.mul(a, identity) != a) throw IdentityViolation(a);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c)))
          throw AssociativityViolation(a, b, c);
  return M;
}

FiniteMonoid monoid_from_transformations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         int size_cap) {
  if (degree <= 0) throw ImageOutOfRange("degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw ImageOutOfRange("generator has wrong arity");
    for (int v : g)
      if (v < 0 || v >= degree) throw ImageOutOfRange("generator image out of range");
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  // (f*g)(x) = g(f(x)): apply the left factor first.
  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(degree);
    for (int x = 0; x < degree; ++x) h[x] = g[f[x]];
    return h;
  };

  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> elems;
  auto intern = [&](const std::vector<int>& f) {
    auto [it, fresh] = index_of.emplace(f, static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(f);
      if (static_cast<int>(elems.size()) > size_cap)
        throw SizeLimitExceeded("transformation closure exceeds cap of " +
                                std::to_string(size_cap) + " elements");
    }
    return std::pair{it->second, fresh};
  };

  intern(id);
  std::deque<int> frontier{0};
  std::vector<std::vector<int>> gens = generators;
  for (const auto& g : gens) {
    auto [i, fresh] = intern(g);
    if (fresh) frontier.push_back(i);
  }
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      auto [j, fresh] = intern(compose(elems[i], g));
      if (fresh) frontier.push_back(j);
    }
  }

  int n = static_cast<int>(elems.size());
  FiniteMonoid M;
  M.size = n;
  M.identity = 0;
  M.degree = degree;
  M.images = elems;
  M.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      M.table[a * n + b] = index_of.at(compose(elems[a], elems[b]));
  return M;
}

IndexPeriod index_period(const FiniteMonoid& M, int m) {
  if (m < 0 || m >= M.size) throw IndexOutOfRange("element index out of range");
  std::vector<int> seen_at(M.size, -1);
  int cur = m;
  int k = 1;
  while (seen_at[cur] < 0) {
    seen_at[cur] = k;
    cur = M.mul(cur, m);
    ++k;
  }
  // cur = m^k repeats m^{seen_at[cur]}
  IndexPeriod ip;
  ip.index = seen_at[cur];
  ip.period = k - seen_at[cur];
  return ip;
}

int omega(const FiniteMonoid& M, int m) {
  IndexPeriod ip = index_period(M, m);
  int k = ip.period;
  while (k < ip.index) k += ip.period;
  return M.pow(m, static_cast<std::uint64_t>(k));
}

int omega_plus_one(const FiniteMonoid& M, int m) { return M.mul(omega(M, m), m); }

bool is_group_element(const FiniteMonoid& M, int m) { return omega_plus_one(M, m) == m; }

int group_order(const FiniteMonoid& M, int m) {
  if (!is_group_element(M, m)) throw NotGroupElement(m);
  int e = omega(M, m);
  int cur = m;
  int s = 1;
  while (cur != e) {
    cur = M.mul(cur, m);
    ++s;
  }
  return s;
}

bool is_p_regular(const FiniteMonoid& M, int m, long p) {
  if (!is_group_element(M, m)) return false;
  return p == 0 || group_order(M, m) % p != 0;
}

int p_regular_part(const FiniteMonoid& M, int m, long p) {
  int g = omega_plus_one(M, m);
  if (p == 0) return g;
  long order = group_order(M, g);
  long pk = 1;
  long t = order;
  while (t % p == 0) {
    t /= p;
    pk *= p;
  }
  if (pk == 1) return g;
  // z = 1 mod t, z = 0 mod p^k
  long z = 0;
  while (z % t != 1 % t) z += pk;
  if (t == 1) z = pk;
  return M.pow(g, static_cast<std::uint64_t>(z));
}

int group_power(const FiniteMonoid& M, int g, long j) {
  long ord = group_order(M, g);
  long z = j % ord;
  if (z < 0) z += ord;
  if (z == 0) z = ord;
  return M.pow(g, static_cast<std::uint64_t>(z));
}

std::vector<int> idempotents(const FiniteMonoid& M) {
  std::vector<int> out;
  for (int e = 0; e < M.size; ++e)
    if (M.mul(e, e) == e) out.push_back(e);
  return out;
}

std::vector<int> principal_ideal(const FiniteMonoid& M, int m) {
  std::vector<char> in(M.size, 0);
  std::vector<int> out;
  for (int a = 0; a < M.size; ++a) {
    int am = M.mul(a, m);
    for (int b = 0; b < M.size; ++b) {
      int v = M.mul(am, b);
      if (!in[v]) {
        in[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<int, int>> d_equivalent(const FiniteMonoid& M, int e, int f) {
  if (M.mul(e, e) != e) throw NotIdempotent(e);
  if (M.mul(f, f) != f) throw NotIdempotent(f);
  for (int x = 0; x < M.size; ++x) {
    if (M.mul(e, x) != x || M.mul(x, f) != x) continue;  // x = ex = xf is forced
    for (int y = 0; y < M.size; ++y) {
      if (M.mul(x, M.mul(y, x)) == x && M.mul(y, M.mul(x, y)) == y &&
          M.mul(x, y) == e && M.mul(y, x) == f)
        return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::vector<int> d_class_idempotent_reps(const FiniteMonoid& M) {
  std::vector<int> es = idempotents(M);
  std::vector<std::vector<int>> ideals;
  ideals.reserve(es.size());
  for (int e : es) ideals.push_back(principal_ideal(M, e));

  std::vector<int> reps;
  std::vector<std::vector<int>> rep_ideals;
  for (size_t i = 0; i < es.size(); ++i) {
    bool fresh = true;
    for (const auto& known : rep_ideals)
      if (known == ideals[i]) {
        fresh = false;
        break;
      }
    if (fresh) {
      reps.push_back(es[i]);
      rep_ideals.push_back(ideals[i]);
    }
  }
  // stable sort by ideal size; idempotents come out smallest-index first
  // within a size class, and the identity (full ideal) lands last.
  std::vector<size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (rep_ideals[a].size() != rep_ideals[b].size())
      return rep_ideals[a].size() < rep_ideals[b].size();
    return reps[a] < reps[b];
  });
  std::vector<int> out;
  for (size_t i : order) out.push_back(reps[i]);
  return out;
}

GroupView maximal_subgroup(const FiniteMonoid& M, int e) {
  if (M.mul(e, e) != e) throw NotIdempotent(e);
  std::vector<int> local;
  for (int m = 0; m < M.size; ++m)
    if (M.mul(e, m) == m && M.mul(m, e) == m) local.push_back(m);

  GroupView G;
  G.host = &M;
  G.idempotent = e;
  for (int g : local) {
    // g is a unit of eMe iff some h in eMe has gh = e = hg
    for (int h : local) {
      if (M.mul(g, h) == e && M.mul(h, g) == e) {
        G.elements.push_back(g);
        G.inverse_map[g] = h;
        break;
      }
    }
  }
  std::sort(G.elements.begin(), G.elements.end());
  return G;
}

GroupIsomorphism group_isomorphism_from_witness(const FiniteMonoid& M, int x, int y) {
  if (M.mul(M.mul(x, y), x) != x || M.mul(M.mul(y, x), y) != y)
    throw WitnessInvalid("(x, y) fails xyx=x or yxy=y");
  return GroupIsomorphism{&M, x, y};
}

namespace {

int next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return 1;
  }
  return 0;
}

}  // namespace

FiniteMonoid parse_monoid(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "empty input");
  std::istringstream head(line);
  std::string kind;
  head >> kind;
  if (kind == "monoid") {
    int size, identity;
    if (!(head >> size >> identity)) throw ParseError(lineno, "expected 'monoid <size> <identity>'");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < size; ++r) {
      if (!next_data_line(in, line, lineno))
        throw ParseError(lineno, "missing table row " + std::to_string(r));
      std::istringstream row(line);
      std::vector<int> vals;
      int v;
      while (row >> v) vals.push_back(v);
      if (static_cast<int>(vals.size()) != size)
        throw ParseError(lineno, "table row has " + std::to_string(vals.size()) +
                                     " entries, expected " + std::to_string(size));
      rows.push_back(std::move(vals));
    }
    return monoid_from_table(size, rows, identity);
  }
  if (kind == "transformations") {
    int degree;
    if (!(head >> degree)) throw ParseError(lineno, "expected 'transformations <degree>'");
    std::vector<std::vector<int>> gens;
    while (next_data_line(in, line, lineno)) {
      std::istringstream row(line);
      std::vector<int> vals;
      int v;
      while (row >> v) vals.push_back(v);
      if (static_cast<int>(vals.size()) != degree)
        throw ParseError(lineno, "generator has " + std::to_string(vals.size()) +
                                     " images, expected " + std::to_string(degree));
      gens.push_back(std::move(vals));
    }
    return monoid_from_transformations(degree, gens);
  }
  throw ParseError(lineno, "unknown header '" + kind + "'");
}

FiniteMonoid parse_monoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_monoid(in);
}

}  // namespace monoidchar
