#include "monoidchar/language.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "monoidchar/errors.hpp"

namespace monoidchar {

bool Dfa::accepts(const std::vector<int>& word) const {
  int s = initial;
  for (int sym : word) s = step(s, sym);
  return accepting[s];
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

Dfa parse_dfa(std::istream& in) {
  std::string line;
  int lineno = 0;
  Dfa dfa;

  if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "empty input");
  {
    std::istringstream head(line);
    std::string kw;
    head >> kw;
    if (kw != "dfa" || !(head >> dfa.states >> dfa.initial))
      throw ParseError(lineno, "expected 'dfa <states> <initial>'");
    if (dfa.states <= 0) throw ParseError(lineno, "state count must be positive");
    if (dfa.initial < 0 || dfa.initial >= dfa.states)
      throw ParseError(lineno, "initial state out of range");
  }

  if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing 'accept' line");
  {
    std::istringstream head(line);
    std::string kw;
    head >> kw;
    if (kw != "accept") throw ParseError(lineno, "expected 'accept <states>'");
    dfa.accepting.assign(dfa.states, false);
    int s;
    while (head >> s) {
      if (s < 0 || s >= dfa.states) throw ParseError(lineno, "accepting state out of range");
      dfa.accepting[s] = true;
    }
  }

  if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing 'alphabet' line");
  std::map<std::string, int> symbol_index;
  {
    std::istringstream head(line);
    std::string kw;
    head >> kw;
    if (kw != "alphabet") throw ParseError(lineno, "expected 'alphabet <symbols>'");
    std::string sym;
    while (head >> sym) {
      if (symbol_index.count(sym)) throw ParseError(lineno, "duplicate symbol '" + sym + "'");
      symbol_index[sym] = static_cast<int>(dfa.alphabet.size());
      dfa.alphabet.push_back(sym);
    }
    if (dfa.alphabet.empty()) throw ParseError(lineno, "alphabet is empty");
  }

  int k = static_cast<int>(dfa.alphabet.size());
  dfa.delta.assign(static_cast<size_t>(dfa.states) * k, -1);
  while (next_data_line(in, line, lineno)) {
    std::istringstream row(line);
    std::string state_tok;
    row >> state_tok;
    if (state_tok.empty() || state_tok.back() != ':')
      throw ParseError(lineno, "expected '<state>:'");
    int s;
    try {
      s = std::stoi(state_tok.substr(0, state_tok.size() - 1));
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "bad state label '" + state_tok + "'");
    }
    if (s < 0 || s >= dfa.states) throw ParseError(lineno, "state out of range");
    std::string arrow;
    while (row >> arrow) {
      auto pos = arrow.find("->");
      if (pos == std::string::npos)
        throw ParseError(lineno, "expected '<symbol>-><state>', got '" + arrow + "'");
      std::string sym = arrow.substr(0, pos);
      auto it = symbol_index.find(sym);
      if (it == symbol_index.end()) throw ParseError(lineno, "unknown symbol '" + sym + "'");
      int target;
      try {
        target = std::stoi(arrow.substr(pos + 2));
      } catch (const std::logic_error&) {
        throw ParseError(lineno, "bad target in '" + arrow + "'");
      }
      if (target < 0 || target >= dfa.states)
        throw ParseError(lineno, "target state out of range");
      dfa.delta[s * k + it->second] = target;
    }
  }
  for (int s = 0; s < dfa.states; ++s)
    for (int a = 0; a < k; ++a)
      if (dfa.delta[s * k + a] < 0)
        throw PartialTransition("no transition from state " + std::to_string(s) +
                                " on symbol '" + dfa.alphabet[a] + "'");
  return dfa;
}

Dfa parse_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_dfa(in);
}

std::string TransitionMonoid::word_string(const Dfa& dfa, int element) const {
  const auto& w = witness_word[element];
  if (w.empty()) return "<empty word>";
  std::string out;
  for (int sym : w) out += dfa.alphabet[sym];
  return out;
}

TransitionMonoid transition_monoid(const Dfa& dfa, int size_cap) {
  int k = static_cast<int>(dfa.alphabet.size());
  std::vector<std::vector<int>> letters(k, std::vector<int>(dfa.states));
  for (int a = 0; a < k; ++a)
    for (int s = 0; s < dfa.states; ++s) letters[a][s] = dfa.step(s, a);

  TransitionMonoid tm;
  tm.monoid = monoid_from_transformations(dfa.states, letters, size_cap);

  std::map<std::vector<int>, int> index_of;
  for (int m = 0; m < tm.monoid.size; ++m) index_of[tm.monoid.images[m]] = m;
  tm.letter_map.resize(k);
  for (int a = 0; a < k; ++a) tm.letter_map[a] = index_of.at(letters[a]);

  tm.subset.resize(tm.monoid.size);
  for (int m = 0; m < tm.monoid.size; ++m)
    tm.subset[m] = dfa.accepting[tm.monoid.images[m][dfa.initial]];

  // shortest word per element, BFS from the identity
  tm.witness_word.assign(tm.monoid.size, {});
  std::vector<char> seen(tm.monoid.size, 0);
  std::deque<int> frontier{tm.monoid.identity};
  seen[tm.monoid.identity] = 1;
  while (!frontier.empty()) {
    int m = frontier.front();
    frontier.pop_front();
    for (int a = 0; a < k; ++a) {
      int next = tm.monoid.mul(m, tm.letter_map[a]);
      if (!seen[next]) {
        seen[next] = 1;
        tm.witness_word[next] = tm.witness_word[m];
        tm.witness_word[next].push_back(a);
        frontier.push_back(next);
      }
    }
  }
  return tm;
}

CyclicVerdict is_cyclic_language(const Dfa& dfa) {
  TransitionMonoid tm = transition_monoid(dfa);
  CyclicVerdict v;
  v.counterexample = cyclic_subset_check(tm.monoid, tm.subset);
  v.cyclic = !v.counterexample.has_value();
  if (!v.cyclic) {
    const auto& ce = *v.counterexample;
    if (ce.kind == CyclicCounterexample::Kind::Power)
      v.word_counterexample =
          "u=" + tm.word_string(dfa, ce.m) + " s=" + std::to_string(ce.s);
    else
      v.word_counterexample = "u=" + tm.word_string(dfa, ce.m1) +
                              " v=" + tm.word_string(dfa, ce.m2);
  }
  return v;
}

mpz_class word_count(const Dfa& dfa, int n) {
  int d = dfa.states;
  int k = static_cast<int>(dfa.alphabet.size());
  std::vector<mpz_class> A(static_cast<size_t>(d) * d, 0);
  for (int s = 0; s < d; ++s)
    for (int a = 0; a < k; ++a) A[s * d + dfa.step(s, a)] += 1;

  // row vector from the initial state times A^n
  std::vector<mpz_class> row(d, 0);
  row[dfa.initial] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<mpz_class> next(d, 0);
    for (int s = 0; s < d; ++s) {
      if (row[s] == 0) continue;
      for (int t = 0; t < d; ++t)
        if (A[s * d + t] != 0) next[t] += row[s] * A[s * d + t];
    }
    row = std::move(next);
  }
  mpz_class total = 0;
  for (int t = 0; t < d; ++t)
    if (dfa.accepting[t]) total += row[t];
  return total;
}

ZetaSeries zeta_from_counts(const std::vector<mpz_class>& counts) {
  int N = static_cast<int>(counts.size());
  ZetaSeries z;
  z.word_counts = counts;
  z.coefficients.assign(N + 1, mpq_class(0));
  z.coefficients[0] = 1;
  // c_k = (1/k) sum_{m=1..k} a_m c_{k-m}
  for (int k = 1; k <= N; ++k) {
    mpq_class acc = 0;
    for (int m = 1; m <= k; ++m) acc += mpq_class(counts[m - 1]) * z.coefficients[k - m];
    z.coefficients[k] = acc / k;
  }
  return z;
}

ZetaSeries zeta_truncated(const Dfa& dfa, int N) {
  std::vector<mpz_class> counts;
  counts.reserve(N);
  for (int n = 1; n <= N; ++n) counts.push_back(word_count(dfa, n));
  return zeta_from_counts(counts);
}

namespace {

// Solves rows * q = rhs over Q by Gaussian elimination; returns any solution
// or nullopt if inconsistent.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> rows,
                                            std::vector<mpq_class> rhs) {
  size_t m = rows.size();
  size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[sel], rows[r]);
    std::swap(rhs[sel], rhs[r]);
    mpq_class inv = 1 / rows[r][c];
    for (size_t cc = c; cc < n; ++cc) rows[r][cc] *= inv;
    rhs[r] *= inv;
    for (size_t rr = 0; rr < m; ++rr) {
      if (rr == r || rows[rr][c] == 0) continue;
      mpq_class f = rows[rr][c];
      for (size_t cc = c; cc < n; ++cc) rows[rr][cc] -= f * rows[r][cc];
      rhs[rr] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t rr = r; rr < m; ++rr)
    if (rhs[rr] != 0) return std::nullopt;
  std::vector<mpq_class> sol(n, mpq_class(0));  // free variables at 0
  for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = rhs[i];
  return sol;
}

}  // namespace

std::optional<RationalFunction> rational_reconstruct(const ZetaSeries& series, int dmax) {
  int N = static_cast<int>(series.coefficients.size()) - 1;
  if (N < 2 * dmax)
    throw InsufficientCoefficients("need at least " + std::to_string(2 * dmax + 1) +
                                   " coefficients, have " + std::to_string(N + 1));
  const auto& c = series.coefficients;

  for (int d = 0; d <= dmax; ++d) {
    // unknowns q_1..q_d with c_k + sum q_i c_{k-i} = 0 for k > d
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    for (int k = d + 1; k <= N; ++k) {
      std::vector<mpq_class> row(d);
      for (int i = 1; i <= d; ++i) row[i - 1] = c[k - i];
      rows.push_back(std::move(row));
      rhs.push_back(-c[k]);
    }
    auto q = solve(std::move(rows), std::move(rhs));
    if (!q) continue;

    Polynomial Q;
    Q.coeffs.assign(d + 1, mpq_class(0));
    Q.coeffs[0] = 1;
    for (int i = 1; i <= d; ++i) Q.coeffs[i] = (*q)[i - 1];
    Q.trim();
    Polynomial P;
    P.coeffs.assign(d + 1, mpq_class(0));
    for (int k = 0; k <= d; ++k) {
      mpq_class acc = c[k];
      for (int i = 1; i <= std::min(k, d); ++i) acc += Q.at(i) * c[k - i];
      P.coeffs[k] = acc;
    }
    P.trim();

    RationalFunction f = RationalFunction::normalized(std::move(P), std::move(Q));
    // certificate: the expansion must reproduce every available coefficient
    std::vector<mpq_class> expansion = f.series(N);
    bool ok = true;
    for (int k = 0; k <= N && ok; ++k) ok = (expansion[k] == c[k]);
    if (ok) return f;
  }
  return std::nullopt;
}

ZetaReport zeta_report(const Dfa& dfa, const std::vector<FieldSpec>& fields, int N,
                       int dmax) {
  if (dmax <= 0) dmax = dfa.states;

  ZetaReport rep;
  TransitionMonoid tm = transition_monoid(dfa);
  rep.monoid_size = tm.monoid.size;
  rep.verdict = is_cyclic_language(dfa);
  rep.fields = fields;
  if (rep.verdict.cyclic)
    for (const auto& fs : fields)
      rep.certificates.push_back(indicator_virtual_certificate(tm.monoid, tm.subset, fs));

  if (N < 2 * dmax) N = 2 * dmax;  // keep reconstruction feasible
  rep.series = zeta_truncated(dfa, N);
  rep.dmax_used = dmax;
  rep.zeta = rational_reconstruct(rep.series, dmax);
  if (!rep.zeta) {
    int retry = 2 * dmax;
    if (N < 2 * retry) {
      N = 2 * retry;
      rep.series = zeta_truncated(dfa, N);
    }
    rep.dmax_used = retry;
    rep.zeta = rational_reconstruct(rep.series, retry);
  }
  rep.undetermined = !rep.zeta.has_value();
  return rep;
}

}  // namespace monoidchar
