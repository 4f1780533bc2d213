#include "stallings/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stallings/graph.hpp"
#include "stallings/pullback.hpp"

namespace stallings {

Alphabet family_alphabet() { return Alphabet("ab"); }

void FamilySpec::validate() const {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("family parameters require m >= 2 and n >= 2, got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  }
  if (k < 0 || k > m - 2 || l < 0 || l > n - 1) {
    throw std::invalid_argument("family parameters must satisfy 0 <= k <= m-2, 0 <= l <= n-1; got k=" +
                                std::to_string(k) + ", l=" + std::to_string(l) + " with m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  }
}

namespace {

Word gen_a() { return parse_word("a", family_alphabet()); }
Word gen_b() { return parse_word("b", family_alphabet()); }

}  // namespace

std::vector<Word> family_H(const FamilySpec& spec) {
  spec.validate();
  const Word a = gen_a(), b = gen_b();
  std::vector<Word> gens;
  gens.reserve(static_cast<std::size_t>(spec.m));
  for (int i = 0; i <= spec.k; ++i) {
    gens.push_back(conjugate(a, power(b, i)));
  }
  gens.push_back(conjugate(power(a, spec.n - spec.l), power(b, spec.k + 1)));
  for (int i = spec.k + 2; i <= spec.m - 1; ++i) {
    gens.push_back(conjugate(power(a, spec.n), power(b, i)));
  }
  return gens;
}

std::vector<Word> family_K(int n) {
  if (n < 2) throw std::invalid_argument("family K requires n >= 2, got n=" + std::to_string(n));
  const Word a = gen_a(), b = gen_b();
  std::vector<Word> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i <= n - 1; ++i) {
    gens.push_back(conjugate(b, power(a, i)));
  }
  return gens;
}

int theorem_rank(const FamilySpec& spec) {
  spec.validate();
  return spec.k * (spec.n - 1) + spec.l;
}

std::pair<std::vector<Word>, std::vector<Word>> corollary_pair(int m, int n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("corollary pair requires m >= 2 and n >= 2, got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  }
  const Word a = gen_a(), b = gen_b();
  std::vector<Word> gens_h, gens_k;
  for (int i = 0; i <= m - 2; ++i) gens_h.push_back(conjugate(a, power(b, i)));
  gens_h.push_back(power(b, m - 1));
  for (int i = 0; i <= n - 2; ++i) gens_k.push_back(conjugate(b, power(a, i)));
  gens_k.push_back(power(a, n - 1));
  return {std::move(gens_h), std::move(gens_k)};
}

std::pair<std::vector<Word>, std::vector<Word>> achievable_pair(int m, int n, int N) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("achievable pair requires m >= 2 and n >= 2, got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  }
  const int max_rank = (m - 1) * (n - 1) + 1;
  if (N < 0 || N > max_rank) {
    throw std::invalid_argument("target rank must satisfy 0 <= N <= (m-1)(n-1)+1 = " +
                                std::to_string(max_rank) + ", got N=" + std::to_string(N));
  }
  if (N == max_rank) return corollary_pair(m, n);
  const int k = std::min(m - 2, N / (n - 1));
  const int l = N - k * (n - 1);
  const FamilySpec spec{m, n, k, l};
  return {family_H(spec), family_K(n)};
}

SweepReport verify_theorem_sweep(int m_max, int n_max) {
  if (m_max < 2 || n_max < 2) {
    throw std::invalid_argument("sweep requires m_max >= 2 and n_max >= 2");
  }
  const Alphabet ab = family_alphabet();
  SweepReport report;
  report.m_max = m_max;
  report.n_max = n_max;
  report.all_pass = true;
  for (int m = 2; m <= m_max; ++m) {
    for (int n = 2; n <= n_max; ++n) {
      const StallingsGraph gk = subgroup(family_K(n), ab);
      const int rank_k = rank(gk);
      for (int k = 0; k <= m - 2; ++k) {
        for (int l = 0; l <= n - 1; ++l) {
          const FamilySpec spec{m, n, k, l};
          const StallingsGraph gh = subgroup(family_H(spec), ab);
          SweepCase c{m, n, k, l, theorem_rank(spec), rank(pullback(gh, gk)),
                      rank(gh), rank_k, false};
          c.pass = c.computed == c.expected && c.rank_h == m && c.rank_k == n;
          report.all_pass = report.all_pass && c.pass;
          report.cases.push_back(c);
        }
      }
    }
  }
  return report;
}

std::string SweepReport::to_csv() const {
  std::ostringstream os;
  os << "m,n,k,l,expected,computed,pass\n";
  for (const SweepCase& c : cases) {
    os << c.m << ',' << c.n << ',' << c.k << ',' << c.l << ',' << c.expected << ',' << c.computed
       << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const SweepCase& c : cases) passed += c.pass ? 1 : 0;
  os << "intersection rank sweep (2<=m<=" << m_max << ", 2<=n<=" << n_max << "): " << cases.size()
     << " cases, " << passed << " pass, " << cases.size() - passed << " fail\n";
  for (const SweepCase& c : cases) {
    if (c.pass) continue;
    os << "  m=" << c.m << " n=" << c.n << " k=" << c.k << " l=" << c.l << ": expected "
       << c.expected << ", computed " << c.computed << " (rank H " << c.rank_h << "/" << c.m
       << ", rank K " << c.rank_k << "/" << c.n << ")\n";
  }
  return os.str();
}

NeumannResult neumann_check(const std::vector<Word>& gens_h, const std::vector<Word>& gens_k,
                            const Alphabet& alphabet) {
  const StallingsGraph gh = subgroup(gens_h, alphabet);
  const StallingsGraph gk = subgroup(gens_k, alphabet);
  NeumannResult res;
  res.rank_h = rank(gh);
  res.rank_k = rank(gk);
  if (res.rank_h < 1 || res.rank_k < 1) {
    throw std::invalid_argument("neumann_check: both subgroups must be nontrivial");
  }
  res.rank_intersection = rank(pullback(gh, gk));
  const int product = (res.rank_h - 1) * (res.rank_k - 1);
  res.weak = res.rank_intersection - 1 <= 2 * product;
  res.strong = res.rank_intersection - 1 <= product;
  return res;
}

}  // namespace stallings
