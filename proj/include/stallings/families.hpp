#ifndef STALLINGS_FAMILIES_HPP
#define STALLINGS_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "stallings/word.hpp"

namespace stallings {

// The two-generator alphabet every built-in family lives over.
Alphabet family_alphabet();

// Parameters selecting a member of the H family: rank m over F(a,b), paired
// against the rank-n K family, with 0 <= k <= m-2 and 0 <= l <= n-1.
struct FamilySpec {
  int m = 2;
  int n = 2;
  int k = 0;
  int l = 0;

  // Throws std::invalid_argument quoting the violated constraint.
  void validate() const;
};

// m generators over F(a,b): b^i a b^-i for 0 <= i <= k, then
// b^(k+1) a^(n-l) b^-(k+1), then b^i a^n b^-i for k+2 <= i <= m-1.
// The generated subgroup has rank exactly m.
std::vector<Word> family_H(const FamilySpec& spec);

// n generators a^i b a^-i for 0 <= i <= n-1; the subgroup has rank n.
std::vector<Word> family_K(int n);

// Rank of <family_H(spec)> intersected with <family_K(spec.n)>: k(n-1) + l.
int theorem_rank(const FamilySpec& spec);

// Generator lists whose subgroups have ranks m and n and whose intersection
// has the maximal achievable rank (m-1)(n-1) + 1.
std::pair<std::vector<Word>, std::vector<Word>> corollary_pair(int m, int n);

// Generator lists with component ranks m and n and intersection rank exactly
// N, for any 0 <= N <= (m-1)(n-1) + 1.
std::pair<std::vector<Word>, std::vector<Word>> achievable_pair(int m, int n, int N);

struct SweepCase {
  int m, n, k, l;
  int expected;  // k(n-1) + l
  int computed;  // rank of the constructed intersection
  int rank_h;    // computed rank of <family_H>, expected m
  int rank_k;    // computed rank of <family_K>, expected n
  bool pass;     // computed == expected && rank_h == m && rank_k == n
};

struct SweepReport {
  int m_max = 0;
  int n_max = 0;
  std::vector<SweepCase> cases;  // (m, n, k, l) lexicographic
  bool all_pass = false;

  // One line per case, columns m,n,k,l,expected,computed,pass.
  std::string to_csv() const;
  // Aggregate counts plus one line per failing case.
  std::string summary() const;
};

// Computes the intersection rank for every (m, n, k, l) with 2 <= m <= m_max,
// 2 <= n <= n_max and compares it to k(n-1) + l; also checks the component
// ranks. Mismatches become report entries, never exceptions.
SweepReport verify_theorem_sweep(int m_max, int n_max);

struct NeumannResult {
  int rank_h = 0;
  int rank_k = 0;
  int rank_intersection = 0;
  bool weak = false;    // rank(H/\K)-1 <= 2(rank H - 1)(rank K - 1)
  bool strong = false;  // rank(H/\K)-1 <=  (rank H - 1)(rank K - 1)
};

// Checks both Hanna Neumann bounds for a pair of nontrivial subgroups.
NeumannResult neumann_check(const std::vector<Word>& gens_h, const std::vector<Word>& gens_k,
                            const Alphabet& alphabet);

}  // namespace stallings

#endif  // STALLINGS_FAMILIES_HPP
