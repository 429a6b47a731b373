#ifndef BCSURF_DIAMOND_HPP
#define BCSURF_DIAMOND_HPP

#include <map>
#include <string>
#include <vector>

#include "bcsurf/exact.hpp"

namespace bcs {

using Word = std::vector<int>;  // symbol indices into the alphabet
using LinComb = std::map<Word, Scalar>;

struct RewriteRule {
  Word lead;
  LinComb replacement;
};

struct InvalidSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnresolvableOverlap : std::runtime_error {
  Word word;
  LinComb difference;
  UnresolvableOverlap(Word w, LinComb d);
};
struct NonTerminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Strategy { Leftmost, Rightmost };

class RewriteSystem {
 public:
  // rank[s] is the position of symbol s in the order (0 = smallest)
  RewriteSystem(std::vector<std::string> names, std::vector<int> rank, std::vector<RewriteRule> rules);

  std::size_t alphabet_size() const { return names_.size(); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // degree-lexicographic comparison under the symbol order
  bool less(const Word& a, const Word& b) const;
  bool irreducible(const Word& w) const;
  LinComb normal_form(const LinComb& f, Strategy s = Strategy::Leftmost, long budget = 1000000) const;
  LinComb normal_form(const Word& w, Strategy s = Strategy::Leftmost) const;
  std::string str(const Word& w) const;
  std::string str(const LinComb& f) const;

 private:
  // index of the rule whose lead occurs at position p of w, or -1
  int rule_at(const Word& w, std::size_t p) const;
  std::vector<std::string> names_;
  std::vector<int> rank_;
  std::vector<RewriteRule> rules_;
};

struct OverlapReport {
  std::vector<Word> checked;
};
// every overlap abc with ab, bc leading words reduces to one normal form
OverlapReport resolve_overlaps(const RewriteSystem& sys);

std::vector<Word> irreducible_words(const RewriteSystem& sys, int n);
long irreducible_count(const RewriteSystem& sys, int n);

struct NormalFormTable {
  int degree = 0;
  std::vector<Word> irreducible;
  std::map<Word, LinComb> reduction;  // every word of the degree
};
NormalFormTable normal_form_table(const RewriteSystem& sys, int n);

// x1..x4 with x2 < x1 < x3 < x4 and the six binomial rules of the tau-one ring
RewriteSystem a_system();

}  // namespace bcs

#endif
