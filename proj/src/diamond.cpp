#include "bcsurf/diamond.hpp"

#include <algorithm>
#include <set>

namespace bcs {

namespace {

void add_to(LinComb& f, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = f.find(w);
  if (it == f.end()) {
    f.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

}  // namespace

UnresolvableOverlap::UnresolvableOverlap(Word w, LinComb d)
    : std::runtime_error("overlap does not resolve"), word(std::move(w)), difference(std::move(d)) {}

RewriteSystem::RewriteSystem(std::vector<std::string> names, std::vector<int> rank, std::vector<RewriteRule> rules)
    : names_(std::move(names)), rank_(std::move(rank)), rules_(std::move(rules)) {
  if (rank_.size() != names_.size()) throw InvalidSystem("rank list does not match the alphabet");
  std::set<Word> leads;
  for (const auto& r : rules_) {
    for (int s : r.lead)
      if (s < 0 || s >= static_cast<int>(names_.size())) throw InvalidSystem("symbol out of range");
    if (!leads.insert(r.lead).second) throw InvalidSystem("repeated leading word " + str(r.lead));
    for (const auto& [w, c] : r.replacement)
      if (!less(w, r.lead)) throw InvalidSystem("rule for " + str(r.lead) + " does not decrease");
  }
}

bool RewriteSystem::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  return false;
}

int RewriteSystem::rule_at(const Word& w, std::size_t p) const {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const Word& l = rules_[k].lead;
    if (p + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(p)))
      return static_cast<int>(k);
  }
  return -1;
}

bool RewriteSystem::irreducible(const Word& w) const {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (rule_at(w, p) >= 0) return false;
  return true;
}

LinComb RewriteSystem::normal_form(const LinComb& f, Strategy s, long budget) const {
  LinComb cur = f;
  LinComb done;
  long steps = 0;
  while (!cur.empty()) {
    auto it = cur.begin();
    Word w = it->first;
    Scalar c = it->second;
    cur.erase(it);
    int rule = -1;
    std::size_t pos = 0;
    if (s == Strategy::Leftmost) {
      for (pos = 0; pos < w.size() && (rule = rule_at(w, pos)) < 0; ++pos) {
      }
    } else {
      for (std::size_t q = w.size(); q-- > 0;)
        if ((rule = rule_at(w, q)) >= 0) {
          pos = q;
          break;
        }
    }
    if (rule < 0) {
      add_to(done, w, c);
      continue;
    }
    if (++steps > budget) throw NonTerminating("normal form: step budget exhausted");
    const RewriteRule& r = rules_[static_cast<std::size_t>(rule)];
    for (const auto& [rw, rc] : r.replacement) {
      Word nw(w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos + r.lead.size()), w.end());
      add_to(cur, nw, c * rc);
    }
  }
  return done;
}

LinComb RewriteSystem::normal_form(const Word& w, Strategy s) const { return normal_form(LinComb{{w, Scalar(1)}}, s); }

std::string RewriteSystem::str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) s += names_[static_cast<std::size_t>(x)];
  return s;
}

std::string RewriteSystem::str(const LinComb& f) const {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : f) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + str(w);
  }
  return s;
}

OverlapReport resolve_overlaps(const RewriteSystem& sys) {
  OverlapReport rep;
  for (const auto& r1 : sys.rules())
    for (const auto& r2 : sys.rules()) {
      // suffix of r1.lead equal to prefix of r2.lead, proper overlaps only
      const std::size_t a = r1.lead.size(), b = r2.lead.size();
      for (std::size_t k = 1; k < std::min(a, b); ++k) {
        if (!std::equal(r1.lead.end() - static_cast<long>(k), r1.lead.end(), r2.lead.begin())) continue;
        Word w = r1.lead;
        w.insert(w.end(), r2.lead.begin() + static_cast<long>(k), r2.lead.end());
        // reduce the left factor first, then the right one
        LinComb left, right;
        for (const auto& [rw, rc] : r1.replacement) {
          Word nw = rw;
          nw.insert(nw.end(), w.begin() + static_cast<long>(a), w.end());
          add_to(left, nw, rc);
        }
        for (const auto& [rw, rc] : r2.replacement) {
          Word nw(w.begin(), w.begin() + static_cast<long>(a - k));
          nw.insert(nw.end(), rw.begin(), rw.end());
          add_to(right, nw, rc);
        }
        LinComb nl = sys.normal_form(left), nr = sys.normal_form(right);
        if (nl != nr) {
          LinComb d = nl;
          for (const auto& [rw, rc] : nr) add_to(d, rw, -rc);
          throw UnresolvableOverlap(w, d);
        }
        rep.checked.push_back(w);
      }
    }
  return rep;
}

std::vector<Word> irreducible_words(const RewriteSystem& sys, int n) {
  std::vector<Word> cur{{}};
  for (int d = 0; d < n; ++d) {
    std::vector<Word> next;
    for (const auto& w : cur)
      for (int s = 0; s < static_cast<int>(sys.alphabet_size()); ++s) {
        Word nw = w;
        nw.push_back(s);
        // only factors ending at the new letter can be new
        bool ok = true;
        for (const auto& r : sys.rules()) {
          const std::size_t l = r.lead.size();
          if (l <= nw.size() && std::equal(r.lead.begin(), r.lead.end(), nw.end() - static_cast<long>(l))) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(nw));
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [&](const Word& a, const Word& b) { return sys.less(a, b); });
  return cur;
}

long irreducible_count(const RewriteSystem& sys, int n) { return static_cast<long>(irreducible_words(sys, n).size()); }

NormalFormTable normal_form_table(const RewriteSystem& sys, int n) {
  NormalFormTable t;
  t.degree = n;
  t.irreducible = irreducible_words(sys, n);
  std::vector<Word> all{{}};
  for (int d = 0; d < n; ++d) {
    std::vector<Word> next;
    for (const auto& w : all)
      for (int s = 0; s < static_cast<int>(sys.alphabet_size()); ++s) {
        Word nw = w;
        nw.push_back(s);
        next.push_back(std::move(nw));
      }
    all = std::move(next);
  }
  for (const auto& w : all) t.reduction.emplace(w, sys.normal_form(w));
  return t;
}

RewriteSystem a_system() {
  // symbols 0..3 are x1..x4
  auto rule = [](int a, int b, int c, int d) {
    return RewriteRule{{a - 1, b - 1}, LinComb{{{c - 1, d - 1}, Scalar(1)}}};
  };
  return RewriteSystem({"x1", "x2", "x3", "x4"}, {1, 0, 2, 3},
                       {rule(3, 1, 1, 3), rule(3, 2, 1, 4), rule(4, 1, 2, 3), rule(4, 2, 2, 4), rule(1, 2, 2, 3),
                        rule(4, 3, 1, 4)});
}

}  // namespace bcs
