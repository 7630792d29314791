#include "fvb/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fvb/rep.hpp"

namespace fvb {

namespace {

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].sym == ls[hi - 1].sym &&
         ls[lo].exp == -ls[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word::normalize(w.alphabet(),
                         std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

// first index where pat occurs as a contiguous subword of ls, or -1
int find_sub(const std::vector<Letter>& ls, const std::vector<Letter>& pat) {
  if (pat.empty() || pat.size() > ls.size()) return -1;
  for (size_t i = 0; i + pat.size() <= ls.size(); ++i) {
    bool ok = true;
    for (size_t k = 0; k < pat.size(); ++k)
      if (!(ls[i + k] == pat[k])) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Letter> invert_letters(std::vector<Letter> ls) {
  std::reverse(ls.begin(), ls.end());
  for (Letter& l : ls) l.exp = -l.exp;
  return ls;
}

}  // namespace

std::string Presentation::str() const {
  std::ostringstream os;
  os << "< ";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) os << ", ";
    os << generators[i];
  }
  os << " | ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ", ";
    os << relators[i].str();
  }
  os << " >";
  return os.str();
}

Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relator_texts) {
  Presentation p;
  p.generators = std::move(generators);
  p.alphabet = make_alphabet(p.generators);
  for (const std::string& t : relator_texts) {
    Word w = Word::parse(p.alphabet, t);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

Presentation link_group(const BraidWord& b) {
  const int n = b.n;
  Endomorphism e = theta(n).of(b);

  Presentation p;
  for (int i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
  p.generators.push_back("y");
  p.alphabet = make_alphabet(p.generators);

  // xy_alphabet ids: 0..n-1 are x_1..x_n, n..2n-1 are y_1..y_n
  auto project = [&](const Word& w) {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      out.push_back({l.sym < n ? l.sym : n, l.exp});
    }
    return Word::normalize(p.alphabet, std::move(out));
  };

  for (int s = 0; s < 2 * n; ++s) {
    int target = s < n ? s : n;
    Word rel = multiply(project(e.image(s)),
                        Word::normalize(p.alphabet, {{target, -1}}));
    if (!rel.empty()) p.relators.push_back(std::move(rel));
  }
  return p;
}

namespace {

struct SimpState {
  std::vector<std::string> gens;
  AlphabetPtr alpha;
  std::vector<Word> rels;

  void normalize_relators() {
    std::vector<Word> out;
    std::set<std::string> seen;
    for (const Word& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      // store one of {r, r^-1} to dedupe mirror copies, preferring the
      // orientation with nonnegative total exponent so powers print as s^k
      Word inv = invert(c);
      long long esum = 0;
      for (const Letter& l : c.letters()) esum += l.exp;
      const Word& rep = esum < 0 || (esum == 0 && inv < c) ? inv : c;
      if (seen.insert(rep.str()).second) out.push_back(rep);
    }
    rels = std::move(out);
  }

  // remove generator `sid`, replacing it everywhere by `repl` (free of sid),
  // and drop relator `rid`
  void eliminate(int sid, const Word& repl, size_t rid) {
    std::vector<std::string> new_gens;
    std::vector<int> remap(gens.size(), -1);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (static_cast<int>(i) == sid) continue;
      remap[i] = static_cast<int>(new_gens.size());
      new_gens.push_back(gens[i]);
    }
    AlphabetPtr new_alpha = make_alphabet(new_gens);
    auto translate = [&](const Word& w) {
      std::vector<Letter> out;
      for (const Letter& l : w.letters()) {
        if (l.sym == sid) {
          std::vector<Letter> rl = repl.letters();
          if (l.exp < 0) rl = invert_letters(std::move(rl));
          for (const Letter& x : rl) out.push_back({remap[x.sym], x.exp});
        } else {
          out.push_back({remap[l.sym], l.exp});
        }
      }
      return Word::normalize(new_alpha, std::move(out));
    };
    std::vector<Word> new_rels;
    for (size_t i = 0; i < rels.size(); ++i) {
      if (i == rid) continue;
      Word t = translate(rels[i]);
      if (!t.empty()) new_rels.push_back(std::move(t));
    }
    gens = std::move(new_gens);
    alpha = std::move(new_alpha);
    rels = std::move(new_rels);
  }

  // find a relator with a generator occurring exactly once; prefer the
  // shortest resulting replacement word
  bool try_eliminate() {
    int best_sid = -1;
    size_t best_rid = 0;
    size_t best_pos = 0;
    int best_len = -1;
    for (size_t rid = 0; rid < rels.size(); ++rid) {
      const auto& ls = rels[rid].letters();
      for (size_t pos = 0; pos < ls.size(); ++pos) {
        int sym = ls[pos].sym;
        int count = 0;
        for (const Letter& l : ls) count += (l.sym == sym);
        if (count != 1) continue;
        int len = static_cast<int>(ls.size()) - 1;
        if (best_len < 0 || len < best_len) {
          best_len = len;
          best_sid = sym;
          best_rid = rid;
          best_pos = pos;
        }
      }
    }
    if (best_sid < 0) return false;
    // u s^e v = 1: e=+1 gives s = u^-1 v^-1, e=-1 gives s = v u
    const auto& ls = rels[best_rid].letters();
    std::vector<Letter> u(ls.begin(), ls.begin() + best_pos);
    std::vector<Letter> v(ls.begin() + best_pos + 1, ls.end());
    std::vector<Letter> repl;
    if (ls[best_pos].exp == 1) {
      repl = invert_letters(u);
      for (const Letter& l : invert_letters(v)) repl.push_back(l);
    } else {
      repl = v;
      for (const Letter& l : u) repl.push_back(l);
    }
    eliminate(best_sid, Word::normalize(alpha, std::move(repl)), best_rid);
    return true;
  }

  // use a short relator to shorten a longer one: any cyclic rotation r' of
  // r or r^-1 equals 1, so a long-enough prefix u of r' (with r' = u v) may
  // be replaced by v^-1 wherever it occurs
  bool try_shorten() {
    for (size_t a = 0; a < rels.size(); ++a) {
      const std::vector<Letter> base = rels[a].letters();
      if (base.size() < 2) continue;
      for (size_t b = 0; b < rels.size(); ++b) {
        if (a == b || base.size() > rels[b].letters().size()) continue;
        for (int inv = 0; inv < 2; ++inv) {
          std::vector<Letter> r = inv ? invert_letters(base) : base;
          for (size_t rot = 0; rot < r.size(); ++rot) {
            std::rotate(r.begin(), r.begin() + (rot ? 1 : 0), r.end());
            size_t min_len = r.size() / 2 + 1;
            for (size_t ul = r.size(); ul >= min_len; --ul) {
              std::vector<Letter> u(r.begin(), r.begin() + ul);
              int pos = find_sub(rels[b].letters(), u);
              if (pos < 0) continue;
              std::vector<Letter> v(r.begin() + ul, r.end());
              std::vector<Letter> out(rels[b].letters().begin(),
                                      rels[b].letters().begin() + pos);
              for (const Letter& l : invert_letters(v)) out.push_back(l);
              out.insert(out.end(), rels[b].letters().begin() + pos + ul,
                         rels[b].letters().end());
              Word w = cyclic_reduce(Word::normalize(alpha, std::move(out)));
              if (w.length() < rels[b].length()) {
                rels[b] = std::move(w);
                return true;
              }
            }
          }
        }
      }
    }
    return false;
  }
};

}  // namespace

Presentation tietze_simplify(const Presentation& p, int max_passes) {
  SimpState st{p.generators, p.alphabet, p.relators};
  st.normalize_relators();
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    if (st.try_eliminate()) changed = true;
    st.normalize_relators();
    while (st.try_shorten()) {
      changed = true;
      st.normalize_relators();
    }
    if (!changed) break;
  }
  Presentation out;
  out.generators = std::move(st.gens);
  out.alphabet = std::move(st.alpha);
  out.relators = std::move(st.rels);
  std::sort(out.relators.begin(), out.relators.end());
  return out;
}

SmithForm smith_normal_form(std::vector<std::vector<Int>> m) {
  SmithForm out;
  if (m.empty() || m[0].empty()) return out;
  const int R = static_cast<int>(m.size());
  const int C = static_cast<int>(m[0].size());
  int t = 0;
  while (t < R && t < C) {
    // pick the nonzero pivot of least absolute value
    int pr = -1, pc = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (m[i][j] == 0) continue;
        if (pr < 0 || abs(m[i][j]) < abs(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int i = 0; i < R; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = true;
    for (int i = t + 1; i < R; ++i) {
      Int q = m[i][t] / m[t][t];
      if (q != 0)
        for (int j = t; j < C; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < C; ++j) {
      Int q = m[t][j] / m[t][t];
      if (q != 0)
        for (int i = t; i < R; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pick pivot

    // enforce divisibility: fold in any entry the pivot does not divide
    bool redo = false;
    for (int i = t + 1; i < R && !redo; ++i)
      for (int j = t + 1; j < C && !redo; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int k = t; k < C; ++k) m[t][k] += m[i][k];
          redo = true;
        }
    if (redo) continue;
    ++t;
  }
  for (int i = 0; i < t; ++i)
    out.diag.push_back(m[i][i] < 0 ? -m[i][i] : m[i][i]);
  out.rank = t;
  return out;
}

std::string AbelianInvariants::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  for (const Int& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const int G = static_cast<int>(p.generators.size());
  std::vector<std::vector<Int>> m;
  for (const Word& r : p.relators) {
    std::vector<Int> row(G, 0);
    for (const Letter& l : r.letters()) row[l.sym] += l.exp;
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = G;
    return inv;
  }
  SmithForm snf = smith_normal_form(std::move(m));
  inv.free_rank = G - snf.rank;
  for (const Int& d : snf.diag)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace fvb
