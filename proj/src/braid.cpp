#include "fvb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fvb {

BraidMode parse_mode(std::string_view text) {
  std::string t(text);
  for (char& c : t) c = static_cast<char>(std::tolower(c));
  if (t == "vb") return BraidMode::VB;
  if (t == "fvb") return BraidMode::FVB;
  if (t == "gvb") return BraidMode::GVB;
  if (t == "wb") return BraidMode::WB;
  if (t == "fwb") return BraidMode::FWB;
  throw input_error("unknown braid mode: " + std::string(text));
}

std::string_view mode_name(BraidMode mode) {
  switch (mode) {
    case BraidMode::VB: return "VB";
    case BraidMode::FVB: return "FVB";
    case BraidMode::GVB: return "GVB";
    case BraidMode::WB: return "WB";
    case BraidMode::FWB: return "FWB";
  }
  return "?";
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) p.img_[i] = i;
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw input_error("bad transposition indices");
  Permutation p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw input_error("image array is not a permutation");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw domain_error("permutation degree mismatch");
  Permutation r;
  r.img_.resize(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i]];
  return r;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(img_[i] + 1);
  }
  return out + "]";
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> ls)
    : n(strands), letters(std::move(ls)) {
  if (n < 2) throw input_error("strand count must be at least 2");
  for (const BraidLetter& l : letters)
    if (l.index < 1 || l.index >= n)
      throw input_error("braid letter index out of range");
}

BraidWord parse_braid(std::string_view text, int n) {
  if (n < 2) throw input_error("strand count must be at least 2");
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    char head = tok[0];
    BraidKind kind;
    int exp = 1;
    if (head == 's' || head == 'S')
      kind = BraidKind::Sigma;
    else if (head == 'r' || head == 'R')
      kind = BraidKind::Rho;
    else
      throw input_error("bad braid token: " + tok);
    if (std::isupper(static_cast<unsigned char>(head))) exp = -1;
    std::string rest = tok.substr(1);
    long long e = 1;
    if (auto pos = rest.find('^'); pos != std::string::npos) {
      try {
        e = std::stoll(rest.substr(pos + 1));
      } catch (const std::exception&) {
        throw input_error("bad exponent in token: " + tok);
      }
      rest = rest.substr(0, pos);
    }
    int idx;
    try {
      size_t used = 0;
      idx = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw input_error("bad braid token: " + tok);
    }
    if (idx < 1 || idx >= n)
      throw input_error("braid index out of range in token: " + tok);
    long long total = static_cast<long long>(exp) * e;
    int sign = total < 0 ? -1 : 1;
    for (long long k = 0; k < (total < 0 ? -total : total); ++k)
      letters.push_back({kind, idx, sign});
  }
  return BraidWord(n, std::move(letters));
}

std::string braid_str(const BraidWord& b) {
  if (b.letters.empty()) return "1";
  std::string out;
  for (const BraidLetter& l : b.letters) {
    if (!out.empty()) out += ' ';
    char c = l.kind == BraidKind::Sigma ? 's' : 'r';
    if (l.exp < 0) c = static_cast<char>(std::toupper(c));
    out += c;
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw domain_error("strand mismatch");
  std::vector<BraidLetter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.n, std::move(ls));
}

BraidWord braid_invert(const BraidWord& b) {
  std::vector<BraidLetter> ls(b.letters.rbegin(), b.letters.rend());
  for (BraidLetter& l : ls) l.exp = -l.exp;
  return BraidWord(b.n, std::move(ls));
}

BraidWord braid_pow(const BraidWord& b, long long k) {
  BraidWord base = k < 0 ? braid_invert(b) : b;
  BraidWord out(b.n, {});
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = braid_concat(out, base);
  return out;
}

BraidWord free_reduce_braid(const BraidWord& b, BraidMode mode) {
  bool sigma_involutive = mode == BraidMode::FVB || mode == BraidMode::GVB ||
                          mode == BraidMode::FWB;
  std::vector<BraidLetter> stack;
  for (const BraidLetter& l : b.letters) {
    if (!stack.empty() && stack.back().kind == l.kind &&
        stack.back().index == l.index) {
      bool involutive = l.kind == BraidKind::Rho ||
                        (l.kind == BraidKind::Sigma && sigma_involutive);
      if (involutive || stack.back().exp == -l.exp) {
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(l);
  }
  return BraidWord(b.n, std::move(stack));
}

namespace {
Permutation iota(const BraidWord& b, bool sigma_acts) {
  Permutation p = Permutation::identity(b.n);
  for (const BraidLetter& l : b.letters) {
    if (l.kind == BraidKind::Sigma && !sigma_acts) continue;
    p = p * Permutation::transposition(b.n, l.index, l.index + 1);
  }
  return p;
}
}  // namespace

Permutation iota1(const BraidWord& b) { return iota(b, true); }
Permutation iota2(const BraidWord& b) { return iota(b, false); }

namespace {
void check_pair(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw input_error("indices must satisfy 1 <= i != j <= n");
}

// rho_{j-1} rho_{j-2} ... rho_{i+1}, empty when j = i+1.
std::vector<BraidLetter> rho_prefix(int i, int j) {
  std::vector<BraidLetter> out;
  for (int k = j - 1; k > i; --k) out.push_back({BraidKind::Rho, k, 1});
  return out;
}
}  // namespace

BraidWord lambda(int i, int j, int n) {
  check_pair(i, j, n);
  int lo = std::min(i, j), hi = std::max(i, j);
  std::vector<BraidLetter> core;
  if (i < j) {
    // lambda_{i,i+1} = rho_i sigma_i^{-1}
    core = {{BraidKind::Rho, lo, 1}, {BraidKind::Sigma, lo, -1}};
  } else {
    // lambda_{i+1,i} = sigma_i^{-1} rho_i
    core = {{BraidKind::Sigma, lo, -1}, {BraidKind::Rho, lo, 1}};
  }
  std::vector<BraidLetter> pre = rho_prefix(lo, hi);
  std::vector<BraidLetter> letters = pre;
  letters.insert(letters.end(), core.begin(), core.end());
  letters.insert(letters.end(), pre.rbegin(), pre.rend());
  return BraidWord(n, std::move(letters));
}

BraidWord x_elem(int i, int j, int n) {
  check_pair(i, j, n);
  int lo = std::min(i, j), hi = std::max(i, j);
  std::vector<BraidLetter> core;
  if (i < j) {
    core = {{BraidKind::Sigma, lo, 1}};
  } else {
    core = {{BraidKind::Rho, lo, 1},
            {BraidKind::Sigma, lo, 1},
            {BraidKind::Rho, lo, 1}};
  }
  std::vector<BraidLetter> pre = rho_prefix(lo, hi);
  std::vector<BraidLetter> letters = pre;
  letters.insert(letters.end(), core.begin(), core.end());
  letters.insert(letters.end(), pre.rbegin(), pre.rend());
  return BraidWord(n, std::move(letters));
}

BraidWord eta(int i, int n) {
  if (i < 1 || i >= n) throw input_error("eta index out of range");
  return BraidWord(n, {{BraidKind::Sigma, i, 1}, {BraidKind::Rho, i, 1}});
}

BraidWord expand_lambda(const LambdaWord& lw) {
  BraidWord out(lw.n, {});
  for (const IndexedLetter& l : lw.letters) {
    BraidWord g = lambda(l.i, l.j, lw.n);
    out = braid_concat(out, l.exp > 0 ? g : braid_invert(g));
  }
  return out;
}

BraidWord expand_x(const XWord& xw) {
  BraidWord out(xw.n, {});
  for (const IndexedLetter& l : xw.letters) {
    BraidWord g = x_elem(l.i, l.j, xw.n);
    out = braid_concat(out, l.exp > 0 ? g : braid_invert(g));
  }
  return out;
}

namespace {
std::string indexed_str(const std::vector<IndexedLetter>& letters, char tag) {
  if (letters.empty()) return "1";
  std::string out;
  for (const IndexedLetter& l : letters) {
    if (!out.empty()) out += ' ';
    out += tag;
    out += "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    if (l.exp < 0) out += "^-1";
  }
  return out;
}
}  // namespace

std::string lambda_str(const LambdaWord& lw) { return indexed_str(lw.letters, 'L'); }
std::string x_str(const XWord& xw) { return indexed_str(xw.letters, 'X'); }

namespace {

// Sweep all rho letters to the right end, relabeling indexed generators by
// the conjugation rule rho_k g_{i,j} = g_{(k,k+1)(i), (k,k+1)(j)} rho_k.
// The input is a list of items, each either a rho letter or an indexed
// generator; returns the indexed word and the trailing rho permutation.
struct SweepItem {
  bool is_rho;
  int rho_index = 0;
  IndexedLetter gen{};
};

std::pair<std::vector<IndexedLetter>, Permutation> sweep_right(
    int n, std::vector<SweepItem> items) {
  std::vector<IndexedLetter> gens;
  Permutation trailing = Permutation::identity(n);
  // One left-to-right pass with bubbling is equivalent to repeatedly
  // applying the single-swap rule.
  std::vector<int> pending_rhos;
  auto swap_image = [](int k, int v) {
    if (v == k) return k + 1;
    if (v == k + 1) return k;
    return v;
  };
  for (const SweepItem& it : items) {
    if (it.is_rho) {
      pending_rhos.push_back(it.rho_index);
    } else {
      IndexedLetter g = it.gen;
      // Conjugate g past each pending rho, right to left.
      for (auto r = pending_rhos.rbegin(); r != pending_rhos.rend(); ++r) {
        g.i = swap_image(*r, g.i);
        g.j = swap_image(*r, g.j);
      }
      gens.push_back(g);
    }
  }
  for (int k : pending_rhos)
    trailing = trailing * Permutation::transposition(n, k, k + 1);
  return {std::move(gens), std::move(trailing)};
}

}  // namespace

LambdaWord rewrite_to_lambda(const BraidWord& b, BraidMode mode) {
  if (!iota1(b).is_identity())
    throw domain_error("braid is not pure: iota1 != id");
  std::vector<SweepItem> items;
  for (const BraidLetter& l : b.letters) {
    if (l.kind == BraidKind::Rho) {
      items.push_back({true, l.index, {}});
    } else if (l.exp > 0) {
      // sigma_i = lambda_{i,i+1}^{-1} rho_i
      items.push_back({false, 0, {l.index, l.index + 1, -1}});
      items.push_back({true, l.index, {}});
    } else {
      // sigma_i^{-1} = rho_i lambda_{i,i+1}
      items.push_back({true, l.index, {}});
      items.push_back({false, 0, {l.index, l.index + 1, 1}});
    }
  }
  auto [gens, trailing] = sweep_right(b.n, std::move(items));
  if (!trailing.is_identity())
    throw domain_error("internal: nontrivial trailing permutation");
  if (mode == BraidMode::FVB || mode == BraidMode::GVB) {
    for (IndexedLetter& g : gens) {
      if (g.i > g.j) {
        std::swap(g.i, g.j);
        g.exp = -g.exp;
      }
    }
  }
  return LambdaWord{b.n, std::move(gens)};
}

XWord rewrite_to_x(const BraidWord& b) {
  if (!iota2(b).is_identity())
    throw domain_error("braid is not in H_n: iota2 != id");
  std::vector<SweepItem> items;
  for (const BraidLetter& l : b.letters) {
    if (l.kind == BraidKind::Rho) {
      items.push_back({true, l.index, {}});
    } else {
      items.push_back({false, 0, {l.index, l.index + 1, l.exp}});
    }
  }
  auto [gens, trailing] = sweep_right(b.n, std::move(items));
  if (!trailing.is_identity())
    throw domain_error("internal: nontrivial trailing permutation");
  return XWord{b.n, std::move(gens)};
}

AlphabetPtr abc_alphabet() {
  static AlphabetPtr a = make_alphabet({"a", "b", "c"});
  return a;
}

Word to_abc(const LambdaWord& lw) {
  AlphabetPtr abc = abc_alphabet();
  const Word a = letter_word(abc, "a"), b = letter_word(abc, "b"),
             c = letter_word(abc, "c");
  std::vector<Letter> raw;
  auto append = [&raw](const Word& w) {
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  };
  for (const IndexedLetter& l : lw.letters) {
    Word img;
    if (l.i == 1 && l.j == 3)
      img = multiply(invert(b), a);
    else if (l.i == 2 && l.j == 3)
      img = b;
    else if (l.i == 1 && l.j == 2)
      img = multiply(invert(c), b);
    else
      throw domain_error("lambda index outside FVP_3 range (need i<j in {1,2,3})");
    append(l.exp > 0 ? img : invert(img));
  }
  return Word::normalize(abc, std::move(raw));
}

Fvp3NormalForm fvp3_normal_form(const Word& w) {
  if (!w.alphabet() || !w.alphabet()->same_content(*abc_alphabet()))
    throw domain_error("fvp3_normal_form expects a word over {a,b,c}");
  Fvp3NormalForm nf;
  // Invariant: stored syllables alternate between the two free-product
  // factors and are nontrivial; a merge can only make the back trivial, in
  // which case it is removed.
  auto push = [&nf](Fvp3Syllable s) {
    if (!nf.empty() && nf.back().is_b == s.is_b) {
      nf.back().a += s.a;
      nf.back().c += s.c;
      nf.back().b += s.b;
      if (nf.back().a == 0 && nf.back().c == 0 && nf.back().b == 0)
        nf.pop_back();
    } else {
      nf.push_back(s);
    }
  };
  const int a_id = w.alphabet()->id("a");
  const int b_id = w.alphabet()->id("b");
  for (const Letter& l : w.letters()) {
    Fvp3Syllable s{};
    if (l.sym == b_id) {
      s.is_b = true;
      s.b = l.exp;
    } else {
      s.is_b = false;
      (l.sym == a_id ? s.a : s.c) = l.exp;
    }
    push(s);
  }
  return nf;
}

std::string fvp3_str(const Fvp3NormalForm& nf) {
  if (nf.empty()) return "1";
  std::string out;
  auto pow = [](const char* s, long long e) -> std::string {
    if (e == 0) return "";
    std::string t = s;
    if (e != 1) t += "^" + std::to_string(e);
    return t;
  };
  for (const Fvp3Syllable& s : nf) {
    std::string part;
    if (s.is_b) {
      part = pow("b", s.b);
    } else {
      part = pow("a", s.a);
      std::string cc = pow("c", s.c);
      if (!part.empty() && !cc.empty()) part += ' ';
      part += cc;
    }
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

namespace {
BraidWord commutator(const BraidWord& u, const BraidWord& v) {
  return braid_concat(braid_concat(u, v),
                      braid_concat(braid_invert(u), braid_invert(v)));
}
}  // namespace

std::vector<BraidWord> normal_generators_intersection(int n, BraidMode mode) {
  if (n < 2) throw input_error("n must be at least 2");
  std::vector<BraidWord> out;
  bool vb = mode == BraidMode::VB;
  bool gvb = mode == BraidMode::GVB;
  // lambda_{s,t} lambda_{t,s}^{-1}, s < t  (dropped in GVB)
  if (!gvb) {
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t)
        out.push_back(braid_concat(lambda(s, t, n),
                                   braid_invert(lambda(t, s, n))));
  }
  // lambda_{t,s}^2, s < t  (VB only)
  if (vb) {
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t)
        out.push_back(braid_concat(lambda(t, s, n), lambda(t, s, n)));
  }
  // [lambda_{t,s}, lambda_{r,q}] for non-interleaving index pairs
  for (int t = 2; t <= n; ++t)
    for (int s = 1; s < t; ++s)
      for (int r = 2; r <= n; ++r)
        for (int q = 1; q < r; ++q) {
          if (std::make_pair(t, s) <= std::make_pair(r, q)) continue;
          long long cond = static_cast<long long>(t - r) * (t - q) * (s - r) *
                           (s - q);
          if (cond > 0)
            out.push_back(commutator(lambda(t, s, n), lambda(r, q, n)));
        }
  // lambda_{t,s} lambda_{s,r} lambda_{t,s}^{-1} lambda_{t,r}^{-1}  and
  // lambda_{t,s} lambda_{s,r} lambda_{t,r}^{-1} lambda_{s,r}^{-1},  t>s>r
  for (int t = 3; t <= n; ++t)
    for (int s = 2; s < t; ++s)
      for (int r = 1; r < s; ++r) {
        out.push_back(braid_concat(
            braid_concat(lambda(t, s, n), lambda(s, r, n)),
            braid_concat(braid_invert(lambda(t, s, n)),
                         braid_invert(lambda(t, r, n)))));
        out.push_back(braid_concat(
            braid_concat(lambda(t, s, n), lambda(s, r, n)),
            braid_concat(braid_invert(lambda(t, r, n)),
                         braid_invert(lambda(s, r, n)))));
      }
  return out;
}

}  // namespace fvb
