#include "fvb/word.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace fvb {

Alphabet::Alphabet(std::vector<std::string> symbols,
                   std::vector<std::pair<std::string, std::string>> pairs)
    : symbols_(std::move(symbols)) {
  const int n = size();
  commuting_.assign(static_cast<size_t>(n) * n, 0);
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = index.emplace(symbols_[i], i);
    if (!inserted) throw input_error("duplicate symbol: " + symbols_[i]);
  }
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw input_error("commuting pair references unknown symbol");
    if (ia->second == ib->second)
      throw input_error("commuting pair must join distinct symbols");
    commuting_[ia->second * n + ib->second] = 1;
    commuting_[ib->second * n + ia->second] = 1;
    free_ = false;
  }
}

int Alphabet::id(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i] == name) return i;
  throw input_error("unknown symbol: " + std::string(name));
}

bool Alphabet::has(std::string_view name) const {
  for (const auto& s : symbols_)
    if (s == name) return true;
  return false;
}

bool Alphabet::same_content(const Alphabet& other) const {
  return symbols_ == other.symbols_ && commuting_ == other.commuting_;
}

AlphabetPtr make_alphabet(
    std::vector<std::string> symbols,
    std::vector<std::pair<std::string, std::string>> pairs) {
  return std::make_shared<const Alphabet>(std::move(symbols),
                                          std::move(pairs));
}

AlphabetPtr xy_alphabet(int n) {
  std::vector<std::string> syms;
  for (int i = 1; i <= n; ++i) syms.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) syms.push_back("y" + std::to_string(i));
  return make_alphabet(std::move(syms));
}

AlphabetPtr xyz_alphabet(int n) {
  std::vector<std::string> syms;
  for (int i = 1; i <= n; ++i) syms.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) syms.push_back("y" + std::to_string(i));
  syms.push_back("z");
  return make_alphabet(std::move(syms));
}

AlphabetPtr xyz_graph_alphabet(int n) {
  std::vector<std::string> syms;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 1; i <= n; ++i) syms.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    syms.push_back("y" + std::to_string(i));
    pairs.emplace_back("y" + std::to_string(i), "z");
  }
  syms.push_back("z");
  return make_alphabet(std::move(syms), std::move(pairs));
}

AlphabetPtr xz_alphabet(int n) {
  std::vector<std::string> syms;
  for (int i = 1; i <= n; ++i) syms.push_back("x" + std::to_string(i));
  syms.push_back("z");
  return make_alphabet(std::move(syms));
}

namespace {

// Free cancellation for plain free alphabets: single stack pass.
void reduce_free(std::vector<Letter>& v) {
  std::vector<Letter> stack;
  stack.reserve(v.size());
  for (const Letter& l : v) {
    if (!stack.empty() && stack.back().sym == l.sym &&
        stack.back().exp == -l.exp) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  v = std::move(stack);
}

// Graph-group reduction: delete a pair s^e ... s^{-e} whenever every letter
// strictly between commutes with s; repeat to a fixed point.  The surviving
// word is geodesic.
void reduce_graph(const Alphabet& a, std::vector<Letter>& v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < v.size() && !changed; ++i) {
      for (size_t j = i + 1; j < v.size(); ++j) {
        if (v[j].sym == v[i].sym) {
          if (v[j].exp == -v[i].exp) {
            v.erase(v.begin() + j);
            v.erase(v.begin() + i);
            changed = true;
          }
          break;  // same symbol with same sign blocks nothing further
        }
        if (!a.commutes(v[i].sym, v[j].sym)) break;
      }
    }
  }
}

// Shortlex-least representative of the commutation class of a geodesic
// word: repeatedly pull the least letter that commutes past everything
// before it to the front.
void lexmin(const Alphabet& a, std::vector<Letter>& v) {
  std::vector<Letter> out;
  out.reserve(v.size());
  std::vector<Letter> rest = std::move(v);
  while (!rest.empty()) {
    size_t best = 0;
    bool have = false;
    for (size_t j = 0; j < rest.size(); ++j) {
      bool pullable = true;
      for (size_t k = 0; k < j; ++k) {
        if (!a.commutes(rest[k].sym, rest[j].sym)) {
          pullable = false;
          break;
        }
      }
      if (!pullable) continue;
      if (!have || rest[j] < rest[best]) {
        best = j;
        have = true;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  v = std::move(out);
}

}  // namespace

Word Word::normalize(AlphabetPtr alphabet, std::vector<Letter> raw) {
  if (!alphabet) throw input_error("null alphabet");
  for (const Letter& l : raw) {
    if (l.sym < 0 || l.sym >= alphabet->size())
      throw input_error("letter symbol id out of range");
    if (l.exp != 1 && l.exp != -1)
      throw input_error("letter exponent must be +1 or -1");
  }
  if (alphabet->is_free()) {
    reduce_free(raw);
  } else {
    reduce_graph(*alphabet, raw);
    lexmin(*alphabet, raw);
  }
  Word w(std::move(alphabet));
  w.letters_ = std::move(raw);
  return w;
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long long e = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      try {
        e = std::stoll(tok.substr(pos + 1));
      } catch (const std::exception&) {
        throw input_error("bad exponent in token: " + tok);
      }
    }
    int id = alphabet->id(name);
    int sign = e < 0 ? -1 : 1;
    for (long long k = 0; k < (e < 0 ? -e : e); ++k)
      raw.push_back({id, sign});
  }
  return normalize(std::move(alphabet), std::move(raw));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long run = static_cast<long long>(j - i) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += alpha_->name(letters_[i].sym);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size())
    return a.letters_.size() < b.letters_.size();
  return a.letters_ < b.letters_;
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (a.alphabet() == b.alphabet()) return;
  if (a.alphabet() && b.alphabet() &&
      a.alphabet()->same_content(*b.alphabet()))
    return;
  throw domain_error("alphabet mismatch");
}

Word multiply(const Word& w1, const Word& w2) {
  require_same_alphabet(w1, w2);
  std::vector<Letter> raw = w1.letters();
  raw.insert(raw.end(), w2.letters().begin(), w2.letters().end());
  return Word::normalize(w1.alphabet() ? w1.alphabet() : w2.alphabet(),
                         std::move(raw));
}

Word invert(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : raw) l.exp = -l.exp;
  return Word::normalize(w.alphabet(), std::move(raw));
}

Word conjugate(const Word& w, const Word& g) {
  return multiply(multiply(invert(g), w), g);
}

long long exponent_sum(const Word& w, int sym) {
  if (sym < 0 || !w.alphabet() || sym >= w.alphabet()->size())
    throw input_error("unknown symbol id in exponent_sum");
  long long total = 0;
  for (const Letter& l : w.letters())
    if (l.sym == sym) total += l.exp;
  return total;
}

long long exponent_sum(const Word& w, std::string_view sym) {
  return exponent_sum(w, w.alphabet()->id(sym));
}

Word letter_word(const AlphabetPtr& alphabet, std::string_view sym, int exp) {
  return Word::normalize(alphabet, {{alphabet->id(sym), exp < 0 ? -1 : 1}});
}

Word word_pow(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long m = k < 0 ? -k : k;
  std::vector<Letter> raw;
  for (long long i = 0; i < m; ++i)
    raw.insert(raw.end(), base.letters().begin(), base.letters().end());
  return Word::normalize(w.alphabet(), std::move(raw));
}

}  // namespace fvb
