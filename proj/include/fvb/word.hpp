#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fvb/error.hpp"

namespace fvb {

/// Ordered generating set of a free or partially commutative (graph) group.
/// With an empty commutation set this is a plain free group; each commuting
/// pair {s,t} imposes the relation [s,t] = 1.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols,
                    std::vector<std::pair<std::string, std::string>>
                        commuting_pairs = {});

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int id) const { return symbols_[id]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Symbol id by name; throws input_error for unknown names.
  int id(std::string_view name) const;
  bool has(std::string_view name) const;

  /// True for two distinct commuting symbols, and trivially for a == b.
  bool commutes(int a, int b) const {
    return a == b || commuting_[a * size() + b];
  }
  bool is_free() const { return free_; }

  bool same_content(const Alphabet& other) const;

 private:
  std::vector<std::string> symbols_;
  std::vector<char> commuting_;  // size*size adjacency
  bool free_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols,
                          std::vector<std::pair<std::string, std::string>>
                              commuting_pairs = {});

/// Free generators x1..xn, y1..yn (the target of the theta family).
AlphabetPtr xy_alphabet(int n);
/// x1..xn, y1..yn, z, free.
AlphabetPtr xyz_alphabet(int n);
/// x1..xn, y1..yn, z with [y_i, z] = 1 (target of theta3/theta4).
AlphabetPtr xyz_graph_alphabet(int n);
/// x1..xn, z, free (target of thetaG).
AlphabetPtr xz_alphabet(int n);

struct Letter {
  int sym;  // alphabet id
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Group element in canonical normal form: freely reduced and, for graph
/// alphabets, the shortlex-least word in its commutation class.  Immutable.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}

  /// Canonical form of a raw letter sequence.
  static Word normalize(AlphabetPtr alphabet, std::vector<Letter> raw);

  /// Parse whitespace-separated tokens: "x1 y2^-1 z", "x1^-3" expands,
  /// "1" denotes the empty word.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b);  // shortlex

 private:
  AlphabetPtr alpha_;
  std::vector<Letter> letters_;
};

Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);
/// g^{-1} w g (the convention for superscript conjugation w^g).
Word conjugate(const Word& w, const Word& g);
/// Signed count of occurrences of symbol s.
long long exponent_sum(const Word& w, int sym);
long long exponent_sum(const Word& w, std::string_view sym);

/// Single-letter convenience constructors.
Word letter_word(const AlphabetPtr& alphabet, std::string_view sym,
                 int exp = 1);
Word word_pow(const Word& w, long long k);

void require_same_alphabet(const Word& a, const Word& b);

}  // namespace fvb
