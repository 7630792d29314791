#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fvb/error.hpp"
#include "fvb/word.hpp"

namespace fvb {

enum class BraidMode { VB, FVB, GVB, WB, FWB };

BraidMode parse_mode(std::string_view text);
std::string_view mode_name(BraidMode mode);

/// Permutation of {1..n}, stored as a 0-based one-line image array.
/// Word-order composition: (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);  // 1-based a != b
  /// From a 0-based one-line image array; validates bijectivity.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i - 1] + 1; }  // 1-based
  bool is_identity() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string str() const;  // one-line, e.g. "[2 1 3]"

 private:
  std::vector<int> img_;
};

enum class BraidKind { Sigma, Rho };

struct BraidLetter {
  BraidKind kind;
  int index;  // 1..n-1
  int exp;    // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int n = 2;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> ls);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Tokens: s<k>, r<k>, optional ^e; uppercase S<k>/R<k> are inverses.
BraidWord parse_braid(std::string_view text, int n);
std::string braid_str(const BraidWord& b);

BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_invert(const BraidWord& b);
BraidWord braid_pow(const BraidWord& b, long long k);

/// Cancels adjacent inverse pairs and, where the mode makes a generator an
/// involution (rho always; sigma in FVB/GVB/FWB), adjacent equal letters.
/// A normalization convenience, not a word-problem solution.
BraidWord free_reduce_braid(const BraidWord& b, BraidMode mode);

/// sigma_i, rho_i -> (i, i+1).
Permutation iota1(const BraidWord& b);
/// sigma_i -> id, rho_i -> (i, i+1).
Permutation iota2(const BraidWord& b);

/// Pure-braid generator lambda_{i,j} as an explicit braid word.
BraidWord lambda(int i, int j, int n);
/// Rabenda generator x_{i,j} as an explicit braid word.
BraidWord x_elem(int i, int j, int n);
/// eta_i = sigma_i rho_i.
BraidWord eta(int i, int n);

struct IndexedLetter {
  int i, j;  // 1-based, i != j
  int exp;   // +1 or -1
  friend bool operator==(const IndexedLetter&, const IndexedLetter&) = default;
};

struct LambdaWord {
  int n = 2;
  std::vector<IndexedLetter> letters;
};
struct XWord {
  int n = 2;
  std::vector<IndexedLetter> letters;
};

/// Expand a lambda/x word back into a braid word.
BraidWord expand_lambda(const LambdaWord& lw);
BraidWord expand_x(const XWord& xw);

std::string lambda_str(const LambdaWord& lw);
std::string x_str(const XWord& xw);

/// Rewrite a pure braid (iota1 = id) as a word in the lambda generators.
/// In FVB/GVB modes, lambda_{j,i} with j > i is emitted as lambda_{i,j}^{-1}.
LambdaWord rewrite_to_lambda(const BraidWord& b, BraidMode mode = BraidMode::VB);
/// Rewrite a braid with iota2 = id as a word in the x generators.
XWord rewrite_to_x(const BraidWord& b);

/// Substitute lambda_{1,3} -> b^-1 a, lambda_{2,3} -> b, lambda_{1,2} -> c^-1 b
/// letterwise (FVP_3 coordinates).
Word to_abc(const LambdaWord& lw);

/// Alphabet {a, b, c} used by to_abc / fvp3_normal_form.
AlphabetPtr abc_alphabet();

/// Syllable of the free product Z^2 * Z: either a^p c^q or b^r.
struct Fvp3Syllable {
  bool is_b;
  long long a = 0, c = 0;  // Z^2 factor exponents
  long long b = 0;         // Z factor exponent
  friend bool operator==(const Fvp3Syllable&, const Fvp3Syllable&) = default;
};

using Fvp3NormalForm = std::vector<Fvp3Syllable>;

/// Normal form of a word over {a,b,c} in FVP_3 = <a,c | [a,c]> * <b>.
/// Equality in FVP_3 is equality of normal forms.
Fvp3NormalForm fvp3_normal_form(const Word& w);
std::string fvp3_str(const Fvp3NormalForm& nf);

/// The normal generating set of VP_n cap H_n (and its FVB/GVB analogues),
/// emitted as explicit braid words.
std::vector<BraidWord> normal_generators_intersection(int n, BraidMode mode);

}  // namespace fvb
