#pragma once

#include <string>
#include <vector>

#include "fvb/braid.hpp"
#include "fvb/laurent.hpp"
#include "fvb/word.hpp"

namespace fvb {

/// Finite group presentation; relators are words in normal form over the
/// generator alphabet, trivial relators are never stored.
struct Presentation {
  std::vector<std::string> generators;
  AlphabetPtr alphabet;  // free alphabet over generators
  std::vector<Word> relators;

  std::string str() const;  // < x1, x2, y | y^3 >
};

Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relator_texts);

/// Group of the closed braid: generators x_1..x_n, y; relators are the
/// theta-images of the x_i (with every y_j projected to y) against x_i.
Presentation link_group(const BraidWord& b);

/// Bounded greedy Tietze simplification; the output presents an isomorphic
/// group.
Presentation tietze_simplify(const Presentation& p, int max_passes = 100);

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // divisibility chain, entries >= 2

  std::string str() const;  // Z^2 + Z/3
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

struct SmithForm {
  std::vector<Int> diag;  // positive, d1 | d2 | ... | dr
  int rank = 0;
};

/// Exact Smith normal form by unimodular row/column operations.
SmithForm smith_normal_form(std::vector<std::vector<Int>> m);

}  // namespace fvb
