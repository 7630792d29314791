#pragma once

#include <string>
#include <vector>

#include "fvb/braid.hpp"
#include "fvb/endo.hpp"
#include "fvb/laurent.hpp"
#include "fvb/rep.hpp"
#include "fvb/word.hpp"

namespace fvb {

/// Formal Z-linear combination of group elements (words in normal form).
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(AlphabetPtr alphabet)
      : alpha_(std::move(alphabet)) {}

  static GroupRingElement of_word(Word w, Int c = 1);
  static GroupRingElement one(AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, Int c);

  std::string str() const;

  friend GroupRingElement operator+(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  AlphabetPtr alpha_;
  std::map<Word, Int> terms_;
};

/// Free differential calculus: d(x_i)/d(x_j) = delta_ij,
/// d(x_i^-1)/d(x_j) = -x_i^-1 delta_ij, d(wv) = dw + w dv.
/// Rejects partially commutative alphabets.
GroupRingElement fox_derivative(const Word& w, int sym);
GroupRingElement fox_derivative(const Word& w, std::string_view sym);

/// Assignment of a unit Laurent monomial to every alphabet symbol.
struct MonomialAssignment {
  std::vector<std::string> vars;
  std::vector<LaurentPoly::Exponents> image;  // indexed by symbol id
};

/// x_i -> p_i, y_i -> q_i over Z[p_1..p_n, q_1..q_n] (xy alphabet).
MonomialAssignment generic_xy_assignment(int n);
/// x_i -> p, y_i -> 1 over Z[p] (xy alphabet).
MonomialAssignment standard_xy_assignment(int n);

LaurentPoly abelianize(const GroupRingElement& g, const MonomialAssignment& a);

/// Matrix of abelianized Fox derivatives of generator images; rows indexed by
/// source symbol, columns by derivative symbol, both in alphabet order.
RingMatrix magnus_matrix(const Endomorphism& e, const MonomialAssignment& a);

/// Linear representation by per-letter matrices.  The basis tag records the
/// row/column layout; matrices from different tags are never comparable.
struct LinearRep {
  std::string name;
  int n = 2;
  int dim = 0;
  std::string basis;
  std::vector<std::string> vars;
  std::vector<RingMatrix> sigma, sigma_inv, rho, rho_inv;

  const RingMatrix& image(const BraidLetter& l) const;
};

/// 2n x 2n over Z[p], basis (e_1, f_1, ..., e_n, f_n).
LinearRep linear_theta(int n);
/// 3n x 3n over Z, basis (e_1, f_1, g_1, ..., e_n, f_n, g_n).
LinearRep linear_delta(int n);
/// Block direct sum, 5n x 5n over Z[p].
LinearRep linear_theta_delta(int n);
/// Per-letter generic Magnus matrices over Z[p_1..p_n, q_1..q_n]; the letter
/// assignment is not multiplicative, so this is a formal product rep.
LinearRep linear_theta_generic(int n);

/// Selector: Theta | Delta | ThetaDelta.
LinearRep make_linear(std::string_view selector, int n);

/// Product of letter matrices in word order.
RingMatrix apply_linear(const LinearRep& rep, const BraidWord& b);

struct GenericMagnusReport {
  RelationReport generic;      // over Z[p_1..p_n, q_1..q_n]
  RelationReport specialized;  // after p_i -> p, q_i -> 1
  std::string str() const;
};

/// Formal products of per-letter generic Magnus matrices, checked against
/// every defining relation instance, before and after specialization.
GenericMagnusReport generic_magnus_check(int n);

}  // namespace fvb
