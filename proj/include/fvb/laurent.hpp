#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "fvb/error.hpp"

namespace fvb {

using Int = boost::multiprecision::cpp_int;

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Terms are keyed by integer exponent vectors over a fixed variable list;
/// zero coefficients never survive.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, Int c);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents e,
                              Int c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant(const Int& c) const;

  void add_term(Exponents e, Int c);

  /// Map each variable of this polynomial to a monomial of a target ring.
  LaurentPoly substitute(const std::vector<std::string>& new_vars,
                         const std::vector<std::pair<Exponents, Int>>&
                             images) const;

  std::string str() const;  // canonical monomial order (lex exponents)

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Int> terms_;
};

/// Dense matrix over a Laurent polynomial ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(int rows, int cols, std::vector<std::string> vars);

  static RingMatrix identity(int n, std::vector<std::string> vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }

  LaurentPoly& at(int r, int c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& at(int r, int c) const { return entries_[r * cols_ + c]; }

  bool is_identity() const;
  std::string str() const;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  /// Apply a variable-to-monomial substitution entrywise.
  RingMatrix substitute(const std::vector<std::string>& new_vars,
                        const std::vector<std::pair<LaurentPoly::Exponents,
                                                    Int>>& images) const;

  /// Block-diagonal direct sum.
  friend RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::string> vars_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace fvb
