#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fvb/braid.hpp"
#include "fvb/endo.hpp"

namespace fvb {

/// Representation of a braid-like group by automorphisms of a word group,
/// given by precomputed letter images.
class Representation {
 public:
  Representation(std::string name, int n, AlphabetPtr target);

  const std::string& name() const { return name_; }
  int strands() const { return n_; }
  const AlphabetPtr& target() const { return target_; }

  void set_sigma(int i, Endomorphism img, std::optional<Endomorphism> inv = {});
  void set_rho(int i, Endomorphism img, std::optional<Endomorphism> inv = {});

  const Endomorphism& image(const BraidLetter& l) const;

  /// Fold of letter images in word order (right action).
  Endomorphism of(const BraidWord& b) const;

 private:
  std::string name_;
  int n_;
  AlphabetPtr target_;
  std::vector<Endomorphism> sigma_, sigma_inv_, rho_, rho_inv_;
};

/// The catalogue from the representation family: theta and its relatives.
Representation theta(int n);
Representation theta1(int n, long long m);
Representation theta2(int n);
Representation theta3(int n);
Representation theta4(int n);
Representation thetaG(int n);       // preserves the forbidden relations
Representation thetaGstar(int n);

/// Parse selector strings: theta, theta1:<m>, theta2, theta3, theta4,
/// thetaG, thetaGstar.
Representation make_representation(std::string_view selector, int n);

inline Endomorphism apply_rep(const Representation& rep, const BraidWord& b) {
  return rep.of(b);
}

bool kernel_witness_check(const Representation& rep, const BraidWord& b);

// ---------------------------------------------------------------------------
// Relation verification harness
// ---------------------------------------------------------------------------

enum class RelationFamily {
  SigmaComm,       // sigma_i sigma_j = sigma_j sigma_i,  |i-j| >= 2
  SigmaBraid,      // sigma_i sigma_{i+1} sigma_i = ...
  RhoInvolution,   // rho_i^2 = 1
  RhoComm,
  RhoBraid,
  MixedComm,       // sigma_i rho_j = rho_j sigma_i,  |i-j| >= 2
  MixedBraid,      // rho_i rho_{i+1} sigma_i = sigma_{i+1} rho_i rho_{i+1}
  SigmaInvolution, // sigma_i^2 = 1  (FVB and quotients)
  SigmaRhoComm,    // sigma_i rho_i = rho_i sigma_i  (GVB)
  Forbidden1,      // rho_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i rho_{i+1}
  Forbidden2,      // rho_{i+1} sigma_i sigma_{i+1} = sigma_i sigma_{i+1} rho_i
};

std::string_view family_name(RelationFamily f);

struct RelationInstance {
  RelationFamily family;
  std::vector<int> indices;
  BraidWord lhs, rhs;
  bool required;  // defining relation for the mode (false for forbidden)
};

/// Every admissible instantiation of every relation family for n strands;
/// defining families depend on the mode, the two forbidden families are
/// always included with required = false.
std::vector<RelationInstance> relation_instances(int n, BraidMode mode);

struct RelationCheck {
  RelationFamily family;
  std::vector<int> indices;
  bool holds;
  bool required;
  std::string witness;  // differing symbol / basis vector when !holds
};

struct RelationReport {
  std::string rep_name;
  int n = 0;
  BraidMode mode = BraidMode::FVB;
  std::vector<RelationCheck> checks;

  bool all_defining_hold() const;
  bool any_forbidden_fails() const;
  bool forbidden_hold() const;
  std::string str() const;
};

/// Generic harness: Image maps a braid word to a comparable value; witness
/// names the first observable difference.
template <class Image, class Witness>
RelationReport verify_relations(std::string rep_name, int n, BraidMode mode,
                                Image&& image, Witness&& witness) {
  RelationReport report;
  report.rep_name = std::move(rep_name);
  report.n = n;
  report.mode = mode;
  for (const RelationInstance& inst : relation_instances(n, mode)) {
    auto lhs = image(inst.lhs);
    auto rhs = image(inst.rhs);
    RelationCheck check;
    check.family = inst.family;
    check.indices = inst.indices;
    check.required = inst.required;
    check.holds = lhs == rhs;
    if (!check.holds) check.witness = witness(lhs, rhs);
    report.checks.push_back(std::move(check));
  }
  return report;
}

RelationReport verify_defining_relations(const Representation& rep,
                                         BraidMode mode);

// ---------------------------------------------------------------------------
// Gauss image
// ---------------------------------------------------------------------------

struct GaussImage {
  Permutation on_x;  // action on x_1..x_n modulo the normal closure of z
  Permutation on_y;
  std::vector<long long> z_residual;  // z-exponent of the image of each x_i
  bool is_identity() const;
};

/// Image of a braid under thetaGstar, decomposed as S_n x S_n plus residual
/// z-exponents.
GaussImage gauss_image(const BraidWord& b);

// ---------------------------------------------------------------------------
// Virtual 2-switch equations
// ---------------------------------------------------------------------------

struct SwitchReport {
  bool yang_baxter;
  bool v_involution;
  bool mixed;
  bool all_hold() const { return yang_baxter && v_involution && mixed; }
  std::string str() const;
};

/// Symbolic check of the three virtual-switch equations for
/// S(a,b;x,y) = (by, ay^{-1}; x, y), V(a,b;x,y) = (b,a;y,x).
SwitchReport switch_axiom_check();

}  // namespace fvb
