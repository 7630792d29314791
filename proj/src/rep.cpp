#include "fvb/rep.hpp"

#include <array>
#include <sstream>

namespace fvb {

Representation::Representation(std::string name, int n, AlphabetPtr target)
    : name_(std::move(name)), n_(n), target_(std::move(target)) {
  if (n_ < 2) throw input_error("representation needs n >= 2");
  sigma_.assign(n_ - 1, Endomorphism::identity(target_));
  sigma_inv_ = sigma_;
  rho_ = sigma_;
  rho_inv_ = sigma_;
}

void Representation::set_sigma(int i, Endomorphism img,
                               std::optional<Endomorphism> inv) {
  sigma_inv_[i - 1] = inv ? std::move(*inv) : img;
  sigma_[i - 1] = std::move(img);
}

void Representation::set_rho(int i, Endomorphism img,
                             std::optional<Endomorphism> inv) {
  rho_inv_[i - 1] = inv ? std::move(*inv) : img;
  rho_[i - 1] = std::move(img);
}

const Endomorphism& Representation::image(const BraidLetter& l) const {
  if (l.index < 1 || l.index >= n_)
    throw domain_error("braid letter index out of range for representation");
  if (l.kind == BraidKind::Sigma)
    return l.exp > 0 ? sigma_[l.index - 1] : sigma_inv_[l.index - 1];
  return l.exp > 0 ? rho_[l.index - 1] : rho_inv_[l.index - 1];
}

Endomorphism Representation::of(const BraidWord& b) const {
  if (b.n != n_) throw domain_error("strand mismatch");
  Endomorphism acc = Endomorphism::identity(target_);
  for (const BraidLetter& l : b.letters) acc = acc.then(image(l));
  return acc;
}

namespace {

std::string xs(int i) { return "x" + std::to_string(i); }
std::string ys(int i) { return "y" + std::to_string(i); }

// Swap x_i <-> x_{i+1} and y_i <-> y_{i+1}.
Endomorphism xy_swap(const AlphabetPtr& a, int i) {
  Endomorphism e(a);
  e.set_image(xs(i), letter_word(a, xs(i + 1)));
  e.set_image(xs(i + 1), letter_word(a, xs(i)));
  e.set_image(ys(i), letter_word(a, ys(i + 1)));
  e.set_image(ys(i + 1), letter_word(a, ys(i)));
  return e;
}

}  // namespace

Representation theta(int n) { return theta1(n, 1); }

Representation theta1(int n, long long m) {
  AlphabetPtr a = xy_alphabet(n);
  std::string name = m == 1 ? "theta" : "theta1:" + std::to_string(m);
  Representation rep(name, n, a);
  for (int i = 1; i < n; ++i) {
    Endomorphism s(a);
    s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)),
                                word_pow(letter_word(a, ys(i + 1)), m)));
    s.set_image(xs(i + 1), multiply(letter_word(a, xs(i)),
                                    word_pow(letter_word(a, ys(i + 1)), -m)));
    rep.set_sigma(i, std::move(s));
    rep.set_rho(i, xy_swap(a, i));
  }
  return rep;
}

Representation theta2(int n) {
  AlphabetPtr a = xyz_alphabet(n);
  Representation rep("theta2", n, a);
  Word z = letter_word(a, "z");
  for (int i = 1; i < n; ++i) {
    Endomorphism s(a);
    s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)),
                                conjugate(letter_word(a, ys(i + 1)), z)));
    s.set_image(xs(i + 1),
                multiply(letter_word(a, xs(i)),
                         conjugate(letter_word(a, ys(i + 1), -1), z)));
    rep.set_sigma(i, std::move(s));
    rep.set_rho(i, xy_swap(a, i));
  }
  return rep;
}

Representation theta3(int n) {
  AlphabetPtr a = xyz_graph_alphabet(n);
  Representation rep("theta3", n, a);
  Word z = letter_word(a, "z");
  for (int i = 1; i < n; ++i) {
    Endomorphism s(a);
    s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)),
                                letter_word(a, ys(i + 1))));
    s.set_image(xs(i + 1), multiply(letter_word(a, xs(i)),
                                    letter_word(a, ys(i + 1), -1)));
    rep.set_sigma(i, std::move(s));
    Endomorphism r(a);
    r.set_image(xs(i), multiply(letter_word(a, xs(i + 1)), z));
    r.set_image(xs(i + 1), multiply(letter_word(a, xs(i)), invert(z)));
    r.set_image(ys(i), letter_word(a, ys(i + 1)));
    r.set_image(ys(i + 1), letter_word(a, ys(i)));
    rep.set_rho(i, std::move(r));
  }
  return rep;
}

Representation theta4(int n) {
  AlphabetPtr a = xyz_graph_alphabet(n);
  Representation rep("theta4", n, a);
  Word z = letter_word(a, "z");
  for (int i = 1; i < n; ++i) {
    Endomorphism s(a);
    s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)),
                                letter_word(a, ys(i + 1))));
    s.set_image(xs(i + 1), multiply(letter_word(a, xs(i)),
                                    letter_word(a, ys(i + 1), -1)));
    rep.set_sigma(i, std::move(s));
    Endomorphism r(a);
    r.set_image(xs(i), conjugate(letter_word(a, xs(i + 1)), z));
    r.set_image(xs(i + 1), conjugate(letter_word(a, xs(i)), invert(z)));
    r.set_image(ys(i), letter_word(a, ys(i + 1)));
    r.set_image(ys(i + 1), letter_word(a, ys(i)));
    rep.set_rho(i, std::move(r));
  }
  return rep;
}

namespace {
// Common sigma image x_i -> x_{i+1} z^{(-1)^i}, x_{i+1} -> x_i z^{(-1)^{i+1}}.
Endomorphism gauss_sigma(const AlphabetPtr& a, int i) {
  Word z = letter_word(a, "z");
  Endomorphism s(a);
  int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^i
  s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)), word_pow(z, sign)));
  s.set_image(xs(i + 1), multiply(letter_word(a, xs(i)), word_pow(z, -sign)));
  return s;
}
}  // namespace

Representation thetaG(int n) {
  AlphabetPtr a = xz_alphabet(n);
  Representation rep("thetaG", n, a);
  for (int i = 1; i < n; ++i) {
    rep.set_sigma(i, gauss_sigma(a, i));
    Endomorphism r(a);
    r.set_image(xs(i), letter_word(a, xs(i + 1)));
    r.set_image(xs(i + 1), letter_word(a, xs(i)));
    r.set_image("z", letter_word(a, "z", -1));
    rep.set_rho(i, std::move(r));
  }
  return rep;
}

Representation thetaGstar(int n) {
  // The sigma decoration u_i = y_i y_{i+1}^{-1} is reversed by the rho image
  // on the same index and fixed by every other letter image, which is exactly
  // what makes the whole defining-relation suite (including sigma-rho
  // commutation) hold while both forbidden relations still fail on y_i.
  // A z-power decoration cannot do this: inverting z on one index would have
  // to commute with multiplying by z on a far index.
  AlphabetPtr a = xyz_alphabet(n);
  Representation rep("thetaGstar", n, a);
  for (int i = 1; i < n; ++i) {
    Word ui = multiply(letter_word(a, ys(i)), letter_word(a, ys(i + 1), -1));
    Endomorphism s(a);
    s.set_image(xs(i), multiply(letter_word(a, xs(i + 1)), ui));
    s.set_image(xs(i + 1), multiply(letter_word(a, xs(i)), invert(ui)));
    rep.set_sigma(i, std::move(s));
    Endomorphism r(a);
    r.set_image(xs(i), letter_word(a, xs(i + 1)));
    r.set_image(xs(i + 1), letter_word(a, xs(i)));
    r.set_image(ys(i), letter_word(a, ys(i + 1)));
    r.set_image(ys(i + 1), letter_word(a, ys(i)));
    r.set_image("z", letter_word(a, "z", -1));
    rep.set_rho(i, std::move(r));
  }
  return rep;
}

Representation make_representation(std::string_view selector, int n) {
  std::string s(selector);
  if (s == "theta") return theta(n);
  if (s.rfind("theta1:", 0) == 0) {
    long long m;
    try {
      m = std::stoll(s.substr(7));
    } catch (const std::exception&) {
      throw input_error("bad theta1 parameter in selector: " + s);
    }
    return theta1(n, m);
  }
  if (s == "theta2") return theta2(n);
  if (s == "theta3") return theta3(n);
  if (s == "theta4") return theta4(n);
  if (s == "thetaG") return thetaG(n);
  if (s == "thetaGstar") return thetaGstar(n);
  throw input_error("unknown representation selector: " + s);
}

bool kernel_witness_check(const Representation& rep, const BraidWord& b) {
  return rep.of(b).is_identity();
}

// ---------------------------------------------------------------------------

std::string_view family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::SigmaComm: return "sigma-comm";
    case RelationFamily::SigmaBraid: return "sigma-braid";
    case RelationFamily::RhoInvolution: return "rho-involution";
    case RelationFamily::RhoComm: return "rho-comm";
    case RelationFamily::RhoBraid: return "rho-braid";
    case RelationFamily::MixedComm: return "mixed-comm";
    case RelationFamily::MixedBraid: return "mixed-braid";
    case RelationFamily::SigmaInvolution: return "sigma-involution";
    case RelationFamily::SigmaRhoComm: return "sigma-rho-comm";
    case RelationFamily::Forbidden1: return "forbidden-1";
    case RelationFamily::Forbidden2: return "forbidden-2";
  }
  return "?";
}

namespace {
BraidWord bw(int n, std::initializer_list<BraidLetter> ls) {
  return BraidWord(n, ls);
}
BraidLetter S(int i) { return {BraidKind::Sigma, i, 1}; }
BraidLetter R(int i) { return {BraidKind::Rho, i, 1}; }
}  // namespace

std::vector<RelationInstance> relation_instances(int n, BraidMode mode) {
  std::vector<RelationInstance> out;
  bool sigma_involutive = mode == BraidMode::FVB || mode == BraidMode::GVB ||
                          mode == BraidMode::FWB;
  // far commutation, |i-j| >= 2 (unordered pairs)
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      out.push_back({RelationFamily::SigmaComm, {i, j},
                     bw(n, {S(i), S(j)}), bw(n, {S(j), S(i)}), true});
      out.push_back({RelationFamily::RhoComm, {i, j},
                     bw(n, {R(i), R(j)}), bw(n, {R(j), R(i)}), true});
    }
  // mixed far commutation needs both orders of (sigma index, rho index)
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2)
        out.push_back({RelationFamily::MixedComm, {i, j},
                       bw(n, {S(i), R(j)}), bw(n, {R(j), S(i)}), true});
  // braid-type relations, i = 1..n-2
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({RelationFamily::SigmaBraid, {i},
                   bw(n, {S(i), S(i + 1), S(i)}),
                   bw(n, {S(i + 1), S(i), S(i + 1)}), true});
    out.push_back({RelationFamily::RhoBraid, {i},
                   bw(n, {R(i), R(i + 1), R(i)}),
                   bw(n, {R(i + 1), R(i), R(i + 1)}), true});
    out.push_back({RelationFamily::MixedBraid, {i},
                   bw(n, {R(i), R(i + 1), S(i)}),
                   bw(n, {S(i + 1), R(i), R(i + 1)}), true});
  }
  // involutions
  for (int i = 1; i < n; ++i) {
    out.push_back({RelationFamily::RhoInvolution, {i},
                   bw(n, {R(i), R(i)}), bw(n, {}), true});
    if (sigma_involutive)
      out.push_back({RelationFamily::SigmaInvolution, {i},
                     bw(n, {S(i), S(i)}), bw(n, {}), true});
    if (mode == BraidMode::GVB)
      out.push_back({RelationFamily::SigmaRhoComm, {i},
                     bw(n, {S(i), R(i)}), bw(n, {R(i), S(i)}), true});
  }
  // forbidden relations, always evaluated, never required
  bool forbidden_required = mode == BraidMode::WB || mode == BraidMode::FWB;
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({RelationFamily::Forbidden1, {i},
                   bw(n, {R(i), S(i + 1), S(i)}),
                   bw(n, {S(i + 1), S(i), R(i + 1)}), forbidden_required});
    out.push_back({RelationFamily::Forbidden2, {i},
                   bw(n, {R(i + 1), S(i), S(i + 1)}),
                   bw(n, {S(i), S(i + 1), R(i)}), forbidden_required});
  }
  return out;
}

bool RelationReport::all_defining_hold() const {
  for (const RelationCheck& c : checks)
    if (c.required && !c.holds) return false;
  return true;
}

bool RelationReport::any_forbidden_fails() const {
  for (const RelationCheck& c : checks)
    if ((c.family == RelationFamily::Forbidden1 ||
         c.family == RelationFamily::Forbidden2) &&
        !c.holds)
      return true;
  return false;
}

bool RelationReport::forbidden_hold() const {
  for (const RelationCheck& c : checks)
    if ((c.family == RelationFamily::Forbidden1 ||
         c.family == RelationFamily::Forbidden2) &&
        !c.holds)
      return false;
  return true;
}

std::string RelationReport::str() const {
  std::ostringstream out;
  out << "relation report: rep=" << rep_name << " n=" << n
      << " mode=" << mode_name(mode) << "\n";
  for (const RelationCheck& c : checks) {
    out << "  " << family_name(c.family) << " (";
    for (size_t k = 0; k < c.indices.size(); ++k)
      out << (k ? "," : "") << c.indices[k];
    out << ") " << (c.required ? "[defining] " : "[forbidden] ")
        << (c.holds ? "holds" : "FAILS");
    if (!c.holds && !c.witness.empty()) out << " witness: " << c.witness;
    out << "\n";
  }
  out << (all_defining_hold() ? "all defining relations hold"
                              : "DEFINING RELATION FAILURE");
  return out.str();
}

RelationReport verify_defining_relations(const Representation& rep,
                                         BraidMode mode) {
  auto image = [&rep](const BraidWord& w) { return rep.of(w); };
  auto witness = [](const Endomorphism& lhs, const Endomorphism& rhs) {
    const AlphabetPtr& a = lhs.alphabet();
    for (int s = 0; s < a->size(); ++s)
      if (!(lhs.image(s) == rhs.image(s)))
        return a->name(s) + ": " + lhs.image(s).str() + " vs " +
               rhs.image(s).str();
    return std::string();
  };
  return verify_relations(rep.name(), rep.strands(), mode, image, witness);
}

// ---------------------------------------------------------------------------

bool GaussImage::is_identity() const {
  if (!on_x.is_identity() || !on_y.is_identity()) return false;
  for (long long r : z_residual)
    if (r != 0) return false;
  return true;
}

GaussImage gauss_image(const BraidWord& b) {
  Representation rep = thetaGstar(b.n);
  Endomorphism e = rep.of(b);
  const AlphabetPtr& a = rep.target();
  int z_id = a->id("z");
  GaussImage out;
  std::vector<int> ximg(b.n), yimg(b.n);
  out.z_residual.resize(b.n, 0);
  for (int i = 1; i <= b.n; ++i) {
    // image of x_i is a single x_j followed by a decoration in the y's and z
    Word wx = e.image("x" + std::to_string(i));
    int target = -1;
    for (const Letter& l : wx.letters()) {
      if (l.sym == z_id) {
        out.z_residual[i - 1] += l.exp;
      } else if (l.sym >= b.n) {
        continue;  // y-block decoration, invisible to the permutation pair
      } else {
        if (target != -1 || l.exp != 1)
          throw domain_error("unexpected thetaGstar image shape");
        target = l.sym;
      }
    }
    ximg[i - 1] = target;  // alphabet ids of x_j are 0-based j-1
    Word wy = e.image("y" + std::to_string(i));
    if (wy.length() != 1)
      throw domain_error("unexpected thetaGstar image shape");
    yimg[i - 1] = wy.letters()[0].sym - b.n;  // y block starts at id n
  }
  out.on_x = Permutation::from_images(ximg);
  out.on_y = Permutation::from_images(yimg);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Element of the 2-switch carrier: a pair (group word over the full
// alphabet, tag word from the X_1 block).
struct SwitchElem {
  Word w;
  Word u;
  friend bool operator==(const SwitchElem&, const SwitchElem&) = default;
};

using Triple = std::array<SwitchElem, 3>;

// S((a,x),(b,y)) = ((b y, x), (a y^{-1}, y))
std::pair<SwitchElem, SwitchElem> switch_s(const SwitchElem& A,
                                           const SwitchElem& B) {
  SwitchElem A2{multiply(B.w, B.u), A.u};
  SwitchElem B2{multiply(A.w, invert(B.u)), B.u};
  return {A2, B2};
}

std::pair<SwitchElem, SwitchElem> switch_v(const SwitchElem& A,
                                           const SwitchElem& B) {
  return {B, A};
}

template <class F>
Triple apply12(const Triple& t, F&& f) {
  auto [a, b] = f(t[0], t[1]);
  return {a, b, t[2]};
}
template <class F>
Triple apply23(const Triple& t, F&& f) {
  auto [b, c] = f(t[1], t[2]);
  return {t[0], b, c};
}

}  // namespace

SwitchReport switch_axiom_check() {
  AlphabetPtr a = make_alphabet({"a", "b", "c", "x", "y", "z"});
  Triple t0 = {SwitchElem{letter_word(a, "a"), letter_word(a, "x")},
               SwitchElem{letter_word(a, "b"), letter_word(a, "y")},
               SwitchElem{letter_word(a, "c"), letter_word(a, "z")}};
  SwitchReport rep{};
  {
    Triple lhs = apply12(apply23(apply12(t0, switch_s), switch_s), switch_s);
    Triple rhs = apply23(apply12(apply23(t0, switch_s), switch_s), switch_s);
    rep.yang_baxter = lhs == rhs;
  }
  {
    // V^2 = id on a pair
    auto [p, q] = switch_v(t0[0], t0[1]);
    auto [p2, q2] = switch_v(p, q);
    rep.v_involution = p2 == t0[0] && q2 == t0[1];
  }
  {
    Triple lhs = apply23(apply12(apply23(t0, switch_v), switch_s), switch_v);
    Triple rhs = apply12(apply23(apply12(t0, switch_v), switch_s), switch_v);
    rep.mixed = lhs == rhs;
  }
  return rep;
}

std::string SwitchReport::str() const {
  std::string out;
  out += std::string("yang-baxter: ") + (yang_baxter ? "holds" : "FAILS") + "\n";
  out += std::string("v-involution: ") + (v_involution ? "holds" : "FAILS") + "\n";
  out += std::string("mixed relation: ") + (mixed ? "holds" : "FAILS");
  return out;
}

}  // namespace fvb
