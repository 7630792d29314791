#include "fvb/fox.hpp"

#include <sstream>

namespace fvb {

GroupRingElement GroupRingElement::of_word(Word w, Int c) {
  GroupRingElement g(w.alphabet());
  g.add(w, std::move(c));
  return g;
}

GroupRingElement GroupRingElement::one(AlphabetPtr alphabet) {
  return of_word(Word(std::move(alphabet)), 1);
}

void GroupRingElement::add(const Word& w, Int c) {
  if (!alpha_) alpha_ = w.alphabet();
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (w.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      os << w.str();
    }
  }
  return os.str();
}

GroupRingElement operator+(const GroupRingElement& a,
                           const GroupRingElement& b) {
  GroupRingElement out = a;
  if (!out.alpha_) out.alpha_ = b.alpha_;
  for (const auto& [w, c] : b.terms_) out.add(w, c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement out(a.alpha_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a,
                           const GroupRingElement& b) {
  return a + (-b);
}

GroupRingElement operator*(const GroupRingElement& a,
                           const GroupRingElement& b) {
  GroupRingElement out(a.alpha_ ? a.alpha_ : b.alpha_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(multiply(wa, wb), ca * cb);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.terms_ == b.terms_;
}

GroupRingElement fox_derivative(const Word& w, int sym) {
  const AlphabetPtr& alpha = w.alphabet();
  if (!alpha) throw input_error("fox_derivative on alphabet-less word");
  if (sym < 0 || sym >= alpha->size())
    throw input_error("unknown symbol id in fox_derivative");
  if (!alpha->is_free())
    throw domain_error(
        "fox_derivative requires a free alphabet (commuting pairs present)");
  GroupRingElement out(alpha);
  std::vector<Letter> prefix;
  for (const Letter& l : w.letters()) {
    if (l.sym == sym) {
      if (l.exp == 1) {
        out.add(Word::normalize(alpha, prefix), 1);
      } else {
        std::vector<Letter> pre = prefix;
        pre.push_back(l);
        out.add(Word::normalize(alpha, std::move(pre)), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::string_view sym) {
  return fox_derivative(w, w.alphabet()->id(sym));
}

MonomialAssignment generic_xy_assignment(int n) {
  MonomialAssignment a;
  for (int i = 1; i <= n; ++i) a.vars.push_back("p" + std::to_string(i));
  for (int i = 1; i <= n; ++i) a.vars.push_back("q" + std::to_string(i));
  a.image.assign(2 * n, LaurentPoly::Exponents(2 * n, 0));
  for (int s = 0; s < 2 * n; ++s) a.image[s][s] = 1;
  return a;
}

MonomialAssignment standard_xy_assignment(int n) {
  MonomialAssignment a;
  a.vars = {"p"};
  a.image.assign(2 * n, LaurentPoly::Exponents{0});
  for (int s = 0; s < n; ++s) a.image[s][0] = 1;  // x_i -> p, y_i -> 1
  return a;
}

LaurentPoly abelianize(const GroupRingElement& g, const MonomialAssignment& a) {
  LaurentPoly out(a.vars);
  for (const auto& [w, c] : g.terms()) {
    LaurentPoly::Exponents e(a.vars.size(), 0);
    for (const Letter& l : w.letters()) {
      if (l.sym >= static_cast<int>(a.image.size()))
        throw input_error("assignment missing symbol " +
                          w.alphabet()->name(l.sym));
      const auto& m = a.image[l.sym];
      for (size_t v = 0; v < e.size(); ++v) e[v] += l.exp * m[v];
    }
    out.add_term(std::move(e), c);
  }
  return out;
}

RingMatrix magnus_matrix(const Endomorphism& e, const MonomialAssignment& a) {
  const AlphabetPtr& alpha = e.alphabet();
  if (!alpha) throw input_error("magnus_matrix on alphabet-less endomorphism");
  int d = alpha->size();
  if (static_cast<int>(a.image.size()) != d)
    throw input_error("assignment size does not match alphabet");
  RingMatrix m(d, d, a.vars);
  for (int i = 0; i < d; ++i) {
    Word img = e.image(i);
    for (int j = 0; j < d; ++j)
      m.at(i, j) = abelianize(fox_derivative(img, j), a);
  }
  return m;
}

const RingMatrix& LinearRep::image(const BraidLetter& l) const {
  if (l.index < 1 || l.index > n - 1)
    throw input_error("generator index out of range");
  if (l.kind == BraidKind::Sigma)
    return l.exp >= 0 ? sigma[l.index - 1] : sigma_inv[l.index - 1];
  return l.exp >= 0 ? rho[l.index - 1] : rho_inv[l.index - 1];
}

namespace {

// reorder a 2n x 2n Magnus matrix from block order (x_1..x_n, y_1..y_n)
// to the interleaved basis (e_1, f_1, ..., e_n, f_n)
RingMatrix interleave2(const RingMatrix& m, int n) {
  std::vector<int> perm(2 * n);
  for (int i = 0; i < n; ++i) {
    perm[2 * i] = i;          // e_i = row of x_{i+1}
    perm[2 * i + 1] = n + i;  // f_i = row of y_{i+1}
  }
  RingMatrix out(2 * n, 2 * n, m.vars());
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) out.at(r, c) = m.at(perm[r], perm[c]);
  return out;
}

LaurentPoly zpoly(const std::vector<std::string>& vars, long long c) {
  return LaurentPoly::constant(vars, c);
}

}  // namespace

LinearRep linear_theta(int n) {
  if (n < 2) throw input_error("linear_theta requires n >= 2");
  Representation th = theta(n);
  MonomialAssignment a = standard_xy_assignment(n);
  LinearRep rep;
  rep.name = "Theta";
  rep.n = n;
  rep.dim = 2 * n;
  rep.basis = "e1,f1,...,en,fn";
  rep.vars = a.vars;
  for (int i = 1; i <= n - 1; ++i) {
    RingMatrix s = interleave2(
        magnus_matrix(th.image({BraidKind::Sigma, i, 1}), a), n);
    RingMatrix r = interleave2(
        magnus_matrix(th.image({BraidKind::Rho, i, 1}), a), n);
    // both theta letters are involutions, so each matrix is its own inverse
    rep.sigma.push_back(s);
    rep.sigma_inv.push_back(std::move(s));
    rep.rho.push_back(r);
    rep.rho_inv.push_back(std::move(r));
  }
  return rep;
}

LinearRep linear_delta(int n) {
  if (n < 2) throw input_error("linear_delta requires n >= 2");
  LinearRep rep;
  rep.name = "Delta";
  rep.n = n;
  rep.dim = 3 * n;
  rep.basis = "e1,f1,g1,...,en,fn,gn";
  rep.vars = {};
  auto E = [&](int i) { return 3 * (i - 1); };      // row/col of e_i
  auto G = [&](int i) { return 3 * (i - 1) + 2; };  // g_i
  for (int i = 1; i <= n - 1; ++i) {
    RingMatrix s = RingMatrix::identity(3 * n, rep.vars);
    s.at(E(i), E(i)) = zpoly(rep.vars, 0);
    s.at(E(i), E(i + 1)) = zpoly(rep.vars, 1);  // e_i -> e_{i+1} + g_i
    s.at(E(i), G(i)) = zpoly(rep.vars, 1);
    s.at(E(i + 1), E(i + 1)) = zpoly(rep.vars, 0);
    s.at(E(i + 1), E(i)) = zpoly(rep.vars, 1);  // e_{i+1} -> e_i - g_{i+1}
    s.at(E(i + 1), G(i + 1)) = zpoly(rep.vars, -1);
    s.at(G(i), G(i)) = zpoly(rep.vars, 0);
    s.at(G(i), G(i + 1)) = zpoly(rep.vars, 1);
    s.at(G(i + 1), G(i + 1)) = zpoly(rep.vars, 0);
    s.at(G(i + 1), G(i)) = zpoly(rep.vars, 1);

    RingMatrix r = RingMatrix::identity(3 * n, rep.vars);
    for (int off = 0; off < 3; ++off) {  // swap e, f, g alike
      int a = 3 * (i - 1) + off, b = 3 * i + off;
      r.at(a, a) = zpoly(rep.vars, 0);
      r.at(a, b) = zpoly(rep.vars, 1);
      r.at(b, b) = zpoly(rep.vars, 0);
      r.at(b, a) = zpoly(rep.vars, 1);
    }
    rep.sigma.push_back(s);
    rep.sigma_inv.push_back(std::move(s));
    rep.rho.push_back(r);
    rep.rho_inv.push_back(std::move(r));
  }
  return rep;
}

LinearRep linear_theta_delta(int n) {
  LinearRep th = linear_theta(n);
  LinearRep dl = linear_delta(n);
  LinearRep rep;
  rep.name = "ThetaDelta";
  rep.n = n;
  rep.dim = 5 * n;
  rep.basis = th.basis + " | " + dl.basis;
  rep.vars = th.vars;
  auto lift = [&](const RingMatrix& m) {
    // Delta matrices live over the empty ring; re-express over Z[p]
    RingMatrix out(m.rows(), m.cols(), rep.vars);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        for (const auto& [e, coef] : m.at(r, c).terms())
          out.at(r, c).add_term(LaurentPoly::Exponents{0}, coef);
    return out;
  };
  for (int i = 0; i < n - 1; ++i) {
    RingMatrix s = direct_sum(th.sigma[i], lift(dl.sigma[i]));
    RingMatrix r = direct_sum(th.rho[i], lift(dl.rho[i]));
    rep.sigma.push_back(s);
    rep.sigma_inv.push_back(std::move(s));
    rep.rho.push_back(r);
    rep.rho_inv.push_back(std::move(r));
  }
  return rep;
}

LinearRep linear_theta_generic(int n) {
  if (n < 2) throw input_error("linear_theta_generic requires n >= 2");
  Representation th = theta(n);
  MonomialAssignment a = generic_xy_assignment(n);
  LinearRep rep;
  rep.name = "generic-Theta";
  rep.n = n;
  rep.dim = 2 * n;
  rep.basis = "x1,...,xn,y1,...,yn";
  rep.vars = a.vars;
  for (int i = 1; i <= n - 1; ++i) {
    // theta letters are involutions, so the inverse letter has the same
    // endomorphism image and hence the same formal Magnus matrix
    RingMatrix s = magnus_matrix(th.image({BraidKind::Sigma, i, 1}), a);
    RingMatrix r = magnus_matrix(th.image({BraidKind::Rho, i, 1}), a);
    rep.sigma.push_back(s);
    rep.sigma_inv.push_back(std::move(s));
    rep.rho.push_back(r);
    rep.rho_inv.push_back(std::move(r));
  }
  return rep;
}

LinearRep make_linear(std::string_view selector, int n) {
  if (selector == "Theta") return linear_theta(n);
  if (selector == "Delta") return linear_delta(n);
  if (selector == "ThetaDelta") return linear_theta_delta(n);
  throw input_error("unknown matrix representation: " + std::string(selector));
}

RingMatrix apply_linear(const LinearRep& rep, const BraidWord& b) {
  if (b.n != rep.n) throw input_error("strand count mismatch");
  RingMatrix acc = RingMatrix::identity(rep.dim, rep.vars);
  for (const BraidLetter& l : b.letters) acc = acc * rep.image(l);
  return acc;
}

std::string GenericMagnusReport::str() const {
  std::ostringstream os;
  os << "generic coefficients:\n" << generic.str();
  os << "\nafter p_i -> p, q_i -> 1:\n" << specialized.str();
  return os.str();
}

GenericMagnusReport generic_magnus_check(int n) {
  if (n < 2 || n > 4)
    throw input_error("generic_magnus_check supports 2 <= n <= 4");
  LinearRep gen = linear_theta_generic(n);
  LinearRep special = linear_theta(n);
  GenericMagnusReport rep;
  auto witness = [](const RingMatrix& l, const RingMatrix& r) {
    for (int i = 0; i < l.rows(); ++i)
      for (int j = 0; j < l.cols(); ++j)
        if (!(l.at(i, j) == r.at(i, j)))
          return "entry (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "): " + l.at(i, j).str() + " vs " +
                 r.at(i, j).str();
    return std::string();
  };
  rep.generic = verify_relations(
      "generic-Theta", n, BraidMode::FVB,
      [&](const BraidWord& b) { return apply_linear(gen, b); }, witness);
  rep.specialized = verify_relations(
      "Theta", n, BraidMode::FVB,
      [&](const BraidWord& b) { return apply_linear(special, b); }, witness);
  return rep;
}

}  // namespace fvb
