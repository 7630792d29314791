#include "fvb/laurent.hpp"

#include <sstream>

namespace fvb {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Int c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents e,
                                  Int c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.vars_.size())
    throw domain_error("monomial exponent arity mismatch");
  p.add_term(std::move(e), std::move(c));
  return p;
}

bool LaurentPoly::is_constant(const Int& c) const {
  if (c == 0) return terms_.empty();
  if (terms_.size() != 1) return false;
  const auto& [e, coef] = *terms_.begin();
  for (int k : e)
    if (k != 0) return false;
  return coef == c;
}

void LaurentPoly::add_term(Exponents e, Int c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::substitute(
    const std::vector<std::string>& new_vars,
    const std::vector<std::pair<Exponents, Int>>& images) const {
  if (images.size() != vars_.size())
    throw domain_error("substitution arity mismatch");
  LaurentPoly out(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_vars.size(), 0);
    Int nc = c;
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      const auto& [img_e, img_c] = images[v];
      for (size_t w = 0; w < ne.size(); ++w) ne[w] += e[v] * img_e[w];
      // only unit monomial images keep the ring map well defined for
      // negative exponents
      if (img_c == 1) {
        // nothing
      } else if (img_c == -1) {
        if (e[v] % 2 != 0) nc = -nc;
      } else {
        throw domain_error("substitution image must be a unit monomial");
      }
    }
    out.add_term(std::move(ne), std::move(nc));
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
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
    std::string mono;
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += vars_[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      os << mono;
    }
  }
  return os.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  if (out.vars_.empty()) out.vars_ = b.vars_;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.vars_.empty() ? b.vars_ : a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e = ea;
      for (size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.terms_ == b.terms_;
}

RingMatrix::RingMatrix(int rows, int cols, std::vector<std::string> vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  entries_.assign(static_cast<size_t>(rows) * cols, LaurentPoly(vars_));
}

RingMatrix RingMatrix::identity(int n, std::vector<std::string> vars) {
  RingMatrix m(n, n, std::move(vars));
  for (int i = 0; i < n; ++i)
    m.at(i, i) = LaurentPoly::constant(m.vars_, 1);
  return m;
}

bool RingMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_constant(r == c ? 1 : 0)) return false;
  return true;
}

std::string RingMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]";
    if (r + 1 < rows_) os << "\n";
  }
  return os.str();
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.rows_) throw domain_error("matrix shape mismatch");
  RingMatrix out(a.rows_, b.cols_, a.vars_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c)
        out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
    }
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw domain_error("matrix shape mismatch");
  RingMatrix out(a.rows_, a.cols_, a.vars_);
  for (size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

RingMatrix RingMatrix::substitute(
    const std::vector<std::string>& new_vars,
    const std::vector<std::pair<LaurentPoly::Exponents, Int>>& images) const {
  RingMatrix out(rows_, cols_, new_vars);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i].substitute(new_vars, images);
  return out;
}

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_, a.vars_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c)
      out.at(a.rows_ + r, a.cols_ + c) = b.at(r, c);
  return out;
}

}  // namespace fvb
