#include "fvb/endo.hpp"

namespace fvb {

namespace {
void require_compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return;
  if (a && b && a->same_content(*b)) return;
  throw domain_error("alphabet mismatch");
}
}  // namespace

void Endomorphism::set_image(std::string_view sym, Word image) {
  require_compatible(alpha_, image.alphabet());
  int id = alpha_->id(sym);
  if (image.length() == 1 && image.letters()[0] == Letter{id, 1}) {
    images_.erase(id);
  } else {
    images_[id] = std::move(image);
  }
}

Word Endomorphism::image(int sym) const {
  auto it = images_.find(sym);
  if (it != images_.end()) return it->second;
  return Word::normalize(alpha_, {{sym, 1}});
}

Word Endomorphism::apply(const Word& w) const {
  require_compatible(alpha_, w.alphabet());
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    auto it = images_.find(l.sym);
    if (it == images_.end()) {
      raw.push_back(l);
      continue;
    }
    const Word& img = l.exp > 0 ? it->second : invert(it->second);
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word::normalize(alpha_, std::move(raw));
}

Endomorphism Endomorphism::then(const Endomorphism& e2) const {
  require_compatible(alpha_, e2.alpha_);
  Endomorphism out(alpha_);
  for (int s = 0; s < alpha_->size(); ++s) {
    Word img = e2.apply(image(s));
    if (img.length() == 1 && img.letters()[0] == Letter{s, 1}) continue;
    out.images_[s] = std::move(img);
  }
  return out;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  require_compatible(a.alpha_, b.alpha_);
  return a.images_ == b.images_;
}

std::string Endomorphism::str() const {
  if (images_.empty()) return "id";
  std::string out;
  for (const auto& [sym, img] : images_) {
    if (!out.empty()) out += '\n';
    out += alpha_->name(sym) + " -> " + img.str();
  }
  return out;
}

Endomorphism power(const Endomorphism& e, long long k) {
  if (k < 0) throw domain_error("power expects a nonnegative exponent");
  Endomorphism acc = Endomorphism::identity(e.alphabet());
  for (long long i = 0; i < k; ++i) acc = acc.then(e);
  return acc;
}

}  // namespace fvb
