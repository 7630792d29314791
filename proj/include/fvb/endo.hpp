#pragma once

#include <map>
#include <string>

#include "fvb/word.hpp"

namespace fvb {

/// Endomorphism of a word group, given by generator images.  Symbols absent
/// from the image map are fixed.  Composition follows the right-action
/// convention: (e1 e2)(w) = e2(e1(w)).
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}

  static Endomorphism identity(AlphabetPtr alphabet) {
    return Endomorphism(std::move(alphabet));
  }

  const AlphabetPtr& alphabet() const { return alpha_; }

  /// Set the image of a symbol; a trivial image (the symbol itself) is
  /// stored as "fixed".
  void set_image(std::string_view sym, Word image);
  Word image(int sym) const;
  Word image(std::string_view sym) const { return image(alpha_->id(sym)); }

  Word apply(const Word& w) const;

  /// this followed by e2 (right action, word order).
  Endomorphism then(const Endomorphism& e2) const;

  bool is_identity() const { return images_.empty(); }
  std::string str() const;  // per-symbol table, fixed symbols suppressed

  /// Symbols with a non-trivial image, in alphabet order.
  const std::map<int, Word>& images() const { return images_; }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b);

 private:
  AlphabetPtr alpha_;
  std::map<int, Word> images_;
};

inline Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  return e1.then(e2);
}

Endomorphism power(const Endomorphism& e, long long k);

}  // namespace fvb
