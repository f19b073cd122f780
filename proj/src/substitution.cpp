#include "slab/substitution.hpp"

namespace slab {

Substitution::Substitution(Alphabet domain, Alphabet codomain,
                           std::map<Letter, std::vector<Letter>> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), img_(std::move(images)) {
  for (int a = 1; a <= dom_.size(); ++a) {
    auto it = img_.find(a);
    require(it != img_.end() && !it->second.empty(), "invalid-arguments",
            "substitution must map every letter to a nonempty word");
    for (Letter x : it->second)
      require(x >= 1 && x <= cod_.size(), "invalid-arguments",
              "substitution image letter out of range");
  }
}

const std::vector<Letter>& Substitution::image(Letter a) const {
  auto it = img_.find(a);
  require(it != img_.end(), "invalid-arguments", "letter has no image");
  return it->second;
}

FiniteWord Substitution::apply(const FiniteWord& u) const {
  std::vector<Letter> out;
  for (Letter a : u.letters()) {
    const auto& im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return FiniteWord(cod_, std::move(out));
}

WordStream Substitution::apply(const WordStream& w, const std::string& label) const {
  require(w.alphabet() == dom_, "alphabet-mismatch",
          "stream alphabet does not match substitution domain");
  auto self = *this;
  // pos is owned by the stream's cache lock; extenders run single-threaded.
  auto pos = std::make_shared<std::uint64_t>(0);
  auto extend = [self, w, pos](std::vector<Letter>& buf) {
    const auto& im = self.image(w.at((*pos)++));
    buf.insert(buf.end(), im.begin(), im.end());
  };
  return WordStream(cod_, label.empty() ? "sigma(" + w.label() + ")" : label,
                    std::move(extend));
}

Substitution Substitution::sigma1() {
  Alphabet bin;
  return Substitution(bin, bin, {{1, {1}}, {2, {1, 2}}});
}

Substitution Substitution::sigma2() {
  Alphabet bin;
  return Substitution(bin, bin, {{1, {2, 1}}, {2, {2}}});
}

}  // namespace slab
