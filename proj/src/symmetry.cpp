#include "alcs/symmetry.hpp"

#include <algorithm>
#include <utility>

#include "alcs/errors.hpp"

namespace alcs {

std::string SymmetryTransform::to_string() const {
  std::string out;
  auto add = [&out](const char* part) {
    if (!out.empty()) out += '+';
    out += part;
  };
  if (swap_ab) add("swap");
  if (complement) add("complement");
  if (reverse) add("reverse");
  return out.empty() ? "identity" : out;
}

std::array<SymmetryTransform, 8> SymmetryTransform::all() noexcept {
  std::array<SymmetryTransform, 8> out{};
  for (unsigned m = 0; m < 8; ++m) {
    out[m] = SymmetryTransform{(m & 1u) != 0, (m & 2u) != 0, (m & 4u) != 0};
  }
  return out;
}

StringPair apply_transform(BitStringView a, BitStringView b, SymmetryTransform t) {
  StringPair p{BitString::from_view(a), BitString::from_view(b)};
  if (t.swap_ab) std::swap(p.a, p.b);
  if (t.complement) {
    p.a = p.a.complemented();
    p.b = p.b.complemented();
  }
  if (t.reverse) {
    p.a = p.a.reversed();
    p.b = p.b.reversed();
  }
  return p;
}

namespace {

void check_structure(const SubsequenceWitness& w, std::size_t len_a, std::size_t len_b) {
  if (w.a_indices.size() != w.b_indices.size()) {
    throw CertificationError("witness index sequences differ in length");
  }
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w.a_indices[t] >= len_a || w.b_indices[t] >= len_b) {
      throw CertificationError("witness index out of bounds");
    }
    if (t > 0 && (w.a_indices[t] <= w.a_indices[t - 1] || w.b_indices[t] <= w.b_indices[t - 1])) {
      throw CertificationError("witness indices not strictly increasing");
    }
  }
}

}  // namespace

SubsequenceWitness pull_back_witness(SubsequenceWitness w, SymmetryTransform t, std::size_t len_a,
                                     std::size_t len_b) {
  // Lengths as seen by the transformed pair.
  const std::size_t ta = t.swap_ab ? len_b : len_a;
  const std::size_t tb = t.swap_ab ? len_a : len_b;
  check_structure(w, ta, tb);
  if (t.reverse) {
    for (Index& i : w.a_indices) i = static_cast<Index>(ta - 1 - i);
    for (Index& j : w.b_indices) j = static_cast<Index>(tb - 1 - j);
    std::reverse(w.a_indices.begin(), w.a_indices.end());
    std::reverse(w.b_indices.begin(), w.b_indices.end());
  }
  if (t.swap_ab) std::swap(w.a_indices, w.b_indices);
  return w;
}

}  // namespace alcs
