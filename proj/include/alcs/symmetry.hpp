#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "alcs/bit_string.hpp"
#include "alcs/witness.hpp"

namespace alcs {

// A composition of the three LCS-preserving bijections on string pairs,
// always applied in the order swap, complement, reverse.
struct SymmetryTransform {
  bool swap_ab = false;
  bool complement = false;
  bool reverse = false;

  bool is_identity() const noexcept { return !swap_ab && !complement && !reverse; }
  std::string to_string() const;

  static std::array<SymmetryTransform, 8> all() noexcept;

  friend bool operator==(const SymmetryTransform&, const SymmetryTransform&) = default;
};

struct StringPair {
  BitString a;
  BitString b;
};

StringPair apply_transform(BitStringView a, BitStringView b, SymmetryTransform t);

// Maps a witness for the transformed pair back onto the original pair whose
// lengths are (len_a, len_b). Throws CertificationError if w is not
// structurally valid for the transformed pair.
SubsequenceWitness pull_back_witness(SubsequenceWitness w, SymmetryTransform t, std::size_t len_a,
                                     std::size_t len_b);

}  // namespace alcs
