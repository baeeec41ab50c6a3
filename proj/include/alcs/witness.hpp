#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alcs/bit_string.hpp"

namespace alcs {

// A certified common subsequence: position a_indices[t] of A is paired with
// position b_indices[t] of B. Both sequences are strictly increasing.
struct SubsequenceWitness {
  std::vector<Index> a_indices;
  std::vector<Index> b_indices;

  std::size_t size() const noexcept { return a_indices.size(); }
  bool empty() const noexcept { return a_indices.empty(); }

  void push(std::size_t a, std::size_t b) {
    a_indices.push_back(static_cast<Index>(a));
    b_indices.push_back(static_cast<Index>(b));
  }

  // Appends `tail` with its positions shifted; callers guarantee that the
  // shifted positions lie past everything already stored.
  void append(const SubsequenceWitness& tail, std::size_t a_shift, std::size_t b_shift);

  void truncate(std::size_t k);
  void reserve(std::size_t k) {
    a_indices.reserve(k);
    b_indices.reserve(k);
  }

  friend bool operator==(const SubsequenceWitness&, const SubsequenceWitness&) = default;
};

// True iff w is a valid common-subsequence witness for (a, b).
bool verify_witness(BitStringView a, BitStringView b, const SubsequenceWitness& w) noexcept;

// The common string a witness spells out.
std::string witness_string(BitStringView a, const SubsequenceWitness& w);

}  // namespace alcs
