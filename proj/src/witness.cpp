#include "alcs/witness.hpp"

#include <algorithm>
#include <string>

namespace alcs {

void SubsequenceWitness::append(const SubsequenceWitness& tail, std::size_t a_shift,
                                std::size_t b_shift) {
  reserve(size() + tail.size());
  for (std::size_t t = 0; t < tail.size(); ++t) {
    push(tail.a_indices[t] + a_shift, tail.b_indices[t] + b_shift);
  }
}

void SubsequenceWitness::truncate(std::size_t k) {
  if (k >= size()) return;
  a_indices.resize(k);
  b_indices.resize(k);
}

bool verify_witness(BitStringView a, BitStringView b, const SubsequenceWitness& w) noexcept {
  const std::size_t k = w.a_indices.size();
  if (w.b_indices.size() != k) return false;
  if (k > std::min(a.size(), b.size())) return false;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t i = w.a_indices[t];
    const std::size_t j = w.b_indices[t];
    if (i >= a.size() || j >= b.size()) return false;
    if (t > 0 && (i <= w.a_indices[t - 1] || j <= w.b_indices[t - 1])) return false;
    if (a.bit(i) != b.bit(j)) return false;
  }
  return true;
}

std::string witness_string(BitStringView a, const SubsequenceWitness& w) {
  std::string out;
  out.reserve(w.size());
  for (Index i : w.a_indices) out.push_back(a.bit(i) ? '1' : '0');
  return out;
}

}  // namespace alcs
