#include "alcs/oracle/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "alcs/edit_distance.hpp"

namespace alcs::oracle {

namespace {

using Bytes = std::vector<std::uint8_t>;

Bytes unpack(BitStringView v) {
  Bytes out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.bit(i) ? 1 : 0;
  return out;
}

// Last DP row of LCS(a[ab, ae), b[bb, be)), forward or backward.
void row_forward(const Bytes& a, std::size_t ab, std::size_t ae, const Bytes& b, std::size_t bb,
                 std::size_t be, std::vector<std::uint32_t>& row) {
  const std::size_t m = be - bb;
  row.assign(m + 1, 0);
  for (std::size_t i = ab; i < ae; ++i) {
    std::uint32_t diag = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t up = row[j];
      row[j] = a[i] == b[bb + j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
}

void row_backward(const Bytes& a, std::size_t ab, std::size_t ae, const Bytes& b, std::size_t bb,
                  std::size_t be, std::vector<std::uint32_t>& row) {
  const std::size_t m = be - bb;
  row.assign(m + 1, 0);
  for (std::size_t i = ae; i-- > ab;) {
    std::uint32_t diag = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t up = row[j];
      row[j] = a[i] == b[be - j] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
}

class Hirschberg {
 public:
  Hirschberg(const Bytes& a, const Bytes& b) : a_(a), b_(b) {}

  void run(std::size_t ab, std::size_t ae, std::size_t bb, std::size_t be) {
    if (ab >= ae || bb >= be) return;
    if (ae - ab == 1) {
      for (std::size_t j = bb; j < be; ++j) {
        if (b_[j] == a_[ab]) {
          out.push(static_cast<Index>(ab), static_cast<Index>(j));
          return;
        }
      }
      return;
    }
    const std::size_t mid = ab + (ae - ab) / 2;
    row_forward(a_, ab, mid, b_, bb, be, fwd_);
    row_backward(a_, mid, ae, b_, bb, be, bwd_);
    const std::size_t m = be - bb;
    std::size_t best_j = 0;
    std::uint32_t best = 0;
    for (std::size_t j = 0; j <= m; ++j) {
      const std::uint32_t v = fwd_[j] + bwd_[m - j];
      if (v > best || j == 0) {
        best = v;
        best_j = j;
      }
    }
    run(ab, mid, bb, bb + best_j);
    run(mid, ae, bb + best_j, be);
  }

  SubsequenceWitness out;

 private:
  const Bytes& a_;
  const Bytes& b_;
  std::vector<std::uint32_t> fwd_;
  std::vector<std::uint32_t> bwd_;
};

}  // namespace

OracleResult lcs_dp(BitStringView a, BitStringView b) {
  const Bytes ua = unpack(a);
  const Bytes ub = unpack(b);
  Hirschberg h(ua, ub);
  h.run(0, ua.size(), 0, ub.size());
  OracleResult r;
  r.lcs_length = h.out.size();
  r.witness = std::move(h.out);
  r.fact1_upper = fact1_upper(a, b);
  return r;
}

std::size_t lcs_length(BitStringView a, BitStringView b) {
  const std::size_t m = b.size();
  if (a.size() == 0 || m == 0) return 0;
  const std::size_t words = b.word_count();
  const std::uint64_t top_mask = m % 64 == 0 ? ~0ULL : (1ULL << (m % 64)) - 1;
  std::vector<std::uint64_t> match1(words), match0(words), s(words, 0), x(words);
  for (std::size_t w = 0; w < words; ++w) {
    match1[w] = b.word(w);
    match0[w] = ~match1[w];
  }
  match0[words - 1] &= top_mask;
  match1[words - 1] &= top_mask;

  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& pm = a.bit(i) ? match1 : match0;
    // X = M | S; S = X & ((X - ((S << 1) | 1)) ^ X)
    std::uint64_t shift_in = 1;
    std::uint64_t borrow = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x[w] = pm[w] | s[w];
      const std::uint64_t y = (s[w] << 1) | shift_in;
      shift_in = s[w] >> 63;
      const std::uint64_t d1 = x[w] - y;
      const std::uint64_t b1 = x[w] < y ? 1 : 0;
      const std::uint64_t d2 = d1 - borrow;
      const std::uint64_t b2 = d1 < borrow ? 1 : 0;
      borrow = b1 | b2;
      s[w] = x[w] & (d2 ^ x[w]);
    }
    s[words - 1] &= top_mask;
  }
  std::size_t total = 0;
  for (std::uint64_t w : s) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t lcs_bruteforce(BitStringView a, BitStringView b) {
  const std::size_t n = a.size();
  if (n > kBruteforceCap) {
    throw OracleRefusal("lcs_bruteforce: |a| = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kBruteforceCap));
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::size_t j = 0;
    std::size_t len = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) continue;
      while (j < b.size() && b[j] != a[i]) ++j;
      if (j == b.size()) break;
      ++j;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

std::size_t fact1_upper(BitStringView a, BitStringView b) noexcept {
  return std::min(a.zeros(), b.zeros()) + std::min(a.ones(), b.ones());
}

bool ed_lcs_identity_check(BitStringView a, BitStringView b) {
  const Alignment al = exact_edit_distance(a, b);
  const std::size_t lcs = lcs_dp(a, b).lcs_length;
  return al.distance + 2 * lcs == a.size() + b.size();
}

}  // namespace alcs::oracle
