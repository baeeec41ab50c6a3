#include "alcs/exact_lcs.hpp"

#include <algorithm>
#include <cstdint>

namespace alcs {

namespace detail {

namespace {

// Prefix zero counts of b: z[q] = zeros in b[0, q).
std::vector<std::uint32_t> zero_prefix(BitStringView b) {
  std::vector<std::uint32_t> z(b.size() + 1, 0);
  for (std::size_t q = 0; q < b.size(); ++q) z[q + 1] = z[q] + (b.bit(q) ? 0u : 1u);
  return z;
}

// next[p] = max over q <= p of row[q] + min(g, z[p] - z[q]), i.e. the row
// after appending g zeros to the A-side. Sliding-window maximum over the q
// whose zero gap to p is still below g.
void append_zero_run(const std::vector<std::uint32_t>& row, const std::vector<std::uint32_t>& z,
                     std::size_t g, std::vector<std::uint32_t>& next,
                     std::vector<std::uint32_t>& window) {
  const std::size_t m = row.size() - 1;
  auto value = [&](std::size_t q) {
    return static_cast<std::int64_t>(row[q]) - static_cast<std::int64_t>(z[q]);
  };
  std::size_t head = 0;
  std::size_t tail = 0;
  std::ptrdiff_t saturated = -1;  // largest q with z[q] + g <= z[p]
  for (std::size_t p = 0; p <= m; ++p) {
    while (tail > head && value(window[tail - 1]) <= value(p)) --tail;
    window[tail++] = static_cast<std::uint32_t>(p);
    while (static_cast<std::size_t>(saturated + 1) <= p && z[saturated + 1] + g <= z[p]) {
      ++saturated;
    }
    while (static_cast<std::ptrdiff_t>(window[head]) <= saturated) ++head;
    std::int64_t best = value(window[head]) + z[p];
    if (saturated >= 0) {
      best = std::max<std::int64_t>(best, static_cast<std::int64_t>(row[saturated]) +
                                              static_cast<std::int64_t>(g));
    }
    next[p] = static_cast<std::uint32_t>(best);
  }
}

// next[p] = max(row[p], row[o] + 1) with o the last one of b before p.
void append_one(const std::vector<std::uint32_t>& row, BitStringView b,
                std::vector<std::uint32_t>& next) {
  const std::size_t m = b.size();
  std::ptrdiff_t last_one = -1;
  next[0] = row[0];
  for (std::size_t p = 1; p <= m; ++p) {
    if (b.bit(p - 1)) last_one = static_cast<std::ptrdiff_t>(p - 1);
    std::uint32_t v = row[p];
    if (last_one >= 0) v = std::max(v, row[last_one] + 1);
    next[p] = v;
  }
}

}  // namespace

std::vector<std::uint32_t> lcs_row_sparse(BitStringView a, BitStringView b) {
  const std::size_t m = b.size();
  std::vector<std::uint32_t> row(m + 1, 0);
  std::vector<std::uint32_t> next(m + 1, 0);
  std::vector<std::uint32_t> window(m + 1, 0);
  const std::vector<std::uint32_t> z = zero_prefix(b);
  std::vector<Index> ones;
  a.first_occurrences(Symbol::one, a.ones(), 0, ones);
  std::size_t run_start = 0;
  for (std::size_t t = 0; t <= ones.size(); ++t) {
    const std::size_t end = t < ones.size() ? ones[t] : a.size();
    if (end > run_start) {
      append_zero_run(row, z, end - run_start, next, window);
      row.swap(next);
    }
    if (t < ones.size()) {
      append_one(row, b, next);
      row.swap(next);
      run_start = end + 1;
    }
  }
  return row;
}

std::vector<std::uint32_t> lcs_row_bitparallel(BitStringView a, BitStringView b) {
  const std::size_t m = b.size();
  const std::size_t nw = b.word_count();
  std::vector<std::uint64_t> match_one(nw), match_zero(nw), v(nw, ~std::uint64_t{0});
  const std::uint64_t tail_mask =
      (m % 64 == 0) ? ~std::uint64_t{0} : (std::uint64_t{1} << (m % 64)) - 1;
  for (std::size_t w = 0; w < nw; ++w) {
    match_one[w] = b.word(w);
    match_zero[w] = ~match_one[w];
  }
  if (nw > 0) {
    match_zero[nw - 1] &= tail_mask;
    v[nw - 1] &= tail_mask;
  }
  // Bit j of v is 0 exactly where the LCS row steps up at column j.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::vector<std::uint64_t>& pm = a.bit(i) ? match_one : match_zero;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < nw; ++w) {
      const std::uint64_t x = v[w];
      const std::uint64_t u = x & pm[w];
      std::uint64_t sum = x + u;
      std::uint64_t c1 = sum < x ? 1 : 0;
      std::uint64_t sum2 = sum + carry;
      std::uint64_t c2 = sum2 < sum ? 1 : 0;
      carry = c1 | c2;
      v[w] = sum2 | (x & ~pm[w]);
    }
    if (nw > 0) v[nw - 1] &= tail_mask;
  }
  std::vector<std::uint32_t> row(m + 1, 0);
  for (std::size_t q = 0; q < m; ++q) {
    row[q + 1] = row[q] + (((v[q >> 6] >> (q & 63)) & 1u) ? 0u : 1u);
  }
  return row;
}

}  // namespace detail

namespace {

// Position of the j-th one (0-based) of s; requires j < s.ones().
std::size_t select_one(BitStringView s, std::size_t j) {
  std::size_t lo = 0;
  std::size_t hi = s.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (s.rank1(mid + 1) > j) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::vector<std::uint32_t> score_row(BitStringView a, BitStringView b) {
  // The run-compressed sweep does two O(|b|) passes per one of a; the
  // bit-parallel sweep does one pass over |b|/64 words per symbol of a.
  if ((a.ones() + 1) * 64 < a.size()) return detail::lcs_row_sparse(a, b);
  return detail::lcs_row_bitparallel(a, b);
}

class ExactLcsSolver {
 public:
  ExactLcsSolver(BitStringView a, BitStringView b, SubsequenceWitness& out)
      : a_(a), b_(b), out_(out) {}

  void solve(Range ra, Range rb) {
    if (ra.empty() || rb.empty()) return;
    const BitStringView a = a_.subview(ra);
    const BitStringView b = b_.subview(rb);
    const std::size_t k = a.ones();
    if (k == 0) {
      emit_zero_matches(a, 0, b, 0, std::min(a.size(), b.zeros()), ra.begin, rb.begin);
      return;
    }
    if (k == 1) {
      solve_single_one(a, b, ra.begin, rb.begin);
      return;
    }
    const std::size_t cut = select_one(a, k / 2);
    const BitStringView left = a.subview({0, cut});
    const BitStringView right = a.subview({cut, a.size()});
    const std::vector<std::uint32_t> forward = score_row(left, b);
    const BitString right_rev = BitString::from_view(right).reversed();
    const BitString b_rev = BitString::from_view(b).reversed();
    const std::vector<std::uint32_t> backward = score_row(right_rev, b_rev);
    const std::size_t m = b.size();
    std::size_t best_q = 0;
    std::uint32_t best = 0;
    for (std::size_t q = 0; q <= m; ++q) {
      std::uint32_t v = forward[q] + backward[m - q];
      if (q == 0 || v > best) {
        best = v;
        best_q = q;
      }
    }
    solve({ra.begin, ra.begin + cut}, {rb.begin, rb.begin + best_q});
    solve({ra.begin + cut, ra.end}, {rb.begin + best_q, rb.end});
  }

 private:
  // Pairs the first t zeros of a[a_from, ...) with the first t zeros of
  // b[b_from, ...).
  void emit_zero_matches(BitStringView a, std::size_t a_from, BitStringView b, std::size_t b_from,
                         std::size_t t, std::size_t a_shift, std::size_t b_shift) {
    if (t == 0) return;
    scratch_a_.clear();
    scratch_b_.clear();
    a.subview({a_from, a.size()}).first_occurrences(Symbol::zero, t, a_from + a_shift, scratch_a_);
    b.subview({b_from, b.size()}).first_occurrences(Symbol::zero, t, b_from + b_shift, scratch_b_);
    for (std::size_t i = 0; i < t; ++i) out_.push(scratch_a_[i], scratch_b_[i]);
  }

  // a = 0^g 1 0^h: either drop the one, or pair it with the best one of b.
  void solve_single_one(BitStringView a, BitStringView b, std::size_t a_shift,
                        std::size_t b_shift) {
    const std::size_t p = select_one(a, 0);
    const std::size_t g = p;
    const std::size_t h = a.size() - p - 1;
    const std::size_t zb = b.zeros();
    std::size_t best = std::min(g + h, zb);
    std::ptrdiff_t best_q = -1;
    std::vector<Index> ones;
    b.first_occurrences(Symbol::one, b.ones(), 0, ones);
    for (Index q : ones) {
      const std::size_t zq = q - b.rank1(q);
      const std::size_t v = std::min(g, zq) + 1 + std::min(h, zb - zq);
      if (v > best) {
        best = v;
        best_q = q;
      }
    }
    if (best_q < 0) {
      emit_zero_matches(a, 0, b, 0, best, a_shift, b_shift);
      return;
    }
    const auto q = static_cast<std::size_t>(best_q);
    const std::size_t zq = q - b.rank1(q);
    emit_zero_matches(a, 0, b, 0, std::min(g, zq), a_shift, b_shift);
    out_.push(p + a_shift, q + b_shift);
    emit_zero_matches(a, p + 1, b, q + 1, std::min(h, zb - zq), a_shift, b_shift);
  }

  BitStringView a_;
  BitStringView b_;
  SubsequenceWitness& out_;
  std::vector<Index> scratch_a_;
  std::vector<Index> scratch_b_;
};

}  // namespace

SubsequenceWitness exact_lcs(BitStringView a, BitStringView b) {
  SubsequenceWitness out;
  ExactLcsSolver solver(a, b, out);
  solver.solve({0, a.size()}, {0, b.size()});
  return out;
}

}  // namespace alcs
