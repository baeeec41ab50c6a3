#include "alcs/bit_string.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "alcs/errors.hpp"

namespace alcs {

namespace detail {
const BitString& empty_bit_string() noexcept {
  static const BitString empty;
  return empty;
}
}  // namespace detail

namespace {

constexpr std::uint64_t low_mask(std::size_t bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t reverse_bits(std::uint64_t x) noexcept {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

void check_range(Range r, std::size_t size) {
  if (r.begin > r.end || r.end > size) {
    throw std::out_of_range("range [" + std::to_string(r.begin) + ", " + std::to_string(r.end) +
                            ") outside string of length " + std::to_string(size));
  }
}

}  // namespace

BitString::BitString(std::size_t size, std::vector<std::uint64_t> words)
    : size_(size), words_(std::move(words)) {
  if (size_ % 64 != 0) words_.back() &= low_mask(size_ % 64);
  build_rank();
}

void BitString::build_rank() {
  rank_.assign(words_.size() + 1, 0);
  std::uint32_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    rank_[w] = acc;
    acc += static_cast<std::uint32_t>(std::popcount(words_[w]));
  }
  rank_[words_.size()] = acc;
}

BitString BitString::parse(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::vector<std::uint64_t> words((text.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '1') {
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else if (ch != '0') {
      throw ParseError("invalid byte " + std::to_string(static_cast<unsigned char>(ch)) +
                       " at offset " + std::to_string(i) + "; expected '0' or '1'");
    }
  }
  return BitString(text.size(), std::move(words));
}

BitString BitString::from_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw ParameterError("bit value other than 0/1");
    words[i >> 6] |= std::uint64_t{bits[i]} << (i & 63);
  }
  return BitString(bits.size(), std::move(words));
}

BitString BitString::from_view(const BitStringView& view) {
  std::vector<std::uint64_t> words(view.word_count());
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = view.word(w);
  return BitString(view.size(), std::move(words));
}

BitString BitString::filled(std::size_t n, Symbol s) {
  std::vector<std::uint64_t> words((n + 63) / 64, s == Symbol::one ? ~std::uint64_t{0} : 0);
  return BitString(n, std::move(words));
}

std::size_t BitString::rank1(std::size_t p) const noexcept {
  std::size_t w = p >> 6;
  std::size_t r = p & 63;
  std::size_t base = rank_[w];
  if (r == 0) return base;
  return base + static_cast<std::size_t>(std::popcount(words_[w] & low_mask(r)));
}

std::size_t BitString::count(Range r, Symbol s) const {
  check_range(r, size_);
  std::size_t o = rank1(r.end) - rank1(r.begin);
  return s == Symbol::one ? o : r.size() - o;
}

BitStringView BitString::view() const noexcept { return BitStringView(this, 0, size_); }

BitStringView BitString::view(Range r) const {
  check_range(r, size_);
  return BitStringView(this, r.begin, r.size());
}

BitString BitString::reversed() const {
  const std::size_t nw = words_.size();
  std::vector<std::uint64_t> out(nw, 0);
  if (nw == 0) return BitString();
  // Reversing whole words maps bit i to 64*nw - 1 - i; shift out the padding.
  const std::size_t pad = nw * 64 - size_;
  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t rw = reverse_bits(words_[nw - 1 - w]);
    if (pad == 0) {
      out[w] = rw;
    } else {
      out[w] |= rw >> pad;
      if (w > 0) out[w - 1] |= rw << (64 - pad);
    }
  }
  return BitString(size_, std::move(out));
}

BitString BitString::complemented() const {
  std::vector<std::uint64_t> out(words_.size());
  std::transform(words_.begin(), words_.end(), out.begin(), [](std::uint64_t w) { return ~w; });
  if (out.empty()) return BitString();
  return BitString(size_, std::move(out));
}

std::string BitString::to_string() const { return view().to_string(); }

std::size_t BitStringView::count(Range r, Symbol s) const {
  check_range(r, size_);
  std::size_t o = base_->rank1(offset_ + r.end) - base_->rank1(offset_ + r.begin);
  return s == Symbol::one ? o : r.size() - o;
}

BitStringView BitStringView::subview(Range r) const {
  check_range(r, size_);
  return BitStringView(base_, offset_ + r.begin, r.size());
}

std::uint64_t BitStringView::word(std::size_t w) const noexcept {
  const std::size_t begin = 64 * w;
  if (begin >= size_) return 0;
  const std::size_t pos = offset_ + begin;
  const auto words = base_->words();
  const std::size_t wi = pos >> 6;
  const std::size_t shift = pos & 63;
  std::uint64_t value = words[wi] >> shift;
  if (shift != 0 && wi + 1 < words.size()) value |= words[wi + 1] << (64 - shift);
  const std::size_t remaining = size_ - begin;
  return remaining >= 64 ? value : value & low_mask(remaining);
}

void BitStringView::first_occurrences(Symbol s, std::size_t k, std::size_t shift,
                                      std::vector<Index>& out) const {
  const std::size_t nw = word_count();
  for (std::size_t w = 0; w < nw && k > 0; ++w) {
    std::uint64_t bits = word(w);
    if (s == Symbol::zero) {
      bits = ~bits;
      std::size_t remaining = size_ - 64 * w;
      if (remaining < 64) bits &= low_mask(remaining);
    }
    while (bits != 0 && k > 0) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(bits));
      out.push_back(static_cast<Index>(64 * w + bit + shift));
      bits &= bits - 1;
      --k;
    }
  }
}

std::string BitStringView::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

}  // namespace alcs
