#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alcs {

// Positions inside strings and witnesses.
using Index = std::uint32_t;

enum class Symbol : std::uint8_t { zero = 0, one = 1 };

constexpr Symbol flip(Symbol s) noexcept {
  return s == Symbol::zero ? Symbol::one : Symbol::zero;
}

constexpr char to_char(Symbol s) noexcept { return s == Symbol::zero ? '0' : '1'; }

// Half-open interval [begin, end).
struct Range {
  std::size_t begin = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const noexcept { return end - begin; }
  constexpr bool empty() const noexcept { return end == begin; }
  friend constexpr bool operator==(const Range&, const Range&) = default;
};

class BitStringView;

// Immutable bit-packed binary string with a per-word prefix table of one
// counts, so every range count is O(1): a table lookup plus one popcount.
class BitString {
 public:
  BitString() = default;

  // Accepts '0'/'1' bytes with at most one trailing '\n'.
  static BitString parse(std::string_view text);
  // Every element must be 0 or 1.
  static BitString from_bits(std::span<const std::uint8_t> bits);
  static BitString from_view(const BitStringView& view);
  static BitString filled(std::size_t n, Symbol s);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  Symbol operator[](std::size_t i) const noexcept {
    return bit(i) ? Symbol::one : Symbol::zero;
  }

  // Ones among the first p symbols; p <= size().
  std::size_t rank1(std::size_t p) const noexcept;
  // Throws std::out_of_range when r is not inside [0, size()].
  std::size_t count(Range r, Symbol s) const;
  std::size_t ones() const noexcept { return size_ == 0 ? 0 : rank1(size_); }
  std::size_t zeros() const noexcept { return size_ - ones(); }

  BitStringView view() const noexcept;
  BitStringView view(Range r) const;

  BitString reversed() const;
  BitString complemented() const;

  std::string to_string() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitString& x, const BitString& y) noexcept {
    return x.size_ == y.size_ && x.words_ == y.words_;
  }

 private:
  BitString(std::size_t size, std::vector<std::uint64_t> words);
  void build_rank();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;  // tail bits past size_ are zero
  std::vector<std::uint32_t> rank_ = {0};  // ones before word w; words + 1 entries
};

namespace detail {
const BitString& empty_bit_string() noexcept;
}  // namespace detail

// Non-owning window [offset, offset + size) into a BitString. All positions
// and ranges taken by its members are relative to the window.
class BitStringView {
 public:
  BitStringView() noexcept : base_(&detail::empty_bit_string()) {}
  BitStringView(const BitString& base) noexcept  // NOLINT(google-explicit-constructor)
      : base_(&base), offset_(0), size_(base.size()) {}

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t offset() const noexcept { return offset_; }

  bool bit(std::size_t i) const noexcept { return base_->bit(offset_ + i); }
  Symbol operator[](std::size_t i) const noexcept { return base_->operator[](offset_ + i); }

  std::size_t rank1(std::size_t p) const noexcept {
    return base_->rank1(offset_ + p) - base_->rank1(offset_);
  }
  std::size_t count(Range r, Symbol s) const;
  std::size_t count(Symbol s) const noexcept {
    std::size_t o = rank1(size_);
    return s == Symbol::one ? o : size_ - o;
  }
  std::size_t ones() const noexcept { return rank1(size_); }
  std::size_t zeros() const noexcept { return size_ - ones(); }

  BitStringView subview(Range r) const;

  // Bits [64w, 64w + 64) of the window, zero-padded past the end.
  std::uint64_t word(std::size_t w) const noexcept;
  std::size_t word_count() const noexcept { return (size_ + 63) / 64; }

  // Positions of the first k occurrences of s (fewer if s is rarer), each
  // shifted by `shift`, appended to out.
  void first_occurrences(Symbol s, std::size_t k, std::size_t shift,
                         std::vector<Index>& out) const;

  std::string to_string() const;

 private:
  friend class BitString;
  BitStringView(const BitString* base, std::size_t offset, std::size_t size) noexcept
      : base_(base), offset_(offset), size_(size) {}

  const BitString* base_;
  std::size_t offset_ = 0;
  std::size_t size_ = 0;
};

}  // namespace alcs
