#include "alcs/edit_distance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alcs/errors.hpp"

namespace alcs {

namespace {

using Pos = std::ptrdiff_t;

// Recursive Myers alignment over sub-ranges of (a, b); matches are emitted
// in increasing order.
class MyersAligner {
 public:
  MyersAligner(BitStringView a, BitStringView b) : a_(a), b_(b) {}

  void align(Pos a_lo, Pos a_hi, Pos b_lo, Pos b_hi, SubsequenceWitness& out) {
    while (a_lo < a_hi && b_lo < b_hi && a_.bit(a_lo) == b_.bit(b_lo)) {
      out.push(a_lo++, b_lo++);
    }
    Pos suffix = 0;
    while (a_lo < a_hi - suffix && b_lo < b_hi - suffix &&
           a_.bit(a_hi - 1 - suffix) == b_.bit(b_hi - 1 - suffix)) {
      ++suffix;
    }
    a_hi -= suffix;
    b_hi -= suffix;
    if (a_lo < a_hi && b_lo < b_hi) {
      const auto mid = bisect(a_lo, a_hi, b_lo, b_hi);
      if (!mid) {
        // No symbol in common: every position is an insertion or deletion.
        for (Pos s = 0; s < suffix; ++s) out.push(a_hi + s, b_hi + s);
        return;
      }
      const auto [x, y] = *mid;
      if ((x == a_lo && y == b_lo) || (x == a_hi && y == b_hi)) {
        throw std::logic_error("myers: degenerate middle snake");
      }
      align(a_lo, x, b_lo, y, out);
      align(x, a_hi, y, b_hi, out);
    }
    for (Pos s = 0; s < suffix; ++s) out.push(a_hi + s, b_hi + s);
  }

 private:
  // Finds a point on an optimal edit path through the middle of the range by
  // running the forward and reverse greedy searches until they overlap;
  // nullopt when they never do, which happens only without a common symbol.
  std::optional<std::pair<Pos, Pos>> bisect(Pos a_lo, Pos a_hi, Pos b_lo, Pos b_hi) {
    const Pos n1 = a_hi - a_lo;
    const Pos n2 = b_hi - b_lo;
    const Pos max_d = (n1 + n2 + 1) / 2;
    const Pos v_offset = max_d;
    const Pos v_length = 2 * max_d + 2;
    forward_.assign(static_cast<std::size_t>(v_length), -1);
    reverse_.assign(static_cast<std::size_t>(v_length), -1);
    forward_[v_offset + 1] = 0;
    reverse_[v_offset + 1] = 0;
    const Pos delta = n1 - n2;
    const bool front = (delta % 2) != 0;
    Pos k1start = 0, k1end = 0, k2start = 0, k2end = 0;

    for (Pos d = 0; d < max_d; ++d) {
      for (Pos k1 = -d + k1start; k1 <= d - k1end; k1 += 2) {
        const Pos k1_offset = v_offset + k1;
        Pos x1;
        if (k1 == -d || (k1 != d && forward_[k1_offset - 1] < forward_[k1_offset + 1])) {
          x1 = forward_[k1_offset + 1];
        } else {
          x1 = forward_[k1_offset - 1] + 1;
        }
        Pos y1 = x1 - k1;
        while (x1 < n1 && y1 < n2 && a_.bit(a_lo + x1) == b_.bit(b_lo + y1)) {
          ++x1;
          ++y1;
        }
        forward_[k1_offset] = x1;
        if (x1 > n1) {
          k1end += 2;
        } else if (y1 > n2) {
          k1start += 2;
        } else if (front) {
          const Pos k2_offset = v_offset + delta - k1;
          if (k2_offset >= 0 && k2_offset < v_length && reverse_[k2_offset] != -1) {
            const Pos x2 = n1 - reverse_[k2_offset];
            if (x1 >= x2) return std::pair{a_lo + x1, b_lo + y1};
          }
        }
      }
      for (Pos k2 = -d + k2start; k2 <= d - k2end; k2 += 2) {
        const Pos k2_offset = v_offset + k2;
        Pos x2;
        if (k2 == -d || (k2 != d && reverse_[k2_offset - 1] < reverse_[k2_offset + 1])) {
          x2 = reverse_[k2_offset + 1];
        } else {
          x2 = reverse_[k2_offset - 1] + 1;
        }
        Pos y2 = x2 - k2;
        while (x2 < n1 && y2 < n2 &&
               a_.bit(a_lo + n1 - x2 - 1) == b_.bit(b_lo + n2 - y2 - 1)) {
          ++x2;
          ++y2;
        }
        reverse_[k2_offset] = x2;
        if (x2 > n1) {
          k2end += 2;
        } else if (y2 > n2) {
          k2start += 2;
        } else if (!front) {
          const Pos k1_offset = v_offset + delta - k2;
          if (k1_offset >= 0 && k1_offset < v_length && forward_[k1_offset] != -1) {
            const Pos x1 = forward_[k1_offset];
            const Pos y1 = v_offset + x1 - k1_offset;
            if (x1 >= n1 - x2) return std::pair{a_lo + x1, b_lo + y1};
          }
        }
      }
    }
    return std::nullopt;
  }

  BitStringView a_;
  BitStringView b_;
  std::vector<Pos> forward_;
  std::vector<Pos> reverse_;
};

}  // namespace

Alignment exact_edit_distance(BitStringView a, BitStringView b) {
  Alignment out;
  MyersAligner aligner(a, b);
  aligner.align(0, static_cast<Pos>(a.size()), 0, static_cast<Pos>(b.size()), out.matches);
  out.distance = a.size() + b.size() - 2 * out.matches.size();
  return out;
}

EditEstimate ExactEstimator::estimate(BitStringView a, BitStringView b) const {
  if (a.size() != b.size()) throw ParameterError("estimator inputs must have equal length");
  Alignment al = exact_edit_distance(a, b);
  EditEstimate e;
  e.claimed_distance = a.size() - al.matches.size();
  e.witness = std::move(al.matches);
  e.estimator_id = id();
  return e;
}

SlackFunction SlackFunction::power(const Rational& exponent) {
  if (exponent < Rational(0) || exponent >= Rational(1)) {
    throw ParameterError("slack exponent must lie in [0, 1)");
  }
  const long double e = static_cast<long double>(exponent.numerator()) /
                        static_cast<long double>(exponent.denominator());
  SlackFunction s;
  s.label = to_string(exponent);
  s.fn = [e](std::size_t n) -> std::size_t {
    if (n == 0) return 0;
    return static_cast<std::size_t>(std::floor(std::pow(static_cast<long double>(n), e)));
  };
  return s;
}

AdversarialEstimator::AdversarialEstimator(std::shared_ptr<const EditEstimator> inner, Rational c,
                                           SlackFunction slack)
    : inner_(std::move(inner)), c_(c), slack_(std::move(slack)) {
  if (!inner_) throw ParameterError("adversarial wrapper needs an inner estimator");
  if (c_ < Rational(1)) throw ParameterError("approximation factor c must be >= 1");
}

std::string AdversarialEstimator::id() const {
  std::string out = "adversarial:" + to_string(c_);
  if (!slack_.label.empty()) out += ":" + slack_.label;
  return out;
}

EditEstimate AdversarialEstimator::estimate(BitStringView a, BitStringView b) const {
  EditEstimate inner = inner_->estimate(a, b);
  const std::size_t n = a.size();
  const auto inflated = static_cast<std::size_t>(
      floor_int(c_ * Rational(static_cast<std::int64_t>(inner.claimed_distance))));
  EditEstimate e;
  e.claimed_distance = std::min(inflated + slack_(n), n);
  e.estimator_id = id();
  if (inner.witness) {
    inner.witness->truncate(e.certified_length(n));
    e.witness = std::move(inner.witness);
  }
  return e;
}

std::shared_ptr<const EditEstimator> adversarial_wrapper(std::shared_ptr<const EditEstimator> inner,
                                                         Rational c, SlackFunction slack) {
  return std::make_shared<AdversarialEstimator>(std::move(inner), c, std::move(slack));
}

std::shared_ptr<const EditEstimator> make_estimator(std::string_view selection) {
  if (selection == "exact") return std::make_shared<ExactEstimator>();
  constexpr std::string_view prefix = "adversarial:";
  if (selection.substr(0, prefix.size()) != prefix) {
    throw ParameterError("unknown estimator '" + std::string(selection) + "'");
  }
  std::string_view rest = selection.substr(prefix.size());
  std::string_view c_text = rest;
  SlackFunction slack = SlackFunction::zero();
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    c_text = rest.substr(0, colon);
    slack = SlackFunction::power(parse_rational(rest.substr(colon + 1)));
  }
  return adversarial_wrapper(std::make_shared<ExactEstimator>(), parse_rational(c_text),
                             std::move(slack));
}

EditEstimate approx_ed_value(BitStringView a, BitStringView b, const EditEstimator& estimator) {
  if (a.size() != b.size()) throw ParameterError("approx_ed_value needs equal-length inputs");
  EditEstimate e = estimator.estimate(a, b);
  const std::size_t n = a.size();
  if (e.claimed_distance > n) {
    throw EstimatorError(e.estimator_id + ": claimed distance exceeds the input length");
  }
  if (e.witness && e.witness->size() < e.certified_length(n)) {
    throw EstimatorError(e.estimator_id + ": claim exceeds what its witness certifies");
  }
  return e;
}

}  // namespace alcs
