#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "alcs/bit_string.hpp"
#include "alcs/rational.hpp"
#include "alcs/witness.hpp"

namespace alcs {

// Insertion/deletion distance and an optimal set of matched positions;
// matches.size() == (|a| + |b| - distance) / 2.
struct Alignment {
  std::size_t distance = 0;
  SubsequenceWitness matches;
};

// Exact indel edit distance by Myers' O((|a|+|b|)·D) greedy diagonal search
// with the linear-space middle-snake recursion for the alignment.
Alignment exact_edit_distance(BitStringView a, BitStringView b);

// Estimator output in common-length units: for equal lengths n the true
// value is n - LCS = D/2, and certified_length() = n - claimed_distance.
struct EditEstimate {
  std::size_t claimed_distance = 0;
  std::optional<SubsequenceWitness> witness;
  std::string estimator_id;

  std::size_t certified_length(std::size_t n) const noexcept {
    return claimed_distance >= n ? 0 : n - claimed_distance;
  }
};

// Contract: on equal-length inputs of length n, claimed_distance lies in
// [n - LCS, factor()·(n - LCS) + slack(n)], and any witness covers at least
// certified_length(n) positions. Implementations are reentrant.
class EditEstimator {
 public:
  virtual ~EditEstimator() = default;
  virtual EditEstimate estimate(BitStringView a, BitStringView b) const = 0;
  virtual Rational factor() const = 0;
  virtual std::string id() const = 0;
};

class ExactEstimator final : public EditEstimator {
 public:
  EditEstimate estimate(BitStringView a, BitStringView b) const override;
  Rational factor() const override { return Rational(1); }
  std::string id() const override { return "exact"; }
};

// Additive slack as a function of the input length.
struct SlackFunction {
  std::function<std::size_t(std::size_t)> fn;
  std::string label;  // empty for zero slack

  std::size_t operator()(std::size_t n) const { return fn ? fn(n) : 0; }

  static SlackFunction zero() { return {}; }
  // floor(n^exponent), exponent in [0, 1).
  static SlackFunction power(const Rational& exponent);
};

// Inflates the inner estimate to min(floor(c·d) + slack(n), n) and truncates
// the inner witness to the resulting certified length.
class AdversarialEstimator final : public EditEstimator {
 public:
  AdversarialEstimator(std::shared_ptr<const EditEstimator> inner, Rational c, SlackFunction slack);

  EditEstimate estimate(BitStringView a, BitStringView b) const override;
  Rational factor() const override { return c_; }
  std::string id() const override;

 private:
  std::shared_ptr<const EditEstimator> inner_;
  Rational c_;
  SlackFunction slack_;
};

// Throws ParameterError when c < 1.
std::shared_ptr<const EditEstimator> adversarial_wrapper(std::shared_ptr<const EditEstimator> inner,
                                                         Rational c, SlackFunction slack);

// "exact" or "adversarial:<c>[:<slack-exponent>]".
std::shared_ptr<const EditEstimator> make_estimator(std::string_view selection);

// One estimator call on an equal-length pair, with the returned estimate
// checked against the parts of the contract that can be checked locally.
EditEstimate approx_ed_value(BitStringView a, BitStringView b, const EditEstimator& estimator);

}  // namespace alcs
