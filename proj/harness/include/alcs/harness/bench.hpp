#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alcs/approx_lcs.hpp"

namespace alcs::harness {

struct BenchRow {
  std::size_t n = 0;
  double engine_median_ms = 0;     // wall time minus time inside the estimator
  double estimator_median_ms = 0;
  std::optional<double> oracle_median_ms;  // only for n within the oracle cap
};

// Median timings over `reps` perfectly_unbalanced(α = 3/10) instances per n.
// Throws ParameterError when reps = 0.
std::vector<BenchRow> bench(const std::vector<std::size_t>& n_values, const std::string& estimator,
                            std::size_t reps, Mode mode = Mode::paper);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Wraps an estimator and accumulates the wall time spent inside it.
class TimingEstimator final : public EditEstimator {
 public:
  explicit TimingEstimator(std::shared_ptr<const EditEstimator> inner) : inner_(std::move(inner)) {}

  EditEstimate estimate(BitStringView a, BitStringView b) const override;
  Rational factor() const override { return inner_->factor(); }
  std::string id() const override { return inner_->id(); }

  double elapsed_ms() const noexcept { return elapsed_ms_; }
  void reset() noexcept { elapsed_ms_ = 0; }

 private:
  std::shared_ptr<const EditEstimator> inner_;
  mutable double elapsed_ms_ = 0;
};

}  // namespace alcs::harness
