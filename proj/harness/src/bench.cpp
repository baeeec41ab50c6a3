#include "alcs/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "alcs/errors.hpp"
#include "alcs/harness/generators.hpp"
#include "alcs/oracle/oracles.hpp"

namespace alcs::harness {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace

EditEstimate TimingEstimator::estimate(BitStringView a, BitStringView b) const {
  const auto start = Clock::now();
  EditEstimate e = inner_->estimate(a, b);
  elapsed_ms_ += ms_since(start);
  return e;
}

std::vector<BenchRow> bench(const std::vector<std::size_t>& n_values, const std::string& estimator,
                            std::size_t reps, Mode mode) {
  if (reps == 0) throw ParameterError("bench: repetitions must be positive");
  TimingEstimator timed(make_estimator(estimator));
  std::vector<BenchRow> rows;
  for (std::size_t n : n_values) {
    std::vector<double> engine, est, oracle_ms;
    for (std::size_t r = 0; r < reps; ++r) {
      InstanceSpec spec;
      spec.generator = GeneratorKind::perfectly_unbalanced;
      spec.alpha = Rational(3, 10);
      spec.n = n;
      spec.seed = 0x5eed0000ULL + n * 1009 + r;
      const StringPair pair = generate(spec);
      timed.reset();
      const auto start = Clock::now();
      const ApproxLcsResult res = approx_lcs(pair.a, pair.b, timed, mode);
      const double total = ms_since(start);
      (void)res;
      engine.push_back(std::max(0.0, total - timed.elapsed_ms()));
      est.push_back(timed.elapsed_ms());
      if (n <= oracle::kQuadraticCap) {
        const auto o = Clock::now();
        (void)oracle::lcs_dp(pair.a, pair.b);
        oracle_ms.push_back(ms_since(o));
      }
    }
    BenchRow row{n, median(engine), median(est), std::nullopt};
    if (!oracle_ms.empty()) row.oracle_median_ms = median(oracle_ms);
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,engine_median_ms,estimator_median_ms,oracle_median_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.engine_median_ms << ',' << r.estimator_median_ms << ',';
    if (r.oracle_median_ms) out << *r.oracle_median_ms;
    out << '\n';
  }
}

}  // namespace alcs::harness
