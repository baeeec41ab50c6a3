#include "alcs/harness/generators.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "alcs/edit_distance.hpp"
#include "alcs/harness/prng.hpp"
#include "alcs/params.hpp"

namespace alcs::harness {

namespace {

constexpr std::array<std::string_view, 5> kGeneratorNames = {
    "uniform", "perfectly_unbalanced", "planted_lcs", "case_targeted", "exhaustive"};

using Bits = std::vector<std::uint8_t>;

BitString to_bit_string(const Bits& bits) { return BitString::from_bits(bits); }

// Writes `ones` ones at uniformly chosen positions of out[begin, begin + len)
// by selection sampling.
void scatter(Bits& out, std::size_t begin, std::size_t len, std::size_t ones, SplitMix64& rng) {
  std::size_t left = ones;
  for (std::size_t i = 0; i < len; ++i) {
    const bool pick = rng.below(len - i) < left;
    out[begin + i] = pick ? 1 : 0;
    if (pick) --left;
  }
}

// Writes `first` copies of `lead` followed by the complement.
void block(Bits& out, std::size_t begin, std::size_t len, std::size_t first, std::uint8_t lead) {
  for (std::size_t i = 0; i < len; ++i) out[begin + i] = i < first ? lead : 1 - lead;
}

StringPair gen_uniform(const InstanceSpec& s) {
  SplitMix64 rng(s.seed);
  Bits a(s.n), b(s.n);
  for (auto& x : a) x = rng.bernoulli(s.p_a) ? 1 : 0;
  for (auto& x : b) x = rng.bernoulli(s.p_b) ? 1 : 0;
  return {to_bit_string(a), to_bit_string(b)};
}

StringPair gen_unbalanced(const InstanceSpec& s) {
  if (s.alpha < Rational(0) || s.alpha > Rational(1, 2)) {
    throw GenerationError("perfectly_unbalanced: alpha must lie in [0, 1/2]");
  }
  SplitMix64 rng(s.seed);
  const std::size_t k = static_cast<std::size_t>(floor_int(s.alpha * to_rational(s.n)));
  const SymbolCounts shape{s.n - k, k, k, s.n - k};
  const std::size_t slack =
      k == 0 ? 0 : static_cast<std::size_t>(floor_int(derive_params(s.n, shape, Rational(1)).delta *
                                                      to_rational(k)));
  const std::size_t zeros_b = std::min(s.n, k + static_cast<std::size_t>(rng.between(0, slack)));
  Bits a(s.n), b(s.n);
  scatter(a, 0, s.n, k, rng);
  scatter(b, 0, s.n, s.n - zeros_b, rng);
  return {to_bit_string(a), to_bit_string(b)};
}

StringPair gen_planted(const InstanceSpec& s) {
  if (s.rho < Rational(0) || s.rho > Rational(1)) {
    throw GenerationError("planted_lcs: rho must lie in [0, 1]");
  }
  SplitMix64 rng(s.seed);
  const std::size_t common = static_cast<std::size_t>(floor_int(s.rho * to_rational(s.n)));
  Bits core(common);
  for (auto& x : core) x = static_cast<std::uint8_t>(rng.below(2));
  auto pad = [&](SplitMix64& r) {
    Bits mask(s.n);
    scatter(mask, 0, s.n, common, r);  // 1 marks a position carrying the core
    Bits out(s.n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < s.n; ++i) {
      out[i] = mask[i] ? core[c++] : static_cast<std::uint8_t>(r.below(2));
    }
    return out;
  };
  SplitMix64 ra = rng.split();
  SplitMix64 rb = rng.split();
  return {to_bit_string(pad(ra)), to_bit_string(pad(rb))};
}

StringPair gen_exhaustive(const InstanceSpec& s) {
  if (s.n > 31) throw GenerationError("exhaustive: n must be at most 31");
  if ((s.seed >> (2 * s.n)) != 0) {
    throw GenerationError("exhaustive: index " + std::to_string(s.seed) + " exceeds 4^" +
                          std::to_string(s.n));
  }
  Bits a(s.n), b(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    a[i] = static_cast<std::uint8_t>(s.seed >> i & 1U);
    b[i] = static_cast<std::uint8_t>(s.seed >> (s.n + i) & 1U);
  }
  return {to_bit_string(a), to_bit_string(b)};
}

ReductionParams normalized_params(std::size_t n, std::size_t k) {
  return derive_params(n, SymbolCounts{n - k, k, k, n - k}, Rational(1));
}

// Region counts (u, v, p, q) = (1(R_B), 1(L_B), 0(L_A), 0(R_A)) in the
// normalised frame with 1(A) = 0(B) = k.
struct Layout {
  std::size_t u = 0, v = 0, p = 0, q = 0;
};

class CountSampler {
 public:
  CountSampler(std::size_t n, std::size_t k, SplitMix64& rng)
      : k_(k), m_(n - 2 * k), t_(CaseThresholds::of(normalized_params(n, k))), rng_(rng) {}

  // Integer bounds of the band conditions.
  std::int64_t le(std::int64_t m) const { return floor_int(t_.at(m)); }
  std::int64_t lt(std::int64_t m) const { return ceil_int(t_.at(m)) - 1; }
  std::int64_t gt(std::int64_t m) const { return floor_int(t_.at(m)) + 1; }
  std::int64_t ge(std::int64_t m) const { return ceil_int(t_.at(m)); }

  std::size_t pick(std::int64_t lo, std::int64_t hi) {
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(k_));
    if (lo > hi) throw GenerationError("case_targeted: empty count range");
    return static_cast<std::size_t>(lo) +
           static_cast<std::size_t>(rng_.below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  // A partner count x for y with x + y in [k, k + |M|] and x in [lo, hi].
  std::size_t partner(std::size_t y, std::int64_t lo, std::int64_t hi) {
    const auto k = static_cast<std::int64_t>(k_);
    const auto m = static_cast<std::int64_t>(m_);
    const auto yy = static_cast<std::int64_t>(y);
    return pick(std::max(lo, k - yy), std::min(hi, k + m - yy));
  }
  std::int64_t any_lo() const { return 0; }
  std::int64_t any_hi() const { return static_cast<std::int64_t>(k_); }

 private:
  std::size_t k_;
  std::size_t m_;
  CaseThresholds t_;
  SplitMix64& rng_;
};

// Counts for a case-1 sub-case on the (near, far) = (1(R_B), 0(R_A)) pair.
std::pair<std::size_t, std::size_t> case1_pair(CountSampler& c, char variant) {
  switch (variant) {
    case 'a':
      return {c.pick(c.ge(-4), c.le(2)), c.pick(c.ge(-4), c.le(2))};
    case 'b':
      return {c.pick(c.any_lo(), c.lt(-4)), c.pick(c.any_lo(), c.le(2))};
    default:
      return {c.pick(c.ge(-4), c.le(2)), c.pick(c.any_lo(), c.lt(-4))};
  }
}

Layout sample_layout(Branch target, CountSampler& c) {
  Layout l;
  const std::string_view name = branch_name(target);
  if (name.starts_with("case1")) {
    std::tie(l.u, l.q) = case1_pair(c, name[5]);
    l.v = c.partner(l.u, c.any_lo(), c.any_hi());
    l.p = c.partner(l.q, c.any_lo(), c.any_hi());
    return l;
  }
  if (name.starts_with("case2")) {
    std::tie(l.v, l.p) = case1_pair(c, name[5]);
    // Case 1 must fail on the right-hand side.
    l.u = c.partner(l.v, c.gt(2), c.any_hi());
    l.q = c.partner(l.p, c.any_lo(), c.any_hi());
    return l;
  }
  switch (target) {
    case Branch::case3:
      l.u = c.pick(c.any_hi() - c.le(1), c.le(1));
      l.v = c.partner(l.u, c.any_lo(), c.le(1));
      l.p = c.pick(c.gt(2), c.any_hi());
      l.q = c.partner(l.p, c.gt(2), c.any_hi());
      break;
    case Branch::case4:
      l.p = c.pick(c.any_hi() - c.le(1), c.le(1));
      l.q = c.partner(l.p, c.any_lo(), c.le(1));
      l.u = c.pick(c.gt(2), c.any_hi());
      l.v = c.partner(l.u, c.gt(2), c.any_hi());
      break;
    case Branch::case5:
      l.u = c.pick(c.gt(2), c.any_hi());
      l.p = c.pick(c.gt(2), c.any_hi());
      l.v = c.partner(l.u, c.any_lo(), c.any_hi());
      l.q = c.partner(l.p, c.any_lo(), c.any_hi());
      break;
    case Branch::case6:
      l.v = c.pick(c.gt(2), c.any_hi());
      l.q = c.pick(c.gt(2), c.any_hi());
      l.u = c.partner(l.v, c.any_lo(), c.le(1));
      l.p = c.partner(l.q, c.any_lo(), c.any_hi());
      break;
    default:
      throw GenerationError("case_targeted: branch " + std::string(name) +
                            " is not a dispatch case");
  }
  return l;
}

StringPair build_targeted(std::size_t n, std::size_t k, const Layout& l, Branch target,
                          SplitMix64& rng) {
  const std::size_t m = n - 2 * k;
  Bits a(n), b(n);
  scatter(a, 0, k, k - l.p, rng);
  scatter(a, k, m, l.p + l.q - k, rng);
  scatter(a, n - k, k, k - l.q, rng);
  scatter(b, 0, k, l.v, rng);
  scatter(b, k, m, m - (l.u + l.v - k), rng);
  scatter(b, n - k, k, l.u, rng);
  // Case 1(a) outcomes hinge on where the right-hand zeros of B sit relative
  // to the greedy cut; block layouts also keep the estimator's work small.
  switch (target) {
    case Branch::case1a_split:
      block(a, n - k, k, k - l.q, 1);
      block(b, n - k, k, l.u, 1);
      break;
    case Branch::case1a_greedy:
      block(a, n - k, k, l.q, 0);
      block(b, n - k, k, k - l.u, 0);
      break;
    case Branch::case2a_split:
      block(a, 0, k, l.p, 0);
      block(b, 0, k, k - l.v, 0);
      break;
    case Branch::case2a_greedy:
      block(a, 0, k, k - l.p, 1);
      block(b, 0, k, l.v, 1);
      break;
    default:
      break;
  }
  StringPair out{to_bit_string(a), to_bit_string(b)};
  if (rng.below(2) == 1) std::swap(out.a, out.b);
  return out;
}

StringPair gen_targeted(const InstanceSpec& s) {
  const auto range = targeted_alpha_range(s.n, s.degenerate_threshold);
  if (!range) {
    throw GenerationError("case_targeted(" + std::string(branch_name(s.branch)) +
                          "): n = " + std::to_string(s.n) + " leaves no room above the exact-path cut-off");
  }
  SplitMix64 rng(s.seed);
  const ExactEstimator exact;
  const EngineOptions options = engine_options(s, Mode::paper);
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    const std::size_t k = static_cast<std::size_t>(rng.between(range->k_min, range->k_max));
    CountSampler sampler(s.n, k, rng);
    Layout layout;
    try {
      layout = sample_layout(s.branch, sampler);
    } catch (const GenerationError&) {
      if (s.branch < Branch::case1a_greedy || s.branch > Branch::case6) throw;
      continue;
    }
    StringPair pair = build_targeted(s.n, k, layout, s.branch, rng);
    if (approx_lcs(pair.a, pair.b, exact, options).report.branch == s.branch) return pair;
  }
  throw GenerationError("case_targeted(" + std::string(branch_name(s.branch)) +
                        "): resample cap of " + std::to_string(kResampleCap) + " exceeded");
}

}  // namespace

std::string_view generator_name(GeneratorKind g) noexcept {
  return kGeneratorNames[static_cast<std::size_t>(g)];
}

std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kGeneratorNames.size(); ++i) {
    if (kGeneratorNames[i] == name) return static_cast<GeneratorKind>(i);
  }
  return std::nullopt;
}

EngineOptions engine_options(const InstanceSpec& spec, Mode mode) {
  EngineOptions o;
  o.mode = mode;
  o.degenerate_threshold = spec.degenerate_threshold;
  return o;
}

std::optional<TargetedRange> targeted_alpha_range(std::size_t n,
                                                  std::optional<std::size_t> degenerate_threshold) {
  if (n < 16) return std::nullopt;
  TargetedRange r;
  const std::size_t threshold =
      degenerate_threshold.value_or(normalized_params(n, n / 4).degenerate_threshold);
  r.k_min = std::max(threshold + 1, (n + 3) / 4);
  // Largest k whose middle third is wide enough that the balanced gate stays
  // closed with a margin of eight positions.
  std::size_t k = n / 2;
  while (k > 0) {
    const ReductionParams p = normalized_params(n, k);
    if (to_rational(n - 2 * k) >= Rational(20) * p.beta_n + Rational(8)) break;
    --k;
  }
  r.k_max = k;
  if (r.k_max < r.k_min) return std::nullopt;
  return r;
}

StringPair generate(const InstanceSpec& spec) {
  switch (spec.generator) {
    case GeneratorKind::uniform:
      return gen_uniform(spec);
    case GeneratorKind::perfectly_unbalanced:
      return gen_unbalanced(spec);
    case GeneratorKind::planted_lcs:
      return gen_planted(spec);
    case GeneratorKind::case_targeted:
      return gen_targeted(spec);
    case GeneratorKind::exhaustive:
      return gen_exhaustive(spec);
  }
  throw GenerationError("unknown generator");
}

}  // namespace alcs::harness
