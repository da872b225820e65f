#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "delcode/adversarial.hpp"
#include "delcode/bits.hpp"
#include "delcode/bitseq.hpp"
#include "delcode/oblivious.hpp"
#include "delcode/rational.hpp"

namespace delcode {

// All heavy grid sweeps exist in two interchangeable forms: a plain serial
// loop (the reference) and an OpenMP loop. They must produce identical
// output; the benchmark target compares their speed.
enum class Parallelism { serial, openmp };

// Error models the verification harness can drive a code through.
enum class ChannelModel {
  oblivious_exhaustive,    // every pattern, fixed before encoder coins
  adversarial_worst_case,  // worst pattern per message (diagnostic for stochastic codes)
  uniform_random_t,        // patterns sampled uniformly, one per trial
  iid_deletion,            // each bit deleted independently w.p. p (diagnostic)
};

std::string channel_model_str(ChannelModel k);
ChannelModel parse_channel_model(const std::string& s);

struct ChannelModelSpec {
  ChannelModel kind = ChannelModel::oblivious_exhaustive;
  double p = 0.0;          // iid_deletion only
  std::uint64_t seed = 0;  // sampled models
  int trials = 0;          // sampled models
};

// Restricts a sweep to chosen messages/patterns. Empty = everything the
// model implies (all 2^n messages; all patterns for exhaustive models).
struct GridSpec {
  std::vector<BitString> messages;
  std::vector<DeletionPattern> patterns;
};

struct FailureRow {
  std::string m;    // message bits (decimal index for the sampler scheme)
  std::string tau;  // pattern in "n:s1,s2,..." form
  Ratio fail;
};

/// Outcome of an exhaustive (or sampled-channel) failure sweep. Every
/// probability is an exact rational counted over the encoder's randomness;
/// nothing in the contract path is floating point.
struct FailureReport {
  std::string scheme;
  int n = 0;
  int t = 0;
  Ratio eps;    // the code's configured error parameter
  Ratio bound;  // per-row bound this run enforces (eps, or 0 for adversarial)
  std::vector<FailureRow> rows;  // enumeration order; empty when not collected
  long long grid_points = 0;
  long long rejected_trials = 0;  // iid trials that exceeded t deletions
  Ratio worst;
  Ratio mean;
  long long violations = 0;      // rows with fail > bound
  std::string first_violation;   // "m=..., tau=..., fail=..." when violations > 0
  double wall_ms = 0.0;          // reporting only, never serialized
};

// Fixed schema: scheme,n,t,eps,m,tau,fail_num,fail_den,bound. The tau field
// is double-quoted (it contains commas); rationals render as "num/den".
// Output depends only on the report rows, so reruns are byte-identical.
void write_failure_csv(const FailureReport& r, std::ostream& os);

// All 2^n messages in lexicographic order.
std::vector<BitString> all_messages(int n, std::uint64_t budget = kDefaultEnumBudget);

// --- exact per-(m, tau) failure probabilities -------------------------------
// Each quantity is computed by two deliberately independent routes:
//   * the decode route enumerates every encoder randomness outcome and
//     evaluates the decoder's decision on it;
//   * the counting route counts dividing primes (or rival containments for
//     the sampler scheme) directly, without consulting the decoder.
// worst_case_report runs both on every grid point and throws on mismatch.

Ratio exact_failure(const ObliviousDescriptor& d, const BitString& m,
                    const DeletionPattern& tau);
Ratio exact_failure_counting(const ObliviousDescriptor& d, const BitString& m,
                             const DeletionPattern& tau);

// Failure of the systematic codeword (message followed by the protected
// tag); tau acts on the full codeword.
Ratio systematic_exact_failure(const ObliviousDescriptor& d, const BitString& m,
                               const DeletionPattern& tau);
Ratio systematic_exact_failure_counting(const ObliviousDescriptor& d, const BitString& m,
                                        const DeletionPattern& tau);

// Sampler-scheme failure for a message index; tau acts on length n.
Ratio existential_exact_failure(const ObliviousDescriptor& d, int message,
                                const DeletionPattern& tau);
Ratio existential_exact_failure_counting(const ObliviousDescriptor& d, int message,
                                         const DeletionPattern& tau);

// Deterministic code: 0 or 1 exactly.
Ratio adversarial_exact_failure(const AdversarialDescriptor& d, const BitString& m,
                                const DeletionPattern& tau);
Ratio adversarial_exact_failure_counting(const AdversarialDescriptor& d, const BitString& m,
                                         const DeletionPattern& tau);

// --- full sweeps -------------------------------------------------------------
// Patterns act on the transmitted object: the message itself for the
// hash-transmitting schemes (document-exchange view), the full codeword for
// the list-wrapped scheme. Set collect_rows = false on big grids to keep
// only the aggregates.
FailureReport worst_case_report(const ObliviousDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid = {},
                                Parallelism par = Parallelism::openmp,
                                bool collect_rows = true,
                                std::uint64_t budget = kDefaultEnumBudget);

// Sweep of the systematic wrapper (patterns on the full codeword).
FailureReport systematic_report(const ObliviousDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid = {},
                                Parallelism par = Parallelism::openmp,
                                bool collect_rows = true,
                                std::uint64_t budget = kDefaultEnumBudget);

FailureReport worst_case_report(const AdversarialDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid = {},
                                Parallelism par = Parallelism::openmp,
                                bool collect_rows = true,
                                std::uint64_t budget = kDefaultEnumBudget);

// --- stochastic-to-deterministic reduction -----------------------------------

struct ReductionResult {
  std::uint64_t seed = 0;
  Ratio average_error;          // exact over uniform (message, pattern)
  bool outputs_always_codeword = false;
};

// Samples one systematic codeword per message (coins derived from the seed),
// decodes through the stochastic decoder, and projects the result back onto
// the sampled codebook; ties/bottom go to the first codeword. The average
// error is computed exactly over all (message, pattern) pairs. The quality
// guarantee is existential over seeds, so callers look at the distribution
// (reduction_distribution) rather than asserting per-seed success.
ReductionResult oblivious_to_average(const ObliviousDescriptor& d, std::uint64_t seed,
                                     std::uint64_t budget = kDefaultEnumBudget);

std::vector<ReductionResult> reduction_distribution(const ObliviousDescriptor& d,
                                                    std::uint64_t first_seed, int seeds,
                                                    std::uint64_t budget = kDefaultEnumBudget);

// --- pattern/string counting with closed-form caps ---------------------------

// |{tau' : pattern_distance(tau, tau') <= ell}| by enumeration. Throws
// std::logic_error if the closed-form cap close_patterns_bound is violated
// (the cap always holds; a violation means an implementation bug).
std::uint64_t close_patterns_count(const DeletionPattern& tau, int ell,
                                   std::uint64_t budget = kDefaultEnumBudget);
// (ell+1) * C(2t+ell+1, 2t+1) * C(t+ell, t)
std::uint64_t close_patterns_bound(int t, int ell);

// Number of length-n strings on which two patterns at distance >= ell
// collide, by scanning all 2^n strings. Throws std::logic_error if the
// closed-form cap is violated.
std::uint64_t bad_string_census(int n, int ell, int t,
                                Parallelism par = Parallelism::openmp,
                                std::uint64_t budget = kDefaultEnumBudget);
// C(n,t)^2 * 2^{n-ell}
std::uint64_t bad_string_census_bound(int n, int ell, int t);

// --- redundancy accounting ----------------------------------------------------

// Evaluable part of the converse bound:
//   log2 C(n,t) + t - log2(3t) - log2(2/(1-eps)).
// The remaining -O(t log log n) term has no evaluable constant; reports
// carry it symbolically as kLowerBoundTail.
double lower_bound_value(int n, int t, const Ratio& eps);
inline constexpr const char* kLowerBoundTail = "-O(t*loglog(n))";

struct RedundancyGridPoint {
  std::string scheme;  // "vt", "explicit", "randomized", "adversarial"
  int n = 0;
  int t = 0;
  Ratio eps;
};

struct RedundancyRow {
  std::string scheme;
  int n = 0;
  int t = 0;
  Ratio eps;
  int measured_bits = 0;    // transmitted redundancy, exact
  double formula_bits = 0;  // leading-order reference value
  double diff_bits = 0;     // measured - formula
  double lower_bound = 0;   // evaluable converse value at (n, t, eps)
};

// Builds each scheme (verification off; only widths matter) and reports the
// measured redundancy against the leading-order formulas: 2t log2 n
// (explicit), (t+1) log2 n (randomized), (2t+1) log2 n (adversarial),
// log2(n+1) (vt).
std::vector<RedundancyRow> redundancy_table(const std::vector<RedundancyGridPoint>& grid,
                                            std::uint64_t seed,
                                            std::uint64_t budget = kDefaultEnumBudget);

// Schema: scheme,n,t,eps,measured_bits,formula_bits,diff_bits,lower_bound,
// lower_bound_tail. Floats are printed with two fixed decimals so reruns
// stay byte-identical.
void write_redundancy_csv(const std::vector<RedundancyRow>& rows, std::ostream& os);

// --- the model gap, demonstrated ---------------------------------------------

/// The oblivious-vs-adversarial distinction as a runnable fact: with the
/// modulus guard bypassed (tiny forced M), the explicit scheme shows a
/// strictly positive worst-case failure somewhere on its grid, while the
/// deterministic scheme at the same (n, t) decodes everything. Both values
/// are exact.
struct GapWitness {
  Ratio explicit_worst;      // > 0 by construction of the forced build
  std::string witness_m;     // grid point achieving it
  std::string witness_tau;
  Ratio adversarial_worst;   // exactly 0
};

GapWitness model_gap_witness(std::uint64_t seed, std::uint64_t budget = kDefaultEnumBudget);

}  // namespace delcode
