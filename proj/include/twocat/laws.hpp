#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twocat/matrix.hpp"
#include "twocat/twovect.hpp"

// Seeded randomized and exhaustive law checks.
namespace twocat::laws {

enum class Mutation { none, kron_flip };

struct LawConfig {
  std::uint64_t seed = 42;
  std::size_t cases_per_law = 200;
  std::size_t max_object = 3;
  std::size_t max_components = 3;
  std::size_t max_dim = 3;
  std::size_t scalar_bound = 9;
  Mutation mutation = Mutation::none;

  /// Throws std::invalid_argument when a bound is zero.
  void validate() const;
};

/// Deterministic generator. Draws use plain modular reduction of
/// mt19937_64 output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }
  /// p/q with p in [-bound, bound], q in [1, bound].
  Rational scalar(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Seed of case `index` of the law `law` under base seed `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::string_view law, std::uint64_t index);

Matrix gen_matrix(Rng& rng, const LawConfig& cfg, std::size_t rows, std::size_t cols);
/// Entry-wise invertible square matrix (retries until invertible).
Matrix gen_invertible(Rng& rng, const LawConfig& cfg, std::size_t n);
Decomp gen_decomp(Rng& rng, const LawConfig& cfg);
OneMor gen_one_mor(Rng& rng, const LawConfig& cfg, std::size_t src, std::size_t tgt);
/// A 1-morphism parallel to f whose entries have the same totals but are
/// split into freshly drawn components.
OneMor gen_repartition(Rng& rng, const LawConfig& cfg, const OneMor& f);
TwoMor gen_two_mor(Rng& rng, const LawConfig& cfg, const OneMor& f, const OneMor& g);

/// Deliberately wrong horizontal composition: in each Kronecker block the
/// row index is laid out with the factors swapped while the column index
/// keeps the correct order.
TwoMor hcompose2_kron_flip(const TwoMor& xi, const TwoMor& theta);

struct Failure {
  std::uint64_t case_index = 0;  ///< replay with run_law(name, cfg, case_index)
  std::uint64_t case_seed = 0;
  std::string message;
  std::string counterexample;  ///< morphism file; lets `lhs` and `rhs` when applicable
};

struct LawResult {
  std::string name;
  std::string statement;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool ok() const { return failures.empty(); }
};

struct LawReport {
  LawConfig config;
  std::vector<LawResult> laws;

  std::size_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
};

/// Names of every law, in report order.
std::vector<std::string> law_names();

/// Runs one law. With `only_case` set, runs just that case index.
/// Throws std::invalid_argument for an unknown name.
LawResult run_law(std::string_view name, const LawConfig& cfg,
                  std::optional<std::uint64_t> only_case = std::nullopt);

LawReport run_suite(const LawConfig& cfg);

/// One line per law: PASS/FAIL, name, cases, failures, statement; failures
/// listed beneath. Timings appended when `timings` is set.
std::string to_text(const LawReport& report, bool timings = true);
/// JSON document with the same content.
std::string to_json(const LawReport& report, bool timings = true);

}  // namespace twocat::laws
