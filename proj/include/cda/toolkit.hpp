#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cda/types.hpp"

namespace cda::toolkit {

// Random order-flow parameters. All draws come from MT19937-64 seeded with
// `seed`, reduced to a range by modulo, so the same seed yields the same
// book on every platform. Each instruction is a Delete with probability
// delete_fraction, a Buy with probability buy_fraction, and a Sell
// otherwise. Deletes target a uniformly chosen live resident id; when
// nothing is resident a harmless delete of the never-assigned id n+1 is
// emitted instead.
struct GenParams {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Price price_lo = 9000;
  Price price_hi = 11000;
  Qty qty_lo = 1;
  Qty qty_hi = 100;
  double delete_fraction = 0.1;
  double buy_fraction = 0.45;
};

// Deterministic in the seed; the output is always structured: timestamps run
// 1..n and Buy/Sell ids are fresh increasing integers.
OrderBook gen_book(const GenParams& p);

// Worst case for sorted-list insertion: n unit bids with strictly
// descending prices and nothing matchable, so every order stays resident.
OrderBook gen_adversarial_book(std::size_t n);

// Sorts distinct positive values in decreasing order by trading them: n unit
// bids priced by the inputs followed by n zero-priced unit asks. Each ask
// picks off the most competitive remaining bid, so the trade sequence walks
// the prices downward. Throws std::invalid_argument on duplicates or
// non-positive values.
std::vector<Price> sort_via_cda(const std::vector<Price>& values);

// Replays a book on the chosen engine while auditing every step against the
// three exchange rules. failed_step is the first 1-based step where a rule
// broke (never expected to fire for these engines).
struct AuditResult {
  std::vector<Matching> matchings;
  std::optional<std::size_t> failed_step;
  std::string failed_check;  // "positive-spread" | "priority" | "conservation"
};

AuditResult audited_run(const OrderBook& book, EngineKind engine);

struct BenchRow {
  std::size_t n = 0;
  std::string engine;  // "tree" | "list"
  double seconds = 0.0;
  std::optional<double> ratio_vs_tenth;  // time(n) / time(n/10), when timed
};

// Wall-clock seconds for one full replay.
double time_run_book(EngineKind engine, const OrderBook& book);

// Times one generated book per size on each engine. With adversarial=true
// the books are gen_adversarial_book(n) instead of random flow.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                const std::vector<EngineKind>& engines,
                                std::uint64_t seed, bool adversarial = false);

// CSV with header n,engine,seconds,ratio_vs_tenth; the ratio cell is empty
// when n/10 was not timed.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace cda::toolkit
