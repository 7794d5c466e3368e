#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cda/logio.hpp"
#include "cda/types.hpp"

namespace cda {

enum class CompareMode { Set, Ordered };
enum class MismatchKind { MissingStep, ExtraStep, DifferentTransactions };

struct Mismatch {
  std::size_t step = 0;          // 1-based instruction index
  Matching expected;             // what the replay produced
  Matching found;                // what the trade book claims
  MismatchKind kind = MismatchKind::DifferentTransactions;
};

struct MismatchReport {
  std::vector<Mismatch> entries;  // sorted by step

  bool ok() const noexcept { return entries.empty(); }
};

struct CheckOptions {
  CompareMode mode = CompareMode::Set;
  bool fail_fast = false;
  EngineKind engine = EngineKind::Tree;
};

// Set mode compares the two matchings as multisets of transactions; Ordered
// mode compares them as sequences.
bool matchings_equal(const Matching& a, const Matching& b, CompareMode mode);

// Replays the order book and compares the produced matchings against the
// trade book step by step. The replay output is unique, so any log that
// violates the matching rules is guaranteed to show up as a mismatch.
// Throws std::invalid_argument when the order book is not structured.
MismatchReport check_logs(const OrderBook& orders, const TradeBook& trades,
                          const CheckOptions& opts = {});

// One human-readable line per entry, for CLI output.
std::string describe(const Mismatch& m);

}  // namespace cda
