#include "cda/checker.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "cda/engine.hpp"
#include "cda/reference.hpp"

namespace cda {

namespace {

Matching canonical(Matching m) {
  std::sort(m.begin(), m.end(), [](const Transaction& a, const Transaction& b) {
    return std::tie(a.bid_id, a.ask_id, a.qty) <
           std::tie(b.bid_id, b.ask_id, b.qty);
  });
  return m;
}

std::string render(const Matching& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) os << ' ';
    os << '(' << m[i].bid_id << ',' << m[i].ask_id << ',' << m[i].qty << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

bool matchings_equal(const Matching& a, const Matching& b, CompareMode mode) {
  if (mode == CompareMode::Ordered) return a == b;
  return canonical(a) == canonical(b);
}

MismatchReport check_logs(const OrderBook& orders, const TradeBook& trades,
                          const CheckOptions& opts) {
  const std::vector<Matching> replay = opts.engine == EngineKind::Tree
                                           ? engine::run_book(orders)
                                           : reference::run_book(orders);

  MismatchReport report;
  auto flag = [&](Mismatch entry) { report.entries.push_back(std::move(entry)); };

  // Walk the replay and the (step-sorted) trade book in lockstep. Trade book
  // steps beyond the end of the order book count as extra steps.
  std::size_t ti = 0;
  const auto& steps = trades.steps;
  for (std::size_t k = 1; k <= replay.size(); ++k) {
    if (opts.fail_fast && !report.entries.empty()) return report;
    const Matching& expected = replay[k - 1];
    const Matching* found = nullptr;
    // Out-of-order or duplicate step entries never come out of the parser,
    // but hand-built trade books get flagged rather than skipped.
    while (ti < steps.size() && steps[ti].step < k) {
      flag({steps[ti].step, {}, steps[ti].matching, MismatchKind::ExtraStep});
      ++ti;
    }
    if (ti < steps.size() && steps[ti].step == k) {
      found = &steps[ti].matching;
      ++ti;
    }
    if (found == nullptr) {
      if (!expected.empty())
        flag({k, expected, {}, MismatchKind::MissingStep});
      continue;
    }
    if (expected.empty()) {
      flag({k, {}, *found, MismatchKind::ExtraStep});
      continue;
    }
    if (!matchings_equal(expected, *found, opts.mode))
      flag({k, expected, *found, MismatchKind::DifferentTransactions});
  }
  for (; ti < steps.size(); ++ti) {
    if (opts.fail_fast && !report.entries.empty()) return report;
    flag({steps[ti].step, {}, steps[ti].matching, MismatchKind::ExtraStep});
  }
  std::stable_sort(
      report.entries.begin(), report.entries.end(),
      [](const Mismatch& a, const Mismatch& b) { return a.step < b.step; });
  return report;
}

std::string describe(const Mismatch& m) {
  std::ostringstream os;
  os << "step " << m.step << ": ";
  switch (m.kind) {
    case MismatchKind::MissingStep:
      os << "missing step: replay produced " << render(m.expected)
         << ", trade book has no entry";
      break;
    case MismatchKind::ExtraStep:
      os << "extra step: replay matched nothing, trade book has "
         << render(m.found);
      break;
    case MismatchKind::DifferentTransactions:
      os << "different transactions: replay produced " << render(m.expected)
         << ", trade book has " << render(m.found);
      break;
  }
  return os.str();
}

}  // namespace cda
