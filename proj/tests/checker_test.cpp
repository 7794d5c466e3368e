#include "cda/checker.hpp"

#include <algorithm>

#include "cda/engine.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace cda;

namespace {

// book: buy 100x5, buy 99x4, sell 90x7 sweeps both bids, then a quiet buy.
OrderBook sample_book() {
  OrderBook book;
  book.instructions = {Instruction::buy(Order{1, 1, 100, 5}),
                       Instruction::buy(Order{2, 2, 99, 4}),
                       Instruction::sell(Order{3, 3, 90, 7}),
                       Instruction::buy(Order{4, 4, 80, 2})};
  return book;
}

TradeBook canonical_trades(const OrderBook& book) {
  return trade_book_from_matchings(engine::run_book(book));
}

}  // namespace

TEST_CASE("checker: conforming logs produce an empty report") {
  const OrderBook book = sample_book();
  const TradeBook trades = canonical_trades(book);
  CHECK(check_logs(book, trades).ok());
  CHECK(check_logs(book, trades, {CompareMode::Ordered, false, EngineKind::Tree}).ok());
  CHECK(check_logs(book, trades, {CompareMode::Set, false, EngineKind::List}).ok());
}

TEST_CASE("checker: a changed quantity is flagged at its step") {
  const OrderBook book = sample_book();
  TradeBook trades = canonical_trades(book);
  REQUIRE(!trades.steps.empty());
  trades.steps[0].matching[0].qty -= 1;
  const auto report = check_logs(book, trades);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].step == trades.steps[0].step);
  CHECK(report.entries[0].kind == MismatchKind::DifferentTransactions);
  CHECK(describe(report.entries[0]).find("step 3") == 0);
}

TEST_CASE("checker: a fabricated step is flagged as extra") {
  const OrderBook book = sample_book();
  TradeBook trades = canonical_trades(book);
  trades.steps.insert(trades.steps.begin(),
                      TradeStep{1, {Transaction{1, 1, 1}}});
  const auto report = check_logs(book, trades);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].step == 1);
  CHECK(report.entries[0].kind == MismatchKind::ExtraStep);
}

TEST_CASE("checker: a dropped step is flagged as missing") {
  const OrderBook book = sample_book();
  TradeBook trades = canonical_trades(book);
  trades.steps.clear();
  const auto report = check_logs(book, trades);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].step == 3);
  CHECK(report.entries[0].kind == MismatchKind::MissingStep);
}

TEST_CASE("checker: set mode tolerates reordering, ordered mode does not") {
  const OrderBook book = sample_book();
  TradeBook trades = canonical_trades(book);
  REQUIRE(trades.steps[0].matching.size() == 2);
  std::swap(trades.steps[0].matching[0], trades.steps[0].matching[1]);

  CHECK(check_logs(book, trades, {CompareMode::Set, false, EngineKind::Tree}).ok());
  const auto strict =
      check_logs(book, trades, {CompareMode::Ordered, false, EngineKind::Tree});
  REQUIRE(strict.entries.size() == 1);
  CHECK(strict.entries[0].kind == MismatchKind::DifferentTransactions);
}

TEST_CASE("checker: fail-fast stops at the first mismatch") {
  OrderBook book = sample_book();
  // two trading steps: extend with another sweep
  book.instructions.push_back(Instruction::sell(Order{5, 5, 70, 2}));
  TradeBook trades = canonical_trades(book);
  REQUIRE(trades.steps.size() == 2);
  trades.steps[0].matching[0].qty += 1;
  trades.steps[1].matching[0].qty += 1;

  const auto full = check_logs(book, trades);
  CHECK(full.entries.size() == 2);
  const auto fast = check_logs(book, trades, {CompareMode::Set, true, EngineKind::Tree});
  CHECK(fast.entries.size() == 1);
  CHECK(fast.entries[0].step == full.entries[0].step);
}

TEST_CASE("checker: trade book steps beyond the book length are extra") {
  const OrderBook book = sample_book();
  TradeBook trades = canonical_trades(book);
  trades.steps.push_back(TradeStep{99, {Transaction{1, 2, 1}}});
  const auto report = check_logs(book, trades);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].step == 99);
  CHECK(report.entries[0].kind == MismatchKind::ExtraStep);
}

TEST_CASE("checker: verdict is engine-independent") {
  for (std::size_t i = 0; i < 40; ++i) {
    const OrderBook book = testcorpus::random_structured_book(3000 + i, 120);
    TradeBook trades = canonical_trades(book);
    const bool has_trades = !trades.steps.empty();
    if (has_trades) trades.steps[0].matching[0].qty += 1;
    const auto tree = check_logs(book, trades, {CompareMode::Set, false, EngineKind::Tree});
    const auto list = check_logs(book, trades, {CompareMode::Set, false, EngineKind::List});
    CHECK(tree.ok() == list.ok());
    CHECK(tree.ok() == !has_trades);
  }
}

TEST_CASE("checker: structured validation failures surface as exceptions") {
  OrderBook bad;
  bad.instructions = {Instruction::buy(Order{1, 2, 100, 5}),
                      Instruction::buy(Order{2, 1, 100, 5})};
  CHECK_THROWS_AS(check_logs(bad, TradeBook{}), std::invalid_argument);
}
