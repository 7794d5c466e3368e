#include "cda/engine.hpp"

#include <stdexcept>

#include "cda/logio.hpp"

namespace cda::engine {

Matching match_ask(EngineState& s, Order ask) {
  Matching m;
  for (;;) {
    std::optional<Order> bid = s.bids.extract_most_competitive();
    if (!bid) {
      // No counterparty left; the remainder rests in the ask book.
      s.asks.insert(ask);
      return m;
    }
    if (bid->price < ask.price) {
      // Even the best bid does not reach the ask: put it back, shelve the ask.
      s.bids.insert(*bid);
      s.asks.insert(ask);
      return m;
    }
    if (bid->qty >= ask.qty) {
      // Incoming ask fully traded; the bid's remainder, if any, stays queued
      // under its original id, timestamp and price.
      m.push_back({bid->id, ask.id, ask.qty});
      if (bid->qty > ask.qty) {
        Order rest = *bid;
        rest.qty -= ask.qty;
        s.bids.insert(rest);
      }
      return m;
    }
    // Bid fully traded; the ask continues with what is left.
    m.push_back({bid->id, ask.id, bid->qty});
    ask.qty -= bid->qty;
  }
}

Matching match_bid(EngineState& s, Order bid) {
  Matching m;
  for (;;) {
    std::optional<Order> ask = s.asks.extract_most_competitive();
    if (!ask) {
      s.bids.insert(bid);
      return m;
    }
    if (ask->price > bid.price) {
      s.asks.insert(*ask);
      s.bids.insert(bid);
      return m;
    }
    if (ask->qty >= bid.qty) {
      m.push_back({bid.id, ask->id, bid.qty});
      if (ask->qty > bid.qty) {
        Order rest = *ask;
        rest.qty -= bid.qty;
        s.asks.insert(rest);
      }
      return m;
    }
    m.push_back({bid.id, ask->id, ask->qty});
    bid.qty -= ask->qty;
  }
}

Matching del_order(EngineState& s, OrderId id) {
  // At most one side holds the id; both are probed.
  s.bids.delete_by_id(id);
  s.asks.delete_by_id(id);
  return {};
}

Matching process_instruction(EngineState& s, const Instruction& instr) {
  switch (instr.kind) {
    case InstrKind::Del:
      return del_order(s, instr.order.id);
    case InstrKind::Buy:
      return match_bid(s, instr.order);
    case InstrKind::Sell:
      return match_ask(s, instr.order);
  }
  return {};
}

std::vector<Matching> run_book(const OrderBook& book) {
  if (auto violation = validate_structured(book))
    throw std::invalid_argument("order book is not structured: " +
                                violation->to_string());
  EngineState s;
  std::vector<Matching> out;
  out.reserve(book.instructions.size());
  for (const Instruction& instr : book.instructions)
    out.push_back(process_instruction(s, instr));
  return out;
}

}  // namespace cda::engine
