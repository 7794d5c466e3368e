#include "cda/reference.hpp"

#include <stdexcept>

#include "cda/logio.hpp"

namespace cda::reference {

void insert_sorted(ListBook& book, const Order& o) {
  auto it = book.orders.begin();
  while (it != book.orders.end() && more_competitive(*it, o, book.side)) ++it;
  book.orders.insert(it, o);
}

std::optional<Order> remove_by_id(ListBook& book, OrderId id) {
  for (auto it = book.orders.begin(); it != book.orders.end(); ++it) {
    if (it->id == id) {
      Order out = *it;
      book.orders.erase(it);
      return out;
    }
  }
  return std::nullopt;
}

namespace {

Matching match_ask(RefState& s, Order ask) {
  Matching m;
  for (;;) {
    if (s.bids.orders.empty()) {
      insert_sorted(s.asks, ask);
      return m;
    }
    Order bid = s.bids.orders.front();
    s.bids.orders.pop_front();
    if (bid.price < ask.price) {
      insert_sorted(s.bids, bid);
      insert_sorted(s.asks, ask);
      return m;
    }
    if (bid.qty == ask.qty) {
      m.push_back({bid.id, ask.id, ask.qty});
      return m;
    }
    if (bid.qty > ask.qty) {
      m.push_back({bid.id, ask.id, ask.qty});
      bid.qty -= ask.qty;
      insert_sorted(s.bids, bid);
      return m;
    }
    m.push_back({bid.id, ask.id, bid.qty});
    ask.qty -= bid.qty;
  }
}

Matching match_bid(RefState& s, Order bid) {
  Matching m;
  for (;;) {
    if (s.asks.orders.empty()) {
      insert_sorted(s.bids, bid);
      return m;
    }
    Order ask = s.asks.orders.front();
    s.asks.orders.pop_front();
    if (ask.price > bid.price) {
      insert_sorted(s.asks, ask);
      insert_sorted(s.bids, bid);
      return m;
    }
    if (ask.qty == bid.qty) {
      m.push_back({bid.id, ask.id, bid.qty});
      return m;
    }
    if (ask.qty > bid.qty) {
      m.push_back({bid.id, ask.id, bid.qty});
      ask.qty -= bid.qty;
      insert_sorted(s.asks, ask);
      return m;
    }
    m.push_back({bid.id, ask.id, ask.qty});
    bid.qty -= ask.qty;
  }
}

Matching del_order(RefState& s, OrderId id) {
  remove_by_id(s.bids, id);
  remove_by_id(s.asks, id);
  return {};
}

}  // namespace

Matching process_instruction(RefState& s, const Instruction& instr) {
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
  RefState s;
  std::vector<Matching> out;
  out.reserve(book.instructions.size());
  for (const Instruction& instr : book.instructions)
    out.push_back(process_instruction(s, instr));
  return out;
}

}  // namespace cda::reference
