#pragma once

#include <cstdint>
#include <vector>

namespace cda {

using OrderId = std::uint64_t;
using Timestamp = std::uint64_t;
using Price = std::int64_t;  // limit price in whole cents
using Qty = std::int64_t;

enum class Side { Bid, Ask };

inline Side opposite(Side s) noexcept {
  return s == Side::Bid ? Side::Ask : Side::Bid;
}

// A limit order, incoming or resident. qty is the remaining quantity and
// shrinks as the order trades; id, timestamp and price never change.
struct Order {
  OrderId id = 0;
  Timestamp timestamp = 0;
  Price price = 0;
  Qty qty = 0;

  friend bool operator==(const Order&, const Order&) = default;
};

// Priority key within one side of the book; lower key = matched first.
// Bids: higher price wins, asks: lower price wins; ties go to earlier arrival.
// Quantity is deliberately not part of the key, so a partially filled order
// keeps its queue position when re-inserted with a smaller qty.
struct CompetitiveKey {
  Price price = 0;
  Timestamp timestamp = 0;
  Side side = Side::Bid;

  friend bool operator<(const CompetitiveKey& a, const CompetitiveKey& b) {
    if (a.price != b.price)
      return a.side == Side::Bid ? a.price > b.price : a.price < b.price;
    return a.timestamp < b.timestamp;
  }
  friend bool operator==(const CompetitiveKey&, const CompetitiveKey&) = default;
};

inline CompetitiveKey competitive_key(const Order& o, Side side) {
  return CompetitiveKey{o.price, o.timestamp, side};
}

// True when a would be matched before b on the given side.
inline bool more_competitive(const Order& a, const Order& b, Side side) {
  return competitive_key(a, side) < competitive_key(b, side);
}

enum class InstrKind { Buy, Sell, Del };

// One line of an order book. Buy/Sell carry a full order; Del carries only an
// id and a timestamp (price and qty stay zero and are never read).
struct Instruction {
  InstrKind kind = InstrKind::Buy;
  Order order;

  static Instruction buy(const Order& o) { return {InstrKind::Buy, o}; }
  static Instruction sell(const Order& o) { return {InstrKind::Sell, o}; }
  static Instruction del(OrderId id, Timestamp ts) {
    return {InstrKind::Del, Order{id, ts, 0, 0}};
  }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Transaction {
  OrderId bid_id = 0;
  OrderId ask_id = 0;
  Qty qty = 0;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

// Transactions emitted while processing a single instruction, in generation
// order: the trade against the most competitive resident counterpart first.
using Matching = std::vector<Transaction>;

struct OrderBook {
  std::vector<Instruction> instructions;

  friend bool operator==(const OrderBook&, const OrderBook&) = default;
};

enum class EngineKind { Tree, List };

}  // namespace cda
