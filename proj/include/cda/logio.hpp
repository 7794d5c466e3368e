#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cda/errors.hpp"
#include "cda/types.hpp"

namespace cda {

// Trade book: for each 1-based instruction index that produced trades, the
// transactions of that step. Steps that matched nothing are not stored.
struct TradeStep {
  std::size_t step = 0;
  Matching matching;

  friend bool operator==(const TradeStep&, const TradeStep&) = default;
};

struct TradeBook {
  std::vector<TradeStep> steps;

  friend bool operator==(const TradeBook&, const TradeBook&) = default;
};

struct StructureViolation {
  std::size_t line = 0;  // 1-based instruction index
  std::string reason;

  std::string to_string() const;
};

// Line formats, ASCII, one record per line, trailing newline optional:
//   order book:  BUY,id,ts,price,qty | SELL,id,ts,price,qty | DEL,id,ts
//   trade book:  step,bid_id,ask_id,qty
// All fields are decimal integers; prices are cents. Writers emit exactly
// these bytes, so equal inputs produce byte-identical files.

OrderBook parse_order_book(std::istream& in);
void write_order_book(const OrderBook& book, std::ostream& out);

// A book is structured when timestamps strictly increase (deletes included)
// and no Buy/Sell id repeats, except an id equal to the id of the
// immediately preceding Delete instruction. Returns the first violation, or
// nullopt when the book is structured.
std::optional<StructureViolation> validate_structured(const OrderBook& book);

TradeBook parse_trade_book(std::istream& in);
void write_trade_book(const std::vector<Matching>& matchings,
                      std::ostream& out);

// The TradeBook value write_trade_book would serialize.
TradeBook trade_book_from_matchings(const std::vector<Matching>& matchings);

}  // namespace cda
