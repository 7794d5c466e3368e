#pragma once

#include <vector>

#include "cda/dualbook.hpp"
#include "cda/types.hpp"

namespace cda::engine {

// Resident state threaded through a stream of instructions. Between steps,
// every resident bid prices strictly below every resident ask.
struct EngineState {
  DualBook bids{Side::Bid};
  DualBook asks{Side::Ask};
};

// Matches an incoming ask against resident bids in competitiveness order.
// The unmatched remainder, if any, becomes a resident ask.
Matching match_ask(EngineState& s, Order ask);

// Mirror image of match_ask.
Matching match_bid(EngineState& s, Order bid);

// Removes the order with this id from whichever book holds it; a no-op on an
// unknown id. Never emits transactions.
Matching del_order(EngineState& s, OrderId id);

Matching process_instruction(EngineState& s, const Instruction& instr);

// Replays a whole book from an empty state; element k is the matching of
// instruction k+1. Throws std::invalid_argument when the book is not
// structured.
std::vector<Matching> run_book(const OrderBook& book);

}  // namespace cda::engine
