#pragma once

#include <utility>
#include <vector>

#include "cda/types.hpp"

namespace cda::spec_props {

// One matching step seen from outside: competitiveness-sorted snapshots of
// both books around the instruction, plus the transactions it produced. The
// predicates below audit a step against the exchange rules without knowing
// how any particular engine stores its books, so they can audit third-party
// replays as well as ours.
struct Transition {
  std::vector<Order> before_bids;
  std::vector<Order> before_asks;
  Instruction instr;
  std::vector<Order> after_bids;
  std::vector<Order> after_asks;
  Matching matching;
};

// The books with the instruction applied set-wise: a Buy/Sell order joins its
// side, a Delete removes its id from either side. Competitiveness order is
// preserved.
std::pair<std::vector<Order>, std::vector<Order>> augmented_books(
    const Transition& t);

// No trade is possible among residents: every bid prices strictly below
// every ask. Vacuously true when either side is empty.
bool check_positive_spread(const std::vector<Order>& after_bids,
                           const std::vector<Order>& after_asks);

// Price-time priority: every counterparty strictly more competitive than the
// least competitive one that traded must have its full resident quantity
// traded in this step. Vacuous for deletes and empty matchings.
bool check_priority(const Transition& t);

// Honest arithmetic: each order's traded quantity is within its resident
// quantity, partial remainders survive with only qty reduced, exhausted
// orders disappear, and nothing else changes.
bool check_conservation(const Transition& t);

}  // namespace cda::spec_props
