#include "cda/logio.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cda {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_int(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, std::string(what) + " is not a valid integer: '" +
                               std::string(field) + "'");
  return value;
}

Order parse_order_fields(const std::vector<std::string_view>& f,
                         std::size_t line) {
  Order o;
  o.id = parse_int<OrderId>(f[1], line, "id");
  o.timestamp = parse_int<Timestamp>(f[2], line, "timestamp");
  o.price = parse_int<Price>(f[3], line, "price");
  o.qty = parse_int<Qty>(f[4], line, "qty");
  if (o.id < 1) throw ParseError(line, "id must be positive");
  if (o.timestamp < 1) throw ParseError(line, "timestamp must be positive");
  if (o.price < 0) throw ParseError(line, "price must be non-negative");
  if (o.qty < 1) throw ParseError(line, "qty must be positive");
  return o;
}

// Reads one logical line, tolerating CRLF input and a missing final newline.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::string StructureViolation::to_string() const {
  return "line " + std::to_string(line) + ": " + reason;
}

OrderBook parse_order_book(std::istream& in) {
  OrderBook book;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    if (line.empty()) throw ParseError(lineno, "empty line");
    const auto fields = split_fields(line);
    const std::string_view cmd = fields[0];
    if (cmd == "BUY" || cmd == "SELL") {
      if (fields.size() != 5)
        throw ParseError(lineno, "expected 5 fields for " + std::string(cmd) +
                                     ", got " + std::to_string(fields.size()));
      const Order o = parse_order_fields(fields, lineno);
      book.instructions.push_back(cmd == "BUY" ? Instruction::buy(o)
                                               : Instruction::sell(o));
    } else if (cmd == "DEL") {
      if (fields.size() != 3)
        throw ParseError(lineno, "expected 3 fields for DEL, got " +
                                     std::to_string(fields.size()));
      const auto id = parse_int<OrderId>(fields[1], lineno, "id");
      const auto ts = parse_int<Timestamp>(fields[2], lineno, "timestamp");
      if (id < 1) throw ParseError(lineno, "id must be positive");
      if (ts < 1) throw ParseError(lineno, "timestamp must be positive");
      book.instructions.push_back(Instruction::del(id, ts));
    } else {
      throw ParseError(lineno, "unknown command '" + std::string(cmd) + "'");
    }
  }
  return book;
}

void write_order_book(const OrderBook& book, std::ostream& out) {
  for (const Instruction& instr : book.instructions) {
    const Order& o = instr.order;
    switch (instr.kind) {
      case InstrKind::Buy:
        out << "BUY," << o.id << ',' << o.timestamp << ',' << o.price << ','
            << o.qty << '\n';
        break;
      case InstrKind::Sell:
        out << "SELL," << o.id << ',' << o.timestamp << ',' << o.price << ','
            << o.qty << '\n';
        break;
      case InstrKind::Del:
        out << "DEL," << o.id << ',' << o.timestamp << '\n';
        break;
    }
  }
}

std::optional<StructureViolation> validate_structured(const OrderBook& book) {
  std::unordered_set<OrderId> used_ids;
  Timestamp prev_ts = 0;
  const Instruction* prev = nullptr;
  for (std::size_t i = 0; i < book.instructions.size(); ++i) {
    const Instruction& cur = book.instructions[i];
    const std::size_t line = i + 1;
    if (cur.order.timestamp <= prev_ts)
      return StructureViolation{line, "timestamps must strictly increase"};
    if (cur.kind != InstrKind::Del) {
      const OrderId id = cur.order.id;
      const bool reuse_ok = prev != nullptr && prev->kind == InstrKind::Del &&
                            prev->order.id == id;
      if (used_ids.contains(id) && !reuse_ok)
        return StructureViolation{line, "duplicate id " + std::to_string(id)};
      used_ids.insert(id);
    }
    prev_ts = cur.order.timestamp;
    prev = &cur;
  }
  return std::nullopt;
}

TradeBook parse_trade_book(std::istream& in) {
  TradeBook book;
  std::string line;
  std::size_t lineno = 0;
  while (next_line(in, line, lineno)) {
    if (line.empty()) throw ParseError(lineno, "empty line");
    const auto fields = split_fields(line);
    if (fields.size() != 4)
      throw ParseError(lineno, "expected 4 fields, got " +
                                   std::to_string(fields.size()));
    const auto step = parse_int<std::size_t>(fields[0], lineno, "step");
    Transaction tx;
    tx.bid_id = parse_int<OrderId>(fields[1], lineno, "bid_id");
    tx.ask_id = parse_int<OrderId>(fields[2], lineno, "ask_id");
    tx.qty = parse_int<Qty>(fields[3], lineno, "qty");
    if (step < 1) throw ParseError(lineno, "step must be positive");
    if (tx.bid_id < 1 || tx.ask_id < 1)
      throw ParseError(lineno, "order ids must be positive");
    if (tx.qty < 1) throw ParseError(lineno, "qty must be positive");
    if (!book.steps.empty() && step < book.steps.back().step)
      throw ParseError(lineno, "step indices must increase");
    if (!book.steps.empty() && step == book.steps.back().step)
      book.steps.back().matching.push_back(tx);
    else
      book.steps.push_back(TradeStep{step, {tx}});
  }
  return book;
}

void write_trade_book(const std::vector<Matching>& matchings,
                      std::ostream& out) {
  for (std::size_t k = 0; k < matchings.size(); ++k)
    for (const Transaction& tx : matchings[k])
      out << (k + 1) << ',' << tx.bid_id << ',' << tx.ask_id << ',' << tx.qty
          << '\n';
}

TradeBook trade_book_from_matchings(const std::vector<Matching>& matchings) {
  TradeBook book;
  for (std::size_t k = 0; k < matchings.size(); ++k)
    if (!matchings[k].empty())
      book.steps.push_back(TradeStep{k + 1, matchings[k]});
  return book;
}

}  // namespace cda
