// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/invoice.hpp"

#include <cctype>
#include <set>

#include <fmt/format.h>

#include "greendoc/error.hpp"

namespace greendoc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// "ITEM" + whitespace + digit
bool starts_item_row(std::string_view line) {
  line = trim(line);
  if (line.substr(0, 4) != "ITEM") return false;
  std::size_t i = 4;
  if (i >= line.size() || !std::isspace(static_cast<unsigned char>(line[i]))) return false;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  return i < line.size() && is_digit(line[i]);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto bar = line.find('|', start);
    out.push_back(trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

// Collapses the whitespace run after "ITEM" so "ITEM   3" and "ITEM 3" agree.
std::string normalize_id(std::string_view field, std::size_t line_no) {
  std::string_view rest = field.substr(4);
  rest = trim(rest);
  for (char c : rest) {
    if (!is_digit(c)) throw ParseError(line_no, fmt::format("bad item id '{}'", field));
  }
  return "ITEM " + std::string(rest);
}

Decimal amount(std::string_view field, const char* what, std::size_t line_no) {
  auto d = Decimal::parse(field);
  if (!d) throw ParseError(line_no, fmt::format("{} is not a number: '{}'", what, field));
  if (*d < Decimal{}) throw ParseError(line_no, fmt::format("{} is negative: '{}'", what, field));
  return *d;
}

bool is_currency_code(std::string_view s) {
  if (s.size() != 3) return false;
  for (char c : s) {
    if (c < 'A' || c > 'Z') return false;
  }
  return true;
}

}  // namespace

ParsedInvoice parse_invoice(std::string_view document) {
  ParsedInvoice out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const auto nl = document.find('\n', pos);
    std::string_view line = document.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? document.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!starts_item_row(line)) continue;

    const auto fields = split_fields(trim(line));
    if (fields.size() != 6) {
      throw ParseError(line_no, fmt::format("expected 6 '|'-separated fields, found {}", fields.size()));
    }
    LineItem item;
    item.item_id = normalize_id(fields[0], line_no);
    item.description = std::string(fields[1]);
    item.quantity = amount(fields[2], "quantity", line_no);
    item.unit_price = amount(fields[3], "unit price", line_no);
    item.total_price = amount(fields[4], "total price", line_no);
    if (!is_currency_code(fields[5])) {
      throw ParseError(line_no, fmt::format("bad currency code '{}'", fields[5]));
    }
    item.currency = std::string(fields[5]);
    if (!seen.insert(item.item_id).second) {
      throw ParseError(line_no, fmt::format("duplicate item id '{}'", item.item_id));
    }
    out.items.push_back(std::move(item));
  }
  if (out.items.empty()) out.warnings.emplace_back("no line items found in document");
  return out;
}

std::vector<Verification> verify_items(std::span<const LineItem> items, Decimal tolerance) {
  std::vector<Verification> report;
  report.reserve(items.size());
  for (const auto& it : items) {
    const Decimal delta = it.quantity * it.unit_price - it.total_price;
    report.push_back({it.item_id, delta.abs() <= tolerance, delta});
  }
  return report;
}

namespace {

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
        } else {
          out += c;
        }
    }
  }
  return out + '"';
}

}  // namespace

std::string items_to_json(std::span<const LineItem> items) {
  if (items.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    out += fmt::format(
        "  {{\"item_id\": {}, \"quantity\": {}, \"unit_price\": {}, \"total_price\": {}, \"currency\": {}}}",
        json_string(it.item_id), it.quantity.to_string(), it.unit_price.to_fixed(2),
        it.total_price.to_fixed(2), json_string(it.currency));
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

}  // namespace greendoc
