#include "gnslab/rule_table.hpp"

#include <algorithm>
#include <string>

#include "gnslab/error.hpp"

namespace gnslab {

namespace {

void check_shape(int symbols, int radius) {
  if (symbols < 2 || symbols > kMaxSymbols) {
    fail(ErrorKind::Validation,
         "symbol count k=" + std::to_string(symbols) + " outside [2, " + std::to_string(kMaxSymbols) + "]");
  }
  if (radius < 1) fail(ErrorKind::Validation, "radius r=" + std::to_string(radius) + " must be >= 1");
}

// Largest power of k that fits in 32 bits, used to move several digits per
// big-integer operation.
std::pair<std::uint64_t, int> digit_chunk(int symbols) {
  std::uint64_t power = 1;
  int digits = 0;
  while (power * static_cast<std::uint64_t>(symbols) <= 0xFFFFFFFFull) {
    power *= static_cast<std::uint64_t>(symbols);
    ++digits;
  }
  return {power, digits};
}

// Digits of a neighborhood value, leftmost cell first.
std::vector<Symbol> to_digits(std::size_t value, int symbols, int width) {
  std::vector<Symbol> digits(static_cast<std::size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Symbol>(value % static_cast<std::size_t>(symbols));
    value /= static_cast<std::size_t>(symbols);
  }
  return digits;
}

std::size_t from_digits(std::span<const Symbol> digits, int symbols) {
  std::size_t value = 0;
  for (Symbol d : digits) value = value * static_cast<std::size_t>(symbols) + d;
  return value;
}

}  // namespace

std::size_t table_entries(int symbols, int radius) {
  check_shape(symbols, radius);
  std::size_t entries = 1;
  for (int i = 0; i < 2 * radius + 1; ++i) {
    entries *= static_cast<std::size_t>(symbols);
    if (entries > kMaxTableEntries) {
      fail(ErrorKind::Capacity, "k=" + std::to_string(symbols) + ", r=" + std::to_string(radius) +
                                    " needs more than " + std::to_string(kMaxTableEntries) +
                                    " table entries");
    }
  }
  return entries;
}

RuleNumber rule_count(int symbols, int radius) {
  const std::size_t entries = table_entries(symbols, radius);
  RuleNumber count = 1;
  const auto [chunk, digits] = digit_chunk(symbols);
  std::size_t remaining = entries;
  while (remaining >= static_cast<std::size_t>(digits)) {
    count *= chunk;
    remaining -= static_cast<std::size_t>(digits);
  }
  while (remaining-- > 0) count *= symbols;
  return count;
}

RuleTable::RuleTable(int symbols, int radius, std::vector<Symbol> lookup)
    : symbols_(symbols), radius_(radius), lookup_(std::move(lookup)) {
  const std::size_t entries = table_entries(symbols, radius);
  if (lookup_.size() != entries) {
    fail(ErrorKind::Validation, "rule table has " + std::to_string(lookup_.size()) + " entries, expected " +
                                    std::to_string(entries));
  }
  for (std::size_t v = 0; v < lookup_.size(); ++v) {
    if (lookup_[v] >= symbols_) {
      fail(ErrorKind::Validation, "rule output " + std::to_string(lookup_[v]) + " for neighborhood " +
                                      std::to_string(v) + " is not a symbol below k=" + std::to_string(symbols_));
    }
  }
}

Symbol RuleTable::output(std::span<const Symbol> neighborhood) const {
  if (neighborhood.size() != static_cast<std::size_t>(neighborhood_size())) {
    fail(ErrorKind::Shape, "neighborhood must have " + std::to_string(neighborhood_size()) + " cells");
  }
  for (Symbol s : neighborhood) {
    if (s >= symbols_) fail(ErrorKind::Data, "neighborhood symbol " + std::to_string(s) + " >= k");
  }
  return lookup_[from_digits(neighborhood, symbols_)];
}

std::vector<Symbol> RuleTable::outputs() const { return {lookup_.rbegin(), lookup_.rend()}; }

bool RuleTable::is_quiescent(Symbol background) const {
  if (background >= symbols_) return false;
  std::vector<Symbol> uniform(static_cast<std::size_t>(neighborhood_size()), background);
  return lookup_[from_digits(uniform, symbols_)] == background;
}

RuleTable decode_rule(const RuleNumber& rule_number, int symbols, int radius) {
  const std::size_t entries = table_entries(symbols, radius);
  if (rule_number < 0) fail(ErrorKind::Range, "rule number must be non-negative");
  const RuleNumber bound = rule_count(symbols, radius);
  if (rule_number >= bound) {
    fail(ErrorKind::Range, "rule number " + rule_number.str() + " must be below k^(k^(2r+1)) = " +
                               (bound.str().size() > 40 ? std::string("k^") + std::to_string(entries)
                                                        : bound.str()));
  }
  std::vector<Symbol> lookup(entries, 0);
  const auto [chunk, digits] = digit_chunk(symbols);
  RuleNumber rest = rule_number;
  std::size_t v = 0;
  while (rest != 0 && v < entries) {
    RuleNumber quotient;
    RuleNumber remainder;
    boost::multiprecision::divide_qr(rest, RuleNumber(chunk), quotient, remainder);
    auto limb = remainder.convert_to<std::uint64_t>();
    for (int d = 0; d < digits && v < entries; ++d, ++v) {
      lookup[v] = static_cast<Symbol>(limb % static_cast<std::uint64_t>(symbols));
      limb /= static_cast<std::uint64_t>(symbols);
    }
    rest = std::move(quotient);
  }
  return RuleTable(symbols, radius, std::move(lookup));
}

RuleNumber encode_rule(const RuleTable& table) {
  const auto lookup = table.lookup();
  const auto k = static_cast<std::uint64_t>(table.symbols());
  const auto [chunk, digits] = digit_chunk(table.symbols());
  RuleNumber number = 0;
  // Horner from the most significant digit, one chunk of digits at a time.
  std::size_t v = lookup.size();
  const std::size_t lead = v % static_cast<std::size_t>(digits);
  std::uint64_t limb = 0;
  for (std::size_t i = 0; i < lead; ++i) limb = limb * k + lookup[--v];
  number = limb;
  while (v > 0) {
    limb = 0;
    for (int d = 0; d < digits; ++d) limb = limb * k + lookup[--v];
    number = number * chunk + limb;
  }
  return number;
}

RuleTable mirror_rule(const RuleTable& table) {
  const int width = table.neighborhood_size();
  std::vector<Symbol> lookup(table.entry_count());
  for (std::size_t v = 0; v < lookup.size(); ++v) {
    auto digits = to_digits(v, table.symbols(), width);
    std::reverse(digits.begin(), digits.end());
    lookup[v] = table.output(from_digits(digits, table.symbols()));
  }
  return RuleTable(table.symbols(), table.radius(), std::move(lookup));
}

void validate_permutation(std::span<const Symbol> perm, int symbols) {
  if (perm.size() != static_cast<std::size_t>(symbols)) {
    fail(ErrorKind::Validation, "permutation has " + std::to_string(perm.size()) + " entries, expected k=" +
                                    std::to_string(symbols));
  }
  std::vector<bool> seen(static_cast<std::size_t>(symbols), false);
  for (Symbol s : perm) {
    if (s >= symbols || seen[s]) fail(ErrorKind::Validation, "symbol map is not a bijection on [0, k)");
    seen[s] = true;
  }
}

RuleTable permute_symbols_rule(const RuleTable& table, std::span<const Symbol> perm) {
  validate_permutation(perm, table.symbols());
  std::vector<Symbol> inverse(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) inverse[perm[s]] = static_cast<Symbol>(s);

  const int width = table.neighborhood_size();
  std::vector<Symbol> lookup(table.entry_count());
  for (std::size_t v = 0; v < lookup.size(); ++v) {
    auto digits = to_digits(v, table.symbols(), width);
    for (auto& d : digits) d = inverse[d];
    lookup[v] = perm[table.output(from_digits(digits, table.symbols()))];
  }
  return RuleTable(table.symbols(), table.radius(), std::move(lookup));
}

}  // namespace gnslab
