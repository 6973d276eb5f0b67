#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gnslab {

using Symbol = std::uint16_t;

/// Rule numbers outgrow 64 bits quickly (k=2, r=3 already needs 128 bits).
using RuleNumber = boost::multiprecision::cpp_int;

/// Largest lookup table decode_rule will build.
inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 20;

inline constexpr int kMaxSymbols = 65536;

/// Number of neighborhoods k^(2r+1). Throws a capacity error above
/// kMaxTableEntries and a validation error for k < 2 or r < 1.
std::size_t table_entries(int symbols, int radius);

/// k^(k^(2r+1)), one past the largest valid rule number.
RuleNumber rule_count(int symbols, int radius);

/// Local update rule of a 1-D cellular automaton with k symbols and radius r.
///
/// Neighborhoods are identified by their base-k value with the leftmost cell
/// as the most significant digit. Digit v of the rule number (least
/// significant first) is the output for neighborhood value v, so listing the
/// outputs from the highest neighborhood value down reproduces the usual
/// elementary-CA picture (111, 110, ..., 000 for k=2, r=1).
class RuleTable {
 public:
  /// `lookup[v]` is the output for neighborhood value v.
  RuleTable(int symbols, int radius, std::vector<Symbol> lookup);

  int symbols() const noexcept { return symbols_; }
  int radius() const noexcept { return radius_; }
  int neighborhood_size() const noexcept { return 2 * radius_ + 1; }
  std::size_t entry_count() const noexcept { return lookup_.size(); }

  Symbol output(std::size_t neighborhood_value) const { return lookup_[neighborhood_value]; }

  /// Output for an explicit neighborhood given left to right.
  Symbol output(std::span<const Symbol> neighborhood) const;

  /// Ascending by neighborhood value.
  std::span<const Symbol> lookup() const noexcept { return lookup_; }

  /// Descending by neighborhood value (the conventional listing).
  std::vector<Symbol> outputs() const;

  /// True when the all-`background` neighborhood maps to `background`.
  bool is_quiescent(Symbol background) const;

  bool operator==(const RuleTable&) const = default;

 private:
  int symbols_;
  int radius_;
  std::vector<Symbol> lookup_;
};

RuleTable decode_rule(const RuleNumber& rule_number, int symbols, int radius);
RuleNumber encode_rule(const RuleTable& table);

/// Left-right reflection: the new table maps n to the old value on reverse(n).
RuleTable mirror_rule(const RuleTable& table);

/// Conjugates the rule by a symbol permutation: n -> perm(old(perm^-1(n))).
RuleTable permute_symbols_rule(const RuleTable& table, std::span<const Symbol> perm);

/// Throws a validation error unless `perm` is a bijection on [0, k).
void validate_permutation(std::span<const Symbol> perm, int symbols);

}  // namespace gnslab
