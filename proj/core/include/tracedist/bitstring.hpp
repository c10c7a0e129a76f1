#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tracedist {

/// A finite 0/1 sequence. Positions are 1-based everywhere in the public API;
/// storage is a plain byte vector with one bit per element.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses an ASCII '0'/'1' sequence. Throws std::invalid_argument on any
  /// other character. The empty string parses to the empty bit string.
  static BitString parse(std::string_view text);

  int length() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  /// 1-based access; pos in [1, length()].
  int bit(int pos) const;
  void set_bit(int pos, int value);

  void push_back(int value);

  /// 1-based inclusive slice x_{lo:hi}; empty when lo > hi.
  BitString substring(int lo, int hi) const;

  /// Copy with one bit appended.
  BitString appended(int value) const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Occurrence-start indicator of a fixed pattern: entries[i] = 1 iff the
/// source string contains the pattern as a substring starting at position i.
/// The trailing pattern_length-1 entries are always 0.
struct IndicatorVector {
  std::vector<std::uint8_t> entries;
  int pattern_length = 0;

  int length() const { return static_cast<int>(entries.size()); }
  int entry(int pos) const { return entries[static_cast<std::size_t>(pos - 1)]; }

  /// 1-based positions of the 1 entries, ascending.
  std::vector<int> ones_positions() const;

  std::string str() const;

  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;
};

/// Smallest position where x and y differ; nullopt when x == y.
/// Requires |x| == |y|.
std::optional<int> first_diff_index(const BitString& x, const BitString& y);

/// True iff w_i == w_{i+a} for all i in [|w|-a]. Requires 1 <= a <= |w|;
/// a == |w| is vacuously true.
bool has_period(const BitString& w, int a);

/// True iff w has no period a for a in [ceil(|w|/2)-1]. Vacuously true for
/// |w| <= 2. Requires |w| >= 1.
bool is_non_periodic(const BitString& w);

/// Given w' of odd length 2p-1, returns (w',0) if that is non-periodic and
/// (w',1) otherwise; one of the two always is. Prefers appending 0 when both
/// extensions work. Throws on even-length input.
BitString extend_to_nonperiodic(const BitString& w_prime);

/// True iff all pairs of consecutive 1 entries at positions i < j satisfy
/// j - i >= p, i.e. the ones are separated by a 0-run of length >= p-1.
bool in_runlength_class(const IndicatorVector& v, int p);
bool in_runlength_class(const BitString& v, int p);

/// The occurrence indicator of w in x. Requires |w| <= |x| and |w| >= 1.
IndicatorVector indicator_vector(const BitString& x, const BitString& w);

}  // namespace tracedist
