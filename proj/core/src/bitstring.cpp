#include "tracedist/bitstring.hpp"

#include <stdexcept>

namespace tracedist {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: element not in {0,1}");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("BitString::parse: expected '0' or '1', got '" +
                                  std::string(1, c) + "'");
    }
  }
  return BitString(std::move(bits));
}

int BitString::bit(int pos) const {
  if (pos < 1 || pos > length()) throw std::out_of_range("BitString::bit: position out of range");
  return bits_[static_cast<std::size_t>(pos - 1)];
}

void BitString::set_bit(int pos, int value) {
  if (pos < 1 || pos > length()) throw std::out_of_range("BitString::set_bit: position out of range");
  if (value != 0 && value != 1) throw std::invalid_argument("BitString::set_bit: value not in {0,1}");
  bits_[static_cast<std::size_t>(pos - 1)] = static_cast<std::uint8_t>(value);
}

void BitString::push_back(int value) {
  if (value != 0 && value != 1) throw std::invalid_argument("BitString::push_back: value not in {0,1}");
  bits_.push_back(static_cast<std::uint8_t>(value));
}

BitString BitString::substring(int lo, int hi) const {
  if (lo > hi) return BitString();
  if (lo < 1 || hi > length()) throw std::out_of_range("BitString::substring: range out of bounds");
  return BitString(std::vector<std::uint8_t>(bits_.begin() + (lo - 1), bits_.begin() + hi));
}

BitString BitString::appended(int value) const {
  BitString out = *this;
  out.push_back(value);
  return out;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<int> IndicatorVector::ones_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= length(); ++i) {
    if (entry(i)) out.push_back(i);
  }
  return out;
}

std::string IndicatorVector::str() const {
  std::string s;
  s.reserve(entries.size());
  for (std::uint8_t b : entries) s.push_back(b ? '1' : '0');
  return s;
}

std::optional<int> first_diff_index(const BitString& x, const BitString& y) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("first_diff_index: length mismatch");
  }
  for (int i = 1; i <= x.length(); ++i) {
    if (x.bit(i) != y.bit(i)) return i;
  }
  return std::nullopt;
}

bool has_period(const BitString& w, int a) {
  const int l = w.length();
  if (a < 1 || a > l) throw std::invalid_argument("has_period: period out of range");
  for (int i = 1; i <= l - a; ++i) {
    if (w.bit(i) != w.bit(i + a)) return false;
  }
  return true;
}

bool is_non_periodic(const BitString& w) {
  const int l = w.length();
  if (l < 1) throw std::invalid_argument("is_non_periodic: empty string");
  const int limit = (l + 1) / 2 - 1;
  for (int a = 1; a <= limit; ++a) {
    if (has_period(w, a)) return false;
  }
  return true;
}

BitString extend_to_nonperiodic(const BitString& w_prime) {
  if (w_prime.length() % 2 == 0) {
    throw std::invalid_argument("extend_to_nonperiodic: input length must be odd");
  }
  BitString with_zero = w_prime.appended(0);
  if (is_non_periodic(with_zero)) return with_zero;
  BitString with_one = w_prime.appended(1);
  if (!is_non_periodic(with_one)) {
    // Cannot happen for odd-length inputs; guarded so corruption surfaces.
    throw std::logic_error("extend_to_nonperiodic: both extensions periodic");
  }
  return with_one;
}

namespace {

template <typename Seq>
bool runlength_class_impl(const Seq& entries, int p) {
  int last_one = 0;
  for (int i = 1; i <= static_cast<int>(entries.size()); ++i) {
    if (!entries[static_cast<std::size_t>(i - 1)]) continue;
    if (last_one != 0 && i - last_one < p) return false;
    last_one = i;
  }
  return true;
}

}  // namespace

bool in_runlength_class(const IndicatorVector& v, int p) {
  if (p < 1) throw std::invalid_argument("in_runlength_class: p must be positive");
  return runlength_class_impl(v.entries, p);
}

bool in_runlength_class(const BitString& v, int p) {
  if (p < 1) throw std::invalid_argument("in_runlength_class: p must be positive");
  return runlength_class_impl(v.bits(), p);
}

IndicatorVector indicator_vector(const BitString& x, const BitString& w) {
  const int n = x.length();
  const int l = w.length();
  if (l < 1) throw std::invalid_argument("indicator_vector: empty pattern");
  if (l > n) throw std::invalid_argument("indicator_vector: pattern longer than string");
  IndicatorVector v;
  v.pattern_length = l;
  v.entries.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i + l - 1 <= n; ++i) {
    bool match = true;
    for (int j = 0; j < l; ++j) {
      if (x.bit(i + j) != w.bit(1 + j)) {
        match = false;
        break;
      }
    }
    if (match) v.entries[static_cast<std::size_t>(i - 1)] = 1;
  }
  return v;
}

}  // namespace tracedist
