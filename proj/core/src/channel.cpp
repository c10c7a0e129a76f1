#include "tracedist/channel.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace tracedist {

namespace {

void check_range(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw std::invalid_argument("ChannelParam: q must satisfy 0 <= q < 1");
  }
}

}  // namespace

ChannelParam ChannelParam::from_double(double q) {
  check_range(q);
  ChannelParam ch;
  ch.q_ = q;
  ch.q_exact_.reset();
  if (q == 0.0) ch.q_exact_ = Rational(0);
  return ch;
}

ChannelParam ChannelParam::from_fraction(const Rational& q) {
  ChannelParam ch;
  ch.q_ = static_cast<double>(q);
  check_range(ch.q_);
  if (q < 0 || q >= 1) throw std::invalid_argument("ChannelParam: q must satisfy 0 <= q < 1");
  ch.q_exact_ = q;
  return ch;
}

ChannelParam ChannelParam::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    return from_fraction(parse_fraction(text));
  }
  std::size_t used = 0;
  const std::string s(text);
  double q = 0.0;
  try {
    q = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("ChannelParam::parse: malformed q '" + s + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument("ChannelParam::parse: malformed q '" + s + "'");
  }
  return from_double(q);
}

const Rational& ChannelParam::exact_q() const {
  if (!q_exact_) throw std::logic_error("ChannelParam: q is not an exact rational");
  return *q_exact_;
}

Trace transmit(const BitString& x, const ChannelParam& ch, SplitMix64& rng) {
  const double q = ch.q();
  Trace t;
  t.source_length = x.length();
  std::vector<std::uint8_t> kept;
  kept.reserve(x.bits().size());
  for (std::uint8_t b : x.bits()) {
    if (rng.next_double() >= q) kept.push_back(b);
  }
  t.bits = BitString(std::move(kept));
  return t;
}

Trace transmit(const BitString& x, const ChannelParam& ch, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return transmit(x, ch, rng);
}

void write_trace_batch(std::ostream& out, const BitString& x, const ChannelParam& ch,
                       std::uint64_t seed, long long count) {
  if (count < 0) throw std::invalid_argument("write_trace_batch: negative count");
  out << "{\"n\": " << x.length() << ", \"q\": " << ch.q() << ", \"seed\": " << seed
      << ", \"N\": " << count << "}\n";
  for (long long i = 0; i < count; ++i) {
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(i)));
    out << transmit(x, ch, rng).bits.str() << '\n';
  }
}

}  // namespace tracedist
