#include "codegree/numeric.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <mutex>
#include <vector>

#include "codegree/errors.hpp"

namespace codegree {

namespace {

constexpr int kTableRows = 65;

constexpr auto make_table() {
  std::array<std::array<std::uint64_t, kTableRows>, kTableRows> t{};
  for (int n = 0; n < kTableRows; ++n) {
    t[n][0] = 1;
    for (int r = 1; r <= n; ++r)
      t[n][r] = t[n - 1][r - 1] + (r < n ? t[n - 1][r] : 0);
  }
  return t;
}

constexpr auto kTable = make_table();

struct PascalCache {
  std::mutex mutex;
  std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
};

PascalCache &pascal_cache() {
  static PascalCache cache;
  return cache;
}

} // namespace

std::string to_string(Wide value) {
  if (value == 0)
    return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt to_big(Wide value) {
  BigInt out = static_cast<std::uint64_t>(value >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(value);
  return out;
}

Wide to_wide(const BigInt &value) {
  if (value < 0 || boost::multiprecision::msb(value + 1) >= 128)
    throw ParameterError("value does not fit in 128 bits: " + value.str());
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  const auto lo = static_cast<std::uint64_t>(value & mask);
  return (static_cast<Wide>(hi) << 64) | lo;
}

std::uint64_t binom64(int n, int r) {
  if (n < 0 || n >= kTableRows || r < 0 || r > n)
    return 0;
  return kTable[n][r];
}

BigInt binom(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    return 0;
  if (n < kTableRows)
    return kTable[n][r];
  auto &cache = pascal_cache();
  std::lock_guard lock(cache.mutex);
  auto &rows = cache.rows;
  while (static_cast<int>(rows.size()) <= n) {
    const auto &prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i)
      row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][r];
}

std::string to_string(const Rational &value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

namespace {
BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParameterError("malformed rational: '" + std::string(whole) + "'");
  const BigInt out{std::string(text)};
  return negative ? BigInt(-out) : out;
}
} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0)
    throw ParameterError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt floor_nonneg(const Rational &value) {
  return boost::multiprecision::numerator(value) /
         boost::multiprecision::denominator(value);
}

} // namespace codegree
