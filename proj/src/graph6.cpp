#include "tough/graph6.hpp"

#include <vector>

#include "tough/error.hpp"

namespace tough {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::kParse, "graph6: " + what + " at byte " + std::to_string(offset));
}

int sextet(std::string_view s, std::size_t offset) {
  if (offset >= s.size()) fail(offset, "unexpected end of input");
  auto c = static_cast<unsigned char>(s[offset]);
  if (c < kBias || c > kBias + 63) fail(offset, "byte " + std::to_string(c) + " outside the printable range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view s = line.substr(base);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  if (s.empty()) fail(base, "empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (s[0] != '~') {
    n = sextet(s, 0);
    pos = 1;
  } else {
    if (s.size() > 1 && s[1] == '~') fail(base + 1, "eight-byte length form not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(s, i);
    if (n < 63) fail(base, "malformed length field: long form used for n=" + std::to_string(n));
    pos = 4;
  }

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != pos + body) {
    fail(base + std::min(s.size(), pos + body),
         "body length " + std::to_string(s.size() - pos) + " does not match n=" + std::to_string(n) + " (expected " +
             std::to_string(body) + ")");
  }

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int value = sextet(s, pos + static_cast<std::size_t>(k / 6));
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    std::size_t last = pos + body - 1;
    int value = sextet(s, last);
    if ((value & ((1 << (6 - k % 6)) - 1)) != 0) fail(base + last, "trailing padding bits not zero");
  }
  for (std::size_t i = pos; i < s.size(); ++i) sextet(s, i);
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kUnsupportedSize, "graph6 writer supports n <= " + std::to_string(kMaxGraph6Order));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace tough
