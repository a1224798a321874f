#include "regspec/graph/graph6.hpp"

#include "regspec/error.hpp"

namespace regspec {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";
constexpr std::size_t kMaxOrder = 68719476735ull;  // 2^36 - 1

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedGraph6, why); }

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) malformed("byte out of range: " + std::to_string(v));
  return v - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) malformed("empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) malformed("truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    if (n <= 62) malformed("non-minimal size header");
    pos = 4;
  } else {
    if (text.size() < 8) malformed("truncated size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
    if (n <= 258047 || n > kMaxOrder) malformed("non-minimal size header");
    pos = 8;
  }

  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    malformed("expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
              std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) malformed("nonzero padding bits");
  }
  return g;
}

}  // namespace regspec
