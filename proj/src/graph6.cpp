#include "srgddg/graph6.hpp"

#include <string>

#include "srgddg/errors.hpp"

namespace srgddg::graph6 {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::uint64_t n) {
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

}  // namespace

std::string encode(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n > kMaxOrder) throw Error(ErrorCode::SizeCap, "graph too large for graph6");
  std::string out;
  append_order(out, n);
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  unsigned chunk = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph decode(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= bytes.size()) throw ParseError("graph6: unexpected end of input", i);
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", i);
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (byte_at(pos) < 63) {
    n = byte_at(pos);
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    if (n <= 62) throw ParseError("graph6: non-canonical order encoding", pos);
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(pos + i);
    if (n <= 258047) throw ParseError("graph6: non-canonical order encoding", pos);
    pos += 8;
  }
  if (n > 100000) throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported size", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (bytes.size() - pos != body)
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes, found " +
                         std::to_string(bytes.size() - pos),
                     bytes.size() < pos + body ? bytes.size() : pos + body);

  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bits % 6) {
    const unsigned last = byte_at(pos + body - 1);
    if (last & ((1U << (6 - bits % 6)) - 1U)) throw ParseError("graph6: nonzero padding bits", pos + body - 1);
  }
  return std::move(b).build();
}

}  // namespace srgddg::graph6
