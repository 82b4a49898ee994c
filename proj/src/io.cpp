#include "srgddg/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "srgddg/errors.hpp"
#include "srgddg/graph6.hpp"

namespace srgddg::io {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string trim_line(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

std::vector<int> members_of(const Bitset& b) { return b.members(); }

std::uint64_t fnv_update(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return out;
}

}  // namespace

GraphReader::GraphReader(std::istream& in, bool keep_going) : in_(in), keep_going_(keep_going) {}

std::optional<GraphRecord> GraphReader::next() {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    hash_ = fnv_update(fnv_update(hash_, raw), "\n");
    std::string s = trim_line(std::move(raw));
    if (s.rfind(kHeader, 0) == 0) s.erase(0, kHeader.size());
    if (s.empty()) continue;
    try {
      return GraphRecord{line_, graph6::decode(s)};
    } catch (const ParseError& e) {
      if (!keep_going_)
        throw ParseError("line " + std::to_string(line_) + ": " + e.what(), e.offset(), line_);
      diagnostics_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

std::string GraphReader::input_hash() const { return hex16(hash_); }

GraphFile read_graphs(std::istream& in, bool keep_going) {
  GraphReader reader(in, keep_going);
  GraphFile out;
  while (auto rec = reader.next()) out.graphs.push_back(std::move(*rec));
  out.diagnostics = reader.diagnostics();
  out.input_hash = reader.input_hash();
  return out;
}

GraphFile read_graph_file(const std::string& path, bool keep_going) {
  if (path == "-") return read_graphs(std::cin, keep_going);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return read_graphs(f, keep_going);
}

void write_graphs(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << graph6::encode(g) << '\n';
}

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::string fnv1a64(std::string_view bytes) { return hex16(fnv_update(0xcbf29ce484222325ULL, bytes)); }

Json design_to_json(const SymmetricDesign& d) {
  Json blocks = Json::array();
  for (const Bitset& b : d.blocks()) blocks.push_back(members_of(b));
  return Json{{"v", d.points()}, {"k", d.block_size()}, {"lambda", d.lambda()}, {"blocks", blocks}};
}

SymmetricDesign design_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
    throw ParseError("design must be an object with \"v\" and \"blocks\"", 0);
  const int v = j.at("v").get<int>();
  if (v < 2) throw ParseError("design needs at least 2 points", 0);
  std::vector<Bitset> blocks;
  for (const auto& jb : j.at("blocks")) {
    Bitset b(static_cast<std::size_t>(v));
    for (const auto& x : jb) {
      const int p = x.get<int>();
      if (p < 0 || p >= v) throw ParseError("block point " + std::to_string(p) + " out of range", 0);
      b.set(static_cast<std::size_t>(p));
    }
    blocks.push_back(std::move(b));
  }
  if (blocks.size() < 2) throw ParseError("design needs at least 2 blocks", 0);
  return SymmetricDesign(v, std::move(blocks));
}

Json partition_to_json(const CanonicalPartition& p) {
  Json classes = Json::array();
  for (const Bitset& c : p.classes) classes.push_back(members_of(c));
  return Json{{"classes", classes}};
}

CanonicalPartition partition_from_json(const Json& j, int order) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("classes")) throw ParseError("partition object needs \"classes\"", 0);
    list = &j.at("classes");
  }
  if (!list->is_array()) throw ParseError("partition must be a list of classes", 0);
  CanonicalPartition p;
  for (const auto& jc : *list) {
    Bitset c(static_cast<std::size_t>(order));
    for (const auto& x : jc) {
      const int v = x.get<int>();
      if (v < 0 || v >= order) throw ParseError("partition vertex " + std::to_string(v) + " out of range", 0);
      c.set(static_cast<std::size_t>(v));
    }
    p.classes.push_back(std::move(c));
  }
  std::sort(p.classes.begin(), p.classes.end(),
            [](const Bitset& a, const Bitset& b) { return a.first() < b.first(); });
  p.validate(order);
  return p;
}

Json srg_to_json(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}, {"r", p.r},
              {"s", p.s}, {"f", p.f}, {"g", p.g}, {"c", p.c.to_string()}};
}

Json ddg_to_json(const DdgParams& p) {
  return Json{{"V", p.V}, {"K", p.K}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n}};
}

Json decomposition_to_json(const Decomposition& dec) {
  Json classes = Json::array();
  for (const Bitset& c : dec.partition.classes) {
    Json cls = Json::array();
    c.for_each([&](std::size_t x) { cls.push_back(dec.delta_vertices[x]); });
    classes.push_back(std::move(cls));
  }
  Json quotient = Json::array();
  for (std::size_t i = 0; i < dec.quotient.m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < dec.quotient.m; ++j) row.push_back(dec.quotient.at(i, j));
    quotient.push_back(std::move(row));
  }
  return Json{{"coclique", members_of(dec.coclique)},
              {"ddg", ddg_to_json(dec.ddg)},
              {"n", dec.n},
              {"s", dec.s},
              {"classes", classes},
              {"design", design_to_json(dec.design)},
              {"phi", dec.phi},
              {"quotient", quotient}};
}

}  // namespace srgddg::io
