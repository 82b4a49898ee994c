#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srgddg/assembly.hpp"
#include "srgddg/designs.hpp"
#include "srgddg/graph.hpp"
#include "srgddg/recognize.hpp"

namespace srgddg::io {

using Json = nlohmann::ordered_json;

struct GraphRecord {
  std::size_t line = 0;  // 1-based
  Graph graph;
};

struct LineDiagnostic {
  std::size_t line = 0;
  std::string message;
};

/// Line-oriented graph6 reader. Blank lines and a leading ">>graph6<<" on
/// any line are tolerated. Without keep_going the first bad line throws
/// ParseError carrying its line number; with it the line is skipped and
/// recorded in diagnostics().
class GraphReader {
 public:
  GraphReader(std::istream& in, bool keep_going);

  std::optional<GraphRecord> next();
  const std::vector<LineDiagnostic>& diagnostics() const noexcept { return diagnostics_; }
  /// fnv1a64 of the lines consumed so far, each followed by '\n'.
  std::string input_hash() const;

 private:
  std::istream& in_;
  bool keep_going_;
  std::size_t line_ = 0;
  std::vector<LineDiagnostic> diagnostics_;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

struct GraphFile {
  std::vector<GraphRecord> graphs;
  std::vector<LineDiagnostic> diagnostics;
  std::string input_hash;
};

GraphFile read_graphs(std::istream& in, bool keep_going = false);
/// "-" reads standard input. Throws Error(InvalidArgument) if unreadable.
GraphFile read_graph_file(const std::string& path, bool keep_going = false);

/// One graph6 record per line, no header.
void write_graphs(std::ostream& out, const std::vector<Graph>& graphs);

/// Whole file as bytes ("-" = standard input).
std::string slurp(const std::string& path);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

/// {"v": int, "blocks": [[points...], ...]}
Json design_to_json(const SymmetricDesign& d);
SymmetricDesign design_from_json(const Json& j);

/// {"classes": [[...], ...]} or a bare list of classes; classes are
/// re-sorted by smallest member.
Json partition_to_json(const CanonicalPartition& p);
CanonicalPartition partition_from_json(const Json& j, int order);

Json srg_to_json(const SrgParams& p);
Json ddg_to_json(const DdgParams& p);
Json decomposition_to_json(const Decomposition& dec);

}  // namespace srgddg::io
