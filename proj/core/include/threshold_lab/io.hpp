#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "threshold_lab/codes.hpp"
#include "threshold_lab/constructions.hpp"
#include "threshold_lab/decompose.hpp"
#include "threshold_lab/graph.hpp"

namespace tlab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge lists are plain text: an "n m" header followed by one "u v" line per
// edge. '#' starts a comment, blank lines are skipped. The writer emits the
// canonical form, edges sorted with u < v, so write/read round-trips exactly.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::string to_dot(const Graph& g);

// Construction sidecars are key=value lines. Vertex labels are not stored;
// a reread meta carries the scalars and part sizes only.
void write_metadata(std::ostream& out, const ConstructionMeta& meta);
void write_metadata_file(const std::string& path, const ConstructionMeta& meta);
ConstructionMeta read_metadata(std::istream& in);
ConstructionMeta read_metadata_file(const std::string& path);

// One "v bitstring" line per vertex, leftmost character = coordinate 0.
// The coordinate count is inferred from the first line.
CodeAssignment read_assignment(std::istream& in, int n);
void write_assignment(std::ostream& out, const CodeAssignment& a);

// One "v c" line per vertex. Color values are arbitrary non-negative
// integers; they come back reindexed to 0..f-1 preserving numeric order.
std::vector<int> read_coloring(std::istream& in, int n);
void write_coloring(std::ostream& out, const std::vector<int>& coloring);

std::string certificate_to_json(const BlowupCertificate& cert);
BlowupCertificate certificate_from_json(const std::string& text);
void write_certificate_file(const std::string& path, const BlowupCertificate& cert);
BlowupCertificate read_certificate_file(const std::string& path);

std::string failure_to_json(const FailureReport& report);

} // namespace tlab
