#include "threshold_lab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tlab {

namespace {

using nlohmann::json;

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) {
    s.erase(hash);
  }
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

long long to_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) {
    fail(line_no, "expected an integer, got '" + tok + "'");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write " + path);
  }
  return out;
}

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(json::array({u, v}));
  }
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph::from_edges(n, edges);
}

} // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) {
      continue;
    }
    const auto toks = tokens(line);
    if (toks.size() != 2) {
      fail(line_no, "expected two integers");
    }
    const long long a = to_int(toks[0], line_no);
    const long long b = to_int(toks[1], line_no);
    if (n < 0) {
      n = a;
      m = b;
      if (n < 0 || m < 0) {
        fail(line_no, "header counts must be non-negative");
      }
      continue;
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      fail(line_no, "vertex out of range");
    }
    if (a == b) {
      fail(line_no, "loops are not allowed");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) {
    throw ParseError("missing 'n m' header");
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, file has " +
                     std::to_string(edges.size()));
  }
  Graph g = Graph::from_edges(static_cast<int>(n), edges);
  if (g.edge_count() != m) {
    throw ParseError("edge list contains duplicates");
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_edge_list(out, g);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

void write_metadata(std::ostream& out, const ConstructionMeta& meta) {
  out << "kind=" << kind_name(meta.kind) << '\n';
  out << "n=" << meta.n << '\n';
  const auto scalar = [&out](const char* key, long long value) {
    if (value > 0) {
      out << key << '=' << value << '\n';
    }
  };
  scalar("k", meta.k);
  scalar("m", meta.m);
  scalar("s", meta.s);
  scalar("t", meta.t);
  scalar("r", meta.r);
  scalar("ell", meta.ell);
  scalar("core_min_degree", meta.core_min_degree);
  out << "expected_min_degree=" << expected_min_degree(meta) << '\n';
  if (!meta.part_sizes.empty()) {
    out << "part_sizes=";
    for (std::size_t i = 0; i < meta.part_sizes.size(); ++i) {
      out << (i ? "," : "") << meta.part_sizes[i];
    }
    out << '\n';
  }
}

void write_metadata_file(const std::string& path, const ConstructionMeta& meta) {
  auto out = open_output(path);
  write_metadata(out, meta);
}

ConstructionMeta read_metadata(std::istream& in) {
  ConstructionMeta meta;
  bool have_kind = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "kind") {
      have_kind = true;
      bool known = false;
      for (ConstructionKind kind :
           {ConstructionKind::warmup4, ConstructionKind::even2k, ConstructionKind::odd2k1,
            ConstructionKind::general_composite, ConstructionKind::andrasfai,
            ConstructionKind::kr_free_composite}) {
        if (value == kind_name(kind)) {
          meta.kind = kind;
          known = true;
          break;
        }
      }
      if (!known) {
        fail(line_no, "unknown construction kind '" + value + "'");
      }
    } else if (key == "n") {
      meta.n = static_cast<int>(to_int(value, line_no));
    } else if (key == "k") {
      meta.k = static_cast<int>(to_int(value, line_no));
    } else if (key == "m") {
      meta.m = static_cast<int>(to_int(value, line_no));
    } else if (key == "s") {
      meta.s = static_cast<int>(to_int(value, line_no));
    } else if (key == "t") {
      meta.t = static_cast<int>(to_int(value, line_no));
    } else if (key == "r") {
      meta.r = static_cast<int>(to_int(value, line_no));
    } else if (key == "ell") {
      meta.ell = static_cast<int>(to_int(value, line_no));
    } else if (key == "core_min_degree") {
      meta.core_min_degree = to_int(value, line_no);
    } else if (key == "expected_min_degree") {
      // Derived from the other fields; accepted and ignored on input.
    } else if (key == "part_sizes") {
      meta.part_sizes.clear();
      std::string item;
      std::istringstream parts(value);
      while (std::getline(parts, item, ',')) {
        meta.part_sizes.push_back(static_cast<int>(to_int(item, line_no)));
      }
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_kind) {
    throw ParseError("metadata is missing its kind");
  }
  return meta;
}

ConstructionMeta read_metadata_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_metadata(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CodeAssignment read_assignment(std::istream& in, int n) {
  CodeAssignment a;
  a.vectors.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) {
      continue;
    }
    const auto toks = tokens(line);
    if (toks.size() != 2) {
      fail(line_no, "expected 'vertex bitstring'");
    }
    const long long v = to_int(toks[0], line_no);
    if (v < 0 || v >= n) {
      fail(line_no, "vertex out of range");
    }
    if (seen[v]) {
      fail(line_no, "vertex " + std::to_string(v) + " assigned twice");
    }
    const std::string& bits = toks[1];
    if (a.t == 0) {
      if (bits.empty() || bits.size() > 25) {
        fail(line_no, "bitstring length must be between 1 and 25");
      }
      a.t = static_cast<int>(bits.size());
    } else if (static_cast<int>(bits.size()) != a.t) {
      fail(line_no, "bitstring length differs from earlier lines");
    }
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits[j] == '1') {
        mask |= 1u << j;
      } else if (bits[j] != '0') {
        fail(line_no, "bitstring must be over {0,1}");
      }
    }
    a.vectors[v] = mask;
    seen[v] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw ParseError("vertex " + std::to_string(v) + " has no vector");
    }
  }
  if (n == 0) {
    a.t = 1;
  }
  return a;
}

void write_assignment(std::ostream& out, const CodeAssignment& a) {
  for (std::size_t v = 0; v < a.vectors.size(); ++v) {
    out << v << ' ';
    for (int j = 0; j < a.t; ++j) {
      out << ((a.vectors[v] >> j) & 1u);
    }
    out << '\n';
  }
}

std::vector<int> read_coloring(std::istream& in, int n) {
  std::vector<int> raw_color(n, 0);
  std::vector<bool> seen(n, false);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) {
      continue;
    }
    const auto toks = tokens(line);
    if (toks.size() != 2) {
      fail(line_no, "expected 'vertex color'");
    }
    const long long v = to_int(toks[0], line_no);
    const long long c = to_int(toks[1], line_no);
    if (v < 0 || v >= n) {
      fail(line_no, "vertex out of range");
    }
    if (c < 0) {
      fail(line_no, "colors must be non-negative");
    }
    if (seen[v]) {
      fail(line_no, "vertex " + std::to_string(v) + " colored twice");
    }
    raw_color[v] = static_cast<int>(c);
    seen[v] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw ParseError("vertex " + std::to_string(v) + " has no color");
    }
  }
  std::map<int, int> dense;
  for (int c : raw_color) {
    dense.emplace(c, 0);
  }
  int next = 0;
  for (auto& [value, id] : dense) {
    id = next++;
  }
  std::vector<int> coloring(n);
  for (int v = 0; v < n; ++v) {
    coloring[v] = dense[raw_color[v]];
  }
  return coloring;
}

void write_coloring(std::ostream& out, const std::vector<int>& coloring) {
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    out << v << ' ' << coloring[v] << '\n';
  }
}

std::string certificate_to_json(const BlowupCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["gamma"] = cert.gamma.str();
  j["depth"] = cert.depth;
  j["quotient"] = graph_to_json(cert.quotient);
  j["classes"] = cert.classes;
  j["reduced_quotient"] = graph_to_json(cert.reduced_quotient);
  j["reduced_classes"] = cert.reduced_classes;
  j["verification"]["c2km1_free"] = cert.c2km1_free;
  j["verification"]["nonsingular_free"] = cert.nonsingular_free;
  j["maximality_checked"] = cert.maximality_checked;
  return j.dump(2) + "\n";
}

BlowupCertificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    BlowupCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.k = j.at("k").get<int>();
    cert.gamma = Rational::parse(j.at("gamma").get<std::string>());
    cert.depth = j.at("depth").get<int>();
    cert.quotient = graph_from_json(j.at("quotient"));
    cert.classes = j.at("classes").get<std::vector<std::vector<int>>>();
    cert.reduced_quotient = graph_from_json(j.at("reduced_quotient"));
    cert.reduced_classes = j.at("reduced_classes").get<std::vector<std::vector<int>>>();
    const json& ver = j.at("verification");
    cert.c2km1_free = ver.at("c2km1_free").get<bool>();
    cert.nonsingular_free = ver.at("nonsingular_free").get<std::vector<bool>>();
    cert.maximality_checked = j.at("maximality_checked").get<bool>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

void write_certificate_file(const std::string& path, const BlowupCertificate& cert) {
  auto out = open_output(path);
  out << certificate_to_json(cert);
}

BlowupCertificate read_certificate_file(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return certificate_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string failure_to_json(const FailureReport& report) {
  json j;
  j["reason"] = reason_name(report.reason);
  j["witness"] = report.witness;
  j["detail"] = report.detail;
  return j.dump(2) + "\n";
}

} // namespace tlab
