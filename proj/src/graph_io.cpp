#include "polygraph/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "polygraph/error.hpp"

namespace polygraph {

namespace {

std::string loc(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

NodeId parse_node_id(std::string_view tok, const std::filesystem::path& path,
                     std::size_t line) {
  if (!tok.empty() && tok.front() == '-')
    throw DataError(loc(path, line) + ": negative node id '" + std::string(tok) + "'");
  NodeId value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw DataError(loc(path, line) + ": malformed node id '" + std::string(tok) + "'");
  return value;
}

void write_u32le(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

EdgeList load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list: " + path.string());

  std::vector<std::pair<NodeId, NodeId>> canonical;
  NodeId max_id = 0;
  bool any_id = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw DataError(loc(path, line_no) + ": expected 'src<TAB>dst', got '" + line + "'");
    NodeId u = parse_node_id(fields[0], path, line_no);
    NodeId v = parse_node_id(fields[1], path, line_no);
    max_id = std::max({max_id, u, v});
    any_id = true;
    if (u == v) continue;  // self-loops dropped at ingestion
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  EdgeList out;
  out.num_nodes = any_id ? max_id + 1 : 0;
  out.edges.reserve(canonical.size() * 2);
  for (auto [u, v] : canonical) {
    out.edges.emplace_back(u, v);
    out.edges.emplace_back(v, u);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

void save_edge_list(const std::filesystem::path& path, const Csr& adj) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write edge list: " + path.string());
  for (NodeId u = 0; u < adj.num_nodes(); ++u)
    for (NodeId v : adj.neighbors(u))
      if (u < v) out << u << '\t' << v << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

Matrix load_feature_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open feature file: " + path.string());
  unsigned char header[12];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (in.gcount() != sizeof(header) || std::memcmp(header, "GAF1", 4) != 0)
    throw DataError(path.string() + ": bad magic");
  const std::uint32_t n = read_u32le(header + 4);
  const std::uint32_t d = read_u32le(header + 8);
  const std::uint64_t expected = std::uint64_t(n) * d * 4;

  std::vector<unsigned char> payload(expected);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(expected));
  const auto got = static_cast<std::uint64_t>(in.gcount());
  if (got != expected)
    throw DataError(path.string() + ": truncated: expected " + std::to_string(expected) +
                    " payload bytes, got " + std::to_string(got));

  Matrix m(n, d);
  static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);
  for (std::uint64_t i = 0; i < std::uint64_t(n) * d; ++i) {
    const std::uint32_t bits = read_u32le(payload.data() + i * 4);
    const float f = std::bit_cast<float>(bits);
    if (!std::isfinite(f))
      throw DataError(path.string() + ": non-finite value at index " + std::to_string(i));
    m.data()[i] = static_cast<double>(f);
  }
  return m;
}

void save_feature_matrix(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write feature file: " + path.string());
  out.write("GAF1", 4);
  write_u32le(out, static_cast<std::uint32_t>(m.rows()));
  write_u32le(out, static_cast<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const float f = static_cast<float>(m.data()[i]);
    const std::uint32_t bits = std::bit_cast<std::uint32_t>(f);
    unsigned char b[4] = {static_cast<unsigned char>(bits),
                          static_cast<unsigned char>(bits >> 8),
                          static_cast<unsigned char>(bits >> 16),
                          static_cast<unsigned char>(bits >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
  }
  if (!out) throw DataError("write failed: " + path.string());
}

LabelSet load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open labels file: " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw DataError(path.string() + ": empty labels file");
  line = strip_cr(line);
  constexpr std::string_view kPrefix = "num_classes=";
  if (!line.starts_with(kPrefix))
    throw DataError(loc(path, 1) + ": expected 'num_classes=<n>' header");
  LabelSet ls;
  {
    std::string_view tok = std::string_view(line).substr(kPrefix.size());
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ls.num_classes);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw DataError(loc(path, 1) + ": malformed num_classes");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::int32_t y{};
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), y);
    if (ec != std::errc() || ptr != line.data() + line.size())
      throw DataError(loc(path, line_no) + ": malformed label '" + line + "'");
    ls.labels.push_back(y);
  }
  return ls;
}

void save_labels(const std::filesystem::path& path, const LabelSet& labels) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write labels file: " + path.string());
  out << "num_classes=" << labels.num_classes << '\n';
  for (std::int32_t y : labels.labels) out << y << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

Corpus load_corpus(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw DataError("cannot open manifest: " + manifest_path.string());
  const auto base = manifest_path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  std::vector<GraphDataset> datasets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4)
      throw DataError(loc(manifest_path, line_no) +
                      ": expected 'name<TAB>edges<TAB>features[<TAB>labels]'");
    GraphDataset ds;
    ds.name = fields[0];
    ds.features = load_feature_matrix(resolve(fields[2]));
    const NodeId n = static_cast<NodeId>(ds.features.rows());

    EdgeList el = load_edge_list(resolve(fields[1]));
    if (el.num_nodes > n)
      throw DataError(ds.name + ": edge list references node " +
                      std::to_string(el.num_nodes - 1) + " but features have " +
                      std::to_string(n) + " rows");
    ds.adj = csr_from_edges(n, el.edges);
    if (fields.size() == 4 && !fields[3].empty()) {
      ds.labels = load_labels(resolve(fields[3]));
    }
    datasets.push_back(std::move(ds));
  }
  return make_corpus(std::move(datasets));
}

void save_manifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write manifest: " + path.string());
  for (const auto& e : entries) {
    out << e.name << '\t' << e.edges_path << '\t' << e.features_path;
    if (!e.labels_path.empty()) out << '\t' << e.labels_path;
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace polygraph
