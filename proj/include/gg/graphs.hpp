#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gg/group.hpp"

namespace gg {

enum class GraphKind { Pow, EPow, Com, SNorm, Nilp, Engel, NGen };

std::string to_string(GraphKind kind);
std::optional<GraphKind> graph_kind_from_string(const std::string& s);

/// Default order cap per kind: 4096 for the pairwise-testable graphs,
/// 512 for the kinds needing per-pair closure or iteration.
int default_graph_cap(GraphKind kind);
inline constexpr int kLightGraphCap = 4096;
inline constexpr int kHeavyGraphCap = 512;

struct BuildOptions {
  std::optional<int> max_order;  // overrides the per-kind default cap
  int threads = 1;               // output is bit-identical for any value
};

/// Symmetric adjacency over a group's element set, no self-loops.
class GroupGraph {
public:
  GroupGraph(int n, GraphKind kind, std::string group_name, std::vector<std::string> labels);

  int size() const { return n_; }
  GraphKind kind() const { return kind_; }
  const std::string& group_name() const { return group_name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool adjacent(int i, int j) const { return rows_[std::size_t(i)].test(std::size_t(j)); }
  void add_edge(int i, int j);
  /// Builder access: sets only the (i,j) direction.
  void set_arc(int i, int j) { rows_[std::size_t(i)].set(std::size_t(j)); }

  long long edge_count() const;
  bool complete() const { return edge_count() == (long long)n_ * (n_ - 1) / 2; }
  /// Vertex degrees in non-increasing order.
  std::vector<int> degree_sequence() const;
  int connected_components() const;
  /// Edge list with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  const DynBitset& row(int i) const { return rows_[std::size_t(i)]; }

private:
  int n_;
  GraphKind kind_;
  std::string group_name_;
  std::vector<std::string> labels_;
  std::vector<DynBitset> rows_;
};

/// Directed normalising graph: arc x -> y iff <x> is normal in <x,y>.
class DirectedGroupGraph {
public:
  DirectedGroupGraph(int n, std::string group_name, std::vector<std::string> labels);

  int size() const { return n_; }
  const std::string& group_name() const { return group_name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool arc(int i, int j) const { return rows_[std::size_t(i)].test(std::size_t(j)); }
  void set_arc(int i, int j) { rows_[std::size_t(i)].set(std::size_t(j)); }

  long long arc_count() const;
  /// Weakly connected component count.
  int connected_components() const;
  /// All arcs (i,j), lexicographically sorted.
  std::vector<std::pair<int, int>> arcs() const;

private:
  int n_;
  std::string group_name_;
  std::vector<std::string> labels_;
  std::vector<DynBitset> rows_;
};

GroupGraph build_graph(GraphKind kind, const CayleyGroup& g, const BuildOptions& opts = {});
DirectedGroupGraph build_directed_normalising(const CayleyGroup& g, const BuildOptions& opts = {});

/// Edge set of A contained in edge set of B. Throws DimensionMismatch when
/// the vertex counts differ.
bool is_spanning_subgraph(const GroupGraph& a, const GroupGraph& b);
bool graphs_equal(const GroupGraph& a, const GroupGraph& b);
long long edge_count(const GroupGraph& a);

enum class ExportFormat { Dot, Json };
std::optional<ExportFormat> export_format_from_string(const std::string& s);

/// DOT uses the group's vertex labels; JSON is
/// {"kind","group","n","edges":[[i,j],...]} with i<j sorted lexicographically.
std::string export_graph(const GroupGraph& a, ExportFormat format);
std::string export_graph(const DirectedGroupGraph& a, ExportFormat format);

}  // namespace gg
