// Builders for the seven undirected graphs and the directed normalising
// graph, plus comparison and export operations.
//
// Builders may run with several workers; each worker owns full rows of the
// adjacency matrix and its own memo caches, so the result is bit-identical
// for any thread count.

#include "gg/graphs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace gg {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Pow: return "pow";
    case GraphKind::EPow: return "epow";
    case GraphKind::Com: return "com";
    case GraphKind::SNorm: return "snorm";
    case GraphKind::Nilp: return "nilp";
    case GraphKind::Engel: return "engel";
    case GraphKind::NGen: return "ngen";
  }
  return "?";
}

std::optional<GraphKind> graph_kind_from_string(const std::string& s) {
  for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com, GraphKind::SNorm,
                      GraphKind::Nilp, GraphKind::Engel, GraphKind::NGen})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

int default_graph_cap(GraphKind kind) {
  switch (kind) {
    case GraphKind::Nilp:
    case GraphKind::Engel:
    case GraphKind::NGen:
      return kHeavyGraphCap;
    default:
      return kLightGraphCap;
  }
}

std::optional<ExportFormat> export_format_from_string(const std::string& s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "json") return ExportFormat::Json;
  return std::nullopt;
}

GroupGraph::GroupGraph(int n, GraphKind kind, std::string group_name,
                       std::vector<std::string> labels)
    : n_(n), kind_(kind), group_name_(std::move(group_name)), labels_(std::move(labels)),
      rows_(std::size_t(n), DynBitset(std::size_t(n))) {}

void GroupGraph::add_edge(int i, int j) {
  rows_[std::size_t(i)].set(std::size_t(j));
  rows_[std::size_t(j)].set(std::size_t(i));
}

long long GroupGraph::edge_count() const {
  long long total = 0;
  for (const auto& r : rows_) total += (long long)r.count();
  return total / 2;
}

std::vector<int> GroupGraph::degree_sequence() const {
  std::vector<int> deg;
  deg.reserve(rows_.size());
  for (const auto& r : rows_) deg.push_back(int(r.count()));
  std::sort(deg.begin(), deg.end(), std::greater<int>());
  return deg;
}

std::vector<std::pair<int, int>> GroupGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    rows_[std::size_t(i)].for_each([&](std::size_t j) {
      if (int(j) > i) out.emplace_back(i, int(j));
    });
  return out;
}

namespace {

template <typename RowFn>
int components_of(int n, RowFn&& neighbours) {
  std::vector<char> seen(std::size_t(n), 0);
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[std::size_t(s)]) continue;
    ++comps;
    seen[std::size_t(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      neighbours(v, [&](int w) {
        if (!seen[std::size_t(w)]) {
          seen[std::size_t(w)] = 1;
          stack.push_back(w);
        }
      });
    }
  }
  return comps;
}

}  // namespace

int GroupGraph::connected_components() const {
  return components_of(n_, [&](int v, auto&& visit) {
    rows_[std::size_t(v)].for_each([&](std::size_t w) { visit(int(w)); });
  });
}

DirectedGroupGraph::DirectedGroupGraph(int n, std::string group_name,
                                       std::vector<std::string> labels)
    : n_(n), group_name_(std::move(group_name)), labels_(std::move(labels)),
      rows_(std::size_t(n), DynBitset(std::size_t(n))) {}

long long DirectedGroupGraph::arc_count() const {
  long long total = 0;
  for (const auto& r : rows_) total += (long long)r.count();
  return total;
}

int DirectedGroupGraph::connected_components() const {
  return components_of(n_, [&](int v, auto&& visit) {
    rows_[std::size_t(v)].for_each([&](std::size_t w) { visit(int(w)); });
    for (int u = 0; u < n_; ++u)
      if (rows_[std::size_t(u)].test(std::size_t(v))) visit(u);
  });
}

std::vector<std::pair<int, int>> DirectedGroupGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    rows_[std::size_t(i)].for_each([&](std::size_t j) { out.emplace_back(i, int(j)); });
  return out;
}

// ---- builders ----

namespace {

void check_cap(const CayleyGroup& g, int cap, const std::string& what) {
  if (g.order() > cap)
    throw OrderLimitExceeded(what + ": order " + std::to_string(g.order()) + " exceeds cap " +
                             std::to_string(cap));
}

/// Run fn(worker) on `threads` workers. Exceptions are rethrown on the caller.
template <typename F>
void run_workers(int threads, F&& fn) {
  if (threads <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto guarded = [&](int w) {
    try {
      fn(w);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  pool.reserve(std::size_t(threads - 1));
  for (int w = 1; w < threads; ++w) pool.emplace_back(guarded, w);
  guarded(0);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Does some iterate [x, k y] reach the identity? The sequence is
/// deterministic, so a revisited value means it never will.
bool engel_directional(const CayleyGroup& g, Elem x, Elem y, DynBitset& visited_buf) {
  visited_buf.clear();
  Elem c = g.comm(x, y);
  while (true) {
    if (c == g.identity()) return true;
    if (visited_buf.test(std::size_t(c))) return false;
    visited_buf.set(std::size_t(c));
    c = g.comm(c, y);
  }
}

struct WorkerState {
  JoinCache joins;
  std::map<std::vector<std::uint64_t>, bool> nilp_memo;
  DynBitset visited;

  WorkerState(const CayleyGroup& g, const CyclicTable& ct)
      : joins(g, ct), visited(std::size_t(g.order())) {}
};

}  // namespace

GroupGraph build_graph(GraphKind kind, const CayleyGroup& g, const BuildOptions& opts) {
  const int cap = opts.max_order.value_or(default_graph_cap(kind));
  check_cap(g, cap, "build_graph(" + to_string(kind) + ")");

  const int n = g.order();
  GroupGraph graph(n, kind, g.name(), g.labels());
  const CyclicTable ct(g);
  const int threads = std::max(1, opts.threads);

  run_workers(threads, [&](int worker) {
    WorkerState state(g, ct);
    for (int x = worker; x < n; x += threads) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        bool adj = false;
        switch (kind) {
          case GraphKind::Pow:
            adj = ct.pow_adjacent(x, y);
            break;
          case GraphKind::Com:
            adj = g.mul(x, y) == g.mul(y, x);
            break;
          case GraphKind::SNorm:
            adj = ct.snorm_adjacent(x, y);
            break;
          case GraphKind::EPow:
            // <x,y> cyclic; commuting is necessary, so test it first.
            if (g.mul(x, y) == g.mul(y, x)) {
              const Subgroup& h = state.joins.join(x, y);
              adj = is_cyclic(h);
            }
            break;
          case GraphKind::Nilp: {
            const Subgroup& h = state.joins.join(x, y);
            auto it = state.nilp_memo.find(h.members().words());
            if (it == state.nilp_memo.end())
              it = state.nilp_memo.emplace(h.members().words(), is_nilpotent(g, h)).first;
            adj = it->second;
            break;
          }
          case GraphKind::Engel:
            adj = engel_directional(g, x, y, state.visited) ||
                  engel_directional(g, y, x, state.visited);
            break;
          case GraphKind::NGen:
            adj = state.joins.join(x, y).size() != n;
            break;
        }
        if (adj) graph.set_arc(x, y);
      }
    }
  });
  return graph;
}

DirectedGroupGraph build_directed_normalising(const CayleyGroup& g, const BuildOptions& opts) {
  const int cap = opts.max_order.value_or(kLightGraphCap);
  check_cap(g, cap, "build_directed_normalising");

  const int n = g.order();
  DirectedGroupGraph graph(n, g.name(), g.labels());
  const CyclicTable ct(g);
  const int threads = std::max(1, opts.threads);
  run_workers(threads, [&](int worker) {
    for (int x = worker; x < n; x += threads)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        // x -> y iff <x> is normal in <x,y>, equivalently y normalises <x>.
        if (ct.normalises(y, x)) graph.set_arc(x, y);
      }
  });
  return graph;
}

// ---- comparisons ----

namespace {

void check_same_size(int a, int b) {
  if (a != b)
    throw DimensionMismatch("graphs have different vertex counts: " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

}  // namespace

bool is_spanning_subgraph(const GroupGraph& a, const GroupGraph& b) {
  check_same_size(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i)
    if (!a.row(i).subset_of(b.row(i))) return false;
  return true;
}

bool graphs_equal(const GroupGraph& a, const GroupGraph& b) {
  check_same_size(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i)
    if (!(a.row(i) == b.row(i))) return false;
  return true;
}

long long edge_count(const GroupGraph& a) { return a.edge_count(); }

// ---- export ----

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename Pairs>
std::string render_dot(const std::string& kind, const std::string& group,
                       const std::vector<std::string>& labels, const Pairs& pairs, bool directed) {
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " \"" << dot_escape(kind + "(" + group + ")")
     << "\" {\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  for (const auto& [i, j] : pairs)
    os << "  n" << i << (directed ? " -> n" : " -- n") << j << ";\n";
  os << "}\n";
  return os.str();
}

template <typename Pairs>
std::string render_json(const std::string& kind, const std::string& group, int n,
                        const Pairs& pairs) {
  nlohmann::json j;
  j["kind"] = kind;
  j["group"] = group;
  j["n"] = n;
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const GroupGraph& a, ExportFormat format) {
  const auto pairs = a.edges();
  if (format == ExportFormat::Dot)
    return render_dot(to_string(a.kind()), a.group_name(), a.labels(), pairs, false);
  return render_json(to_string(a.kind()), a.group_name(), a.size(), pairs);
}

std::string export_graph(const DirectedGroupGraph& a, ExportFormat format) {
  const auto pairs = a.arcs();
  if (format == ExportFormat::Dot)
    return render_dot("dnorm", a.group_name(), a.labels(), pairs, true);
  return render_json("dnorm", a.group_name(), a.size(), pairs);
}

}  // namespace gg
