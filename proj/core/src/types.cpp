#include "degset/types.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace degset {

DegreeSet::DegreeSet(std::vector<int> degrees, int limit) {
  if (degrees.empty()) throw ParseError("degree set must be nonempty");
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1)
      throw ParseError("degree set entries must be positive");
    if (i > 0 && degrees[i] == degrees[i - 1])
      throw ParseError("duplicate entry in degree set: " +
                       std::to_string(degrees[i]));
  }
  if (degrees.front() > limit)
    throw LimitExceeded("degree " + std::to_string(degrees.front()) +
                        " exceeds limit " + std::to_string(limit));
  degrees_ = std::move(degrees);
}

std::int64_t DegreeSet::sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

bool DegreeSet::contains(int d) const {
  return std::binary_search(degrees_.rbegin(), degrees_.rend(), d);
}

bool DegreeSet::is_interval() const {
  return max() - min() + 1 == size();
}

std::string DegreeSet::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out << ',';
    out << degrees_[i];
  }
  return out.str();
}

DegreeSequence::DegreeSequence(std::vector<Run> runs, int limit) {
  if (runs.empty()) throw ParseError("degree sequence must be nonempty");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].first < 1)
      throw ParseError("degree sequence values must be positive");
    if (runs[i].second < 1)
      throw ParseError("run multiplicities must be positive");
    if (i > 0 && runs[i].first >= runs[i - 1].first)
      throw ParseError("run values must be strictly decreasing");
  }
  runs_ = std::move(runs);
  count_prefix_.assign(1, 0);
  sum_prefix_.assign(1, 0);
  for (const auto& [value, mult] : runs_) {
    count_prefix_.push_back(count_prefix_.back() + mult);
    sum_prefix_.push_back(sum_prefix_.back() +
                          static_cast<std::int64_t>(value) * mult);
  }
  if (runs_.front().first > limit || count_prefix_.back() > limit)
    throw LimitExceeded("degree sequence exceeds limit " +
                        std::to_string(limit));
}

DegreeSequence DegreeSequence::from_values(std::vector<int> values,
                                           int limit) {
  if (values.empty()) throw ParseError("degree sequence must be nonempty");
  std::sort(values.begin(), values.end(), std::greater<int>());
  std::vector<Run> runs;
  for (int v : values) {
    if (!runs.empty() && runs.back().first == v)
      ++runs.back().second;
    else
      runs.emplace_back(v, 1);
  }
  return DegreeSequence(std::move(runs), limit);
}

std::vector<int> DegreeSequence::breakpoints() const {
  std::vector<int> bs;
  bs.reserve(runs_.size());
  for (std::size_t i = 1; i < count_prefix_.size(); ++i)
    bs.push_back(static_cast<int>(count_prefix_[i]));
  return bs;
}

int DegreeSequence::value_at(int k) const {
  if (k < 1 || k > length())
    throw IndexOutOfRange("position " + std::to_string(k) +
                          " out of range 1.." + std::to_string(length()));
  // first run whose cumulative count reaches k
  auto it = std::lower_bound(count_prefix_.begin() + 1, count_prefix_.end(),
                             static_cast<std::int64_t>(k));
  return runs_[static_cast<std::size_t>(it - count_prefix_.begin() - 1)].first;
}

std::vector<int> DegreeSequence::expand() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& [value, mult] : runs_)
    out.insert(out.end(), static_cast<std::size_t>(mult), value);
  return out;
}

DegreeSet DegreeSequence::degree_set() const {
  std::vector<int> values;
  values.reserve(runs_.size());
  for (const auto& [value, mult] : runs_) values.push_back(value);
  return DegreeSet(std::move(values));
}

DegreeSequence DegreeSequence::append_min(std::int64_t copies) const {
  if (copies < 0) throw IndexOutOfRange("negative copy count");
  auto runs = runs_;
  runs.back().second += static_cast<int>(copies);
  return DegreeSequence(std::move(runs));
}

std::string DegreeSequence::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out << ',';
    out << runs_[i].first;
    if (runs_[i].second > 1) out << '^' << runs_[i].second;
  }
  return out.str();
}

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0)
    throw IndexOutOfRange("vertex count must be nonnegative");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw IndexOutOfRange("edge endpoint out of range");
  if (u == v) throw PreconditionViolated("self-loops are not allowed");
  auto edge = std::minmax(u, v);
  if (!edges_.emplace(edge.first, edge.second).second)
    throw PreconditionViolated("duplicate edge " + std::to_string(u) + "-" +
                               std::to_string(v));
}

void Graph::remove_edge(int u, int v) {
  auto edge = std::minmax(u, v);
  if (edges_.erase({edge.first, edge.second}) == 0)
    throw PreconditionViolated("no such edge " + std::to_string(u) + "-" +
                               std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
  auto edge = std::minmax(u, v);
  return edges_.count({edge.first, edge.second}) > 0;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw IndexOutOfRange("vertex out of range");
  int d = 0;
  for (const auto& [a, b] : edges_)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw IndexOutOfRange("vertex out of range");
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_divisible: return "closed-divisible";
    case Method::closed_min1: return "closed-min1";
    case Method::closed_min2: return "closed-min2";
    case Method::closed_interval: return "closed-interval";
    case Method::closed_singleton: return "closed-singleton";
    case Method::window_search: return "window-search";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

DegreeSequence degree_sequence_of(const Graph& g) {
  auto deg = g.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 0)
      throw ZeroDegreeVertex("vertex " + std::to_string(v) +
                             " has degree zero");
  if (deg.empty()) throw ZeroDegreeVertex("graph has no vertices");
  return DegreeSequence::from_values(std::move(deg));
}

DegreeSet degree_set_of(const Graph& g) {
  return degree_sequence_of(g).degree_set();
}

}  // namespace degset
