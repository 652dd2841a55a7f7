#include "quivemb/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quivemb {

DimVector::DimVector(std::vector<long> coords) : coords_(std::move(coords)) {
  for (long c : coords_)
    if (c < 0) throw std::invalid_argument("dimension vector entries must be nonnegative");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  std::vector<long> c(n, 0);
  c.at(i) = 1;
  return DimVector(std::move(c));
}

long DimVector::total() const {
  long s = 0;
  for (long c : coords_) s += c;
  return s;
}

DimVector DimVector::operator+(const DimVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("dimension vector length mismatch");
  std::vector<long> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return DimVector(std::move(c));
}

DimVector DimVector::operator-(const DimVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("dimension vector length mismatch");
  std::vector<long> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return DimVector(std::move(c));
}

DimVector DimVector::operator*(long r) const {
  std::vector<long> c(coords_);
  for (auto& x : c) x *= r;
  return DimVector(std::move(c));
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool fits_in(const DimVector& e, const DimVector& d) {
  if (e.size() != d.size()) throw std::invalid_argument("dimension vector length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > d[i]) return false;
  return true;
}

std::vector<DimVector> sub_dim_vectors(const DimVector& d) {
  std::vector<DimVector> out;
  std::vector<long> cur(d.size(), 0);
  out.emplace_back(cur);
  if (d.size() == 0) return out;
  std::size_t i = d.size() - 1;
  while (true) {
    if (cur[i] < d[i]) {
      ++cur[i];
      std::fill(cur.begin() + static_cast<long>(i) + 1, cur.end(), 0);
      out.emplace_back(cur);
      i = d.size() - 1;
    } else if (i == 0) {
      return out;
    } else {
      --i;
    }
  }
}

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows, std::vector<std::string> labels)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), labels_(std::move(labels)) {
  for (const auto& a : arrows_)
    if (a.source >= vertex_count_ || a.target >= vertex_count_)
      throw std::invalid_argument("arrow endpoint out of range");
  if (labels_.empty())
    for (std::size_t v = 0; v < vertex_count_; ++v) labels_.push_back(std::to_string(v + 1));
  if (labels_.size() != vertex_count_) throw std::invalid_argument("label count mismatch");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate vertex label");
  }

  // Kahn's algorithm; ties broken by smallest index for determinism.
  std::vector<std::size_t> indeg(vertex_count_, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const std::size_t v = *it;
    ready.erase(it);
    topo_.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  acyclic_ = topo_.size() == vertex_count_;
}

Quiver Quiver::equioriented_a(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::kronecker(std::size_t k) {
  return Quiver(2, std::vector<Arrow>(k, Arrow{0, 1}), {"i", "j"});
}

std::optional<std::size_t> Quiver::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Quiver::outgoing(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::incoming(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

const std::vector<std::size_t>& Quiver::topological_order() const {
  if (!acyclic_) throw std::invalid_argument("quiver has an oriented cycle");
  return topo_;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back({a.target, a.source});
  return Quiver(vertex_count_, std::move(rev), labels_);
}

std::optional<std::vector<DynkinComponent>> Quiver::dynkin_components() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count_);
  for (const auto& a : arrows_) {
    if (a.source == a.target) return std::nullopt;
    auto& nb = adj[a.source];
    if (std::find(nb.begin(), nb.end(), a.target) != nb.end()) return std::nullopt;  // multi-edge
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }

  std::vector<int> comp(vertex_count_, -1);
  std::vector<DynkinComponent> out;
  for (std::size_t start = 0; start < vertex_count_; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<std::size_t> verts{start};
    comp[start] = static_cast<int>(out.size());
    std::size_t edges2 = 0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      edges2 += adj[verts[k]].size();
      for (auto w : adj[verts[k]])
        if (comp[w] < 0) {
          comp[w] = comp[start];
          verts.push_back(w);
        }
    }
    if (edges2 / 2 != verts.size() - 1) return std::nullopt;  // not a tree
    std::sort(verts.begin(), verts.end());

    std::vector<std::size_t> branch;
    for (auto v : verts) {
      if (adj[v].size() > 3) return std::nullopt;
      if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.size() > 1) return std::nullopt;
    if (branch.empty()) {
      out.push_back({'A', verts.size(), verts});
      continue;
    }
    const std::size_t center = branch[0];
    std::vector<std::size_t> legs;
    for (auto first : adj[center]) {
      std::size_t len = 1, prev = center, cur = first;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1)
      out.push_back({'D', verts.size(), verts});
    else if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4)
      out.push_back({'E', verts.size(), verts});
    else
      return std::nullopt;
  }
  return out;
}

std::string Quiver::dynkin_name() const {
  auto comps = dynkin_components();
  if (!comps) return "non-Dynkin";
  std::string name;
  for (const auto& c : *comps) {
    if (!name.empty()) name += "+";
    name += c.family + std::to_string(c.rank);
  }
  return name.empty() ? "empty" : name;
}

std::optional<std::vector<std::size_t>> Quiver::equioriented_path() const {
  if (vertex_count_ == 0 || arrows_.size() + 1 != vertex_count_) return std::nullopt;
  std::vector<int> out_deg(vertex_count_, 0), in_deg(vertex_count_, 0);
  std::vector<std::size_t> next(vertex_count_, vertex_count_);
  for (const auto& a : arrows_) {
    ++out_deg[a.source];
    ++in_deg[a.target];
    next[a.source] = a.target;
  }
  std::size_t start = vertex_count_;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (out_deg[v] > 1 || in_deg[v] > 1) return std::nullopt;
    if (in_deg[v] == 0) {
      if (start != vertex_count_) return std::nullopt;
      start = v;
    }
  }
  if (start == vertex_count_) return std::nullopt;
  std::vector<std::size_t> path{start};
  while (next[path.back()] != vertex_count_) path.push_back(next[path.back()]);
  if (path.size() != vertex_count_) return std::nullopt;
  return path;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
    throw std::invalid_argument("euler_form: dimension vector does not match quiver");
  long s = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

long functional(const Quiver& q, const DimVector& e, const DimVector& d) { return euler_form(q, d, e); }

}  // namespace quivemb
