#include "quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace orbitk::quiver {

namespace {

// Topological order; validation error on an oriented cycle.
std::vector<std::size_t> topological_order(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [s, t] : arrows) {
    ++indegree[t];
    out[s].push_back(t);
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n)
    fail_validation("cyclic-quiver", "quiver has an oriented cycle");
  return order;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::pair<std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], i).second)
      fail_validation("quiver-labels", "duplicate vertex label '" + vertices_[i] + "'");
  }
  for (const auto& [s, t] : arrows) {
    auto is = index.find(s);
    auto it = index.find(t);
    if (is == index.end() || it == index.end())
      fail_validation("quiver-labels", "arrow references unknown vertex");
    arrows_.emplace_back(is->second, it->second);
  }
  topological_order(vertices_.size(), arrows_);  // rejects oriented cycles
}

Quiver Quiver::preset(const std::string& name) {
  auto number_after = [&name](std::size_t prefix_len) -> long {
    try {
      std::size_t used = 0;
      long v = std::stol(name.substr(prefix_len), &used);
      if (used != name.size() - prefix_len) return -1;
      return v;
    } catch (const std::exception&) {
      return -1;
    }
  };
  auto labels = [](std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return v;
  };
  using Arrows = std::vector<std::pair<std::string, std::string>>;

  if (name.size() > 1 && name[0] == 'A') {
    long s = number_after(1);
    if (s >= 1) {
      Arrows a;
      for (long i = 1; i < s; ++i)
        a.emplace_back(std::to_string(i), std::to_string(i + 1));
      return Quiver(labels(static_cast<std::size_t>(s)), a);
    }
  } else if (name.size() > 1 && name[0] == 'D') {
    long s = number_after(1);
    if (s >= 4) {
      Arrows a{{"1", "3"}, {"2", "3"}};
      for (long i = 3; i < s; ++i)
        a.emplace_back(std::to_string(i), std::to_string(i + 1));
      return Quiver(labels(static_cast<std::size_t>(s)), a);
    }
  } else if (name == "E6" || name == "E7" || name == "E8") {
    long s = name[1] - '0';
    Arrows a;
    for (long i = 1; i + 1 < s; ++i)
      a.emplace_back(std::to_string(i), std::to_string(i + 1));
    a.emplace_back(std::to_string(s), "3");
    return Quiver(labels(static_cast<std::size_t>(s)), a);
  } else if (name.rfind("kronecker", 0) == 0) {
    long m = number_after(9);
    if (m >= 1) {
      Arrows a(static_cast<std::size_t>(m), {"1", "2"});
      return Quiver({"1", "2"}, a);
    }
  }
  fail_validation("quiver-preset", "unknown quiver preset '" + name + "'");
}

bool Quiver::is_acyclic() const {
  // Construction already rejects cycles; kept for callers probing raw data.
  return true;
}

bool Quiver::is_dynkin_ade() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [s, t] : arrows_) {
    auto key = std::minmax(s, t);
    if (!seen.insert(key).second) return false;  // parallel arrows
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  if (seen.size() != n - 1) return false;  // not a tree
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> stack{0};
  visited[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) return false;

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return false;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return true;  // a path: type A
  if (branch.size() > 1) return false;
  std::size_t center = branch[0];
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[center]) {
    std::size_t len = 1, prev = center, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[cur].size() == 3) return false;  // hit the center again
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return true;                    // D
  return arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4;  // E6..E8
}

IntMatrix cartan_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [s, t] : q.arrows()) out[s].push_back(t);
  std::vector<std::size_t> order = topological_order(n, q.arrows());
  IntMatrix c(n, n);
  // Path counts by dynamic programming against the topological order:
  // row_i = e_i + sum over arrows i -> k of row_k.
  for (std::size_t pos = n; pos-- > 0;) {
    std::size_t i = order[pos];
    c.at(i, i) = 1;
    for (std::size_t k : out[i])
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) += c.at(k, j);
  }
  return c;
}

namespace {

// Inverse of the Cartan matrix through its unitriangular form in
// topological order; exact and integral.
IntMatrix cartan_inverse(const Quiver& q, const IntMatrix& c) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> order = topological_order(q.vertex_count(), q.arrows());
  IntMatrix ct(n, n);  // upper unitriangular
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ct.at(a, b) = c.at(order[a], order[b]);
  IntMatrix inv = IntMatrix::identity(n);
  // Back substitution: inv = ct^{-1}, also upper triangular.
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = b; a-- > 0;) {
      mpz_class s = 0;
      for (std::size_t k = a + 1; k <= b; ++k) s += ct.at(a, k) * inv.at(k, b);
      inv.at(a, b) = -s;
    }
  IntMatrix result(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) result.at(order[a], order[b]) = inv.at(a, b);
  return result;
}

}  // namespace

IntMatrix euler_form(const Quiver& q) {
  IntMatrix c = cartan_matrix(q);
  return cartan_inverse(q, c).transposed();
}

IntMatrix coxeter_matrix(const Quiver& q) {
  IntMatrix c = cartan_matrix(q);
  return (cartan_inverse(q, c).transposed() * c).negated();
}

}  // namespace orbitk::quiver
