// Copyright 2026 The spectral-moore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smoore/graphs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "smoore/bounds.hpp"
#include "smoore/errors.hpp"
#include "smoore/gfpoly.hpp"
#include "smoore/lpcert.hpp"

namespace smoore {

namespace {

std::vector<int> bfs_distances(const BipartiteGraph& g, int s) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adjacency[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph make_graph(std::string name, int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2) throw InvalidArgument("a graph needs at least two vertices");
  BipartiteGraph g;
  g.name = std::move(name);
  g.n = n;
  g.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw InvalidArgument("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());

  g.k = static_cast<long>(g.adjacency[0].size());
  for (const auto& nb : g.adjacency)
    if (static_cast<long>(nb.size()) != g.k) throw InvalidArgument(g.name + " is not regular");

  g.part.assign(n, -1);
  g.part[0] = 0;
  std::queue<int> q;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adjacency[u]) {
      if (g.part[v] < 0) {
        g.part[v] = 1 - g.part[u];
        ++reached;
        q.push(v);
      } else if (g.part[v] == g.part[u]) {
        throw InvalidArgument(g.name + " is not bipartite");
      }
    }
  }
  if (reached != n) throw InvalidArgument(g.name + " is not connected");
  return g;
}

BipartiteGraph cycle(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("a bipartite cycle needs even n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph("C" + std::to_string(n), n, e);
}

BipartiteGraph complete_bipartite(long k) {
  if (k < 1 || k > 10000) throw InvalidArgument("k out of range");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) e.emplace_back(i, static_cast<int>(k) + j);
  return make_graph("K" + std::to_string(k) + "," + std::to_string(k), static_cast<int>(2 * k), e);
}

BipartiteGraph design_incidence(const std::vector<long>& difference_set, long v) {
  if (v < 2 || v > 100000) throw InvalidArgument("modulus out of range");
  std::set<long> blocks;
  for (long x : difference_set) blocks.insert(mod(x, v));
  if (blocks.size() != difference_set.size() || blocks.empty()) throw InvalidArgument("difference set has repeated residues");
  // every nonzero residue must occur lambda times as a difference
  std::vector<long> count(v, 0);
  for (long a : blocks)
    for (long b : blocks)
      if (a != b) ++count[mod(a - b, v)];
  for (long r = 2; r < v; ++r)
    if (count[r] != count[1]) throw InvalidArgument("not a difference set modulo " + std::to_string(v));

  std::vector<std::pair<int, int>> e;
  for (long j = 0; j < v; ++j)
    for (long x : blocks) e.emplace_back(static_cast<int>(mod(x + j, v)), static_cast<int>(v + j));
  std::ostringstream name;
  name << "design(" << v << "," << blocks.size() << "," << count[1] << ")";
  return make_graph(name.str(), static_cast<int>(2 * v), e);
}

BipartiteGraph affine_minus_class(long q) {
  if (!is_prime(q)) throw NonPrimeQ("affine_minus_class needs a prime q, got " + std::to_string(q));
  if (q > 1000) throw InvalidArgument("q out of range");
  std::vector<std::pair<int, int>> e;
  const int qq = static_cast<int>(q);
  // line y = m x + b
  for (int m = 0; m < qq; ++m)
    for (int b = 0; b < qq; ++b)
      for (int x = 0; x < qq; ++x) e.emplace_back(x * qq + (m * x + b) % qq, qq * qq + m * qq + b);
  return make_graph("AG(2," + std::to_string(q) + ") minus a class", 2 * qq * qq, e);
}

BipartiteGraph heawood() {
  auto g = design_incidence({1, 2, 4}, 7);
  g.name = "Heawood";
  return g;
}

BipartiteGraph tutte_coxeter() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  std::vector<std::array<int, 3>> synthemes;
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j)
      for (int l = j + 1; l < 15; ++l) {
        int mask = 0;
        for (int x : {i, j, l}) mask |= (1 << duads[x].first) | (1 << duads[x].second);
        if (mask == 63) synthemes.push_back({i, j, l});
      }
  std::vector<std::pair<int, int>> e;
  for (int s = 0; s < static_cast<int>(synthemes.size()); ++s)
    for (int x : synthemes[s]) e.emplace_back(x, 15 + s);
  return make_graph("Tutte-Coxeter", 30, e);
}

BipartiteGraph pappus() {
  auto g = affine_minus_class(3);
  g.name = "Pappus";
  return g;
}

BipartiteGraph cube() {
  auto g = design_incidence({0, 1, 2}, 4);
  g.name = "Q3";
  return g;
}

BipartiteGraph biplane() {
  auto g = design_incidence({1, 3, 4, 5, 9}, 11);
  g.name = "biplane(11,5,2)";
  return g;
}

BipartiteGraph build_known(const std::string& name, const std::vector<long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidArgument(name + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "cycle") {
    need(1);
    return cycle(static_cast<int>(params[0]));
  }
  if (name == "complete_bipartite") {
    need(1);
    return complete_bipartite(params[0]);
  }
  if (name == "design_incidence") {
    if (params.size() < 2) throw InvalidArgument("design_incidence takes the modulus and the difference set");
    return design_incidence(std::vector<long>(params.begin() + 1, params.end()), params[0]);
  }
  if (name == "affine_minus_class") {
    need(1);
    return affine_minus_class(params[0]);
  }
  static const std::vector<std::pair<std::string, std::function<BipartiteGraph()>>> fixed = {
      {"heawood", heawood}, {"tutte_coxeter", tutte_coxeter}, {"pappus", pappus}, {"cube", cube}, {"biplane", biplane}};
  for (const auto& [key, fn] : fixed)
    if (key == name) {
      need(0);
      return fn();
    }
  throw UnknownName("unknown graph '" + name + "'");
}

std::vector<double> spectrum(const BipartiteGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adjacency[u]) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

int girth(const BipartiteGraph& g) {
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adjacency[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;  // 0 for a forest
}

int diameter(const BipartiteGraph& g) {
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::string edge_list(const BipartiteGraph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Table1Entry> table1_entries() {
  std::vector<Table1Entry> rows;
  rows.push_back({"cycle", {6}, 2, Theta::of(1), 1, 3});
  for (long k = 3; k <= 6; ++k) rows.push_back({"complete_bipartite", {k}, k, Theta::of(0), 1, 2});
  rows.push_back({"cube", {}, 3, Theta::of(1), 2, 3});
  rows.push_back({"heawood", {}, 3, Theta::from_square(2), 1, 3});
  rows.push_back({"design_incidence", {13, 0, 1, 3, 9}, 4, Theta::from_square(3), 1, 3});
  rows.push_back({"biplane", {}, 5, Theta::from_square(3), 2, 3});
  rows.push_back({"pappus", {}, 3, Theta::from_square(3), 2, 4});
  rows.push_back({"affine_minus_class", {5}, 5, Theta::from_square(5), 4, 4});
  rows.push_back({"tutte_coxeter", {}, 3, Theta::of(2), 1, 4});
  return rows;
}

GraphReport verify_table1(const Table1Entry& entry, double tol) {
  BipartiteGraph g = build_known(entry.name, entry.params);
  GraphReport r;
  r.name = g.name;
  r.k = g.k;
  r.n = g.n;
  auto ev = spectrum(g);
  r.lambda2 = ev.size() > 1 ? ev[1] : 0.0;
  r.girth = girth(g);
  r.diameter = diameter(g);
  r.theta = entry.theta;
  r.c = entry.c;
  r.d = entry.d;
  if (g.k != entry.k) throw InvalidArgument(g.name + " has degree " + std::to_string(g.k) + ", row says " + std::to_string(entry.k));
  r.order_bound = m_bound(entry.k, entry.d + 1, Rational(entry.c));
  r.order_ok = r.order_bound == g.n;
  r.lambda_ok = std::abs(r.lambda2 - entry.theta.value) <= tol;
  r.girth_ok = r.girth >= 2 * entry.d - 2;
  r.diameter_ok = r.diameter == entry.d;

  try {
    auto cert = build_certificate(entry.k, entry.d + 1, Number::of(Rational(entry.c)), entry.theta, tol);
    std::vector<Theta> taus;
    for (double x : ev) taus.push_back(Theta::inexact(x));
    r.lp = lp_bound(entry.k, taus, cert, std::max(tol, 1e-7)).bound;
    r.lp_tight = r.lp.is_exact() ? *r.lp.exact == g.n : std::abs(r.lp.value() - g.n) <= tol * g.n;
  } catch (const NotARoot&) {
    r.lp_tight = false;  // theta does not belong to (k, d+1, c)
  } catch (const HypothesisViolated&) {
    r.lp_tight = false;
  }
  r.matches_bound = r.order_ok && r.lambda_ok && r.girth_ok && r.diameter_ok && r.lp_tight;
  return r;
}

}  // namespace smoore
