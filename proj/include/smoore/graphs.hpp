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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smoore/number.hpp"

namespace smoore {

/// Connected, regular, bipartite simple graph. Construct through make_graph.
struct BipartiteGraph {
  std::string name;
  int n = 0;
  long k = 0;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> part;  // 0 or 1; vertex 0 is in part 0

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Throws InvalidArgument on loops, repeated edges, or when the graph is not
/// connected, regular and bipartite.
BipartiteGraph make_graph(std::string name, int n, const std::vector<std::pair<int, int>>& edges);

BipartiteGraph cycle(int n);
BipartiteGraph complete_bipartite(long k);
/// Incidence graph of the symmetric design with blocks D + j over Z_v.
/// Points are 0..v-1, blocks v..2v-1.
BipartiteGraph design_incidence(const std::vector<long>& difference_set, long v);
/// Points of AG(2,q) against the non-vertical lines. Throws NonPrimeQ unless q is prime.
BipartiteGraph affine_minus_class(long q);
BipartiteGraph heawood();
/// Duads against synthemes of a 6-set.
BipartiteGraph tutte_coxeter();
BipartiteGraph pappus();
BipartiteGraph cube();
BipartiteGraph biplane();

/// name: cycle {n}, complete_bipartite {k}, design_incidence {v, d_1, ..., d_k},
/// affine_minus_class {q}, or one of heawood, tutte_coxeter, pappus, cube, biplane.
BipartiteGraph build_known(const std::string& name, const std::vector<long>& params = {});

/// Adjacency eigenvalues, descending.
std::vector<double> spectrum(const BipartiteGraph& g);
int girth(const BipartiteGraph& g);
int diameter(const BipartiteGraph& g);

/// One "u v" line per edge, 0-indexed.
std::string edge_list(const BipartiteGraph& g);

/// A row of the table of known graphs meeting M(k, d+1, c).
struct Table1Entry {
  std::string name;
  std::vector<long> params;
  long k = 0;
  Theta theta;
  long c = 0;
  int d = 0;

  friend bool operator==(const Table1Entry&, const Table1Entry&) = default;
};

/// The rows with a constructible representative.
std::vector<Table1Entry> table1_entries();

struct GraphReport {
  std::string name;
  long k = 0;
  int n = 0;
  double lambda2 = 0.0;
  int girth = 0;
  int diameter = 0;
  Theta theta;
  long c = 0;
  int d = 0;
  Rational order_bound;  // M(k, d+1, c)
  bool order_ok = false;
  bool lambda_ok = false;
  bool girth_ok = false;  // g >= 2d - 2
  bool diameter_ok = false;
  Number lp;              // LP bound from the certificate for (k, d+1, c, theta)
  bool lp_tight = false;  // lp == n
  bool matches_bound = false;

  friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

GraphReport verify_table1(const Table1Entry& entry, double tol = 1e-8);

}  // namespace smoore
