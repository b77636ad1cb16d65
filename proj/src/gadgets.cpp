// Copyright 2026 The qsat-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsat/gadgets.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsat {

namespace mp = boost::multiprecision;
using BigRational = mp::cpp_rational;

namespace {

void require_nonnegative(std::initializer_list<int> values, const char* who) {
  for (int v : values)
    if (v < 0) throw std::invalid_argument(std::string(who) + ": counts must be nonnegative");
}

void require_arity(int k, const char* who) {
  if (k < 2) throw std::invalid_argument(std::string(who) + ": arity must be at least 2");
  if (k > 62) throw std::invalid_argument(std::string(who) + ": arity too large");
}

BigInt pow_int(BigInt base, unsigned exponent) { return mp::pow(base, exponent); }

BigInt to_integer(const BigRational& q, const char* who) {
  if (mp::denominator(q) != 1)
    throw std::logic_error(std::string(who) + ": closed form produced a non-integer");
  return mp::numerator(q);
}

GadgetRank make_rank(BigInt rank, std::size_t t) {
  GadgetRank out;
  out.vertex_count = t;
  out.log_weight = rank == 0 ? -std::numeric_limits<double>::infinity()
                             : log_bigint(rank) - static_cast<double>(t) * std::log(2.0);
  out.rank = std::move(rank);
  return out;
}

BigInt hang_rank_value(long long a, long long b, long long c) {
  return BigInt((a + 2) * (b + 2) * (c + 2) - (a + 1) * (b + 1) * (c + 1));
}

BigInt binomial(unsigned n, unsigned r) {
  BigInt out = 1;
  for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

double log_bigint(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("log_bigint: negative argument");
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = mp::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

GadgetRank sunflower_rank(int d, int k) {
  require_nonnegative({d}, "sunflower_rank");
  require_arity(k, "sunflower_rank");
  const std::size_t t = 1 + static_cast<std::size_t>(d) * static_cast<std::size_t>(k - 1);
  if (d == 0) return make_rank(BigInt(2), t);
  const BigInt m = (BigInt(1) << (k - 1)) - 1;
  return make_rank(pow_int(m, static_cast<unsigned>(d - 1)) * (d + 2 * m), t);
}

GadgetRank nosegay3_rank(int a, int b, int c) {
  require_nonnegative({a, b, c}, "nosegay3_rank");
  const int s = a + b + c;
  const BigInt bracket = BigInt(a + 6) * (b + 6) * (c + 6) - BigInt(a + 3) * (b + 3) * (c + 3);
  BigRational value(bracket);
  if (s >= 3)
    value *= BigRational(pow_int(3, static_cast<unsigned>(s - 3)));
  else
    value /= BigRational(pow_int(3, static_cast<unsigned>(3 - s)));
  return make_rank(to_integer(value, "nosegay3_rank"), 3 + 2 * static_cast<std::size_t>(s));
}

GadgetRank nosegay_hang_rank(int a, int b, int c) {
  require_nonnegative({a, b, c}, "nosegay_hang_rank");
  return make_rank(hang_rank_value(a, b, c), 3 + static_cast<std::size_t>(a + b + c));
}

GadgetRank nosegay3_via_binomial(int a, int b, int c) {
  require_nonnegative({a, b, c}, "nosegay3_via_binomial");
  const int s = a + b + c;
  BigInt total = 0;
  for (int p = 0; p <= a; ++p)
    for (int q = 0; q <= b; ++q)
      for (int r = 0; r <= c; ++r) {
        total += (BigInt(1) << (s - p - q - r)) * binomial(a, p) * binomial(b, q) *
                 binomial(c, r) * hang_rank_value(p, q, r);
      }
  return make_rank(std::move(total), 3 + 2 * static_cast<std::size_t>(s));
}

GadgetRank nosegay_k_rank(std::span<const int> d, int k) {
  require_arity(k, "nosegay_k_rank");
  if (d.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("nosegay_k_rank: need exactly k hanging counts");
  const BigInt m = (BigInt(1) << (k - 1)) - 1;
  BigRational prefactor = 1;
  BigInt with_two = 1, with_one = 1;
  std::size_t t = static_cast<std::size_t>(k);
  for (int di : d) {
    if (di < 0) throw std::invalid_argument("nosegay_k_rank: counts must be nonnegative");
    if (di >= 1)
      prefactor *= BigRational(pow_int(m, static_cast<unsigned>(di - 1)));
    else
      prefactor /= BigRational(m);
    with_two *= di + 2 * m;
    with_one *= di + m;
    t += static_cast<std::size_t>(di) * static_cast<std::size_t>(k - 1);
  }
  const BigRational value = prefactor * BigRational(with_two - with_one);
  return make_rank(to_integer(value, "nosegay_k_rank"), t);
}

BigInt k2_component_rank(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("k2_component_rank: empty component");
  if (m + 1 < n) throw std::invalid_argument("k2_component_rank: too few edges to be connected");
  if (m + 1 == n) return BigInt(n + 1);
  if (n == 2) return BigInt(m >= 4 ? 0 : 4 - m);
  if (m == n) return BigInt(2);
  return BigInt(0);
}

BigInt k2_rank(const Hypergraph& g) {
  BigInt product = 1;
  for (const auto& c : components(g)) {
    product *= k2_component_rank(c.vertex_count, c.edge_count);
    if (product == 0) break;
  }
  return product;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::uint64_t count_hypercube_components(int a, int b, int c) {
  const std::size_t n = 3 + static_cast<std::size_t>(a + b + c);
  if (n > kMaxStoquasticQubits)
    throw std::invalid_argument("stoquastic_component_count: more than " +
                                std::to_string(kMaxStoquasticQubits) + " qubits");
  const std::uint32_t states = std::uint32_t{1} << n;
  UnionFind uf(states);

  // <x|Pi|y> = 1/2 for the central clause iff x, y agree off qubits 0..2 and
  // read 000 / 111 there.
  for (std::uint32_t x = 0; x < states; ++x)
    if ((x & 7U) == 0) uf.unite(x, x | 7U);

  // Hanging edge (center, free end): x, y agree elsewhere and read 01 / 10.
  std::uint32_t next_free = 3;
  const int counts[3] = {a, b, c};
  for (std::uint32_t center = 0; center < 3; ++center) {
    for (int j = 0; j < counts[center]; ++j, ++next_free) {
      const std::uint32_t cm = 1U << center, fm = 1U << next_free;
      for (std::uint32_t x = 0; x < states; ++x)
        if ((x & cm) && !(x & fm)) uf.unite(x, x ^ (cm | fm));
    }
  }

  std::uint64_t roots = 0;
  for (std::uint32_t x = 0; x < states; ++x)
    if (uf.find(x) == x) ++roots;
  return roots;
}

std::uint64_t count_cube_diagonals(int a, int b, int c) {
  // A diagonal starts at the point whose predecessor along (1,1,1) leaves the box.
  std::uint64_t starts = 0;
  for (int x = 0; x <= a + 1; ++x)
    for (int y = 0; y <= b + 1; ++y)
      for (int z = 0; z <= c + 1; ++z)
        if (x == 0 || y == 0 || z == 0) ++starts;
  return starts;
}

}  // namespace

std::uint64_t stoquastic_component_count(int a, int b, int c, StoquasticMode mode) {
  require_nonnegative({a, b, c}, "stoquastic_component_count");
  return mode == StoquasticMode::Hypercube ? count_hypercube_components(a, b, c)
                                           : count_cube_diagonals(a, b, c);
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

GadgetRank gadget_rank(const GadgetSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Sunflower& s) { return sunflower_rank(s.d, s.k); },
          [](const Nosegay3& s) { return nosegay3_rank(s.a, s.b, s.c); },
          [](const NosegayHang& s) { return nosegay_hang_rank(s.a, s.b, s.c); },
          [](const NosegayK& s) { return nosegay_k_rank(s.d, s.k); },
          [](const K2Component& s) {
            return make_rank(k2_component_rank(s.vertex_count, s.edge_count), s.vertex_count);
          },
      },
      spec);
}

double gadget_log_weight(const GadgetSpec& spec) { return gadget_rank(spec).log_weight; }

Hypergraph gadget_graph(const GadgetSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Sunflower& s) {
            require_nonnegative({s.d}, "gadget_graph");
            require_arity(s.k, "gadget_graph");
            Hypergraph g(1 + static_cast<std::size_t>(s.d * (s.k - 1)));
            Vertex next = 1;
            std::vector<Vertex> e;
            for (int j = 0; j < s.d; ++j) {
              e.assign({0});
              for (int i = 0; i < s.k - 1; ++i) e.push_back(next++);
              g.add_edge(e);
            }
            return g;
          },
          [](const Nosegay3& s) {
            require_nonnegative({s.a, s.b, s.c}, "gadget_graph");
            Hypergraph g(3 + 2 * static_cast<std::size_t>(s.a + s.b + s.c));
            g.add_edge({0, 1, 2});
            Vertex next = 3;
            const int counts[3] = {s.a, s.b, s.c};
            for (Vertex center = 0; center < 3; ++center)
              for (int j = 0; j < counts[center]; ++j, next += 2) g.add_edge({center, next, next + 1});
            return g;
          },
          [](const NosegayHang& s) {
            require_nonnegative({s.a, s.b, s.c}, "gadget_graph");
            Hypergraph g(3 + static_cast<std::size_t>(s.a + s.b + s.c));
            g.add_edge({0, 1, 2});
            Vertex next = 3;
            const int counts[3] = {s.a, s.b, s.c};
            for (Vertex center = 0; center < 3; ++center)
              for (int j = 0; j < counts[center]; ++j) g.add_edge({center, next++});
            return g;
          },
          [](const NosegayK& s) {
            require_arity(s.k, "gadget_graph");
            if (s.d.size() != static_cast<std::size_t>(s.k))
              throw std::invalid_argument("gadget_graph: need exactly k hanging counts");
            std::size_t n = static_cast<std::size_t>(s.k);
            for (int di : s.d) {
              if (di < 0) throw std::invalid_argument("gadget_graph: counts must be nonnegative");
              n += static_cast<std::size_t>(di) * static_cast<std::size_t>(s.k - 1);
            }
            Hypergraph g(n);
            std::vector<Vertex> e;
            for (int i = 0; i < s.k; ++i) e.push_back(static_cast<Vertex>(i));
            g.add_edge(e);
            auto next = static_cast<Vertex>(s.k);
            for (int i = 0; i < s.k; ++i)
              for (int j = 0; j < s.d[static_cast<std::size_t>(i)]; ++j) {
                e.assign({static_cast<Vertex>(i)});
                for (int l = 0; l < s.k - 1; ++l) e.push_back(next++);
                g.add_edge(e);
              }
            return g;
          },
          [](const K2Component& s) {
            // A path, then the remaining edges stacked on the first pair.
            if (s.vertex_count < 2 && s.edge_count > 0)
              throw std::invalid_argument("gadget_graph: a single vertex has no edges");
            if (s.edge_count + 1 < s.vertex_count)
              throw std::invalid_argument("gadget_graph: too few edges to be connected");
            Hypergraph g(s.vertex_count);
            std::size_t used = 0;
            for (Vertex v = 1; v < s.vertex_count; ++v, ++used) g.add_edge({v - 1, v});
            for (; used < s.edge_count; ++used) g.add_edge({0, 1});
            return g;
          },
      },
      spec);
}

std::string gadget_name(const GadgetSpec& spec) {
  return std::visit(Overloaded{
                        [](const Sunflower&) { return std::string("sunflower"); },
                        [](const Nosegay3&) { return std::string("nosegay3"); },
                        [](const NosegayHang&) { return std::string("nosegay-hang"); },
                        [](const NosegayK&) { return std::string("nosegay-k"); },
                        [](const K2Component&) { return std::string("k2"); },
                    },
                    spec);
}

std::string gadget_params(const GadgetSpec& spec) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Sunflower& s) { out << s.d; },
                 [&](const Nosegay3& s) { out << s.a << ';' << s.b << ';' << s.c; },
                 [&](const NosegayHang& s) { out << s.a << ';' << s.b << ';' << s.c; },
                 [&](const NosegayK& s) {
                   for (std::size_t i = 0; i < s.d.size(); ++i) out << (i ? ";" : "") << s.d[i];
                 },
                 [&](const K2Component& s) {
                   out << s.vertex_count << ';' << s.edge_count << ';' << s.max_edge_multiplicity;
                 },
             },
             spec);
  return out.str();
}

}  // namespace qsat
