#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mgnn/mlgraph/eigen.hpp"
#include "mgnn/mlgraph/multilayer_network.hpp"
#include "mgnn/mlgraph/supra.hpp"
#include "support/oracles.hpp"

namespace mgnn {
namespace {

MultilayerNetwork empty_multiplex(std::size_t n, std::size_t l) {
  std::vector<LayerGraph> layers(l, LayerGraph(n, false, {}));
  return MultilayerNetwork(n, std::move(layers));
}

// K2 in layer 0, nothing in layer 1, clique coupling: a path of 4 replicas.
MultilayerNetwork k2_plus_empty(double coupling = 1.0) {
  std::vector<LayerGraph> layers{LayerGraph(2, false, {{0, 1, 1.0}}), LayerGraph(2, false, {})};
  return build_multiplex_clique(MultilayerNetwork(2, std::move(layers)), coupling);
}

MultilayerNetwork random_multiplex(std::size_t n, std::size_t l, double p, double coupling, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LayerGraph> layers;
  for (std::size_t a = 0; a < l; ++a) layers.push_back(testing::random_layer(n, p, rng));
  return build_multiplex_clique(MultilayerNetwork(n, std::move(layers)), coupling);
}

TEST(ReplicaIds, FlattenRoundTrip) {
  const std::size_t N = 7;
  for (LayerId a = 0; a < 4; ++a) {
    for (NodeId i = 0; i < N; ++i) {
      const ReplicaId r{i, a};
      const std::size_t idx = flatten(r, N);
      EXPECT_GE(idx, a * N);
      EXPECT_LT(idx, (a + 1) * N);
      EXPECT_EQ(unflatten(idx, N), r);
    }
  }
}

TEST(LayerGraph, RejectsDuplicatesAndBadWeights) {
  EXPECT_THROW(LayerGraph(3, false, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(LayerGraph(3, true, {{0, 1}, {1, 0}}));
  EXPECT_THROW(LayerGraph(3, true, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(LayerGraph(3, false, {{0, 1, 0.0}}), std::invalid_argument);
  EXPECT_THROW(LayerGraph(3, false, {{0, 1, -2.0}}), std::invalid_argument);
  EXPECT_THROW(LayerGraph(3, false, {{0, 3}}), std::out_of_range);
}

TEST(LayerGraph, UndirectedNeighbourhoodsAreSymmetric) {
  LayerGraph g(4, false, {{0, 1}, {2, 1}, {3, 0}});
  EXPECT_EQ(g.n_edges(), 3u);
  EXPECT_EQ(g.in_degree(1), 2u);
  EXPECT_EQ(g.in_degree(0), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(2, 3));

  LayerGraph d(3, true, {{0, 1}, {2, 1}});
  EXPECT_EQ(d.in_degree(1), 2u);
  EXPECT_EQ(d.in_degree(0), 0u);
  EXPECT_EQ(d.out_degree(0), 1u);
  EXPECT_TRUE(d.has_edge(0, 1));
  EXPECT_FALSE(d.has_edge(1, 0));
}

TEST(MultilayerNetwork, ValidatesInterEdges) {
  std::vector<LayerGraph> layers(2, LayerGraph(3, false, {}));
  EXPECT_THROW(MultilayerNetwork(3, layers, {InterEdge{{0, 0}, {1, 0}}}), std::invalid_argument);
  EXPECT_THROW(MultilayerNetwork(3, layers, {InterEdge{{0, 0}, {5, 1}}}), std::out_of_range);
  EXPECT_THROW(MultilayerNetwork(3, layers, {InterEdge{{0, 0}, {0, 1}}, InterEdge{{0, 1}, {0, 0}}}),
               std::invalid_argument);
  EXPECT_THROW(MultilayerNetwork(0, {}), std::invalid_argument);
  EXPECT_THROW(MultilayerNetwork(3, {}), std::invalid_argument);
}

TEST(MultiplexClique, EdgeCounts) {
  EXPECT_EQ(build_multiplex_clique(empty_multiplex(3, 2), 1.0).inter_edges().size(), 3u);
  EXPECT_EQ(build_multiplex_clique(empty_multiplex(1, 4), 1.0).inter_edges().size(), 6u);
  EXPECT_EQ(build_multiplex_clique(empty_multiplex(307, 9), 1.0).inter_edges().size(), 11052u);
}

TEST(MultiplexClique, RejectsDoubleApplication) {
  auto net = build_multiplex_clique(empty_multiplex(3, 2), 1.0);
  EXPECT_THROW(build_multiplex_clique(net, 1.0), std::invalid_argument);
  EXPECT_THROW(apply_interlayer(net, MultiplexClique{2.0}), std::invalid_argument);
}

TEST(Explode, MonoplexDegenerateCase) {
  LayerGraph g(4, false, {{0, 1}, {1, 2}});
  MultilayerNetwork net(4, {g});
  auto ex = explode(net);
  ASSERT_EQ(ex.intra.size(), 1u);
  EXPECT_EQ(ex.intra[0].n_edges(), 2u);
  EXPECT_EQ(std::vector<Edge>(ex.intra[0].edges().begin(), ex.intra[0].edges().end()),
            std::vector<Edge>(g.edges().begin(), g.edges().end()));
  EXPECT_EQ(ex.inter.n_edges(), 0u);
}

TEST(Explode, ThreeLayerMultiplexGivesFourGraphsAndPartitionsEdges) {
  auto net = random_multiplex(6, 3, 0.4, 1.0, 11);
  auto ex = explode(net);
  EXPECT_EQ(ex.intra.size() + 1, 4u);
  std::size_t total = ex.inter.n_edges();
  for (std::size_t a = 0; a < 3; ++a) {
    total += ex.intra[a].n_edges();
    for (const Edge& e : ex.intra[a].edges()) {
      EXPECT_EQ(e.src / 6, a);
      EXPECT_EQ(e.dst / 6, a);
    }
  }
  EXPECT_EQ(total, net.n_intra_edges() + net.inter_edges().size());

  // Union of exploded edges equals the supra-adjacency nonzeros.
  auto adj = supra_adjacency(net);
  std::size_t nonzeros = 0;
  for (double v : adj.values()) nonzeros += v != 0.0;
  EXPECT_EQ(nonzeros, 2 * total);
}

TEST(SupraAdjacency, SmallCases) {
  auto zero = supra_adjacency(empty_multiplex(2, 2));
  EXPECT_EQ(zero.dim(), 4u);
  for (double v : zero.values()) EXPECT_EQ(v, 0.0);

  std::vector<LayerGraph> layers{LayerGraph(2, false, {{0, 1}}), LayerGraph(2, false, {})};
  auto one = supra_adjacency(MultilayerNetwork(2, layers));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool expected = (i == 0 && j == 1) || (i == 1 && j == 0);
      EXPECT_EQ(one(i, j), expected ? 1.0 : 0.0) << i << "," << j;
    }

  auto coupled = supra_adjacency(build_multiplex_clique(empty_multiplex(3, 2), 2.5));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(coupled(i, 3 + j), i == j ? 2.5 : 0.0);
      EXPECT_EQ(coupled(3 + i, j), i == j ? 2.5 : 0.0);
    }
}

TEST(SupraAdjacency, DiagonalBlocksEqualLayers) {
  auto net = random_multiplex(8, 3, 0.3, 1.0, 5);
  auto adj = supra_adjacency(net);
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& g = net.layer(static_cast<LayerId>(a));
    for (NodeId i = 0; i < 8; ++i)
      for (NodeId j = 0; j < 8; ++j) EXPECT_EQ(adj(a * 8 + i, a * 8 + j), g.has_edge(i, j) ? 1.0 : 0.0);
  }
  EXPECT_TRUE(adj.is_symmetric());
}

TEST(SupraAdjacency, DirectedLayersStayAsymmetric) {
  std::vector<LayerGraph> layers{LayerGraph(3, true, {{0, 1}, {1, 2}})};
  auto adj = supra_adjacency(MultilayerNetwork(3, layers));
  EXPECT_EQ(adj(0, 1), 1.0);
  EXPECT_EQ(adj(1, 0), 0.0);
  EXPECT_FALSE(adj.is_symmetric());
}

TEST(SupraLaplacian, RowsSumToZeroAndSymmetric) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto net = random_multiplex(9, 3, 0.35, 0.5 + static_cast<double>(seed), seed);
    auto lap = supra_laplacian(net);
    EXPECT_TRUE(lap.is_symmetric());
    for (std::size_t i = 0; i < lap.dim(); ++i) {
      double s = 0.0;
      for (double v : lap.row(i)) s += v;
      EXPECT_LT(std::abs(s), 1e-9);
    }
    auto ev = spectrum(lap);
    EXPECT_GE(ev.front(), -1e-8);
  }
}

TEST(SupraLaplacian, TwoReplicasJoinedByOneEdge) {
  auto lap = supra_laplacian(build_multiplex_clique(empty_multiplex(1, 2), 1.0));
  EXPECT_EQ(lap(0, 0), 1.0);
  EXPECT_EQ(lap(0, 1), -1.0);
  EXPECT_EQ(lap(1, 0), -1.0);
  EXPECT_EQ(lap(1, 1), 1.0);
}

TEST(SupraLaplacian, PathOfFourReplicasSpectrum) {
  auto ev = spectrum(supra_laplacian(k2_plus_empty()));
  const std::vector<double> expected{0.0, 2.0 - std::sqrt(2.0), 2.0, 2.0 + std::sqrt(2.0)};
  ASSERT_EQ(ev.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(SupraLaplacian, RejectsDirectedLayers) {
  std::vector<LayerGraph> layers{LayerGraph(3, true, {{0, 1}})};
  MultilayerNetwork net(3, layers);
  EXPECT_THROW(supra_laplacian(net), std::invalid_argument);
  EXPECT_THROW(layer_laplacian(net, 0), std::invalid_argument);
  EXPECT_THROW(is_superdiffusive(net), std::invalid_argument);
}

TEST(LayerLaplacian, ClosedFormSpectra) {
  auto empty = layer_laplacian(empty_multiplex(4, 1), 0);
  for (double v : empty.values()) EXPECT_EQ(v, 0.0);

  for (std::size_t n : {3u, 7u, 12u}) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    MultilayerNetwork kn(n, {LayerGraph(n, false, edges)});
    auto ev = spectrum(layer_laplacian(kn, 0));
    EXPECT_NEAR(ev[0], 0.0, 1e-10);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(ev[i], static_cast<double>(n), 1e-10);
  }

  MultilayerNetwork k2(2, {LayerGraph(2, false, {{0, 1}})});
  auto ev = spectrum(layer_laplacian(k2, 0));
  EXPECT_NEAR(ev[0], 0.0, 1e-14);
  EXPECT_NEAR(ev[1], 2.0, 1e-14);
}

TEST(AlgebraicConnectivity, ReferenceGraphs) {
  MultilayerNetwork disconnected(4, {LayerGraph(4, false, {{0, 1}, {2, 3}})});
  EXPECT_NEAR(algebraic_connectivity(layer_laplacian(disconnected, 0)), 0.0, 1e-9);

  MultilayerNetwork path(4, {LayerGraph(4, false, {{0, 1}, {1, 2}, {2, 3}})});
  EXPECT_NEAR(algebraic_connectivity(layer_laplacian(path, 0)), 2.0 - std::sqrt(2.0), 1e-12);

  std::vector<Edge> edges;
  for (NodeId i = 0; i < 50; ++i)
    for (NodeId j = i + 1; j < 50; ++j) edges.push_back({i, j, 1.0});
  MultilayerNetwork k50(50, {LayerGraph(50, false, edges)});
  EXPECT_NEAR(algebraic_connectivity(layer_laplacian(k50, 0)), 50.0, 1e-9);
}

TEST(AlgebraicConnectivity, RejectsNonSymmetric) {
  SupraMatrix m(2, SupraKind::laplacian);
  m(0, 1) = -1.0;
  EXPECT_THROW(algebraic_connectivity(m), std::invalid_argument);
}

TEST(Eigensolver, MatchesJacobiOnRandomSymmetricMatrices) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = gauss(rng);
    auto ours = symmetric_eigenvalues(a, n);
    auto ref = testing::jacobi_eigenvalues(a, n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-10) << "n=" << n << " i=" << i;
  }
}

TEST(Eigensolver, PathSpectrumAgainstClosedForm) {
  for (std::size_t n : {2u, 9u, 30u}) {
    std::vector<double> diag(n, 2.0);
    diag.front() = diag.back() = 1.0;
    std::vector<double> off(n - 1, -1.0);
    auto ev = tridiagonal_eigenvalues(diag, off);
    auto ref = testing::path_spectrum(n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ev[i], ref[i], 1e-12);
  }
}

TEST(Superdiffusion, IdenticalLayersAreNeverSuperdiffusive) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    LayerGraph g = testing::random_layer(12, 0.3, rng);
    auto net = build_multiplex_clique(MultilayerNetwork(12, {g, g}), 1.0);
    auto res = is_superdiffusive(net);
    EXPECT_FALSE(res.label);
    EXPECT_LE(res.margin, 0.0);
    // Spectrum is the layer spectrum united with its shift by 2.
    const double layer_l2 = res.layer_lambda2[0];
    EXPECT_NEAR(res.supra_lambda2, std::min(layer_l2, 2.0), 1e-9);
  }
}

TEST(Superdiffusion, K2PlusEmptyLayer) {
  auto res = is_superdiffusive(k2_plus_empty());
  EXPECT_FALSE(res.label);
  EXPECT_NEAR(res.supra_lambda2, 2.0 - std::sqrt(2.0), 1e-12);
  ASSERT_EQ(res.layer_lambda2.size(), 2u);
  EXPECT_NEAR(res.layer_lambda2[0], 2.0, 1e-12);
  EXPECT_NEAR(res.layer_lambda2[1], 0.0, 1e-12);
  EXPECT_NEAR(res.margin, 2.0 - std::sqrt(2.0) - 2.0, 1e-12);
}

TEST(Superdiffusion, LabelAgreesWithBruteForceEigensolve) {
  int positives = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto net = random_multiplex(14, 2, 0.08 + 0.005 * static_cast<double>(seed % 8), 1.0, 100 + seed);
    auto res = is_superdiffusive(net);
    auto supra = testing::jacobi_eigenvalues(testing::brute_supra_laplacian(net), net.n_replicas())[1];
    double best = 0.0;
    for (LayerId a = 0; a < 2; ++a)
      best = std::max(best, testing::jacobi_eigenvalues(testing::brute_layer_laplacian(net, a), 14)[1]);
    EXPECT_NEAR(res.supra_lambda2, supra, 1e-9);
    EXPECT_NEAR(res.margin, supra - best, 1e-9);
    if (std::abs(supra - best) > 1e-7) EXPECT_EQ(res.label, supra > best);
    positives += res.label;
  }
  EXPECT_GT(positives, 0) << "instance family should contain superdiffusive examples";
}

TEST(SpectralProperties, CouplingMonotonicity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<LayerGraph> layers{testing::random_layer(10, 0.25, rng), testing::random_layer(10, 0.4, rng)};
    MultilayerNetwork base(10, layers);
    double previous = -1.0;
    for (double w : {0.1, 0.3, 1.0, 3.0, 10.0}) {
      const double l2 = algebraic_connectivity(supra_laplacian(build_multiplex_clique(base, w)));
      EXPECT_GE(l2, previous - 1e-10);
      previous = l2;
    }
  }
}

TEST(SpectralProperties, PermutationInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto net = random_multiplex(11, 2, 0.2, 1.0, 300 + seed);
    std::vector<NodeId> perm(11);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LayerGraph> layers;
    for (const LayerGraph& g : net.layers()) {
      std::vector<Edge> edges;
      for (const Edge& e : g.edges()) edges.push_back({perm[e.src], perm[e.dst], e.weight});
      layers.emplace_back(11, false, std::move(edges));
    }
    auto permuted = build_multiplex_clique(MultilayerNetwork(11, layers), 1.0);
    auto a = is_superdiffusive(net);
    auto b = is_superdiffusive(permuted);
    EXPECT_NEAR(a.supra_lambda2, b.supra_lambda2, 1e-10);
    EXPECT_EQ(a.label, b.label);
  }
}

TEST(SpectralProperties, EulerDiffusionDecaysAtLambda2) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto net = random_multiplex(12, 2, 0.35, 0.4, 700 + seed);
    const auto lap = testing::brute_supra_laplacian(net);
    const auto ev = testing::jacobi_eigenvalues(lap, 24);
    if (ev[1] < 1e-6 || (ev[2] - ev[1]) / ev[1] <= 0.2) continue;
    std::vector<double> x0(24);
    for (std::size_t i = 0; i < 24; ++i) x0[i] = std::cos(1.7 * static_cast<double>(i) + static_cast<double>(seed));
    const double dt = 0.02 / ev.back();
    const double rate = testing::fitted_diffusion_rate(lap, 24, x0, dt, static_cast<std::size_t>(30.0 / ev[1] / dt));
    const double l2 = algebraic_connectivity(supra_laplacian(net));
    EXPECT_NEAR(rate, l2, 0.05 * l2) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace mgnn
