#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "mgnn/io/mlg.hpp"
#include "support/fixtures.hpp"

namespace mgnn {
namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_mlg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Mlg, MinimalDocument) {
  const auto doc = parse_mlg("nodes 2\nlayers 1\nlayerinfo 0 l0 undirected\ne 0 0 0 1\n");
  EXPECT_EQ(doc.network.n_nodes(), 2u);
  EXPECT_EQ(doc.network.n_layers(), 1u);
  ASSERT_EQ(doc.network.layer(0).n_edges(), 1u);
  EXPECT_EQ(doc.network.layer(0).edges()[0].weight, 1.0);
  EXPECT_EQ(doc.layer_names, std::vector<std::string>{"l0"});
}

TEST(Mlg, InterRecordIsCliqueStyleEdge) {
  const auto doc = parse_mlg(
      "nodes 4\nlayers 2\nlayerinfo 0 a undirected\nlayerinfo 1 b directed\n"
      "e 0 3 1 3\n");
  ASSERT_EQ(doc.network.inter_edges().size(), 1u);
  const InterEdge& e = doc.network.inter_edges()[0];
  EXPECT_EQ(e.src, (ReplicaId{3, 0}));
  EXPECT_EQ(e.dst, (ReplicaId{3, 1}));
  EXPECT_EQ(doc.network.n_intra_edges(), 0u);
  EXPECT_TRUE(doc.network.layer(1).directed());
}

TEST(Mlg, OutOfRangeNodeCitesItsLine) {
  const std::string text = "# header\nnodes 3\nlayers 1\nlayerinfo 0 x undirected\n\ne 0 5 0 1\n";
  EXPECT_EQ(error_line(text), 6u);
  try {
    parse_mlg(text);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos);
  }
}

TEST(Mlg, RejectsMalformedRecords) {
  const std::string head = "nodes 3\nlayers 2\nlayerinfo 0 x undirected\nlayerinfo 1 y directed\n";
  EXPECT_EQ(error_line(head + "e 0 0 0 0\n"), 5u) << "self-loop";
  EXPECT_EQ(error_line(head + "e 0 0 0 1\ne 0 1 0 0\n"), 6u) << "undirected duplicate";
  EXPECT_EQ(error_line(head + "e 1 0 1 1\ne 1 1 1 0\ne 1 0 1 1\n"), 7u) << "directed duplicate";
  EXPECT_EQ(error_line(head + "e 0 0 1 0\ne 1 0 0 0\n"), 6u) << "inter edges are undirected";
  EXPECT_EQ(error_line(head + "e 0 0 2 0\n"), 5u) << "layer out of range";
  EXPECT_EQ(error_line(head + "e 0 0 0 1 abc\n"), 5u) << "bad weight";
  EXPECT_EQ(error_line(head + "e 0 0 0\n"), 5u) << "arity";
  EXPECT_EQ(error_line(head + "edge 0 0 0 1\n"), 5u) << "unknown record";
  EXPECT_EQ(error_line(head + "label 0 a\nlabel 0 b\n"), 6u) << "duplicate label";
  EXPECT_EQ(error_line("nodes 3\nlayers 1\ne 0 0 0 1\nlayerinfo 0 x undirected\n"), 3u) << "layerinfo first";
  EXPECT_EQ(error_line("nodes 3\nlayers 1\nlayerinfo 0 x sideways\n"), 3u);
  EXPECT_THROW(parse_mlg("nodes 3\n"), ParseError);
}

TEST(Mlg, FeaturesMustCoverEveryReplica) {
  const std::string head = "nodes 2\nlayers 1\nlayerinfo 0 x undirected\n";
  EXPECT_THROW(parse_mlg(head + "feat 0 0 1.5 2\n"), ParseError);
  const auto doc = parse_mlg(head + "feat 0 1 3 4\nfeat 0 0 1.5 2\n");
  ASSERT_TRUE(doc.network.features().has_value());
  EXPECT_EQ(doc.network.features()->row(0)[0], 1.5);
  EXPECT_EQ(doc.network.features()->row(1)[1], 4.0);
  EXPECT_THROW(parse_mlg(head + "feat 0 0 1\nfeat 0 1 1 2\n"), ParseError);
}

TEST(Mlg, CommentsAndWeights) {
  const auto doc = parse_mlg(
      "nodes 3   # three\nlayers 1\n\nlayerinfo 0 w undirected\ne 0 0 0 1 0.25 # light\ne 0 1 0 2 2\n");
  ASSERT_EQ(doc.network.layer(0).n_edges(), 2u);
  EXPECT_EQ(doc.network.layer(0).edges()[0].weight, 0.25);
  EXPECT_EQ(doc.network.layer(0).edges()[1].weight, 2.0);
}

TEST(Mlg, RoundTripIsByteIdentical) {
  const std::string text =
      "nodes 4\nlayers 2\nlayerinfo 0 ff directed\nlayerinfo 1 yt undirected\n"
      "e 0 2 0 1\ne 0 1 0 2 0.1\ne 1 3 1 0\ne 0 0 1 0\ne 0 1 1 1 0.5\n"
      "label 2 beta\nlabel 0 alpha\nlabel 1 alpha\nlabel 3 beta\n";
  const auto doc = parse_mlg(text);
  const std::string canonical = write_mlg(doc);
  const auto again = parse_mlg(canonical);
  EXPECT_EQ(write_mlg(again), canonical);
  EXPECT_EQ(again.labels, doc.labels);
  EXPECT_EQ(again.layer_names, doc.layer_names);
  ASSERT_EQ(again.network.n_intra_edges(), doc.network.n_intra_edges());
  for (LayerId a = 0; a < 2; ++a) {
    const auto x = doc.network.layer(a).edges();
    const auto y = again.network.layer(a).edges();
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      EXPECT_EQ(x[k].src, y[k].src);
      EXPECT_EQ(x[k].dst, y[k].dst);
      EXPECT_EQ(x[k].weight, y[k].weight);
    }
  }

  const auto classes = class_labels(doc);
  EXPECT_EQ(classes.names, (std::vector<std::string>{"alpha", "beta"}));
  EXPECT_EQ(classes.ids, (std::vector<std::uint32_t>{0, 0, 1, 1}));
}

TEST(Mlg, RandomNetworksSurviveFileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "mgnn_io_test";
  std::filesystem::create_directories(dir);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto net = testing::random_multiplex(9, 3, 0.3, seed, 0.75);
    const auto path = (dir / ("net" + std::to_string(seed) + ".mlg")).string();
    write_mlg_file(path, make_document(net));
    const auto back = read_mlg_file(path);
    EXPECT_EQ(write_mlg(back), write_mlg(make_document(net)));
    EXPECT_EQ(back.network.inter_edges().size(), net.inter_edges().size());
    EXPECT_EQ(back.network.inter_edges()[0].weight, 0.75);
  }
  std::filesystem::remove_all(dir);
}

TEST(Mlg, UnlabeledNodeIsAnError) {
  const auto doc = parse_mlg("nodes 2\nlayers 1\nlayerinfo 0 x undirected\nlabel 0 a\n");
  EXPECT_THROW(class_labels(doc), std::invalid_argument);
}

}  // namespace
}  // namespace mgnn
