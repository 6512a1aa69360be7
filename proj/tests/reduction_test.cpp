#include <gtest/gtest.h>

#include "adapterchain/chaining.hpp"
#include "adapterchain/reduction.hpp"
#include "test_support.hpp"

namespace adapterchain {
namespace {

using testing::Generator;

bool zero_one(const MethodAvailability& v) {
  for (double x : v.entries()) {
    if (x != 0.0 && x != 1.0) return false;
  }
  return true;
}

bool maps_exactly(const DiscreteAvailability& d, const MethodAvailability& p) {
  if (d.size() != p.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (p[i] != (d[i] ? 1.0 : 0.0)) return false;
  }
  return true;
}

TEST(ReduceGraph, VideoChainsBecomeIndistinguishable) {
  const auto reduced = reduce_graph(testing::video_discrete_graph());
  const auto w = InvocationWeights::uniform(reduced.interface("Video3"));
  EXPECT_EQ(evaluate_chain(reduced, {{"A1", "A2"}}, "Video3", w).availability, 1.0);
  EXPECT_EQ(evaluate_chain(reduced, {{"A3", "A4"}}, "Video3", w).availability, 1.0);
}

TEST(ReduceGraph, KeepsDependenciesAndSetsUnitConversions) {
  const auto discrete = testing::video_discrete_graph();
  const auto reduced = reduce_graph(discrete);
  for (const auto& a : discrete.adapters()) {
    const auto& f = reduced.adapter(a.name).factor;
    EXPECT_EQ(f.dep, a.dep);
    EXPECT_TRUE(validate_factor(f).empty());
    for (std::size_t j = 1; j < f.dep.rows(); ++j) {
      for (std::size_t i = 1; i < f.dep.cols(); ++i) {
        EXPECT_EQ(f.conv(j, i), f.dep(j, i) ? 1.0 : 0.0);
      }
    }
  }
}

TEST(ReduceGraph, EmptyGraphStaysEmpty) {
  const auto reduced = reduce_graph(DiscreteAdapterGraph::build({}, {}));
  EXPECT_TRUE(reduced.interfaces().empty());
  EXPECT_TRUE(reduced.adapters().empty());
}

TEST(ReduceGraph, DiscreteGraphValidationMatchesProbabilistic) {
  DependencyMatrix bad(2, 2);  // dummy row missing
  EXPECT_THROW(DiscreteAdapterGraph::build({{"X", {"a"}}, {"Y", {"b"}}},
                                           {{"A", "X", "Y", bad}}),
               GraphError);
  EXPECT_THROW(DiscreteAdapterGraph::build({{"X", {"a"}}}, {{"A", "X", "Q", bad}}), GraphError);
}

TEST(ReduceFactor, AgreesWithDiscreteAdaptOnEveryInput) {
  Generator gen(401);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = gen.size(1, 6), cols = gen.size(1, 6);
    const auto dep = gen.dependency(rows, cols);
    const auto factor = reduce_dependency(dep);
    // Every availability vector over the non-dummy methods.
    for (std::uint32_t mask = 0; mask < (1u << (cols - 1)); ++mask) {
      std::vector<bool> bits(cols, false);
      for (std::size_t i = 1; i < cols; ++i) bits[i] = (mask >> (i - 1)) & 1u;
      const DiscreteAvailability p(bits);
      const auto discrete = adapt(dep, p);
      const auto prob = adapt(factor, reduce_availability(p));
      ASSERT_TRUE(maps_exactly(discrete, prob)) << "trial " << trial << " mask " << mask;
    }
  }
}

TEST(ReduceGraph, ChainFoldsAgreeOnRandomGraphs) {
  Generator gen(402);
  int chains = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto discrete = gen.discrete_graph();
    const auto reduced = reduce_graph(discrete);
    for (const auto& s : reduced.interfaces()) {
      for (const auto& t : reduced.interfaces()) {
        for (const auto& chain : enumerate_acyclic_chains(reduced, s.name, t.name)) {
          if (chain.empty()) continue;
          const auto d = discrete_chain_availability(discrete, chain);
          const auto p = adapt(chain_factor(reduced, chain), full_availability(s.size()));
          ASSERT_TRUE(maps_exactly(d, p));
          ASSERT_TRUE(zero_one(p));
          ++chains;
        }
      }
    }
  }
  EXPECT_GT(chains, 200);
}

TEST(ChainDecisionDiscrete, VideoExample) {
  const auto g = testing::video_discrete_graph();
  EXPECT_TRUE(chain_decision_discrete(g, "Video1", "Video3", 1));
  EXPECT_TRUE(chain_decision_discrete(g, "Video1", "Video3", 0));
  EXPECT_FALSE(chain_decision_discrete(g, "Video3", "Video1", 0));
  EXPECT_THROW(chain_decision_discrete(g, "Video1", "Video3", 2), std::invalid_argument);
  EXPECT_THROW(chain_decision_discrete(g, "Video1", "Nope", 0), GraphError);
}

TEST(ChainDecisionDiscrete, AgreesWithBooleanBruteForce) {
  Generator gen(403);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = gen.discrete_graph();
    const auto reduced = reduce_graph(g);
    const auto& ifaces = g.interfaces();
    const auto& s = ifaces[gen.size(0, ifaces.size() - 1)];
    const auto& t = ifaces[gen.size(0, ifaces.size() - 1)];

    // Most methods any chain makes available, by boolean folds only.
    std::optional<std::size_t> best;
    for (const auto& chain : testing::all_paths_oracle(reduced, s.name, t.name)) {
      std::size_t count = t.methods.size();
      if (!chain.empty()) {
        const auto v = discrete_chain_availability(g, chain);
        count = 0;
        for (std::size_t m = 1; m < v.size(); ++m) count += v[m] ? 1 : 0;
      }
      best = std::max(best.value_or(0), count);
    }
    for (std::size_t n = 0; n <= t.methods.size(); ++n) {
      const bool expected = best && *best >= n;
      ASSERT_EQ(chain_decision_discrete(g, s.name, t.name, n), expected)
          << "trial " << trial << " N=" << n;
    }
  }
}

}  // namespace
}  // namespace adapterchain
