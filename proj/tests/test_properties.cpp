#include "support.hpp"

#include <gtest/gtest.h>

using namespace hyparr::testing;

namespace {

constexpr std::size_t cases = 200;

void expect_ok(const PropertyOutcome& o)
{
    EXPECT_EQ(o.cases, cases);
    EXPECT_TRUE(o.ok()) << o.failures << " failures; first: " << o.first_failure;
}

}  // namespace

TEST(Properties, PoincareIsOrderingIndependent) { expect_ok(property_ordering_independence(101, cases)); }
TEST(Properties, ChainComplexesAreMinimal) { expect_ok(property_chain_complexes(102, cases)); }
TEST(Properties, MinorsMatchCokernelDimension) { expect_ok(property_minor_coker(103, cases)); }
TEST(Properties, VarietiesAreMonomialInvariant) { expect_ok(property_monomial_invariance(104, cases)); }
TEST(Properties, GraphicArrangementsMatchChromatic) { expect_ok(property_graph_arrangement(105, cases)); }
TEST(Properties, ChordalIffSupersolvable) { expect_ok(property_supersolvable_graphs(106, cases)); }
TEST(Properties, PbarDominatesP) { expect_ok(property_pbar_dominates(107, cases)); }
TEST(Properties, SeriesLengthIsInvariant) { expect_ok(property_series_length(108, cases)); }
