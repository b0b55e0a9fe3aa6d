#include "support.hpp"

#include <gtest/gtest.h>

using namespace hyparr;
using namespace hyparr::testing;

TEST(Rational, ParsesIntegersAndFractions)
{
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(parse_rational(" +5 "), Rational(5));
}

TEST(Rational, RejectsMalformedLiterals)
{
    for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "2/", "--1"}) EXPECT_THROW(parse_rational(bad), input_error) << bad;
}

TEST(Rational, PowerHandlesNegativeExponents)
{
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(-1), 5), Rational(-1));
}

TEST(Gaussian, ArithmeticIsExact)
{
    GaussianRational i(Rational(0), Rational(1));
    EXPECT_EQ(i * i, GaussianRational(-1));
    EXPECT_EQ(pow(i, 4), GaussianRational(1));
    EXPECT_EQ(pow(i, -1), GaussianRational(Rational(0), Rational(-1)));
    GaussianRational z(Rational(1, 2), Rational(3));
    EXPECT_EQ(z * field_inverse(z), GaussianRational(1));
}

TEST(Gaussian, Parses)
{
    EXPECT_EQ(parse_gaussian("1/2+3i"), GaussianRational(Rational(1, 2), Rational(3)));
    EXPECT_EQ(parse_gaussian("-i"), GaussianRational(Rational(0), Rational(-1)));
    EXPECT_EQ(parse_gaussian("2-1/3i"), GaussianRational(Rational(2), Rational(-1, 3)));
    EXPECT_EQ(parse_gaussian("7"), GaussianRational(7));
    EXPECT_THROW(parse_gaussian("x"), input_error);
}

TEST(Linalg, RankAndKernel)
{
    DenseMatrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(matrix_rank(m), 2u);
    auto ker = left_kernel(m, 3);
    ASSERT_EQ(ker.size(), 1u);
    for (std::size_t j = 0; j < 3; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += ker[0][i] * m[i][j];
        EXPECT_EQ(s, 0);
    }
}

TEST(Linalg, IntegerDeterminant)
{
    EXPECT_EQ(integer_determinant({{2, 1}, {1, 1}}), BigInt(1));
    EXPECT_EQ(integer_determinant({{0, 1}, {1, 0}}), BigInt(-1));
    EXPECT_EQ(integer_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), BigInt(-3));
    EXPECT_EQ(integer_determinant({{1, 2}, {2, 4}}), BigInt(0));
}

TEST(Linalg, SparseRankMatchesDense)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> v(-2, 2);
    for (int rep = 0; rep < 50; ++rep) {
        DenseMatrix<Rational> dense(6, std::vector<Rational>(5));
        SparseRankAccumulator acc;
        for (auto& row : dense) {
            SparseRankAccumulator::Row sparse;
            for (std::size_t j = 0; j < 5; ++j) {
                row[j] = v(rng) * (v(rng) > 0);
                if (row[j] != 0) sparse.emplace_back(j, row[j]);
            }
            acc.insert(sparse);
        }
        EXPECT_EQ(acc.rank(), matrix_rank(dense));
    }
}

TEST(Arrangement, ReadsAndRejects)
{
    auto a = parse_arrangement("dim 2 affine\n1 0 0 # z1\n0 1 -1\n");
    EXPECT_EQ(a.size(), 2u);
    EXPECT_FALSE(a.central());
    EXPECT_THROW(parse_arrangement(""), input_error);
    EXPECT_THROW(parse_arrangement("dim 2 central\n1 0\n2 0\n"), input_error);
    EXPECT_THROW(parse_arrangement("dim 2 central\n0 0\n"), input_error);
    EXPECT_THROW(parse_arrangement("dim 2 central\n1 0 1\n"), input_error);
    EXPECT_THROW(parse_arrangement("dim 2 sideways\n1 0\n"), input_error);
    EXPECT_THROW(parse_arrangement("dim 2 central\n1 x\n"), input_error);
    EXPECT_THROW(Arrangement(2, {LinearForm{{1, 0}, 1}}, true), input_error);
}

TEST(Arrangement, FormatRoundTrips)
{
    auto a = load_fixture("fan.arr");
    EXPECT_EQ(parse_arrangement(format_arrangement(a)), a);
}

TEST(Arrangement, ConeAndDecone)
{
    auto affine = parse_arrangement("dim 2 affine\n1 0 0\n0 1 0\n1 0 -1\n0 1 -1\n-1 1 0\n");
    auto c = cone(affine);
    EXPECT_EQ(c.size(), 6u);
    EXPECT_EQ(rank(c), 3u);
    auto d = decone(c, c.size() - 1);
    EXPECT_EQ(d, affine);
    EXPECT_THROW(cone(c), input_error);
    EXPECT_THROW(decone(affine, 0), input_error);
}

TEST(Arrangement, RankOfBraidArrangement)
{
    auto g = parse_graph("vertices 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    auto b4 = graphic_arrangement(g);
    EXPECT_EQ(rank(b4), 3u);
    EXPECT_EQ(rank_deficit(b4), 1u);
}

TEST(Arrangement, CircuitsOfBraidArrangement)
{
    auto b4 = graphic_arrangement(parse_graph("vertices 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"));
    auto c = circuits(b4, 4).circuits;
    // four triangles and three 4-cycles of K4
    std::size_t three = 0, four = 0;
    for (const auto& s : c) (s.size() == 3 ? three : four)++;
    EXPECT_EQ(three, 4u);
    EXPECT_EQ(four, 3u);
    EXPECT_EQ(c.front(), (IndexSet{0, 1, 3}));
}

TEST(Arrangement, RankTwoFlats)
{
    auto a = load_fixture("square.arr");
    auto coll = rank2_flats(a);
    for (const auto& line : coll.lines) {
        EXPECT_GE(line.size(), 3u);
        EXPECT_EQ(subset_rank(a, line), 2u);
    }
}

TEST(Arrangement, CircuitCapIsEnforced)
{
    std::vector<LinearForm> forms;
    for (int i = 0; i < 21; ++i) forms.push_back({{1, Rational(i)}, 0});
    Arrangement big(2, forms, true);
    EXPECT_THROW(circuits(big, 3), budget_exceeded);
}

TEST(Polynomial, ArithmeticAndOrder)
{
    IntPolynomial p{1, 2};
    IntPolynomial q{1, 3};
    EXPECT_EQ(p * q, (IntPolynomial{1, 5, 6}));
    EXPECT_EQ(IntPolynomial::exponent_product({1, 2, 3}), (IntPolynomial{1, 6, 11, 6}));
    EXPECT_TRUE(dominates(IntPolynomial{1, 6, 12}, IntPolynomial{1, 6, 11}));
    EXPECT_FALSE(dominates(IntPolynomial{1, 6}, IntPolynomial{1, 6, 1}));
    EXPECT_EQ((IntPolynomial{1, 5, 6}).truncated(1), (IntPolynomial{1, 5}));
    EXPECT_EQ((IntPolynomial{1, -1}) - (IntPolynomial{1, -1}), IntPolynomial{});
}

TEST(Laurent, ArithmeticAndEvaluation)
{
    auto x = LaurentPoly::variable(2, 0);
    auto y = LaurentPoly::variable(2, 1);
    auto xi = LaurentPoly::variable(2, 0, -1);
    auto one = LaurentPoly::constant(2, 1);
    EXPECT_EQ(x * xi, one);
    EXPECT_EQ((x - one).inverted(), xi - one);
    EXPECT_EQ((x * y - one).augmentation(), BigInt(0));
    std::vector<GaussianRational> t{2, 3};
    EXPECT_EQ((x * y + xi).evaluate(t), GaussianRational(Rational(13, 2)));
    EXPECT_EQ((xi - one).normalized_unit(), (x - one).normalized_unit());
    EXPECT_EQ((x - one).embedded(3, 1), LaurentPoly::variable(3, 1) - LaurentPoly::constant(3, 1));
    EXPECT_THROW(x + LaurentPoly::variable(3, 0), std::invalid_argument);
}

TEST(Laurent, SubstitutionComposesMonomials)
{
    auto x = LaurentPoly::variable(2, 0);
    // x -> x*y^2, y -> y
    std::vector<std::vector<int>> phi{{1, 2}, {0, 1}};
    Exponents e{1, 2};
    EXPECT_EQ(x.substitute(phi), LaurentPoly::monomial(e));
}
