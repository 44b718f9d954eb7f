#include <gtest/gtest.h>

#include <random>
#include <string>

#include "clusterkit/catalog.hpp"
#include "clusterkit/lattice_path.hpp"
#include "clusterkit/recurrence.hpp"
#include "clusterkit/transforms.hpp"
#include "oracles.hpp"

using namespace clusterkit;

namespace {

RationalGF ratfun(std::vector<long long> p, std::vector<long long> q) {
  std::vector<Rational> a(p.begin(), p.end()), b(q.begin(), q.end());
  return RationalGF(Poly(a), Poly(b));
}

std::vector<Rational> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::vector<Rational> head(const Series& s, int n) {
  return {s.coefficients().begin(), s.coefficients().begin() + n};
}

// num/den where den may vanish to some order at 0.
Series quotient(const Series& num, const Series& den) {
  int k = 0;
  while (den[static_cast<std::size_t>(k)] == 0) ++k;
  return num.shifted_down(k) / den.shifted_down(k);
}

Series poly_series(std::vector<long long> c, int order) {
  return Series(std::vector<Rational>(c.begin(), c.end()), order);
}

RationalGF random_ratfun(std::mt19937& rng, bool unit_constant) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 4);
  std::vector<long long> p(static_cast<std::size_t>(deg(rng) + 1)), q(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : p) v = coef(rng);
  for (auto& v : q) v = coef(rng);
  q[0] = (rng() & 1) ? 1 : -1;
  if (unit_constant) p[0] = q[0];
  return ratfun(p, q);
}

// Paths with n nodes whose step word avoids every forbidden factor.
long long count_paths(int nodes, const std::vector<std::string>& forbidden) {
  long long count = 0;
  const int steps = nodes - 1;
  for (long long mask = 0; mask < (1LL << steps); ++mask) {
    std::string w;
    for (int i = 0; i < steps; ++i) w += (mask >> i) & 1 ? 'U' : 'D';
    bool ok = true;
    for (const auto& f : forbidden) ok = ok && w.find(f) == std::string::npos;
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Poly, Arithmetic) {
  const Poly a{1, -1}, b{1, 1};
  EXPECT_EQ(a * b, (Poly{1, 0, -1}));
  EXPECT_EQ(a + b, (Poly{2}));
  EXPECT_EQ((a - a).degree(), -1);
  const auto [q, r] = divmod(Poly{1, 0, -1}, a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(Poly{1, 0, -1}, Poly{-2, 2}), (Poly{-1, 1}));
  EXPECT_THROW(divmod(a, Poly{}), std::domain_error);
}

TEST(Poly, TextRoundTrip) {
  const Poly p{1, -6, 11, -9, 4, 4, -1};
  EXPECT_EQ(to_string(p), "1*x^0 -6*x^1 11*x^2 -9*x^3 4*x^4 4*x^5 -1*x^6");
  EXPECT_EQ(parse_poly(to_string(p)), p);
  EXPECT_EQ(parse_poly("1/2*x^0 -3/4*x^2"), (Poly{Rational(1, 2), 0, Rational(-3, 4)}));
  EXPECT_EQ(to_string(Poly{}), "0");
  EXPECT_EQ(parse_poly("0"), Poly{});
}

TEST(RationalGF, FieldArithmetic) {
  const RationalGF one_minus = ratfun({1}, {1, -1});
  EXPECT_EQ(one_minus - ratfun({0, 1}, {1, -1}), RationalGF::constant(1));
  EXPECT_EQ(diamond_avoiding_gf() * ratfun({1, -3, 1}, {1}), ratfun({1, -1}, {1}));
  EXPECT_THROW(one_minus / RationalGF(), std::domain_error);
  EXPECT_THROW(ratfun({1}, {0, 1}), std::domain_error);
}

TEST(RationalGF, NormalForm) {
  const RationalGF r = ratfun({-2, 4}, {-2, 0, 6});
  EXPECT_EQ(r.denominator()[0], 1);
  EXPECT_EQ(r, ratfun({1, -2}, {1, 0, -3}));
  const RationalGF half(Poly{Rational(1, 2)}, Poly{Rational(1, 3), Rational(-1, 3)});
  EXPECT_EQ(half, ratfun({3}, {2, -2}));
  EXPECT_EQ(parse_ratfun(to_string(catalog::fc_hexagon())), catalog::fc_hexagon());
  EXPECT_EQ(parse_ratfun("(1*x^0 -1*x^1)/(1*x^0 -3*x^1 1*x^2)"), diamond_avoiding_gf());
}

TEST(Series, SqrtMatchesBinomialExpansion) {
  const Series s = poly_series({1, -4}, 30).sqrt();
  EXPECT_EQ(head(s, 5), ints({1, -2, -2, -4, -10}));
  for (int k = 1; k <= 30; ++k) {
    const Rational expect = Rational(-2 * oracle::binomial(2 * k - 2, k - 1)) / k;
    ASSERT_EQ(s[static_cast<std::size_t>(k)], expect) << k;
  }
}

TEST(Series, SqrtSquaresBack) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c(33);
    c[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = Rational(coef(rng), den(rng));
    const Series s(c, 32);
    const Series r = s.sqrt();
    ASSERT_EQ(r * r, s);
  }
  EXPECT_THROW(poly_series({2, 1}, 5).sqrt(), series_error);
}

TEST(Series, ReciprocalAndShifts) {
  EXPECT_EQ(Series::constant(1, 8).reciprocal(), Series::constant(1, 8));
  EXPECT_THROW(Series::variable(4).reciprocal(), series_error);
  EXPECT_EQ(head(poly_series({1, -1}, 6).reciprocal(), 7), ints({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(poly_series({1, 2}, 5).shifted_down(1), series_error);
  EXPECT_EQ(poly_series({0, 0, 3}, 5).shifted_down(2)[0], 3);
  EXPECT_EQ(divide_by_monomial(poly_series({0, 0, 4, 6}, 6), 2, 2).order(), 4);
  EXPECT_EQ(parse_series(to_string(poly_series({1, 2, 5}, 4))), poly_series({1, 2, 5}, 4));
}

TEST(Series, Catalan) {
  const Series c = catalog::catalan(30);
  EXPECT_EQ(head(c, 8), ints({1, 2, 5, 14, 42, 132, 429, 1430}));
  for (int n = 0; n <= 30; ++n) ASSERT_EQ(c[static_cast<std::size_t>(n)], Rational(oracle::catalan(n + 1)));
}

TEST(SeriesOfRatfun, MatchesLongDivision) {
  EXPECT_EQ(head(diamond_avoiding_gf().series(6), 7), ints({1, 2, 5, 13, 34, 89, 233}));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> p(static_cast<std::size_t>(deg(rng) + 1)), q(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : p) v = coef(rng);
    for (auto& v : q) v = coef(rng);
    q[0] = (trial & 1) ? 1 : -1;
    const auto expect = oracle::long_division(p, q, 65);
    const Series s = ratfun(p, q).series(64);
    for (int n = 0; n <= 64; ++n) ASSERT_EQ(s[static_cast<std::size_t>(n)], Rational(expect[static_cast<std::size_t>(n)]));
  }
}

TEST(Transforms, PiecesOfCatalan) {
  const auto [L, M] = transform_pieces(catalog::catalan(12));
  EXPECT_EQ(head(L, 8), ints({0, 1, 3, 9, 28, 90, 297, 1001}));
  EXPECT_EQ(head(M, 8), ints({0, 0, 2, 6, 19, 62, 207, 704}));
  const auto trivial = transform_pieces(ratfun({1}, {1, -1}));
  EXPECT_TRUE(trivial.L.is_zero());
  EXPECT_THROW(transform_pieces(ratfun({2}, {1, -1})), transform_error);
}

// The printed closed forms in terms of sqrt(1 - 4x).
TEST(Transforms, AlgebraicRowsAgreeWithClosedForms) {
  const int t = 24;
  const Series S = poly_series({1, -4}, t).sqrt();
  const Series x = Series::variable(t);
  const Series one = Series::constant(1, t);
  const Series x1 = x - one;
  // Printed as 1 - 3x - (x-1)sqrt(1-4x), whose numerator does not vanish
  // at 0; the sign in front of the root has to be +.
  EXPECT_THROW(divide_by_monomial(poly_series({1, -3}, t) - x1 * S, 2, 2), series_error);
  const Series L = divide_by_monomial(poly_series({1, -3}, t) + x1 * S, 2, 2);
  const Series M = divide_by_monomial(poly_series({1, -4, 3, -2}, t) - x1 * x1 * S, 2, 2);
  const Series fb = quotient(poly_series({0, 2, -2}, t) - Rational(2) * x * S, poly_series({-1, 4, -1, 2}, t) + x1 * x1 * S);
  const Series mc = quotient(poly_series({0, 2}, t), poly_series({-1, 4, -2}, t) + S);
  const auto pieces = transform_pieces(catalog::catalan(t));
  const int n = 20;
  EXPECT_EQ(head(L, n), head(pieces.L, n));
  EXPECT_EQ(head(M, n), head(pieces.M, n));
  EXPECT_EQ(head(fb, n), head(transform_clustered(catalog::catalan(t), ClusterMode::freely_braided), n));
  EXPECT_EQ(head(mc, n), head(transform_clustered(catalog::catalan(t), ClusterMode::maximally_clustered), n));
  EXPECT_EQ(head(fb, 8), ints({1, 2, 6, 20, 71, 260, 971, 3674}));
  EXPECT_EQ(head(mc, 8), ints({1, 2, 6, 21, 78, 298, 1157, 4539}));
}

TEST(Transforms, HexagonRowsMatchPrintedRationalForms) {
  const RationalGF F = catalog::fc_hexagon();
  EXPECT_EQ(F, ratfun({-1, 4, -4, 3, 1, -1}, {-1, 6, -11, 9, -4, -4, 1}));
  const auto [L, M] = transform_pieces(F);
  EXPECT_EQ(L, ratfun({0, -1, 3, -2, 2, 2}, {-1, 6, -11, 9, -4, -4, 1}));
  EXPECT_EQ(M, ratfun({0, 0, -2, 6, -5, 4, 2, -1}, {-1, 6, -11, 9, -4, -4, 1}));
  EXPECT_EQ(transform_clustered(F, ClusterMode::freely_braided),
            ratfun({-1, 4, -3, 1, 2, -2, -1}, {-1, 6, -9, 3, 1, -8, -1, 1}));
  EXPECT_EQ(transform_clustered(F, ClusterMode::maximally_clustered),
            ratfun({1, -5, 7, -5, 1, 3}, {1, -7, 15, -14, 8, 4, -3}));
  EXPECT_EQ(head(F.series(7), 8), ints({1, 2, 5, 14, 42, 132, 429, 1426}));
  EXPECT_EQ(head(L.series(7), 8), ints({0, 1, 3, 9, 28, 90, 297, 997}));
  EXPECT_EQ(head(M.series(7), 8), ints({0, 0, 2, 6, 19, 62, 207, 700}));
}

TEST(Transforms, ClusteredTermsSumToTransform) {
  const Series F = catalog::catalan(15);
  for (auto mode : {ClusterMode::freely_braided, ClusterMode::maximally_clustered}) {
    Series total = clustered_term(F, mode, 0);
    for (int k = 1; k <= 15; ++k) total = total + clustered_term(F, mode, k);
    EXPECT_EQ(total, transform_clustered(F, mode));
  }
}

TEST(Transforms, ConnectedRoundTrip) {
  EXPECT_TRUE(transform_connected(ratfun({1}, {1, -1}), Connectivity::to_connected).is_zero());
  EXPECT_EQ(transform_connected(ratfun({0, 1}, {1, -2}), Connectivity::to_full), diamond_avoiding_gf());
  const Series c = catalog::catalan(20);
  EXPECT_EQ(transform_connected(transform_connected(c, Connectivity::to_connected), Connectivity::to_full), c);
  std::mt19937 rng(99);
  for (int i = 0; i < 20; ++i) {
    const RationalGF F = random_ratfun(rng, true);
    EXPECT_EQ(transform_connected(transform_connected(F, Connectivity::to_connected), Connectivity::to_full), F);
  }
  EXPECT_THROW(transform_connected(ratfun({1}, {1, -1}), Connectivity::to_full), transform_error);
}

TEST(Transforms, DiamondClosedForms) {
  const auto a = transform_diamond_closed(ratfun({0, 1}, {1, -2, 1}));
  EXPECT_EQ(a.from_connected, ratfun({1, -3, 2, -1}, {1, -5, 7, -4, 1}));
  EXPECT_EQ(a.from_full, a.from_connected);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    RationalGF Gc = random_ratfun(rng, false);
    Gc = Gc - RationalGF::constant(Gc.constant_term());
    EXPECT_NO_THROW(transform_diamond_closed(Gc));
  }
  const RationalGF G = ratfun({1}, {1, -1});
  EXPECT_EQ(transform_diamond_from_full(G), transform_diamond_closed(transform_connected(G, Connectivity::to_connected)).from_full);
}

TEST(Transforms, DiamondComponentsRecoverHexagon) {
  const RationalGF monotone = ratfun({0, 2}, {1, -1}) - RationalGF::variable();
  const auto comp = transform_diamond_components(diamond_avoiding_gf(), monotone, true);
  EXPECT_EQ(transform_diamond_from_full(comp.F), catalog::fc_hexagon());
  EXPECT_EQ(comp.E_LR, diamond_avoiding_gf() - RationalGF::variable() * diamond_avoiding_gf() - RationalGF::constant(1));
  // Without the adjustment the formula gives the unrestricted gluing.
  const auto plain = transform_diamond_components(diamond_avoiding_gf(), monotone, false);
  EXPECT_NE(plain.F, comp.F);
}

TEST(Recurrence, HexagonClasses) {
  auto coeffs = [](const RationalGF& r) {
    std::vector<Rational> c = recurrence_from_ratfun(r).coefficients;
    return c;
  };
  const RationalGF F = catalog::fc_hexagon();
  EXPECT_EQ(coeffs(F), ints({6, -11, 9, -4, -4, 1}));
  EXPECT_EQ(coeffs(transform_clustered(F, ClusterMode::freely_braided)), ints({6, -9, 3, 1, -8, -1, 1}));
  EXPECT_EQ(coeffs(transform_clustered(F, ClusterMode::maximally_clustered)), ints({7, -15, 14, -8, -4, 3}));
  EXPECT_EQ(to_string(recurrence_from_ratfun(F), "c"),
            "c(n+1) = 6 c(n) - 11 c(n-1) + 9 c(n-2) - 4 c(n-3) - 4 c(n-4) + c(n-5)   for n >= 6");
}

TEST(Recurrence, ReproducesSeries) {
  std::mt19937 rng(3);
  std::vector<RationalGF> gfs{catalog::fc_hexagon(), diamond_avoiding_gf(), ratfun({1}, {1, -1})};
  for (int i = 0; i < 20; ++i) gfs.push_back(random_ratfun(rng, false));
  for (const auto& r : gfs) {
    const Recurrence rec = recurrence_from_ratfun(r);
    const Series s = r.series(40);
    const auto terms = rec.terms(40);
    for (int n = 0; n <= 40; ++n) ASSERT_EQ(terms[static_cast<std::size_t>(n)], s[static_cast<std::size_t>(n)]);
  }
  const Recurrence ones = recurrence_from_ratfun(ratfun({1}, {1, -1}));
  EXPECT_EQ(ones.coefficients, ints({1}));
  EXPECT_EQ(ones.valid_from, 1);
  EXPECT_EQ(ones.valid_from_size_index(), 2);
}

TEST(LatticePaths, ForbiddenFactors) {
  EXPECT_EQ(lattice_path_gf_avoiding("UD"), ratfun({0, 1}, {1, -2, 1}));
  EXPECT_EQ(lattice_path_gf_avoiding(std::vector<std::string>{"UD", "DU"}), ratfun({0, 2}, {1, -1}) - RationalGF::variable());
  EXPECT_EQ(lattice_path_gf_avoiding(std::vector<std::string>{}), ratfun({0, 1}, {1, -2}));
  EXPECT_THROW(lattice_path_gf_avoiding("UXD"), std::invalid_argument);
  const std::vector<std::vector<std::string>> sets{{"UD"}, {"UUUU"}, {"UDU"}, {"UU", "DD"}, {"UDD", "DUU"}, {"UUD", "DUDU"}};
  for (const auto& f : sets) {
    const Series s = lattice_path_gf_avoiding(f).series(14);
    ASSERT_EQ(s[0], 0);
    for (int n = 1; n <= 14; ++n) ASSERT_EQ(s[static_cast<std::size_t>(n)], count_paths(n, f)) << f.front() << " n=" << n;
  }
}

TEST(Catalog, LookupAndNames) {
  for (const auto& name : catalog::class_names()) {
    const auto g = catalog::lookup(name, 10);
    EXPECT_EQ(g.series.order(), 10);
    EXPECT_EQ(g.series[0], name.find("-L") != std::string::npos || name.find("-M") != std::string::npos ? 0 : 1);
  }
  EXPECT_THROW(catalog::lookup("nope"), std::invalid_argument);
  EXPECT_EQ(catalog::lookup("fc", 0).series[0], 1);
}
