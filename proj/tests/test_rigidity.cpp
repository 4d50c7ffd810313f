#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "volrig/homology.hpp"
#include "volrig/rigidity.hpp"

using namespace volrig;
using testutil::simplices;

namespace {

RationalConfiguration conf(int d, std::vector<std::vector<long>> pts) {
  RationalConfiguration p;
  p.d = d;
  for (auto& pt : pts) {
    std::vector<Rational> row;
    for (long x : pt) row.emplace_back(x);
    p.points.push_back(std::move(row));
  }
  return p;
}

/// Exact rank of the rigidity matrix at a fixed rational configuration;
/// the rational route is the cross-oracle for the prime-field route.
int rational_route_rank(const std::vector<Simplex>& facets, int n, int d, std::uint64_t salt) {
  const auto p = sample_rational_configuration(n, d, mix_seed(kDefaultSeed, salt));
  return rank(rigidity_matrix_eval(RationalField{}, facets, n, p));
}

}  // namespace

TEST_CASE("volume measurement anchors", "[rigidity]") {
  const RationalField F;
  const auto tri = conf(2, {{0, 0}, {1, 0}, {0, 1}});
  REQUIRE(signed_volume(F, Simplex({1, 2, 3}), tri) == Rational(1));

  const auto degenerate = conf(2, {{3, 7}, {3, 7}, {0, 1}});
  REQUIRE(signed_volume(F, Simplex({1, 2, 3}), degenerate) == Rational(0));

  const auto line = conf(1, {{0}, {5}});
  REQUIRE(signed_volume(F, Simplex({1, 2}), line) == Rational(5));
}

TEST_CASE("rigidity matrix of a single edge", "[rigidity]") {
  const auto c = SimplicialComplex::from_facets(2, simplices({{1, 2}}));
  const auto r = rigidity_matrix(c, conf(1, {{0}, {5}}));
  REQUIRE(r.m.rows() == 1);
  REQUIRE(r.m.cols() == 2);
  REQUIRE(r.m(0, 0) == Rational(-1));
  REQUIRE(r.m(0, 1) == Rational(1));
}

TEST_CASE("rigidity matrix row entries are the volume gradients", "[rigidity]") {
  // row for 123, block of vertex 1: d(vol)/dp(1) = (p(2)_2 - p(3)_2, p(3)_1 - p(2)_1)
  const auto c = testutil::worked_example();
  const auto p = conf(2, {{2, 9}, {4, 1}, {7, 5}, {3, 8}});
  const auto r = rigidity_matrix(c, p);
  REQUIRE(r.row_labels[0] == Simplex({1, 2, 3}));
  REQUIRE(r.m(0, 0) == p.points[1][1] - p.points[2][1]);
  REQUIRE(r.m(0, 1) == p.points[2][0] - p.points[1][0]);
  // support: the row of 123 vanishes on the block of vertex 4
  REQUIRE(r.m(0, 6) == Rational(0));
  REQUIRE(r.m(0, 7) == Rational(0));
}

TEST_CASE("gradient equals exact finite difference", "[rigidity][oracle]") {
  const RationalField F;
  std::mt19937_64 rng(mix_seed(kDefaultSeed, 30));
  for (int d = 1; d <= 3; ++d) {
    const int n = std::min(6, d + 3);
    const auto c = complete_complex(n, d);
    const auto p = sample_rational_configuration(n, d, rng());
    const auto r = rigidity_matrix(c, p);
    const Rational h(3, 2);  // volumes are affine per coordinate: any exact step works
    for (int v = 0; v < n; ++v) {
      for (int coord = 0; coord < d; ++coord) {
        RationalConfiguration hi = p, lo = p;
        hi.points[v][coord] += h;
        lo.points[v][coord] -= h;
        const auto vol_hi = volume_measurement(F, c.facets(), hi);
        const auto vol_lo = volume_measurement(F, c.facets(), lo);
        for (std::size_t row = 0; row < c.facets().size(); ++row) {
          const Rational fd = (vol_hi[row] - vol_lo[row]) / (2 * h);
          REQUIRE(r.m(static_cast<int>(row), v * d + coord) == fd);
        }
      }
    }
  }
}

TEST_CASE("row support confined to the simplex vertices", "[rigidity][property]") {
  std::mt19937_64 rng(mix_seed(kDefaultSeed, 31));
  const auto c = testutil::random_pure_complex(6, 2, rng);
  const auto p = sample_rational_configuration(6, 2, rng());
  const auto r = rigidity_matrix(c, p);
  for (std::size_t row = 0; row < r.row_labels.size(); ++row)
    for (int v = 1; v <= 6; ++v)
      if (!r.row_labels[row].contains(v))
        for (int coord = 0; coord < 2; ++coord)
          REQUIRE(r.m(static_cast<int>(row), (v - 1) * 2 + coord) == Rational(0));
}

TEST_CASE("generic rank of the worked example", "[rigidity]") {
  const auto c = testutil::worked_example();
  const auto gr = generic_rank(c.facets(), 4, 2);
  REQUIRE(gr.rank == 3);
  REQUIRE(gr.rank == rational_route_rank(c.facets(), 4, 2, 77));
  REQUIRE(gr.failure_bound < Rational(1, 1000000000));
}

TEST_CASE("generic rank extremes", "[rigidity]") {
  for (int d = 1; d <= 3; ++d)
    REQUIRE(generic_rank({all_simplices(d + 1, d)[0]}, d + 1, d).rank == 1);
  REQUIRE(generic_rank({}, 4, 2).rank == 0);
  REQUIRE(matroid_is_independent({}, 4, 2));
}

TEST_CASE("the eight-vertex bound-tight complex is flexible", "[rigidity]") {
  const auto c = testutil::flexible8();
  const auto gr = generic_rank(c.facets(), 8, 2);
  REQUIRE(gr.rank == 10);  // frozen: exact rational elimination at random configurations
  REQUIRE(gr.rank == rational_route_rank(c.facets(), 8, 2, 78));
  REQUIRE(gr.rank < 11);
  REQUIRE_FALSE(is_locally_rigid(c).rigid);
}

TEST_CASE("local rigidity verdicts", "[rigidity]") {
  const auto v = is_locally_rigid(testutil::worked_example());
  REQUIRE(v.rigid);
  REQUIRE(v.rank == 3);
  REQUIRE(v.required == 3);

  for (int n = 5; n <= 7; ++n) REQUIRE(is_locally_rigid(lgrc(n, 2)).rigid);

  const auto path = SimplicialComplex::from_facets(5, simplices({{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  REQUIRE(is_locally_rigid(path).rigid);
  const auto broken = SimplicialComplex::from_facets(5, simplices({{1, 2}, {2, 3}, {4, 5}}));
  REQUIRE_FALSE(is_locally_rigid(broken).rigid);
}

TEST_CASE("non-pure input is rejected unless downgraded", "[rigidity]") {
  const auto impure = SimplicialComplex::from_facets(5, simplices({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {4, 5}}));
  REQUIRE_THROWS_AS(is_locally_rigid(impure), std::invalid_argument);
  REQUIRE_NOTHROW(is_locally_rigid(impure, {}, true));
}

TEST_CASE("matroid predicates on the paper examples", "[rigidity]") {
  const auto basis_facets = testutil::worked_example().facets();
  REQUIRE(matroid_is_independent(basis_facets, 4, 2));
  REQUIRE(is_basis(basis_facets, 4, 2));

  const auto bip = testutil::triangular_bipyramid().facets();
  REQUIRE_FALSE(matroid_is_independent(bip, 5, 2));
  REQUIRE(matroid_rank(bip, 5, 2) == 5);
}

TEST_CASE("trivial flex dimension", "[rigidity]") {
  REQUIRE(trivial_flex_dim(4, 2) == 5);
  REQUIRE(trivial_flex_dim(6, 2) == 5);
  for (int d = 1; d <= 3; ++d) REQUIRE(trivial_flex_dim(d + 1, d) == trivial_flex_space_dim(d));

  // independent oracle at d=2, n=4: exhaustive-minor rank of the 4x8 evaluated matrix
  const auto p = sample_rational_configuration(4, 2, mix_seed(kDefaultSeed, 32));
  const auto m = rigidity_matrix_eval(RationalField{}, all_simplices(4, 2), 4, p);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 8);
  REQUIRE(testutil::naive_rank(m) == 3);
}

TEST_CASE("rank bounded by facet count and the required rank", "[rigidity][property]") {
  std::mt19937_64 rng(mix_seed(kDefaultSeed, 33));
  for (int it = 0; it < 20; ++it) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const auto c = testutil::random_pure_complex(n, 2, rng);
    const int r = matroid_rank(c.facets(), n, 2, {rng(), 2, kDefaultPrime});
    REQUIRE(r <= static_cast<int>(c.facets().size()));
    REQUIRE(r <= required_rank(n, 2));
  }
}

TEST_CASE("matroid rank is monotone and submodular", "[rigidity][property]") {
  std::mt19937_64 rng(mix_seed(kDefaultSeed, 34));
  const int n = 6, d = 2;
  const auto ground = all_simplices(n, d);
  for (int it = 0; it < 12; ++it) {
    std::vector<Simplex> a, b, uni, inter;
    for (const Simplex& s : ground) {
      const bool in_a = rng() % 2 == 0, in_b = rng() % 2 == 0;
      if (in_a) a.push_back(s);
      if (in_b) b.push_back(s);
      if (in_a || in_b) uni.push_back(s);
      if (in_a && in_b) inter.push_back(s);
    }
    const RandomizationOptions opt{mix_seed(kDefaultSeed, it), 2, kDefaultPrime};
    const int ra = matroid_rank(a, n, d, opt), rb = matroid_rank(b, n, d, opt);
    const int ru = matroid_rank(uni, n, d, opt), ri = matroid_rank(inter, n, d, opt);
    REQUIRE(ra <= ru);
    REQUIRE(rb <= ru);
    REQUIRE(ru + ri <= ra + rb);
    // cross-check the prime-field oracle against exact rational elimination
    REQUIRE(ra == rational_route_rank(a, n, d, 100 + it));
    REQUIRE(ru == rational_route_rank(uni, n, d, 200 + it));
  }
}

TEST_CASE("a positive top Betti number forces dependence", "[rigidity][property]") {
  std::mt19937_64 rng(mix_seed(kDefaultSeed, 35));
  int checked = 0;
  for (int it = 0; it < 400 && checked < 12; ++it) {
    const int n = 5 + static_cast<int>(rng() % 2);
    const auto c = testutil::random_pure_complex(n, 2, rng);
    if (betti(c).at(2) == 0) continue;
    ++checked;
    REQUIRE_FALSE(matroid_is_independent(c.facets(), n, 2, {rng(), 2, kDefaultPrime}));
  }
  REQUIRE(checked >= 5);
}

TEST_CASE("equivalence and congruence", "[rigidity]") {
  const auto c = testutil::worked_example();
  const auto p = sample_rational_configuration(4, 2, mix_seed(kDefaultSeed, 36));
  REQUIRE(are_equivalent(c, p, p));
  REQUIRE(are_congruent(4, 2, p, p));

  // image under a determinant-1 linear map plus translation stays congruent
  RationalConfiguration q = p;
  for (auto& pt : q.points) {
    const Rational x = pt[0], y = pt[1];
    pt[0] = 2 * x + 3 * y + Rational(1, 7);   // det [[2,3],[1,2]] = 1
    pt[1] = x + 2 * y - Rational(5, 3);
  }
  REQUIRE(are_congruent(4, 2, p, q));
  REQUIRE(are_equivalent(c, p, q));

  RationalConfiguration scaled = p;
  for (auto& pt : scaled.points) pt[0] *= 2;
  REQUIRE_FALSE(are_congruent(4, 2, p, scaled));
}

TEST_CASE("pinning a configuration", "[rigidity]") {
  const auto already = conf(2, {{0, 0}, {1, 0}, {0, 1}, {9, 4}});
  const auto pinned = pin_configuration(already);
  REQUIRE(pinned.config.points == already.points);
  REQUIRE(pinned.scale == Rational(1));

  const auto p = conf(2, {{1, 1}, {2, 1}, {1, 2}, {3, 3}});
  const auto out = pin_configuration(p);
  REQUIRE(out.config.points == conf(2, {{0, 0}, {1, 0}, {0, 1}, {2, 2}}).points);

  // measured volumes of the pinned configuration are the originals over the scale
  const RationalField F;
  const auto q = sample_rational_configuration(5, 2, mix_seed(kDefaultSeed, 37));
  const auto res = pin_configuration(q);
  const auto facets = all_simplices(5, 2);
  const auto before = volume_measurement(F, facets, q);
  const auto after = volume_measurement(F, facets, res.config);
  for (std::size_t i = 0; i < facets.size(); ++i) REQUIRE(after[i] * res.scale == before[i]);

  const auto degenerate = conf(2, {{0, 0}, {1, 1}, {2, 2}, {5, 9}});
  REQUIRE_THROWS_AS(pin_configuration(degenerate), std::invalid_argument);
}
