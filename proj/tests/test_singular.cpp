#include <doctest.h>

#include <random>

#include "confpoly/singular.hpp"
#include "confpoly/verify.hpp"
#include "helpers.hpp"

using namespace confpoly;
using confpoly::testing::mat;
using confpoly::testing::poly_from_terms;

TEST_CASE("evaluated form at the degenerate banana point") {
  Configuration w = banana4_configuration();
  EvaluatedForm ef = form_at(w, {1, 0, 0, 0});
  CHECK(ef.matrix == mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(ef.rank == 1);
  CHECK(ef.corank == 2);
  CHECK(ef.radical.rows == 2);
  // radical vectors kill the matrix
  RatMatrix prod = matmul(ef.radical, ef.matrix);
  for (const auto& x : prod.data) CHECK(x.is_zero());
  // ambient radical lies inside the configuration and in every coordinate
  // hyperplane A1 = 0
  RatMatrix amb = ambient_radical(w, ef);
  CHECK(amb.rows == 2);
  for (int r = 0; r < amb.rows; ++r) CHECK(amb.at(r, 0).is_zero());
  CHECK(row_span_contains(w.basis(), amb));

  EvaluatedForm smooth = form_at(w, {1, 1, 1, 1});
  CHECK(smooth.corank == 0);
  CHECK_THROWS_AS(form_at(w, {1, 0, 0}), ArgumentError);
}

TEST_CASE("multiplicity is the least order of a nonvanishing derivative") {
  Polynomial psi = psi_det(banana4_configuration());
  CHECK(multiplicity_of(psi, {1, 1, 1, 1}) == 0);
  CHECK(multiplicity_of(psi, {1, 1, 0, 0}) == 1);
  CHECK(multiplicity_of(psi, {1, 0, 0, 0}) == 2);
  CHECK(multiplicity_at(banana4_configuration(), {1, 0, 0, 0}) == 2);

  // product of all coordinates: multiplicity counts the zeros of the point
  Configuration triv = trivial_configuration(5);
  CHECK(multiplicity_at(triv, {1, 2, 3, 4, 5}) == 0);
  CHECK(multiplicity_at(triv, {0, 3, 0, 1, 2}) == 2);
  CHECK(multiplicity_at(triv, {0, 0, 0, 0, 0}) == 5);
  CHECK(multiplicity_at(triv, {Rational(1, 2), 0, -3, 0, 0}) == 3);

  CHECK(multiplicity_at(sample_config_2x3(), {1, 0, 0}) == 1);
}

TEST_CASE("multiplicity equals corank at hand-picked points") {
  std::vector<std::string> failures;
  check_theorem_at(banana4_configuration(), {1, 0, 0, 0}, "banana4", &failures);
  check_theorem_at(banana4_configuration(), {1, 1, 0, 0}, "banana4-edge", &failures);
  check_theorem_at(banana4_configuration(), {2, 3, 5, 7}, "banana4-smooth", &failures);
  check_theorem_at(sample_config_2x3(), {1, 0, 0}, "2x3", &failures);
  check_theorem_at(trivial_configuration(4), {0, 1, 0, 2}, "trivial", &failures);
  CHECK(failures == std::vector<std::string>{});
}

TEST_CASE("sampled corank points hit the requested corank exactly") {
  Configuration w = banana4_configuration();
  for (int k = 1; k <= 2; ++k) {
    auto pts = sample_corank_points(w, k, 12, 99);
    CHECK(pts.size() == 12);
    for (const Point& a : pts) {
      CAPTURE(k);
      CHECK(form_at(w, a).corank == k);
      CHECK(multiplicity_at(w, a) == k);
      bool nonzero = false;
      for (const auto& x : a) nonzero = nonzero || !x.is_zero();
      CHECK(nonzero);
    }
  }
  // same seed, same points; the samplers are deterministic
  CHECK(sample_corank_points(w, 1, 3, 5) == sample_corank_points(w, 1, 3, 5));
  CHECK_THROWS_AS(sample_corank_points(w, 0, 1, 1), ArgumentError);
  CHECK_THROWS_AS(sample_corank_points(w, 3, 1, 1), ArgumentError);
}

TEST_CASE("sampled hypersurface points satisfy psi = 0") {
  Configuration w = sample_config_2x3();
  Polynomial psi = psi_det(w);
  auto pts = sample_hypersurface_points(w, 25, 17);
  CHECK(pts.size() == 25);
  for (const Point& a : pts) {
    CHECK(psi.eval(a).is_zero());
    bool nonzero = false;
    for (const auto& x : a) nonzero = nonzero || !x.is_zero();
    CHECK(nonzero);
  }
  CHECK(pts == sample_hypersurface_points(w, 25, 17));
}

TEST_CASE("tangent cone at the banana point, both routes") {
  Configuration w = banana4_configuration();
  TangentCone cone = tangent_cone(w, {1, 0, 0, 0});
  CHECK(cone.chart == 0);
  CHECK(cone.degree == 2);
  Polynomial expected = poly_from_terms(
      4, {{{0, 1, 1, 0}, 1}, {{0, 1, 0, 1}, 1}, {{0, 0, 1, 1}, 1}});
  CHECK(cone.projective == expected);
  CHECK(cone.affine == expected);  // the point has zeros in every cone variable
  CHECK(cone.projective.str() == "A2*A3 + A2*A4 + A3*A4");

  // smooth point of the surface: cone is the (degree-one) tangent plane
  auto pts = sample_hypersurface_points(w, 4, 3);
  for (const Point& a : pts) {
    if (multiplicity_at(w, a) != 1) continue;
    TangentCone t = tangent_cone(w, a);
    CHECK(t.degree == 1);
    CHECK(t.projective.is_homogeneous());
    CHECK(t.projective.eval(a).is_zero());
  }

  CHECK_THROWS_AS(tangent_cone(w, {1, 1, 1, 1}), ArgumentError);  // psi(a) != 0
  CHECK_THROWS_AS(tangent_cone(w, {0, 0, 0, 0}), ArgumentError);
}

TEST_CASE("tangent cone via restrictions agrees on sampled singular points") {
  std::mt19937_64 rng(41);
  std::vector<std::string> failures;
  std::vector<Configuration> cases{banana4_configuration(), sample_config_2x3(),
                                   h1_configuration(banana_graph(3))};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Configuration& w = cases[i];
    for (int k = 1; k < w.dim(); ++k) {
      for (const Point& a : sample_corank_points(w, k, 3, 50 + static_cast<int>(i))) {
        check_cone_at(w, a, "case" + std::to_string(i), &failures);
      }
    }
    for (const Point& a : sample_hypersurface_points(w, 3, 60 + static_cast<int>(i))) {
      check_cone_at(w, a, "surface" + std::to_string(i), &failures);
    }
  }
  CHECK(failures == std::vector<std::string>{});
  (void)rng;
}

TEST_CASE("derivative against restriction: worked 2x3 example") {
  SingularIdealGens gens = singular_ideal_gens(sample_config_2x3(), 1);
  CHECK(gens.order == 1);
  CHECK(gens.consistent);
  REQUIRE(gens.pairs.size() == 3);

  // d/dA1: restriction spanned by (0,-1,2), constant 1
  CHECK(gens.pairs[0].set == EdgeSubset::of({0}));
  CHECK(gens.pairs[0].partial.str() == "A2 + 4*A3");
  REQUIRE(gens.pairs[0].constant.has_value());
  CHECK(*gens.pairs[0].constant == Rational(1));

  // d/dA2: restriction spanned by (1,0,2), constant 1
  CHECK(gens.pairs[1].partial.str() == "A1 + 4*A3");
  CHECK(*gens.pairs[1].constant == Rational(1));

  // d/dA3: restriction spanned by (1,1,0) with polynomial A1 + A2, constant 4
  CHECK(gens.pairs[2].partial.str() == "4*A1 + 4*A2");
  REQUIRE(gens.pairs[2].restriction.has_value());
  CHECK(gens.pairs[2].restriction->str() == "A1 + A2");
  CHECK(*gens.pairs[2].constant == Rational(4));
  CHECK_FALSE(gens.pairs[2].degenerate_drop);
}

TEST_CASE("degenerate drops carry zero derivatives and a witness") {
  // coordinate 2 is absent from the configuration: dropping it cannot cut
  // the dimension, and the derivative vanishes identically
  Configuration w(mat({{1, 0, 0}, {0, 0, 1}}));
  SingularIdealGens gens = singular_ideal_gens(w, 1);
  CHECK(gens.consistent);
  REQUIRE(gens.pairs.size() == 3);
  CHECK(gens.pairs[1].degenerate_drop);
  CHECK(gens.pairs[1].partial.is_zero());
  CHECK_FALSE(gens.pairs[0].degenerate_drop);
  CHECK_FALSE(gens.pairs[2].degenerate_drop);

  CHECK_THROWS_AS(singular_ideal_gens(w, 0), ArgumentError);
  CHECK_THROWS_AS(singular_ideal_gens(w, 2), ArgumentError);
}

TEST_CASE("graph configurations match restrictions with constant one") {
  std::mt19937_64 rng(42);
  std::vector<std::string> failures;
  check_restriction_classification(banana4_configuration(), true, "banana4", &failures);
  check_restriction_classification(h1_configuration(triangle_graph()), true, "triangle",
                                   &failures);
  check_restriction_classification(trivial_configuration(4), true, "trivial", &failures);
  for (int t = 0; t < 6; ++t) {
    Multigraph g = random_multigraph(rng, {.max_edges = 7, .need_cycle = true});
    check_restriction_classification(h1_configuration(g), true, "graph" + std::to_string(t),
                                     &failures);
  }
  for (int t = 0; t < 6; ++t) {
    Configuration w = random_configuration(rng, {.min_dim = 2, .max_dim = 3, .max_coords = 6});
    check_restriction_classification(w, false, "random" + std::to_string(t), &failures);
  }
  CHECK(failures == std::vector<std::string>{});
}

TEST_CASE("radical containment chains and the rank bound") {
  std::vector<std::string> failures;
  Configuration w = banana4_configuration();
  for (const Point& a : sample_corank_points(w, 2, 4, 8)) {
    check_radical_chain(w, a, "banana4", &failures);
    check_rank_criterion(w, a, "banana4", &failures);
  }
  Configuration t5 = trivial_configuration(5);
  for (const Point& a : sample_corank_points(t5, 3, 3, 9)) {
    check_radical_chain(t5, a, "trivial", &failures);
    check_rank_criterion(t5, a, "trivial", &failures);
  }
  CHECK(failures == std::vector<std::string>{});
}

TEST_CASE("generic symmetric determinant in small sizes") {
  auto names1 = generic_var_names(1);
  CHECK(generic_symmetric_det(1).str(&names1) == "B1");
  auto names2 = generic_var_names(2);
  CHECK(generic_symmetric_det(2).str(&names2) == "B1*B2 - B12^2");

  // l = 3: three variables B1,B2,B3 on the diagonal, B12,B13,B23 off it
  Polynomial g3 = generic_symmetric_det(3);
  auto names = generic_var_names(3);
  REQUIRE(names.size() == 6);
  CHECK(names == std::vector<std::string>{"B1", "B2", "B3", "B12", "B13", "B23"});
  Polynomial expected = poly_from_terms(6, {
      {{1, 1, 1, 0, 0, 0}, 1},   // B1 B2 B3
      {{0, 0, 0, 1, 1, 1}, 2},   // 2 B12 B13 B23
      {{1, 0, 0, 0, 0, 2}, -1},  // -B1 B23^2
      {{0, 1, 0, 0, 2, 0}, -1},  // -B2 B13^2
      {{0, 0, 1, 2, 0, 0}, -1},  // -B3 B12^2
  });
  CHECK(g3 == expected);
  CHECK(g3.str(&names) ==
        "B1*B2*B3 - B1*B23^2 - B2*B13^2 - B3*B12^2 + 2*B12*B13*B23");

  // numeric cross-check against the matrix determinant
  std::mt19937_64 rng(43);
  for (int ell = 2; ell <= 4; ++ell) {
    Polynomial g = generic_symmetric_det(ell);
    auto nm = generic_var_names(ell);
    std::vector<Rational> vals(nm.size());
    for (auto& v : vals) v = Rational(static_cast<int>(rng() % 9) - 4);
    RatMatrix m(ell, ell);
    int idx = ell;
    for (int i = 0; i < ell; ++i) m.at(i, i) = vals[i];
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j) {
        m.at(i, j) = m.at(j, i) = vals[idx];
        ++idx;
      }
    CHECK(g.eval(vals) == det(m));
  }

  CHECK_THROWS_AS(generic_symmetric_det(6), CapacityError);
  CHECK_THROWS_AS(generic_symmetric_det(0), ArgumentError);
}

TEST_CASE("pullback of the generic determinant recovers psi") {
  GenericPullback pb = generic_det_pullback(banana4_configuration());
  CHECK(pb.pullback_matches);
  CHECK(pb.generic == generic_symmetric_det(3));

  std::mt19937_64 rng(44);
  std::vector<std::string> failures;
  check_generic_pullback(sample_config_2x3(), rng, "2x3", &failures);
  for (int t = 0; t < 5; ++t) {
    Configuration w = random_configuration(rng, {.min_dim = 1, .max_dim = 4, .max_coords = 7});
    check_generic_pullback(w, rng, "random" + std::to_string(t), &failures);
  }
  CHECK(failures == std::vector<std::string>{});
}

TEST_CASE("full verification report") {
  AnalysisReport rep = verify_theorem(banana4_configuration(), {1, 0, 0, 0}, true);
  CHECK(rep.rank == 1);
  CHECK(rep.corank == 2);
  CHECK(rep.multiplicity == 2);
  CHECK(rep.theorem_ok);
  REQUIRE(rep.cone.has_value());
  CHECK(rep.cone->degree == 2);
  AnalysisReport plain = verify_theorem(banana4_configuration(), {2, 3, 5, 7});
  CHECK(plain.theorem_ok);
  CHECK(plain.corank == 0);
  CHECK_FALSE(plain.cone.has_value());
}
