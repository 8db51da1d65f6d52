#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wigner/presets.hpp"
#include "wigner/stein.hpp"

using namespace wigner;
using cplx = std::complex<double>;

namespace {

const GridSpec g3(3);

Kernel e(std::initializer_list<Index> idx, const GridSpec& grid = g3) { return Kernel::basis(grid, idx); }

}  // namespace

TEST_CASE("integrated slice contraction: worked example") {
  const auto f = e({0, 0});
  CHECK(integrated_slice_contraction(f, 1, 0) == e({0, 0}));
  CHECK(integrated_slice_contraction(f, 2, 0) == e({0, 0}));
  CHECK(integrated_slice_contraction(f, 1, 0).squared_norm() == 1.0);
  CHECK_THROWS_AS(integrated_slice_contraction(f, 2, 1), ShapeError);
  CHECK_THROWS_AS(integrated_slice_contraction(f, 3, 0), ShapeError);
  CHECK_THROWS_AS(integrated_slice_contraction(f, 1, 1), ShapeError);
  CHECK_THROWS_AS(integrated_slice_contraction(e({0, 1}), 1, 0), DomainError);
}

TEST_CASE("reversed slice uses the literal reorder") {
  for (int n = 1; n <= 4; ++n) {
    const auto f = random_mirror(g3, n, 20 + n);
    for (int k = 1; k <= n; ++k)
      for (Index s = 0; s < 3; ++s) CHECK(reversed_slice(f, k, s) == oracle::reversed_slice_literal(f, k, s));
  }
}

TEST_CASE("stein terms") {
  CHECK(stein_terms(1).empty());
  CHECK(stein_terms(2) == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}});
  CHECK(stein_terms(3).size() == 5);
  CHECK(stein_terms(4).size() == 9);
}

TEST_CASE("discrepancy: semicircular case") {
  const auto rep = stein_discrepancy_sq(e({0}));
  CHECK(rep.delta_sq == 0.0);
  CHECK(rep.deficit == 0.0);
  CHECK(rep.per_term.empty());
  const auto A = stein_kernel(e({0}));
  CHECK(A.components().size() == 1);
  CHECK(A.component(0, 0)->value() == cplx(1));
}

TEST_CASE("discrepancy: e0 x e0") {
  const auto rep = stein_discrepancy_sq(e({0, 0}));
  CHECK(rep.order == 2);
  CHECK(rep.delta_sq == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rep.deficit == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rep.bound_rhs == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-15));
  CHECK(rep.theorem_w2_bound == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-15));
  REQUIRE(rep.per_term.size() == 2);
  for (const auto& t : rep.per_term) {
    CHECK(t.norm_sq == doctest::Approx(1.0));
    CHECK(t.contraction_norm == doctest::Approx(1.0));
  }
}

TEST_CASE("discrepancy via the materialized Stein kernel") {
  for (int n = 1; n <= 4; ++n)
    for (Index m = 2; m <= 3; ++m) {
      const auto f = random_mirror(GridSpec(m), n, 300 + 10 * static_cast<std::uint64_t>(m) + n);
      const auto rep = stein_discrepancy_sq(f);
      const auto A = stein_kernel(f);
      const auto D = A - BiChaosElement::unit(f.grid());
      CHECK(D.squared_norm() == doctest::Approx(rep.delta_sq).epsilon(1e-12));
      // the constant term of A is ||f||^2
      CHECK(std::abs(A.component(0, 0)->value() - cplx(1)) < 1e-12);
    }
}

TEST_CASE("per-term and total bounds on random mirror-symmetric kernels") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto f = random_mirror(GridSpec(2 + static_cast<Index>(seed % 2)), n, 900 + seed);
    const auto rep = stein_discrepancy_sq(f);
    CHECK(rep.delta_sq <= rep.bound_rhs + kSteinBoundSlack);
    for (const auto& t : rep.per_term) CHECK(t.norm_sq <= t.contraction_norm + kSteinBoundSlack);
  }
}

TEST_CASE("Stein identity for powers") {
  for (int n = 1; n <= 4; ++n)
    for (Index m = 2; m <= 3; ++m) {
      const auto f = random_mirror(GridSpec(m), n, 40 + 10 * static_cast<std::uint64_t>(m) + n);
      const auto rows = verify_stein_identity(f, 3);
      REQUIRE(rows.size() == 4);
      CHECK(rows[0].lhs == cplx(0));
      CHECK(rows[0].rhs == cplx(0));
      CHECK(rows[1].lhs.real() == doctest::Approx(1.0).epsilon(1e-12));
      for (const auto& r : rows) CHECK(r.error <= 1e-9);
    }
}

TEST_CASE("Stein identity: e0 x e0 at degree 2 and 4") {
  const auto rows = verify_stein_identity(e({0, 0}), 4);
  CHECK(rows[2].lhs.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rows[3].lhs.real() == doctest::Approx(3.0).epsilon(1e-14));
  for (const auto& r : rows) CHECK(r.error <= 1e-12);
  CHECK_THROWS_AS(verify_stein_identity(e({0, 0}), 5), ShapeError);
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(stein_discrepancy_sq(cplx(2) * e({0, 0})), DomainError);
  CHECK_THROWS_AS(stein_discrepancy_sq(e({0, 1})), DomainError);
  CHECK_THROWS_AS(stein_discrepancy_sq(Kernel::scalar(g3, 1.0)), DomainError);
  CHECK_THROWS_AS(stein_kernel(e({0, 1})), DomainError);
}

TEST_CASE("nabla duality") {
  const auto f = e({0, 1});
  const auto d = verify_nabla_duality(f, f);
  CHECK(d.lhs == contract(f, f, 2).value());
  CHECK(d.error < 1e-14);

  const auto dg = diagonal_family(GridSpec(2), 2);
  CHECK(verify_nabla_duality(dg, dg).lhs.real() == doctest::Approx(1.0).epsilon(1e-15));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3), q = 1 + static_cast<int>((seed / 3) % 3);
    const auto a = random_gaussian(g3, n, seed), b = random_gaussian(g3, q, seed + 50);
    const auto r = verify_nabla_duality(a, b);
    CHECK(r.error <= 1e-12);
    if (n != q) {
      CHECK(std::abs(r.lhs) < 1e-12);
      CHECK(std::abs(r.rhs) < 1e-12);
    }
  }
  CHECK_THROWS_AS(verify_nabla_duality(Kernel::scalar(g3, 1.0), f), ShapeError);
}
