#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "wigner/chaos.hpp"
#include "wigner/presets.hpp"

using namespace wigner;
using cplx = std::complex<double>;

namespace {

const GridSpec g3(3);

Kernel e(std::initializer_list<Index> idx, const GridSpec& grid = g3) { return Kernel::basis(grid, idx); }

ChaosElement I(const Kernel& f) { return ChaosElement::from_kernel(f); }

double moment_err(cplx a, cplx b) { return oracle::rel_err(a, b); }

}  // namespace

TEST_CASE("from_kernel") {
  const auto one = I(Kernel::scalar(g3, 1.0));
  CHECK(one.max_order() == 0);
  CHECK(trace(one) == cplx(1));
  CHECK(I(Kernel(g3, 2)).is_zero());
  const auto S = I(e({0}));
  CHECK(S.max_order() == 1);
  CHECK(trace(S) == cplx(0));
}

TEST_CASE("mul: product formula examples") {
  const auto SS = mul(I(e({0})), I(e({0})));
  REQUIRE(SS.component(2));
  REQUIRE(SS.component(0));
  CHECK(*SS.component(2) == e({0, 0}));
  CHECK(SS.component(0)->value() == cplx(1));

  const auto ST = mul(I(e({0})), I(e({1})));
  CHECK(*ST.component(2) == e({0, 1}));
  CHECK((ST.component(0) == nullptr || ST.component(0)->is_zero()));

  const auto unit = ChaosElement::unit(g3);
  const auto F = I(random_gaussian(g3, 2, 3)) + I(random_gaussian(g3, 1, 4));
  CHECK((mul(unit, F) - F).is_zero());
  CHECK((mul(F, unit) - F).is_zero());
}

TEST_CASE("mul is associative and adjoint reverses products") {
  const GridSpec g(2);
  const auto A = I(random_gaussian(g, 2, 1)) + I(random_gaussian(g, 1, 2));
  const auto B = I(random_gaussian(g, 1, 3)) + I(Kernel::scalar(g, {0.5, 1}));
  const auto C = I(random_gaussian(g, 3, 5));
  const auto d1 = mul(mul(A, B), C) - mul(A, mul(B, C));
  CHECK(std::sqrt(d1.squared_norm()) < 1e-12);
  const auto d2 = adjoint(mul(A, B)) - mul(adjoint(B), adjoint(A));
  CHECK(std::sqrt(d2.squared_norm()) < 1e-12);
}

TEST_CASE("mul guards") {
  CHECK_THROWS_AS(mul(I(e({0})), I(Kernel::basis(GridSpec(2), {0}))), ShapeError);
  const GridSpec g10(10);
  const auto F = I(basis_power(g10, 3));
  // result orders 6, 4, 2, 0
  CHECK_THROWS_AS(mul(F, F, 1'010'100), BudgetExceeded);
  CHECK_NOTHROW(mul(F, F, 1'010'101));
  CHECK_THROWS_AS(moment(F, 4, 1'000'000), BudgetExceeded);
}

TEST_CASE("moments of a semicircular variable and of S^2 - 1") {
  const auto S = I(e({0}));
  CHECK(moment(S, 2) == cplx(1));
  CHECK(moment(S, 3) == cplx(0));
  CHECK(moment(S, 4) == cplx(2));
  CHECK(moment(S, 6) == cplx(5));
  CHECK(moment(S, 8) == cplx(14));
  const auto F = I(e({0, 0}));
  CHECK(moment(F, 4).real() == doctest::Approx(3).epsilon(1e-14));
  CHECK(moment(F, 3).real() == doctest::Approx(1).epsilon(1e-14));
  // moment agrees with the direct trace of the power
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(moment(F, k) - trace(power(F, k))) < 1e-12);
}

TEST_CASE("moment_oracle examples") {
  const std::vector<Kernel> two{e({0}), e({0})};
  CHECK(moment_oracle(std::span<const Kernel>(two)) == cplx(1));
  const std::vector<Kernel> four(4, e({0}));
  CHECK(moment_oracle(std::span<const Kernel>(four)) == cplx(2));
  const std::vector<Kernel> ff(4, e({0, 0}));
  CHECK(moment_oracle(std::span<const Kernel>(ff)) == cplx(3));
  const std::vector<Kernel> odd(3, e({0}));
  CHECK(moment_oracle(std::span<const Kernel>(odd)) == cplx(0));
  const std::vector<Kernel> big(9, e({0, 0}));
  CHECK_THROWS_AS(moment_oracle(std::span<const Kernel>(big)), BudgetExceeded);
  const std::vector<Kernel> scaled{Kernel::scalar(g3, 2.0), e({0}), e({0})};
  CHECK(moment_oracle(std::span<const Kernel>(scaled)) == cplx(2));
}

TEST_CASE("oracle equivalence: product formula vs non-crossing pairing sums") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 4; ++k) {
        const GridSpec g(m);
        const auto f = random_gaussian(g, n, 1000 * m + 10 * n + k);
        const std::vector<Kernel> ks(static_cast<std::size_t>(k), f);
        const auto a = moment(I(f), k);
        const auto b = moment_oracle(std::span<const Kernel>(ks));
        CHECK(moment_err(a, b) <= 1e-10);
      }
}

TEST_CASE("mixed words agree with the oracle") {
  const GridSpec g(2);
  const std::vector<Kernel> ks{random_gaussian(g, 1, 1), random_gaussian(g, 2, 2), random_gaussian(g, 3, 3),
                               random_gaussian(g, 2, 4)};
  auto P = ChaosElement::unit(g);
  for (const auto& f : ks) P = mul(P, I(f));
  CHECK(moment_err(trace(P), moment_oracle(std::span<const Kernel>(ks))) <= 1e-10);
}

TEST_CASE("isometry") {
  for (int n = 0; n <= 4; ++n) {
    const auto f = random_gaussian(g3, n, 70 + n);
    const auto g = random_gaussian(g3, n, 80 + n);
    CHECK(std::abs(trace(mul(I(f), I(g))) - contract(f, g, n).value()) < 1e-12 * (1 + f.norm() * g.norm()));
    CHECK(std::abs(trace_product(I(f), I(g)) - contract(f, g, n).value()) < 1e-12 * (1 + f.norm() * g.norm()));
    // tau(F* F) = ||f||^2
    CHECK(trace(mul(adjoint(I(f)), I(f))).real() == doctest::Approx(f.squared_norm()).epsilon(1e-12));
    const auto h = random_gaussian(g3, n + 1, 90 + n);
    CHECK(std::abs(trace(mul(I(f), I(h)))) < 1e-12);
  }
}

TEST_CASE("semicircle Wick recursion: polynomial moments of S") {
  // tau(P(S) Q(S)) computed in the algebra agrees with semicircle moments
  const auto S = I(e({0}));
  const std::vector<double> p{1, -2, 0, 1};
  const std::vector<double> q{0.5, 0, 3};
  auto eval = [&](const std::vector<double>& c) {
    auto out = ChaosElement(g3);
    auto pw = ChaosElement::unit(g3);
    for (double cj : c) {
      out += cplx(cj) * pw;
      pw = mul(pw, S);
    }
    return out;
  };
  const auto val = trace(mul(eval(p), eval(q)));
  CHECK(val.real() == doctest::Approx(oracle::semicircle_expectation(oracle::poly_mul(p, q))).epsilon(1e-13));
}

TEST_CASE("fourth moment deficit examples") {
  CHECK(fourth_moment_deficit(e({0})) == 0.0);
  CHECK(fourth_moment_deficit(e({0, 0})) == doctest::Approx(1.0).epsilon(1e-15));
  for (Index k : {1, 2, 4, 8}) {
    const GridSpec g(8);
    CHECK(fourth_moment_deficit(diagonal_family(g, k)) == doctest::Approx(1.0 / static_cast<double>(k)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(fourth_moment_deficit(cplx(2) * e({0})), DomainError);
  CHECK_THROWS_AS(fourth_moment_deficit(Kernel::scalar(g3, 1.0)), DomainError);
}

TEST_CASE("fourth moment identity on mirror-symmetric kernels") {
  for (int n = 1; n <= 4; ++n)
    for (Index m = 2; m <= 3; ++m) {
      const auto f = random_mirror(GridSpec(m), n, 500 + 10 * static_cast<std::uint64_t>(m) + n);
      const auto F = I(f);
      CHECK(F.is_self_adjoint(1e-14));
      const auto m4 = moment(F, 4);
      CHECK(std::abs(m4.imag()) < 1e-10);
      CHECK(std::abs(m4.real() - 2.0 - fourth_moment_deficit(f)) <= 1e-10 * m4.real());
    }
}

TEST_CASE("fully symmetric kernels are a special case of mirror-symmetric ones") {
  const auto f = oracle::random_fully_symmetric(g3, 3, 11);
  CHECK(is_mirror_symmetric(f, 1e-14));
  const auto m4 = moment(I(f), 4).real();
  CHECK(std::abs(m4 - 2.0 - fourth_moment_deficit(f)) <= 1e-10 * m4);
}

TEST_CASE("moments of self-adjoint elements are real") {
  const GridSpec g(2);
  const auto F = I(random_mirror(g, 2, 1)) + I(random_mirror(g, 3, 2)) + I(Kernel::scalar(g, 0.3));
  CHECK(F.is_self_adjoint(1e-14));
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(moment(F, k).imag()) < 1e-10);
}

TEST_CASE("elements are templated on the real type") {
  const GridSpec g(2);
  const auto f = random_mirror<long double>(g, 2, 3);
  const auto F = BasicChaosElement<long double>::from_kernel(f);
  const long double m4 = moment(F, 4).real();
  CHECK(std::abs(static_cast<double>(m4 - 2 - fourth_moment_deficit(f))) < 1e-15);
}
