#include <doctest.h>

#include "helpers.hpp"
#include "vaisman/classify/classify.hpp"
#include "vaisman/hermitian/examples.hpp"
#include "vaisman/liealg/structure.hpp"

using namespace vaisman::classify;
using testsupport::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const FamilyTag kRxH5{Family::RxH5, 0};
const FamilyTag kRxS5{Family::RxS5, 0};
const FamilyTag kD0S5{Family::RsD0S5, 0};
FamilyTag dr(const Rational& r) { return {Family::RsDrH5, r}; }

Matrix random_change(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = testsupport::random_rational(rng, 3, 2);
    if (p.determinant() != 0) return p;
  }
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (const auto& t : dim6_catalogue({0, q(1, 2), 1})) CHECK(parse_family(name(t)) == t);
  CHECK(parse_family("Dr:1/3") == dr(q(1, 3)));
  CHECK(name(dr(q(2, 3))) == "R x|_{D_2/3} h5");
  CHECK_THROWS_AS(parse_family("R x h7"), std::invalid_argument);
  CHECK_THROWS_AS(build_family(dr(2)), std::invalid_argument);
}

TEST_CASE("catalogue members are unimodular solvable Vaisman") {
  std::vector<FamilyTag> all = dim6_catalogue({0, q(1, 3), 1});
  all.push_back({Family::RxH3, 0});
  all.push_back({Family::RsH3, 0});
  for (const auto& t : all) {
    const auto m = build_family(t);
    CHECK(vaisman::hermitian::lck_verdict(m.structure).is_vaisman);
    CHECK(vaisman::liealg::is_unimodular(m.structure.g));
    CHECK(vaisman::liealg::is_solvable(m.structure.g));
  }
}

TEST_CASE("invariants of the catalogue") {
  const auto h5 = iso_invariant(build_family(kRxH5).structure.g);
  CHECK(h5.nilpotent);
  CHECK(h5.profile == std::optional(std::pair<std::size_t, std::size_t>{1, 2}));
  CHECK(h5.center_dim == 2);
  CHECK_FALSE(h5.speeds.has_value());

  const auto d1 = iso_invariant(build_family(dr(1)).structure.g);
  CHECK_FALSE(d1.nilpotent);
  CHECK(d1.speeds == std::optional(ints({1, 1})));
  CHECK_FALSE(separating_components(h5, d1).empty());
  // g_(1,1) itself.
  CHECK(iso_invariant(vaisman::hermitian::construct_vaisman(vaisman::hermitian::abelian_package({1, 1})).g) == d1);

  const auto half = iso_invariant(build_family(dr(q(1, 2))).structure.g);
  const auto third = iso_invariant(build_family(dr(q(1, 3))).structure.g);
  CHECK(half.speeds == std::optional(ints({1, 2})));
  CHECK(third.speeds == std::optional(ints({1, 3})));
  CHECK(separating_components(half, third) == std::vector<std::string>{"oscillator ratio"});

  const auto s5 = iso_invariant(build_family(kRxS5).structure.g);
  CHECK(s5.profile == std::optional(std::pair<std::size_t, std::size_t>{2, 1}));
  const auto d0s5 = iso_invariant(build_family(kD0S5).structure.g);
  CHECK(d0s5.profile == std::optional(std::pair<std::size_t, std::size_t>{0, 2}));
  CHECK_FALSE(separating_components(d0s5, d1).empty());
  CHECK_FALSE(separating_components(s5, d0s5).empty());
}

TEST_CASE("invariants do not depend on the basis") {
  std::mt19937_64 rng(11);
  for (const auto& t : dim6_catalogue({0, q(2, 3)})) {
    const auto g = build_family(t).structure.g;
    const auto inv = iso_invariant(g);
    for (int s = 0; s < 3; ++s) CHECK(iso_invariant(g.change_basis(random_change(rng, 6))) == inv);
  }
}

TEST_CASE("D_0 on s5 gives the oscillator g_(0,1)") {
  const auto p = explicit_isomorphism(kD0S5, dr(0));
  REQUIRE(p.has_value());
  CHECK(build_family(kD0S5).structure.g.change_basis(*p) == build_family(dr(0)).structure.g);
  const auto back = explicit_isomorphism(dr(0), kD0S5);
  REQUIRE(back.has_value());
  CHECK(build_family(dr(0)).structure.g.change_basis(*back) == build_family(kD0S5).structure.g);
  CHECK_FALSE(explicit_isomorphism(kRxS5, kD0S5).has_value());
}

TEST_CASE("separation on the r-grid") {
  const auto rep = separate(dim6_catalogue({0, q(1, 3), q(1, 2), q(2, 3), 1}));
  CHECK(rep.profiles_match_prediction);
  CHECK_FALSE(rep.all_separated);
  std::size_t unseparated = 0;
  for (const auto& p : rep.pairs)
    if (p.components.empty()) {
      ++unseparated;
      CHECK(((p.a == kD0S5 && p.b == dr(0)) || (p.b == kD0S5 && p.a == dr(0))));
      CHECK(p.isomorphism.has_value());
    }
  CHECK(unseparated == 1);

  // Without r = 0 every pair is separated.
  const auto rest = separate(dim6_catalogue({q(1, 3), q(1, 2), q(2, 3), 1}));
  CHECK(rest.all_separated);
}

TEST_CASE("dim-4 algebras land in the two classes") {
  for (long c = -3; c <= 3; ++c) {
    const auto g = vaisman::hermitian::construct_vaisman(vaisman::hermitian::abelian_package({Rational(c)})).g;
    const auto cl = classify(g);
    REQUIRE(cl.matches.size() == 1);
    CHECK(cl.matches[0].family == (c == 0 ? Family::RxH3 : Family::RsH3));
  }
}

TEST_CASE("classify dim-6 inputs") {
  std::mt19937_64 rng(5);
  const auto g = build_family(dr(q(1, 2))).structure.g.change_basis(random_change(rng, 6));
  const auto cl = classify(g);
  REQUIRE(cl.matches.size() == 1);
  CHECK(cl.matches[0] == dr(q(1, 2)));

  const auto g21 = vaisman::hermitian::construct_vaisman(vaisman::hermitian::abelian_package({2, -4})).g;
  const auto c21 = classify(g21);
  REQUIRE(c21.matches.size() == 1);
  CHECK(c21.matches[0] == dr(q(1, 2)));

  const auto d0 = classify(build_family(kD0S5).structure.g);
  CHECK(d0.matches.size() == 2);

  // Not unimodular: aff(R) x aff(R) x R^2.
  auto aff2 = vaisman::liealg::direct_sum(testsupport::aff_r(), testsupport::aff_r());
  const auto na = classify(vaisman::liealg::direct_sum(aff2, vaisman::liealg::LieAlgebra::abelian(2)));
  CHECK_FALSE(na.unimodular);
  CHECK(na.matches.empty());
  // Abelian R^6: outside the catalogue.
  CHECK(classify(vaisman::liealg::LieAlgebra::abelian(6)).matches.empty());
}
