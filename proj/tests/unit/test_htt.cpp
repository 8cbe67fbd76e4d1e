#include "doctest.h"

#include "lied/instances.hpp"

using namespace lied;

namespace {

std::vector<TransferFormula> replace(std::vector<TransferFormula> v, const std::string& name, const std::string& text) {
  for (auto& f : v)
    if (f.name == name) f.text = text;
  return v;
}

std::vector<HttInstance> sample(int count, unsigned seed) {
  Rng rng(seed);
  std::vector<HttInstance> v;
  for (int t = 0; t < count; ++t) v.push_back(random_htt_instance(rng, t % 2 == 0));
  return v;
}

}  // namespace

TEST_CASE("standard retracts") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    std::array<int, 3> dims{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)};
    QMatrix d2 = random_matrix(rng, dims[1], dims[2]);
    QMatrix d1 = random_matrix(rng, dims[0], dims[1]) * nullspace(d2.transpose()) * nullspace(d2.transpose()).transpose();
    auto L = share(Complex3::make(dims, d1, d2));
    DeformationRetract r = standard_retract(L);
    CHECK(all_ok(r.check()));
    CHECK(r.side_conditions());
    int r1 = rank(d1), r2 = rank(d2);
    CHECK(r.small->dims == std::array<int, 3>{dims[0] - r1, dims[1] - r1 - r2, dims[2] - r2});
    CHECK(r.small->d1.is_zero());
    DeformationRetract k = standard_retract(L, {r1, r2});
    CHECK(all_ok(k.check()));
    CHECK(k.small->dims == dims);
    DeformationRetract q = perturb_homotopy(r, random_map(rng, L, L, 1, 2));
    CHECK(all_ok(q.check()));
    CHECK_THROWS(standard_retract(L, {r1 + 1, 0}));
  }
}

TEST_CASE("a broken retract is reported") {
  Rng rng(22);
  auto L = share(Complex3::make({2, 2, 1}, QMatrix::from_rows({{1, 0}, {0, 0}}), QMatrix(2, 1)));
  DeformationRetract r = standard_retract(L);
  CHECK(all_ok(r.check()));
  r.h = r.h.scaled(Rat(2));
  CHECK_FALSE(all_ok(r.check()));
  DeformationRetract bad = r;
  bad.h = MultiMap(L, L, 1, 0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("strict Lie algebras and pull-backs") {
  for (int lie = 0; lie < 5; ++lie)
    for (int alg = 0; alg < 6; ++alg) {
      StrictLieSpec s{lie, alg, 1, -1, 1, 1};
      CHECK_MESSAGE(all_ok(check_structure(strict_lie(s))), s.describe());
    }
  Rng rng(23);
  for (int t = 0; t < 6; ++t) {
    WeakLie3Structure s = strict_lie(random_strict_spec(rng, 3));
    std::array<QMatrix, 3> g;
    for (int k = 0; k < 3; ++k) g[k] = random_invertible(rng, s.complex->dim(k));
    WeakLie3Structure u = transport_structure(s, g);
    CHECK(all_ok(check_structure(u)));
    WeakMorphism f = random_pull_back(rng, u);
    CHECK(all_ok(check_structure(f.source)));
    CHECK(all_ok(check_morphism(f)));
    CHECK_FALSE(f.source["l21"].is_zero());
  }
}

TEST_CASE("trivial retract transfers to the same structure") {
  Rng rng(24);
  for (int t = 0; t < 4; ++t) {
    WeakLie3Structure s = random_weak_structure(rng, 3);
    DeformationRetract r = DeformationRetract::trivial(s.complex);
    WeakLie3Structure u = transfer_structure(s, r);
    CHECK(u.maps == s.maps);
    WeakMorphism i = build_inclusion(s, r);
    CHECK(i.maps == WeakMorphism::identity(s).maps);
  }
}

TEST_CASE("transfer and inclusion on generated instances") {
  int nontrivial_l3 = 0, nontrivial_l4 = 0, nontrivial_l32 = 0, nontrivial_f21 = 0, perturbed = 0;
  for (auto& in : sample(16, 25)) {
    INFO(in.description);
    REQUIRE(all_ok(check_structure(in.structure)));
    REQUIRE(all_ok(in.retract.check()));
    WeakLie3Structure t = transfer_structure(in.structure, in.retract);
    CHECK(all_ok(check_structure(t)));
    WeakMorphism i = build_inclusion(in.structure, in.retract);
    CHECK(all_ok(check_morphism(i)));
    // l2' has no correction since p i = id
    const DeformationRetract& r = in.retract;
    CHECK(t["l2"] == full_compose(full_compose(r.p, {in.structure["l2"]}), {r.i, r.i}));
    CHECK(i["f21"] == full_compose(full_compose(r.h, {in.structure["l21"]}), {r.i, r.i}).scaled(Rat(-1)));
    nontrivial_l3 += t["l3"] != full_compose(full_compose(r.p, {in.structure["l3"]}), {r.i, r.i, r.i});
    nontrivial_l4 += !t["l4"].is_zero();
    nontrivial_l32 += !t["l32"].is_zero();
    nontrivial_f21 += !i["f21"].is_zero();
    perturbed += !in.side_conditions;
  }
  CHECK(nontrivial_l3 > 0);
  CHECK(nontrivial_l4 > 0);
  CHECK(nontrivial_l32 > 0);
  CHECK(nontrivial_f21 > 0);
  CHECK(perturbed > 0);
}

TEST_CASE("strict input gives vanishing extra maps") {
  Rng rng(26);
  for (int t = 0; t < 6; ++t) {
    WeakLie3Structure s = strict_lie(random_strict_spec(rng));
    DeformationRetract r = perturb_homotopy(standard_retract(s.complex), random_map(rng, s.complex, s.complex, 1, 2));
    WeakLie3Structure u = transfer_structure(s, r);
    CHECK(all_ok(check_structure(u)));
    for (const char* n : {"l21", "l211", "l31", "l32"}) CHECK(u[n].is_zero());
    WeakMorphism i = build_inclusion(s, r);
    CHECK(all_ok(check_morphism(i)));
    CHECK(i["f21"].is_zero());
  }
}

TEST_CASE("two-term complexes") {
  // sl2 (x) Q[e] with de = 1 lives in degrees 0 and 1
  WeakLie3Structure s = strict_lie({3, 2, 0, 0, 1, 0});
  Rng rng(27);
  WeakLie3Structure w = random_pull_back(rng, s).source;
  CHECK(w.complex->dims[2] == 0);
  DeformationRetract r = standard_retract(w.complex, {1, 0});
  WeakLie3Structure t = transfer_structure(w, r);
  CHECK(all_ok(check_structure(t)));
  CHECK(all_ok(check_morphism(build_inclusion(w, r))));
  for (const char* n : {"l211", "l31", "l32", "l4"}) CHECK(t[n].is_zero());
}

TEST_CASE("altered transfer formulas are caught") {
  auto inst = sample(6, 28);
  auto fails = [&](const std::vector<TransferFormula>& sf, const std::vector<TransferFormula>& cf) {
    for (auto& in : inst) {
      WeakMorphism i = build_inclusion(in.structure, in.retract, sf, cf);
      if (!all_ok(check_structure(i.source)) || !all_ok(check_morphism(i))) return true;
    }
    return false;
  };
  const auto& S = transfer_formulas();
  const auto& I = inclusion_formulas();
  CHECK_FALSE(fails(S, I));
  CHECK(fails(replace(S, "l3", "l3 + l2 o1 (h o1 l2) - (l2 o2 (h o1 l2))^{1+(12)}"), I));
  CHECK(fails(replace(S, "l3", "l3"), I));
  CHECK(fails(replace(S, "l31", "l31 + l2 o1 (h o1 l21)"), I));
  CHECK(fails(replace(S, "l32", "l32 + l21 o1 (h o1 l2) + l2 o2 (h o1 l21)"), I));
  CHECK(fails(replace(S, "l4", "l4"), I));
  CHECK(fails(S, replace(I, "f21", "h o1 l21")));
  CHECK(fails(S, replace(I, "f3", "-(h o1 l3)")));
  CHECK(fails(S, replace(I, "f2", "h o1 l2")));
}

TEST_CASE("transfer rejects mismatched input") {
  Rng rng(29);
  WeakLie3Structure s = random_weak_structure(rng, 2);
  auto other = share(Complex3::make({1, 1, 1}));
  CHECK_THROWS_AS(transfer_structure(s, DeformationRetract::trivial(other)), std::invalid_argument);
}
