#include "tflab/ring_props.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "tflab/error.hpp"

using namespace tflab;

namespace {

StepFunction two_pieces(const std::shared_ptr<const Topoframe>& tf) {
  const Lattice& L = tf->lattice();
  return StepFunction::from_pieces(
      tf, {{Rational(2), L.by_name("{1}")}, {Rational(0), L.by_name("{2}")}});
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const TheoremRow& row_named(const TheoremReport& rep, const std::string& id) {
  auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                         [&](const TheoremRow& r) { return r.id == id; });
  REQUIRE(it != rep.rows.end());
  return *it;
}

}  // namespace

TEST_CASE("finitely generated ideals reduce to a clopen") {
  auto tf = fixtures::discrete2();
  const Lattice& L = tf->lattice();

  CHECK(ideal_of(tf, {make_constant(tf, Rational(0))}).b == L.bottom());
  CHECK(ideal_of(tf, {make_constant(tf, Rational(1))}).b == L.top());
  CHECK(ideal_of(tf, {}).is_zero());

  StepFunction f = two_pieces(tf);
  IdealHandle I = ideal_of(tf, {f});
  CHECK(I.b == L.by_name("{1}"));
  CHECK_FALSE(I.is_zero());
  CHECK_FALSE(I.is_whole());

  // two generators covering both atoms give the whole ring
  StepFunction g = characteristic(tf, L.by_name("{2}"));
  CHECK(ideal_of(tf, {f, g}).is_whole());

  auto other = fixtures::indiscrete2();
  CHECK_THROWS_AS((void)ideal_of(tf, {make_constant(other, Rational(1))}),
                  Error);
}

TEST_CASE("annihilators are the largest disjoint clopen") {
  auto tf = fixtures::discrete2();
  const Lattice& L = tf->lattice();

  CHECK(annihilator(tf, {make_constant(tf, Rational(0))}).is_whole());
  CHECK(annihilator(tf, {make_constant(tf, Rational(1))}).is_zero());
  CHECK(annihilator(tf, {}).is_whole());

  StepFunction e1 = characteristic(tf, L.by_name("{1}"));
  CHECK(annihilator(tf, {e1}).b == L.by_name("{2}"));
  CHECK(annihilator(tf, {two_pieces(tf)}).b == L.by_name("{2}"));
  CHECK(annihilator(tf, {e1, characteristic(tf, L.by_name("{2}"))}).is_zero());
}

TEST_CASE("essential, closed and summand ideals over the clopen algebra") {
  auto tf = fixtures::discrete2();
  const Lattice& L = tf->lattice();
  IdealHandle zero{tf, L.bottom()};
  IdealHandle a1{tf, L.by_name("{1}")};
  IdealHandle whole{tf, L.top()};

  CHECK(is_essential(whole));
  CHECK_FALSE(is_essential(a1));
  CHECK_FALSE(is_essential(zero));

  CHECK(is_essential_in(a1, a1));
  CHECK_FALSE(is_essential_in(a1, whole));
  CHECK_FALSE(is_essential_in(whole, a1));  // not even contained
  CHECK(is_essential_in(zero, zero));

  // finite scale: every ideal is closed and a summand
  for (Elem b : tf->clopen_algebra().carrier) {
    CHECK(is_closed_ideal({tf, b}));
    CHECK(is_summand({tf, b}));
  }

  auto other = fixtures::indiscrete2();
  CHECK_THROWS_AS((void)is_essential_in(a1, {other, other->lattice().top()}),
                  Error);
}

TEST_CASE("atom vectors determine functions both ways") {
  auto tf = fixtures::discrete2();
  std::vector<Rational> vals = {Rational(5, 3), Rational(-2)};
  StepFunction f = from_atom_values(tf, vals);
  CHECK(atom_values(f) == vals);

  // collapsing to equal values still round-trips
  StepFunction c = from_atom_values(tf, {Rational(7), Rational(7)});
  CHECK(c == make_constant(tf, Rational(7)));
  CHECK(atom_values(c) == std::vector<Rational>{Rational(7), Rational(7)});

  CHECK_THROWS_AS((void)from_atom_values(tf, {Rational(1)}), Error);

  Rng a(42), b(42), c2(43);
  StepFunction fa = random_function(tf, a);
  CHECK(fa == random_function(tf, b));  // same seed, same function
  bool differs = false;
  for (int i = 0; i < 16 && !differs; ++i)
    differs = !(random_function(tf, a) == random_function(tf, c2));
  CHECK(differs);
}

TEST_CASE("ring checkers accept the discrete fixture") {
  auto tf = fixtures::discrete2();
  Rng rng(7);

  Flag reg = check_regular(tf, rng, 64);
  CHECK(reg.value);
  CHECK(reg.forced);

  Flag kasch = check_kasch(tf, rng, 64);
  CHECK(kasch.value);
  CHECK(contains(kasch.note, "I_{} killed by"));

  CHECK(check_baer(tf, rng, 64).value);
  Flag pp = check_pp(tf, rng, 64);
  CHECK(pp.value);
  CHECK_FALSE(pp.forced);
  CHECK(check_cs(tf).value);

  Flag iso = check_atom_product_iso(tf, rng, 128);
  CHECK(iso.value);
  CHECK(contains(iso.note, "product of 2 rational fields"));

  ContinuityFlags cont = check_continuity_completeness(tf, rng);
  CHECK(cont.complete.value);
  CHECK(cont.upper_continuous.value);
  CHECK(cont.principal_ideal_count == 4);
}

TEST_CASE("selfinjectivity criterion runs in both cardinal modes") {
  auto tf = fixtures::discrete2();
  Rng rng(11);

  Flag countable =
      check_selfinjective(tf, SelfinjectiveMode::FiniteAsCountable, rng, 32);
  CHECK(countable.value);
  CHECK(countable.forced);
  CHECK(contains(countable.note, "coincide"));

  Flag full = check_selfinjective(tf, SelfinjectiveMode::Full, rng, 32);
  CHECK(full.value);
  CHECK_FALSE(full.forced);
}

TEST_CASE("property report of the discrete fixture") {
  auto tf = fixtures::discrete2();
  Rng rng(3);
  PropertyReport r = analyze(tf, rng, 48);

  CHECK(r.clopen_count == 4);
  CHECK(r.atom_count == 2);
  for (const Flag* f :
       {&r.p_topoframe, &r.ed_frame, &r.ed_tau, &r.ed_topoframe,
        &r.completely_regular, &r.atom_product_iso, &r.regular,
        &r.countably_kasch, &r.baer, &r.pp, &r.cs, &r.countably_selfinjective,
        &r.selfinjective, &r.continuous_regular, &r.complete_regular}) {
    CHECK(f->value);
    CHECK_FALSE(f->note.empty());
  }
  CHECK(r.p_topoframe.forced);
  CHECK(r.countably_kasch.forced);
  CHECK_FALSE(r.ed_topoframe.forced);
  CHECK_FALSE(r.completely_regular.forced);
}

TEST_CASE("property report of the excluded-point fixture") {
  auto tf = fixtures::excluded_point3();
  Rng rng(5);
  PropertyReport r = analyze(tf, rng, 48);

  CHECK(r.clopen_count == 2);
  CHECK(r.atom_count == 1);

  CHECK_FALSE(r.ed_tau.value);
  CHECK(contains(r.ed_tau.note, "{1}"));
  CHECK_FALSE(r.ed_topoframe.value);
  CHECK(contains(r.ed_topoframe.note, "{1}"));
  CHECK(contains(r.ed_topoframe.note, "{1,3}"));
  CHECK_FALSE(r.completely_regular.value);
  CHECK(contains(r.completely_regular.note, "{1}"));

  // the ambient powerset is Boolean, hence extremally disconnected
  CHECK(r.ed_frame.value);

  // the ring itself (one atom, so a single rational field) is unaffected
  CHECK(r.regular.value);
  CHECK(r.countably_kasch.value);
  CHECK(r.selfinjective.value);
  CHECK(r.atom_product_iso.value);
}

TEST_CASE("theorem harness rows on the fixtures") {
  Rng rng(17);

  SUBCASE("discrete: everything passes") {
    auto rep = verify_theorems(fixtures::discrete2(), rng, 48);
    CHECK(rep.rows.size() == 9);
    CHECK_FALSE(rep.any_fail());
    for (const auto& row : rep.rows) CHECK(row.verdict == Verdict::Pass);
  }

  SUBCASE("excluded point: hypothesis-gated rows sit out") {
    auto tf = fixtures::excluded_point3();
    auto rep = verify_theorems(tf, rng, 48);
    CHECK_FALSE(rep.any_fail());

    CHECK(row_named(rep, "cr-ed-baer-cs-equivalence").verdict ==
          Verdict::HypothesisNotMet);
    CHECK(contains(row_named(rep, "cr-ed-baer-cs-equivalence").note,
                   "completely regular"));
    CHECK(row_named(rep, "cr-regular-selfinjective-characterization")
              .verdict == Verdict::HypothesisNotMet);

    // both disconnectedness forms are false, so their equivalence passes
    CHECK(row_named(rep, "ed-tau-iff-ed-topoframe").verdict == Verdict::Pass);
    CHECK(row_named(rep, "p-iff-regular").verdict == Verdict::Pass);
    CHECK(row_named(rep, "ed-frame-p-implies-selfinjective").verdict ==
          Verdict::Pass);
  }

  SUBCASE("indiscrete: selfinjective with the two-element clopen algebra") {
    auto tf = fixtures::indiscrete2();
    Rng r2(23);
    PropertyReport props = analyze(tf, r2, 48);
    CHECK(props.clopen_count == 2);
    CHECK(props.selfinjective.value);
    CHECK(props.completely_regular.value);

    auto rep = verify_theorems(tf, props, r2);
    CHECK_FALSE(rep.any_fail());
    for (const auto& row : rep.rows) CHECK(row.verdict == Verdict::Pass);
  }
}

TEST_CASE("harness over the degenerate one-point lattice") {
  auto L = Lattice::birkhoff(Poset{});  // single element, bottom = top
  auto tf = Topoframe::validate(L, {L->bottom()});
  Rng rng(29);

  PropertyReport r = analyze(tf, rng, 16);
  CHECK(r.clopen_count == 1);
  CHECK(r.atom_count == 0);
  CHECK(r.regular.value);
  CHECK(r.selfinjective.value);
  CHECK(contains(r.countably_kasch.note, "no proper"));

  auto rep = verify_theorems(tf, r, rng);
  CHECK_FALSE(rep.any_fail());
}

TEST_CASE("verdict names are stable") {
  CHECK(std::string(verdict_name(Verdict::Pass)) == "PASS");
  CHECK(std::string(verdict_name(Verdict::HypothesisNotMet)) ==
        "HYPOTHESIS-NOT-MET");
  CHECK(std::string(verdict_name(Verdict::Fail)) == "FAIL");
}
