#include "tflab/io.hpp"

#include <string>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tflab;

namespace {

struct Failure {
  Errc code;
  int line;
  int column;
};

Failure parse_failure(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line(), e.column()};
  }
  FAIL("document parsed unexpectedly");
  return {};
}

}  // namespace

TEST_CASE("documents parse to their fixtures") {
  auto b2 = parse_document("space powerset 2\ntau {} {1} {2} {1,2}\n");
  CHECK(b2.tf->lattice().size() == 4);
  CHECK(b2.tf->tau().size() == 4);
  CHECK(b2.functions.empty());

  auto s3 = parse_document("space powerset 3\ntau {} {1} {2} {1,2} {1,2,3}");
  CHECK(s3.tf->lattice().size() == 8);
  CHECK(s3.tf->tau().size() == 5);
  CHECK_FALSE(s3.tf->is_ed_topoframe().holds);

  auto chain = parse_document(
      "# three-element chain as downsets of a two-chain\n"
      "poset 2\n"
      "cover 0 1\n"
      "tau {} {0,1}\n");
  CHECK(chain.tf->lattice().size() == 3);
  CHECK(chain.tf->tau().size() == 2);
}

TEST_CASE("function literals parse and resolve") {
  auto doc = parse_document(
      "space powerset 2  # discrete\n"
      "tau {} {1} {2} {1,2}\n"
      "fn f = 2@{1} ; 0@{2}\n"
      "fn one = 1@{1,2}\n");
  REQUIRE(doc.functions.size() == 2);
  const StepFunction* f = doc.find("f");
  REQUIRE(f != nullptr);
  CHECK(f->to_string() == "0@{2} ; 2@{1}");
  CHECK(doc.find("one")->is_one());
  CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("parse errors carry their positions") {
  auto miss = parse_failure("space powerset 2\n");
  CHECK(miss.code == Errc::SyntaxError);
  CHECK(miss.line == 2);

  CHECK(parse_failure("").code == Errc::SyntaxError);
  CHECK(parse_failure("tau {}").code == Errc::SyntaxError);

  auto badn = parse_failure("space powerset x\ntau {}");
  CHECK(badn.code == Errc::SyntaxError);
  CHECK(badn.line == 1);
  CHECK(badn.column == 16);

  auto unk = parse_failure("space powerset 2\ntau {} {3} {1,2}");
  CHECK(unk.code == Errc::ValidationError);
  CHECK(unk.line == 2);
  CHECK(unk.column == 8);

  auto dup = parse_failure("space powerset 2\nspace powerset 2\ntau {}");
  CHECK(dup.code == Errc::SyntaxError);
  CHECK(dup.line == 2);

  CHECK(parse_failure("space powerset 2\ncover 0 1\ntau {}").code ==
        Errc::SyntaxError);
  CHECK(parse_failure("space powerset 2\nbogus\ntau {}").code ==
        Errc::SyntaxError);

  // tau must name a subframe of complemented elements
  auto notsub = parse_failure("space powerset 2\ntau {} {1} {1,2}\nbad");
  CHECK(notsub.code == Errc::SyntaxError);  // 'bad' is the first failure
  auto notsub2 = parse_failure("poset 2\ncover 0 1\ntau {} {0} {0,1}");
  CHECK(notsub2.code == Errc::ValidationError);
  CHECK(notsub2.line == 3);

  auto fnv = parse_failure(
      "space powerset 2\ntau {} {1,2}\nfn f = 2@{1} ; 0@{2}\n");
  CHECK(fnv.code == Errc::ValidationError);
  CHECK(fnv.line == 3);

  auto dupfn = parse_failure(
      "space powerset 2\ntau {} {1} {2} {1,2}\n"
      "fn f = 1@{1,2}\nfn f = 2@{1,2}\n");
  CHECK(dupfn.code == Errc::ValidationError);
  CHECK(dupfn.line == 4);

  CHECK(parse_failure("space powerset 2\ntau {} {1,2}\nfn f = 1/0@{1,2}")
            .code == Errc::SyntaxError);
  CHECK(parse_failure("space powerset 2\ntau {} {1,2}\nfn f = 1@{1,2} ;")
            .code == Errc::SyntaxError);
  CHECK(parse_failure("space powerset 2\ntau {} {1,2}\nfn f = nopieces")
            .code == Errc::SyntaxError);
}

TEST_CASE("a non-distributive order is rejected with a witness") {
  std::string m3 =
      "order 5\n"
      "leq 0 1\nleq 0 2\nleq 0 3\nleq 0 4\n"
      "leq 1 4\nleq 2 4\nleq 3 4\n"
      "tau e0 e4\n";
  try {
    (void)parse_document(m3);
    FAIL("M3 was accepted");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::ValidationError);
    CHECK(std::string(e.what()).find("NotDistributive") != std::string::npos);
    CHECK(std::string(e.what()).find("witness") != std::string::npos);
  }
}

TEST_CASE("printing is canonical and a parse fixpoint") {
  auto doc = parse_document(
      "space powerset 2\n"
      "tau {1,2} {} {2} {1}   # scrambled on purpose\n"
      "fn g = 3@{1} ; 5@{2}\n"
      "fn f = 2@{1} ; 0@{2}\n");
  std::string printed = print_document(doc);
  CHECK(printed ==
        "space powerset 2\n"
        "tau {} {1} {2} {1,2}\n"
        "fn f = 0@{2} ; 2@{1}\n"
        "fn g = 3@{1} ; 5@{2}\n");
  CHECK(print_document(parse_document(printed)) == printed);

  auto poset_doc = parse_document("poset 2\ncover 1 0\ntau {} {0,1}");
  std::string poset_printed = print_document(poset_doc);
  CHECK(poset_printed == "poset 2\ncover 1 0\ntau {} {0,1}\n");
  CHECK(print_document(parse_document(poset_printed)) == poset_printed);

  std::string order_doc =
      "order 3\nleq 0 1\nleq 0 2\nleq 1 2\ntau e0 e2\nfn c = 7@e2\n";
  std::string order_printed = print_document(parse_document(order_doc));
  CHECK(print_document(parse_document(order_printed)) == order_printed);
}

TEST_CASE("set descriptor expressions") {
  CHECK(parse_set_descriptor("R").is_all());
  CHECK(parse_set_descriptor("{}").is_empty());
  CHECK(parse_set_descriptor(" !R ").is_empty());

  auto pts = parse_set_descriptor("{1,3/2,-2}");
  CHECK(pts.contains(Rational(1)));
  CHECK(pts.contains(Rational(3, 2)));
  CHECK(pts.contains(Rational(-2)));
  CHECK_FALSE(pts.contains(Rational(2)));

  auto half = parse_set_descriptor("[0,1)");
  CHECK(half.contains(Rational(0)));
  CHECK(half.contains(Rational(1, 2)));
  CHECK_FALSE(half.contains(Rational(1)));

  auto ray = parse_set_descriptor("(-inf,3]");
  CHECK(ray.contains(Rational(-100)));
  CHECK(ray.contains(Rational(3)));
  CHECK_FALSE(ray.contains(Rational(4)));

  auto open_ray = parse_set_descriptor("!(-inf,3]");
  CHECK(open_ray == parse_set_descriptor("(3,inf)"));
  CHECK(open_ray == parse_set_descriptor("(3,+inf)"));

  auto uni = parse_set_descriptor("[0,1) u {2} u (3,4)");
  CHECK(uni.contains(Rational(2)));
  CHECK(uni.contains(Rational(7, 2)));
  CHECK_FALSE(uni.contains(Rational(3)));

  // the printer's own output is parseable
  CHECK(parse_set_descriptor(uni.to_string()) == uni);

  CHECK_THROWS_AS((void)parse_set_descriptor(""), ParseError);
  CHECK_THROWS_AS((void)parse_set_descriptor("[0,1"), ParseError);
  CHECK_THROWS_AS((void)parse_set_descriptor("{1,}"), ParseError);
  CHECK_THROWS_AS((void)parse_set_descriptor("R x"), ParseError);
  try {
    (void)parse_set_descriptor("[0,)");
    FAIL("accepted a missing bound");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
}

TEST_CASE("instance identifiers are positional and deterministic") {
  CHECK(instance_id(*fixtures::discrete2()) == "pow2-t0xf");
  CHECK(instance_id(*fixtures::indiscrete2()) == "pow2-t0x9");
  CHECK(instance_id(*fixtures::excluded_point3()) == "pow3-t0x8f");

  auto chain = parse_document("poset 2\ncover 0 1\ntau {} {0,1}");
  CHECK(instance_id(*chain.tf) == "poset2[0<1]-t0x5");

  auto order = parse_document("order 3\nleq 0 1\nleq 0 2\nleq 1 2\ntau e0 e2");
  CHECK(instance_id(*order.tf) == "order3[0<1,1<2]-t0x5");
}

TEST_CASE("reports serialize deterministically") {
  auto tf = fixtures::discrete2();

  auto run = [&]() {
    Rng rng(5);
    PropertyReport props = analyze(tf, rng, 32);
    TheoremReport theorems = verify_theorems(tf, props, rng);
    return report_json(*tf, props, &theorems).dump(2);
  };
  std::string a = run(), b = run();
  CHECK(a == b);

  Rng rng(5);
  PropertyReport props = analyze(tf, rng, 32);
  auto j = report_json(*tf, props, nullptr);
  CHECK(j["schema"] == 1);
  CHECK(j["instance"] == "pow2-t0xf");
  CHECK(j["lattice"]["kind"] == "powerset");
  CHECK(j["clopen"]["count"] == 4);
  CHECK(j["properties"]["p-topoframe"]["value"] == true);
  CHECK(j["properties"]["p-topoframe"]["forced"] == true);
  CHECK(j.count("theorems") == 0);

  TheoremReport theorems = verify_theorems(tf, props, rng);
  auto full = report_json(*tf, props, &theorems);
  REQUIRE(full["theorems"].size() == 9);
  CHECK(full["theorems"][0]["verdict"] == "PASS");

  std::string text = property_text(*tf, props);
  CHECK(text.find("instance pow2-t0xf") != std::string::npos);
  CHECK(text.find("[x] regular (forced)") != std::string::npos);
  std::string ttext = theorem_text(theorems);
  CHECK(ttext.find("PASS  p-iff-regular") != std::string::npos);
}
