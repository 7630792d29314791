#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "fvb/braid.hpp"
#include "fvb/rep.hpp"

using namespace fvb;

namespace {
BraidWord B(const char* text, int n) { return parse_braid(text, n); }
}  // namespace

TEST_CASE("theta letter images") {
  Representation th = theta(3);
  CHECK(th.of(B("s1", 3)).image("x1").str() == "x2 y2");
  CHECK(th.of(B("s1", 3)).image("x2").str() == "x1 y2^-1");
  CHECK(th.of(B("s1", 3)).image("y1").str() == "y1");
  CHECK(th.of(B("r1", 3)).image("y1").str() == "y2");
  CHECK(th.of(B("r1", 3)).image("x3").str() == "x3");
}

TEST_CASE("catalogue variants") {
  // theta1 with m = 1 coincides with theta letterwise
  Representation t1 = theta1(3, 1), th = theta(3);
  for (int i = 1; i <= 2; ++i) {
    CHECK(t1.of(BraidWord(3, {{BraidKind::Sigma, i, 1}})) ==
          th.of(BraidWord(3, {{BraidKind::Sigma, i, 1}})));
    CHECK(t1.of(BraidWord(3, {{BraidKind::Rho, i, 1}})) ==
          th.of(BraidWord(3, {{BraidKind::Rho, i, 1}})));
  }
  CHECK(theta1(2, -2).of(B("s1", 2)).image("x1").str() == "x2 y2^-2");
  CHECK(theta2(2).of(B("s1", 2)).image("x1").str() == "x2 z^-1 y2 z");
  CHECK(theta3(2).of(B("r1", 2)).image("x1").str() == "x2 z");
  CHECK(theta4(2).of(B("r1", 2)).image("x1").str() == "z^-1 x2 z");
  CHECK(theta4(2).of(B("r1", 2)).image("x2").str() == "z x1 z^-1");
  CHECK(thetaGstar(2).of(B("r1", 2)).image("z").str() == "z^-1");
  CHECK(thetaGstar(2).of(B("s1", 2)).image("y1").str() == "y1");
  CHECK(thetaGstar(2).of(B("s1", 2)).image("x1").str() == "x2 y1 y2^-1");
  CHECK(thetaGstar(2).of(B("s1", 2)).image("x2").str() == "x1 y2 y1^-1");
  CHECK(thetaG(3).of(B("s1", 3)).image("x1").str() == "x2 z^-1");
  CHECK(thetaG(3).of(B("s2", 3)).image("x2").str() == "x3 z");
  CHECK_THROWS_AS(make_representation("bogus", 3), input_error);
  CHECK_THROWS_AS(theta(1), input_error);
}

TEST_CASE("thetaGstar on eta") {
  for (int n = 2; n <= 4; ++n) {
    Representation rep = thetaGstar(n);
    auto a = rep.target();
    for (int i = 1; i < n; ++i) {
      Endomorphism e = rep.of(eta(i, n));
      // eta_i decorates x_i, x_{i+1} with the inverse pair words and swaps
      // the y's while inverting z
      std::string yi = "y" + std::to_string(i), yj = "y" + std::to_string(i + 1);
      Word ui = multiply(letter_word(a, yi), letter_word(a, yj, -1));
      CHECK(e.image("x" + std::to_string(i)) ==
            multiply(letter_word(a, "x" + std::to_string(i)), invert(ui)));
      CHECK(e.image("x" + std::to_string(i + 1)) ==
            multiply(letter_word(a, "x" + std::to_string(i + 1)), ui));
      CHECK(e.image(yi).str() == yj);
      CHECK(e.image("z").str() == "z^-1");
    }
  }
}

TEST_CASE("relation suite for the theta family") {
  for (const char* sel :
       {"theta", "theta1:-2", "theta1:3", "theta2", "theta3", "theta4",
        "thetaGstar"}) {
    for (int n = 2; n <= 6; ++n) {
      Representation rep = make_representation(sel, n);
      RelationReport report = verify_defining_relations(rep, BraidMode::FVB);
      INFO(std::string(sel), " n=", n);
      CHECK(report.all_defining_hold());
      if (n >= 3) {
        CHECK(report.any_forbidden_fails());
        bool witness_found = false;
        for (const RelationCheck& c : report.checks)
          if (!c.holds && !c.witness.empty()) witness_found = true;
        CHECK(witness_found);
      }
    }
  }
}

namespace {
bool family_holds(const RelationReport& r, RelationFamily f) {
  for (const RelationCheck& c : r.checks)
    if (c.family == f && !c.holds) return false;
  return true;
}
}  // namespace

TEST_CASE("thetaG preserves the forbidden relations") {
  // The z-inversion that makes the forbidden relations hold necessarily
  // breaks the mixed commutation/braid families; every other family holds.
  for (int n = 3; n <= 5; ++n) {
    RelationReport report =
        verify_defining_relations(thetaG(n), BraidMode::GVB);
    INFO("n=", n);
    CHECK(report.forbidden_hold());
    CHECK(family_holds(report, RelationFamily::SigmaInvolution));
    CHECK(family_holds(report, RelationFamily::SigmaBraid));
    CHECK(family_holds(report, RelationFamily::RhoInvolution));
    CHECK(family_holds(report, RelationFamily::RhoBraid));
    CHECK(family_holds(report, RelationFamily::SigmaRhoComm));
    CHECK(!family_holds(report, RelationFamily::MixedBraid));
    if (n >= 4) {
      CHECK(!family_holds(report, RelationFamily::MixedComm));
      CHECK(family_holds(report, RelationFamily::SigmaComm));
      CHECK(family_holds(report, RelationFamily::RhoComm));
    }
  }
}

TEST_CASE("GVB relation sigma rho for gauss reps") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(family_holds(verify_defining_relations(thetaG(n), BraidMode::GVB),
                       RelationFamily::SigmaRhoComm));
    CHECK(verify_defining_relations(thetaGstar(n), BraidMode::GVB)
              .all_defining_hold());
  }
}

TEST_CASE("kernel witnesses") {
  for (int n = 3; n <= 6; ++n) {
    Representation th = theta(n);
    for (int i = 1; i <= n - 2; ++i) {
      BraidWord b = braid_pow(
          BraidWord(n, {{BraidKind::Rho, i, 1}, {BraidKind::Sigma, i + 1, 1}}),
          6);
      CHECK(kernel_witness_check(th, b));
      CHECK(iota1(b).is_identity());
      CHECK(iota2(b).is_identity());
    }
  }
  CHECK(!kernel_witness_check(theta(2), B("r1", 2)));
}

TEST_CASE("closed form powers in FVB_2") {
  Representation th = theta(2);
  auto a = th.target();
  for (long long k = -5; k <= 5; ++k) {
    Endomorphism e = th.of(braid_pow(B("r1 s1", 2), 2 * k));
    CHECK(e.image("x1") == multiply(Word::parse(a, "x1"),
                                    word_pow(Word::parse(a, "y1 y2"), -k)));
  }
}

TEST_CASE("alpha and beta tables") {
  Representation th = theta(3);
  auto a = th.target();
  BraidWord wa = B("r2 s2 r2 r1 s1 r2", 3);  // the element a of FVP_3
  BraidWord wc = B("r2 s2 s1 r1", 3);        // the element c of FVP_3
  Endomorphism alpha = th.of(wa), beta = th.of(wc);
  CHECK(alpha.image("x1").str() == "x1 y3^-1");
  CHECK(alpha.image("x2").str() == "x2 y1^-1");
  CHECK(alpha.image("x3").str() == "x3 y3 y1");
  CHECK(alpha.image("y1").str() == "y3");
  CHECK(alpha.image("y2").str() == "y1");
  CHECK(alpha.image("y3").str() == "y2");
  CHECK(beta.image("x1").str() == "x1 y1");
  CHECK(beta.image("x2").str() == "x2 y1^-1 y3^-1");
  CHECK(beta.image("x3").str() == "x3 y3");
  CHECK(beta.image("y1").str() == "y2");
  CHECK(beta.image("y2").str() == "y3");
  CHECK(beta.image("y3").str() == "y1");
  // a and c commute, so the braid-level product order does not matter
  for (long long r = -4; r <= 4; ++r) {
    BraidWord ac = braid_concat(wa, wc);
    Endomorphism p = th.of(braid_pow(ac, r));
    CHECK(p.image("x1").str() == "x1");
    CHECK(p.image("x2") == multiply(Word::parse(a, "x2"),
                                    word_pow(Word::parse(a, "y2 y3 y1"), -r)));
    CHECK(p.image("x3") == multiply(Word::parse(a, "x3"),
                                    word_pow(Word::parse(a, "y3 y1 y2"), r)));
  }
}

TEST_CASE("FVB_2 near-faithfulness family") {
  Representation th = theta(2);
  for (int eps = 0; eps <= 1; ++eps) {
    for (long long k = -50; k <= 50; ++k) {
      if (eps == 0 && k == 0) continue;
      BraidWord b = braid_pow(B("s1 r1", 2), k);
      if (eps) b = braid_concat(B("r1", 2), b);
      INFO("eps=", eps, " k=", k);
      CHECK(!th.of(b).is_identity());
    }
  }
}

TEST_CASE("equivalence spot checks across the variant catalogue") {
  std::mt19937 rng(43);
  std::vector<Representation> reps;
  const int n = 4;
  for (const char* sel : {"theta", "theta1:-2", "theta1:-1", "theta1:2",
                          "theta1:3", "theta2", "theta3", "theta4"})
    reps.push_back(make_representation(sel, n));
  for (int t = 0; t < 60; ++t) {
    std::vector<BraidLetter> ls;
    int len = 1 + static_cast<int>(rng() % 16);
    for (int k = 0; k < len; ++k)
      ls.push_back({(rng() % 2) ? BraidKind::Sigma : BraidKind::Rho,
                    1 + static_cast<int>(rng() % (n - 1)),
                    (rng() % 2) ? 1 : -1});
    BraidWord b(n, std::move(ls));
    bool base = kernel_witness_check(reps[0], b);
    for (size_t i = 1; i < reps.size(); ++i) {
      INFO("rep index ", i, " braid ", braid_str(b));
      CHECK(kernel_witness_check(reps[i], b) == base);
    }
  }
}

TEST_CASE("thetaGstar sigma and eta images commute off the adjacent index") {
  // sigma_i eta_i = eta_i sigma_i already in the source group, and disjoint
  // indices commute; adjacent indices interact through the y decorations.
  for (int n = 3; n <= 5; ++n) {
    Representation rep = thetaGstar(n);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) == 1) continue;
        Endomorphism s = rep.of(BraidWord(n, {{BraidKind::Sigma, i, 1}}));
        Endomorphism h = rep.of(eta(j, n));
        CHECK(compose(s, h) == compose(h, s));
      }
  }
}

TEST_CASE("gauss image") {
  CHECK(gauss_image(BraidWord(3, {})).is_identity());
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      GaussImage gs = gauss_image(BraidWord(n, {{BraidKind::Sigma, i, 1}}));
      CHECK(gs.on_x == Permutation::transposition(n, i, i + 1));
      CHECK(gs.on_y.is_identity());
      GaussImage ge = gauss_image(eta(i, n));
      CHECK(ge.on_x.is_identity());
      CHECK(ge.on_y == Permutation::transposition(n, i, i + 1));
    }
  std::mt19937 rng(47);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<BraidLetter> ls;
    int len = static_cast<int>(rng() % 14);
    for (int k = 0; k < len; ++k)
      ls.push_back({(rng() % 2) ? BraidKind::Sigma : BraidKind::Rho,
                    1 + static_cast<int>(rng() % (n - 1)),
                    (rng() % 2) ? 1 : -1});
    BraidWord b(n, std::move(ls));
    GaussImage g = gauss_image(b);
    CHECK(g.on_x == iota1(b));
    CHECK(g.on_y == iota2(b));
  }
}

TEST_CASE("switch equations") {
  SwitchReport r = switch_axiom_check();
  CHECK(r.yang_baxter);
  CHECK(r.v_involution);
  CHECK(r.mixed);
  CHECK(r.all_hold());
}

TEST_CASE("relation report rendering") {
  RelationReport report = verify_defining_relations(theta(3), BraidMode::FVB);
  std::string s = report.str();
  CHECK(s.find("sigma-braid") != std::string::npos);
  CHECK(s.find("forbidden-1") != std::string::npos);
  CHECK(s.find("all defining relations hold") != std::string::npos);
}
