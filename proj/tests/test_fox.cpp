#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fvb/fox.hpp"

using namespace fvb;

namespace {
BraidWord B(const char* text, int n) { return parse_braid(text, n); }

LaurentPoly cpoly(const std::vector<std::string>& vars, long long c) {
  return LaurentPoly::constant(vars, c);
}
}  // namespace

TEST_CASE("fox derivative rules") {
  auto a = xy_alphabet(2);
  Word x1 = Word::parse(a, "x1");
  CHECK(fox_derivative(x1, "x1") == GroupRingElement::one(a));
  CHECK(fox_derivative(Word::parse(a, "x1^-1"), "x1") ==
        -GroupRingElement::of_word(Word::parse(a, "x1^-1")));
  CHECK(fox_derivative(Word::parse(a, "x1 x2"), "x2") ==
        GroupRingElement::of_word(x1));
  CHECK(fox_derivative(Word::parse(a, "x1 x2"), "y1").is_zero());
  CHECK_THROWS_AS(fox_derivative(Word::parse(xyz_graph_alphabet(2), "x1"),
                                 "x1"),
                  domain_error);
}

TEST_CASE("fundamental fox identity") {
  auto a = xy_alphabet(2);
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> sym(0, a->size() - 1), sgn(0, 1);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng() % 13);
    for (int k = 0; k < len; ++k) raw.push_back({sym(rng), sgn(rng) ? 1 : -1});
    Word w = Word::normalize(a, raw);
    GroupRingElement sum(a);
    for (int j = 0; j < a->size(); ++j) {
      GroupRingElement xj_minus_1(a);
      xj_minus_1.add(letter_word(a, a->name(j)), 1);
      xj_minus_1.add(Word(a), -1);
      sum = sum + fox_derivative(w, j) * xj_minus_1;
    }
    GroupRingElement expect(a);
    expect.add(w, 1);
    expect.add(Word(a), -1);
    CHECK(sum == expect);
  }
}

TEST_CASE("abelianize") {
  auto a = xy_alphabet(2);
  MonomialAssignment gen = generic_xy_assignment(2);
  CHECK(abelianize(GroupRingElement::one(a), gen).is_constant(1));
  GroupRingElement g(a);
  g.add(Word::parse(a, "x1^-1"), -1);
  LaurentPoly p = abelianize(g, gen);
  CHECK(p.str() == "-p1^-1");
  GroupRingElement h(a);
  h.add(Word::parse(a, "x1 y2"), 1);
  h.add(Word::parse(a, "y2 x1"), 1);  // same abelianized monomial
  CHECK(abelianize(h, gen).str() == "2 p1 q2");
}

TEST_CASE("magnus matrix") {
  Representation th = theta(2);
  MonomialAssignment std2 = standard_xy_assignment(2);
  CHECK(magnus_matrix(Endomorphism::identity(th.target()), std2)
            .is_identity());
  // specialized sigma_1 matrix in block (x1,x2,y1,y2) order
  RingMatrix m =
      magnus_matrix(th.of(B("s1", 2)), std2);
  auto P = [&](int e, long long c) {
    return LaurentPoly::monomial({"p"}, {e}, c);
  };
  CHECK(m.at(0, 1) == P(0, 1));   // d(x2 y2)/dx2 = 1
  CHECK(m.at(0, 3) == P(1, 1));   // d(x2 y2)/dy2 -> p
  CHECK(m.at(1, 0) == P(0, 1));
  CHECK(m.at(1, 3) == P(1, -1));  // d(x1 y2^-1)/dy2 -> -p
  CHECK(m.at(2, 2) == P(0, 1));
  // rho_i gives the block permutation swapping x- and y-rows i, i+1
  RingMatrix r = magnus_matrix(th.of(B("r1", 2)), std2);
  CHECK(r.at(0, 1) == P(0, 1));
  CHECK(r.at(1, 0) == P(0, 1));
  CHECK(r.at(2, 3) == P(0, 1));
  CHECK(r.at(3, 2) == P(0, 1));
  CHECK(r.at(0, 0).is_zero());
}

TEST_CASE("linear theta matches the printed block") {
  LinearRep th = linear_theta(2);
  const RingMatrix& s1 = th.sigma[0];
  // interleaved basis (e1, f1, e2, f2); rows are basis images
  long long expect[4][4][2] = {
      // {constant coeff, p coeff} per entry
      {{0, 0}, {0, 0}, {1, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {0, 0}, {0, 0}},
      {{1, 0}, {0, 0}, {0, 0}, {0, -1}},
      {{0, 0}, {0, 0}, {0, 0}, {1, 0}},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      LaurentPoly want({"p"});
      want.add_term({0}, expect[i][j][0]);
      want.add_term({1}, expect[i][j][1]);
      CHECK(s1.at(i, j) == want);
    }
  for (size_t i = 0; i < th.rho.size(); ++i)
    CHECK((th.rho[i] * th.rho[i]).is_identity());
}

TEST_CASE("linear delta matches the printed block") {
  LinearRep dl = linear_delta(2);
  const RingMatrix& s1 = dl.sigma[0];
  long long expect_s[6][6] = {
      {0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0},
  };
  const RingMatrix& r1 = dl.rho[0];
  long long expect_r[6][6] = {
      {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(s1.at(i, j) == cpoly({}, expect_s[i][j]));
      CHECK(r1.at(i, j) == cpoly({}, expect_r[i][j]));
    }
  CHECK((s1 * s1).is_identity());
  CHECK((r1 * r1).is_identity());
}

TEST_CASE("apply_linear") {
  LinearRep dl = linear_delta(3);
  CHECK(apply_linear(dl, BraidWord(3, {})).is_identity());
  // (Delta(rho_1 sigma_2))^6 maps e_1 to e_1 - 2 g_2 + 2 g_3
  RingMatrix m = apply_linear(dl, braid_pow(B("r1 s2", 3), 6));
  for (int j = 0; j < 9; ++j) {
    long long want = 0;
    if (j == 0) want = 1;        // e1
    if (j == 3 + 2) want = -2;   // g2
    if (j == 6 + 2) want = 2;    // g3
    CHECK(m.at(0, j) == cpoly({}, want));
  }
  CHECK(!m.is_identity());
  // Theta kills the same element
  CHECK(apply_linear(linear_theta(3), braid_pow(B("r1 s2", 3), 6))
            .is_identity());
  CHECK_THROWS_AS(apply_linear(dl, BraidWord(2, {})), input_error);
}

TEST_CASE("delta kernel witness for every index") {
  for (int n = 3; n <= 6; ++n) {
    LinearRep dl = linear_delta(n);
    for (int i = 1; i <= n - 2; ++i) {
      BraidWord b = braid_pow(
          BraidWord(n, {{BraidKind::Rho, i, 1}, {BraidKind::Sigma, i + 1, 1}}),
          6);
      RingMatrix m = apply_linear(dl, b);
      int e_i = 3 * (i - 1);
      for (int j = 0; j < 3 * n; ++j) {
        long long want = 0;
        if (j == e_i) want = 1;
        if (j == 3 * i + 2) want = -2;        // g_{i+1}
        if (j == 3 * (i + 1) + 2) want = 2;   // g_{i+2}
        CHECK(m.at(e_i, j) == cpoly({}, want));
      }
    }
  }
}

namespace {
RelationReport verify_linear(const LinearRep& rep, BraidMode mode) {
  auto witness = [](const RingMatrix& l, const RingMatrix& r) {
    for (int i = 0; i < l.rows(); ++i)
      for (int j = 0; j < l.cols(); ++j)
        if (!(l.at(i, j) == r.at(i, j)))
          return "entry (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")";
    return std::string();
  };
  return verify_relations(
      rep.name, rep.n, mode,
      [&](const BraidWord& b) { return apply_linear(rep, b); }, witness);
}
}  // namespace

TEST_CASE("linear relation suite") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(verify_linear(linear_theta(n), BraidMode::FVB).all_defining_hold());
    RelationReport dl = verify_linear(linear_delta(n), BraidMode::FVB);
    CHECK(dl.all_defining_hold());
    if (n >= 3) CHECK(dl.any_forbidden_fails());
    CHECK(verify_linear(linear_theta_delta(n), BraidMode::FVB)
              .all_defining_hold());
  }
}

TEST_CASE("delta forbidden witness is the f basis vector") {
  LinearRep dl = linear_delta(3);
  RingMatrix m = apply_linear(dl, B("r1 s2 s1", 3));
  // row of f_1 must be f_2
  for (int j = 0; j < 9; ++j)
    CHECK(m.at(1, j) == cpoly({}, j == 4 ? 1 : 0));
  RingMatrix m2 = apply_linear(dl, B("s2 s1 r2", 3));
  for (int j = 0; j < 9; ++j)
    CHECK(m2.at(1, j) == cpoly({}, j == 1 ? 1 : 0));
}

TEST_CASE("generic magnus check") {
  GenericMagnusReport rep = generic_magnus_check(3);
  CHECK(!rep.generic.all_defining_hold());
  bool braid_fails = false;
  for (const RelationCheck& c : rep.generic.checks)
    if (c.family == RelationFamily::SigmaBraid && !c.holds) braid_fails = true;
  CHECK(braid_fails);
  CHECK(rep.specialized.all_defining_hold());
  GenericMagnusReport rep2 = generic_magnus_check(2);
  CHECK(rep2.specialized.all_defining_hold());
  CHECK_THROWS_AS(generic_magnus_check(5), input_error);
}

TEST_CASE("chain rule under the preserved assignment") {
  Representation th = theta(3);
  MonomialAssignment std3 = standard_xy_assignment(3);
  std::mt19937 rng(59);
  for (int t = 0; t < 40; ++t) {
    std::vector<BraidLetter> ls1, ls2;
    for (int k = 0; k < 5; ++k) {
      ls1.push_back({(rng() % 2) ? BraidKind::Sigma : BraidKind::Rho,
                     1 + static_cast<int>(rng() % 2), 1});
      ls2.push_back({(rng() % 2) ? BraidKind::Sigma : BraidKind::Rho,
                     1 + static_cast<int>(rng() % 2), 1});
    }
    Endomorphism e1 = th.of(BraidWord(3, ls1)), e2 = th.of(BraidWord(3, ls2));
    CHECK(magnus_matrix(compose(e1, e2), std3) ==
          magnus_matrix(e1, std3) * magnus_matrix(e2, std3));
  }
}

TEST_CASE("laurent ring laws") {
  std::mt19937 rng(61);
  std::vector<std::string> vars{"p", "q"};
  auto rand_poly = [&]() {
    LaurentPoly out(vars);
    int terms = static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k)
      out.add_term({static_cast<int>(rng() % 7) - 3,
                    static_cast<int>(rng() % 7) - 3},
                   static_cast<long long>(rng() % 9) - 4);
    return out;
  };
  for (int t = 0; t < 300; ++t) {
    LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == LaurentPoly(vars));
    LaurentPoly prod = (a + b) * c;
    for (const auto& [e, coef] : prod.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("kernel containment theta to Theta") {
  // every theta-kernel element encountered in the tests dies in Theta too
  Representation th = theta(4);
  LinearRep Th = linear_theta(4);
  std::mt19937 rng(67);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<BraidLetter> ls;
    for (int k = 0; k < 12; ++k)
      ls.push_back({(rng() % 2) ? BraidKind::Sigma : BraidKind::Rho,
                    1 + static_cast<int>(rng() % 3), 1});
    BraidWord b(4, std::move(ls));
    if (th.of(b).is_identity()) {
      ++found;
      CHECK(apply_linear(Th, b).is_identity());
    }
  }
  for (int i = 1; i <= 2; ++i) {
    BraidWord b = braid_pow(
        BraidWord(4, {{BraidKind::Rho, i, 1}, {BraidKind::Sigma, i + 1, 1}}),
        6);
    REQUIRE(th.of(b).is_identity());
    CHECK(apply_linear(Th, b).is_identity());
  }
}
