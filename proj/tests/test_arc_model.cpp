#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <annulus/arc.hpp>
#include <annulus/crossing.hpp>
#include <annulus/lift.hpp>
#include <annulus/surface.hpp>

#include "oracle_geometry.hpp"

using namespace annulus;

namespace {

std::vector<Arc> arc_universe(const Surface& s, int winding_bound) {
  std::vector<Arc> out;
  for (Boundary b : {Boundary::Lower, Boundary::Upper}) {
    if (points_on(s, b) < 2) continue;
    for (const Arc& a : enumerate_peripheral_arcs(s, b)) out.push_back(a);
  }
  for (const Arc& a : enumerate_strict_arcs(s)) out.push_back(a);
  if (s.q >= 1)
    for (const Arc& a : enumerate_bridging_arcs(s, -winding_bound, winding_bound))
      out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("strict arc enumeration") {
  CHECK(enumerate_strict_arcs({1, 1}).size() == 4);
  CHECK(enumerate_strict_arcs({3, 0}).size() == 6);

  auto arcs = enumerate_strict_arcs({2, 1});
  REQUIRE(arcs.size() == 6);
  int lower_pruefer = 0, lower_adic = 0, upper = 0;
  for (const Arc& a : arcs) {
    if (based_at(a) == Boundary::Lower) {
      if (spiral_sign(a) > 0)
        ++lower_pruefer;
      else
        ++lower_adic;
    } else {
      ++upper;
    }
  }
  CHECK(lower_pruefer == 2);
  CHECK(lower_adic == 2);
  CHECK(upper == 2);
}

TEST_CASE("peripheral arc enumeration") {
  CHECK(enumerate_peripheral_arcs({1, 1}, Boundary::Lower).empty());
  CHECK(enumerate_peripheral_arcs({1, 1}, Boundary::Upper).empty());

  auto two = enumerate_peripheral_arcs({2, 0}, Boundary::Lower);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Arc{Peripheral{Boundary::Lower, 0, 2}});
  CHECK(two[1] == Arc{Peripheral{Boundary::Lower, 1, 2}});

  CHECK(enumerate_peripheral_arcs({3, 0}, Boundary::Lower).size() == 6);
  CHECK(enumerate_peripheral_arcs({4, 2}, Boundary::Upper).size() == 2);
  CHECK_THROWS_AS(enumerate_peripheral_arcs({3, 0}, Boundary::Upper), std::invalid_argument);
}

TEST_CASE("bridging arc enumeration") {
  auto three = enumerate_bridging_arcs({1, 1}, -1, 1);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Arc{Bridging{0, 0, -1}});
  CHECK(three[2] == Arc{Bridging{0, 0, 1}});

  CHECK(enumerate_bridging_arcs({2, 1}, 0, 0).size() == 2);
  CHECK_THROWS_WITH(enumerate_bridging_arcs({1, 0}, -1, 1), "tube has no bridging arcs");
  CHECK_THROWS_AS(enumerate_bridging_arcs({1, 1}, 1, 0), std::invalid_argument);
}

TEST_CASE("arc validity") {
  Surface s{3, 2};
  CHECK_NOTHROW(check_arc(s, Peripheral{Boundary::Lower, 2, 3}));
  CHECK_THROWS_AS(check_arc(s, Peripheral{Boundary::Lower, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc(s, Peripheral{Boundary::Lower, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc(s, Peripheral{Boundary::Lower, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc(s, Peripheral{Boundary::Upper, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc(s, Bridging{0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc({2, 0}, Bridging{0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc({2, 0}, Pruefer{Boundary::Upper, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_arc(s, Adic{Boundary::Upper, 2}), std::invalid_argument);
}

TEST_CASE("canonical arc order") {
  std::vector<Arc> arcs = {Adic{Boundary::Lower, 0}, Pruefer{Boundary::Upper, 0},
                           Pruefer{Boundary::Lower, 1}, Bridging{0, 0, -2},
                           Peripheral{Boundary::Upper, 0, 2}, Peripheral{Boundary::Lower, 1, 2}};
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs[0] == Arc{Peripheral{Boundary::Lower, 1, 2}});
  CHECK(arcs[1] == Arc{Peripheral{Boundary::Upper, 0, 2}});
  CHECK(arcs[2] == Arc{Bridging{0, 0, -2}});
  CHECK(arcs[3] == Arc{Pruefer{Boundary::Lower, 1}});
  CHECK(arcs[4] == Arc{Pruefer{Boundary::Upper, 0}});
  CHECK(arcs[5] == Arc{Adic{Boundary::Lower, 0}});
}

TEST_CASE("crossing rules on the worked cases") {
  Surface s11{1, 1};
  CHECK_FALSE(crosses(s11, Bridging{0, 0, 0}, Bridging{0, 0, 1}));
  CHECK(crosses(s11, Bridging{0, 0, 0}, Bridging{0, 0, 2}));
  CHECK_FALSE(crosses(s11, Pruefer{Boundary::Lower, 0}, Adic{Boundary::Upper, 0}));

  Surface s30{3, 0};
  CHECK(crosses(s30, Peripheral{Boundary::Lower, 0, 2}, Pruefer{Boundary::Lower, 1}));
  CHECK_FALSE(crosses(s30, Peripheral{Boundary::Lower, 0, 2}, Pruefer{Boundary::Lower, 0}));
  CHECK_FALSE(crosses(s30, Peripheral{Boundary::Lower, 0, 2}, Pruefer{Boundary::Lower, 2}));

  // Spirals with one base point cross iff their signs differ.
  CHECK(crosses(s30, Pruefer{Boundary::Lower, 1}, Adic{Boundary::Lower, 1}));
  CHECK(crosses(s30, Pruefer{Boundary::Lower, 0}, Adic{Boundary::Lower, 2}));
  CHECK_FALSE(crosses(s30, Pruefer{Boundary::Lower, 0}, Pruefer{Boundary::Lower, 2}));

  // Full-wrap peripheral arcs shield their interior points only.
  CHECK(crosses(s30, Peripheral{Boundary::Lower, 1, 3}, Pruefer{Boundary::Lower, 0}));
  CHECK_FALSE(crosses(s30, Peripheral{Boundary::Lower, 1, 3}, Adic{Boundary::Lower, 1}));

  Surface s22{2, 2};
  CHECK_FALSE(crosses(s22, Peripheral{Boundary::Lower, 0, 2}, Peripheral{Boundary::Upper, 0, 2}));
  CHECK_FALSE(crosses(s22, Pruefer{Boundary::Lower, 0}, Adic{Boundary::Upper, 1}));
  CHECK(crosses(s22, Bridging{0, 0, 0}, Pruefer{Boundary::Lower, 0}));
  CHECK(crosses(s22, Bridging{0, 0, 0}, Adic{Boundary::Upper, 1}));
}

TEST_CASE("peripheral interleaving") {
  Surface s{4, 0};
  Boundary L = Boundary::Lower;
  CHECK(crosses(s, Peripheral{L, 0, 2}, Peripheral{L, 1, 2}));
  CHECK_FALSE(crosses(s, Peripheral{L, 0, 2}, Peripheral{L, 2, 2}));
  CHECK_FALSE(crosses(s, Peripheral{L, 0, 3}, Peripheral{L, 0, 2}));   // nested, shared base
  CHECK_FALSE(crosses(s, Peripheral{L, 0, 3}, Peripheral{L, 1, 2}));   // nested strictly
  CHECK(crosses(s, Peripheral{L, 0, 3}, Peripheral{L, 2, 3}));
  CHECK_FALSE(crosses(s, Peripheral{L, 0, 4}, Peripheral{L, 0, 2}));   // wrap vs inner at base
  CHECK(crosses(s, Peripheral{L, 0, 4}, Peripheral{L, 1, 4}));         // two wraps, distinct base
  CHECK_FALSE(crosses(s, Peripheral{L, 0, 2}, Peripheral{L, 2, 4}));   // complementary endpoints
}

TEST_CASE("dehn twist on arcs") {
  Surface s{3, 2};
  Arc per = Peripheral{Boundary::Lower, 0, 2};
  CHECK(dehn_twist_arc(s, per, 1) == per);
  CHECK(dehn_twist_arc(s, Bridging{2, 1, 5}, 1) == Arc{Bridging{2, 1, 6}});
  Arc pr = Pruefer{Boundary::Lower, 0};
  CHECK(dehn_twist_arc(s, pr, 1) == pr);

  // group law
  for (const Arc& a : arc_universe(s, 2))
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k)
        CHECK(dehn_twist_arc(s, dehn_twist_arc(s, a, k), j) == dehn_twist_arc(s, a, j + k));
}

TEST_CASE("arc limits") {
  Surface s{3, 2};
  auto plus = limit_arc(s, Bridging{2, 1, 5}, LimitSign::Plus);
  REQUIRE(plus.size() == 2);
  CHECK(plus[0] == Arc{Pruefer{Boundary::Lower, 2}});
  CHECK(plus[1] == Arc{Pruefer{Boundary::Upper, 1}});

  auto minus = limit_arc(s, Bridging{2, 1, 5}, LimitSign::Minus);
  REQUIRE(minus.size() == 2);
  CHECK(minus[0] == Arc{Adic{Boundary::Lower, 2}});
  CHECK(minus[1] == Arc{Adic{Boundary::Upper, 1}});

  Arc per = Peripheral{Boundary::Lower, 0, 2};
  CHECK(limit_arc(s, per, LimitSign::Minus) == std::vector<Arc>{per});
  Arc ad = Adic{Boundary::Lower, 0};
  CHECK(limit_arc(s, ad, LimitSign::Plus) == std::vector<Arc>{ad});
}

TEST_CASE("crossing symmetry and twist equivariance") {
  for (Surface s : {Surface{2, 1}, Surface{1, 2}, Surface{2, 2}, Surface{3, 0}}) {
    auto universe = arc_universe(s, 2);
    for (const Arc& a : universe)
      for (const Arc& b : universe) {
        bool ab = crosses(s, a, b);
        CHECK(ab == crosses(s, b, a));
        for (int k : {-5, -2, 1, 5})
          CHECK(ab == crosses(s, dehn_twist_arc(s, a, k), dehn_twist_arc(s, b, k)));
      }
  }
}

TEST_CASE("bridging arcs with shared endpoints") {
  Surface s{2, 3};
  for (int l = 0; l < 2; ++l)
    for (int u = 0; u < 3; ++u)
      for (int w1 = -3; w1 <= 3; ++w1)
        for (int w2 = -3; w2 <= 3; ++w2) {
          bool expect = std::abs(w1 - w2) >= 2;
          CHECK(crosses(s, Bridging{l, u, w1}, Bridging{l, u, w2}) == expect);
        }
}

TEST_CASE("bridging arcs cross every spiral") {
  Surface s{2, 2};
  for (const Arc& b : enumerate_bridging_arcs(s, -2, 2))
    for (const Arc& st : enumerate_strict_arcs(s)) CHECK(crosses(s, b, st));
}

TEST_CASE("arc text round-trip") {
  Surface s{3, 2};
  for (const Arc& a : arc_universe(s, 3)) CHECK(parse_arc(format_arc(a)) == a);
  CHECK(format_arc(Peripheral{Boundary::Upper, 1, 2}) == "P U 1 2");
  CHECK(format_arc(Bridging{0, 1, -2}) == "B 0 1 -2");
  CHECK(format_arc(Pruefer{Boundary::Lower, 2}) == "Pr L 2");
  CHECK(format_arc(Adic{Boundary::Upper, 0}) == "Ad U 0");
  CHECK_THROWS_AS(parse_arc("Q L 0 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arc("P X 0 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arc("P L 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arc("B 0 0 1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_arc(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_arc("Pr L x"), std::invalid_argument);
}

TEST_CASE("lift charts") {
  Surface s{2, 3};
  LiftChart c = lift_chart(s, Peripheral{Boundary::Lower, 1, 2});
  auto& pl = std::get<PeripheralLift>(c);
  CHECK(pl.start == Rat(1, 2));
  CHECK(pl.end == Rat(3, 2));

  auto bl = std::get<BridgingLift>(lift_chart(s, Bridging{1, 2, -1}));
  CHECK(bl.lower_x == Rat(1, 2));
  CHECK(bl.upper_x == Rat(2, 3) - Rat(1));

  auto sp = std::get<SpiralLift>(lift_chart(s, Pruefer{Boundary::Upper, 1}));
  CHECK(sp.base == Rat(1, 3));
  CHECK(sp.direction == -1);
  auto sa = std::get<SpiralLift>(lift_chart(s, Adic{Boundary::Lower, 0}));
  CHECK(sa.direction == -1);
}

TEST_CASE("rule set agrees with the polyline oracle at small scale") {
  // Full range (p, q <= 3, windings in [-3, 3]) runs in the acceptance suite.
  for (Surface s : {Surface{1, 1}, Surface{2, 1}, Surface{2, 2}, Surface{1, 2}, Surface{2, 0},
                    Surface{3, 0}}) {
    auto universe = arc_universe(s, 2);
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (std::size_t j = i; j < universe.size(); ++j) {
        bool expected = testoracle::crosses(s, universe[i], universe[j]);
        bool got = crosses(s, universe[i], universe[j]);
        INFO("surface (" << s.p << "," << s.q << ") arcs " << format_arc(universe[i]) << " | "
                         << format_arc(universe[j]));
        CHECK(got == expected);
      }
  }
}
