#include <doctest.h>

#include <algorithm>

#include "spechtweb/webs.hpp"

using namespace spechtweb;
using WB = WebBuilder;

namespace {

ForkDiagram fd(std::vector<std::array<int, 3>> triples) {
  return ForkDiagram::from_triples(triples);
}

WebSum single(const Web& w, long long c = 1) {
  WebSum s;
  s.add(w, c);
  return s;
}

// Sources joined to one central sink, legs {1,2}, {3,4}, {5,6}: the
// fork-join summand of the tripod row stacked with the (3,4) swap.
Web triple_join() {
  WB b(6);
  b.source({WB::B(2), WB::E(1), WB::B(1)});
  b.source({WB::B(4), WB::E(2), WB::B(3)});
  b.source({WB::B(6), WB::E(3), WB::B(5)});
  b.sink({WB::E(1), WB::E(2), WB::E(3)});
  return b.build();
}

}  // namespace

TEST_CASE("tripod row is already reduced") {
  Web w0 = tripod_row(2);
  w0.validate();
  CHECK(is_non_elliptic(w0));
  CHECK(reduce(w0) == single(w0));
  CHECK(web_of_fork(fd({{1, 2, 3}, {4, 5, 6}})) == single(w0));
  CHECK(web_of_fork(fd({{1, 2, 3}})) == single(tripod_row(1)));
}

TEST_CASE("circle components evaluate to 3") {
  Web empty = Web::from_parts(0, 0, {}, {});
  CHECK(reduce(Web::from_parts(0, 1, {}, {})) == single(empty, 3));
  CHECK(reduce(Web::from_parts(0, 2, {}, {})) == single(empty, 9));
}

TEST_CASE("bigon contributes -2") {
  WB b(3);
  b.source({WB::B(2), WB::B(3), WB::E(1)});
  b.sink({WB::E(1), WB::E(2), WB::E(3)});
  b.source({WB::E(2), WB::B(1), WB::E(3)});
  Web w = b.build();
  CHECK_FALSE(is_non_elliptic(w));
  auto sizes = reducible_face_sizes(w);
  CHECK(std::count(sizes.begin(), sizes.end(), 2) == 1);
  CHECK(reduce(w) == single(tripod_row(1), -2));
}

TEST_CASE("canonical encoding is construction-order invariant") {
  WB b(6);
  b.source({WB::B(5), WB::B(6), WB::B(4)});
  b.source({WB::B(2), WB::B(3), WB::B(1)});
  CHECK(b.build().canonical_encoding() == tripod_row(2).canonical_encoding());
}

TEST_CASE("mirror image is a different web") {
  WebSum m2 = web_of_fork(fd({{2, 3, 4}, {1, 5, 6}}));
  WebSum m3 = web_of_fork(fd({{1, 2, 6}, {3, 4, 5}}));
  REQUIRE(m2.size() == 1);
  REQUIRE(m3.size() == 1);
  const Web& w2 = m2.terms().begin()->second.web;
  // mirror: positions p -> 7-p, rotations reversed
  WB b(6);
  b.source({WB::B(5), WB::B(3), WB::B(4)});
  b.source({WB::B(6), WB::B(1), WB::B(2)});
  Web mirrored = b.build();
  CHECK(mirrored.canonical_encoding() != w2.canonical_encoding());
  CHECK(mirrored.canonical_encoding() == m3.terms().begin()->second.web.canonical_encoding());
}

TEST_CASE("stacked swap on one fork gives the sign") {
  Web w0 = tripod_row(2);
  WebSum acted = act_web(w0, 1);  // both points on the first fork
  CHECK(acted == single(w0, -1));
  CHECK(act_web(acted, 1) == single(w0));
}

TEST_CASE("stacked swap across two forks") {
  Web w0 = tripod_row(2);
  WebSum acted = act_web(w0, 3);
  WebSum expected = single(w0);
  expected.add(triple_join(), 1);
  CHECK(acted == expected);
  CHECK(act_web(acted, 3) == single(w0));
}

TEST_CASE("resolve_crossing produces the two skein terms") {
  CrossingDiagram cd = stack_crossing(tripod_row(2), 3);
  CHECK(cd.crossing_count() == 1);
  CHECK_THROWS_AS(resolve_crossing(cd, 1), std::invalid_argument);
  auto [fork_join_term, uncross_term] = resolve_crossing(cd, 0);
  CHECK(fork_join_term.crossing_count() == 0);
  CHECK(uncross_term.crossing_count() == 0);
  CHECK(uncross_term.canonical_encoding() == tripod_row(2).canonical_encoding());
  CHECK(reduce(fork_join_term) == single(triple_join()));
  CHECK(reduce(uncross_term) == single(tripod_row(2)));
}

TEST_CASE("double crossing cancels") {
  // Reidemeister II with parallel strands, as an explicit crossing diagram.
  CrossingDiagram cd = stack_crossing(stack_crossing(tripod_row(2), 3), 3);
  CHECK(cd.crossing_count() == 2);
  CHECK(resolve_and_reduce(cd, 1) == single(tripod_row(2)));
}

TEST_CASE("square rewrite") {
  // Stacking the (2,3) swap under the triple join creates a square face in
  // the fork-join summand.
  Web tj = triple_join();
  auto [fj, unc] = resolve_crossing(stack_crossing(tj, 2), 0);
  auto sizes = reducible_face_sizes(fj);
  REQUIRE(std::count(sizes.begin(), sizes.end(), 4) >= 1);
  WebSum after = reduce(fj);
  CHECK(after.size() == 2);
  for (const auto& [k, t] : after.terms()) {
    CHECK(t.coeff == 1);
    CHECK(is_non_elliptic(t.web));
  }
  WebSum acted = act_web(tj, 2);
  WebSum expected = single(tj);
  expected.add(tripod_row(2), 1);
  WebSum m2web = web_of_fork(fd({{2, 3, 4}, {1, 5, 6}}));
  expected.add(m2web.terms().begin()->second.web, 1);
  CHECK(acted == expected);
  CHECK(act_web(acted, 2) == single(tj));
}

TEST_CASE("kink evaluates to the plain strand") {
  // A strand crossing itself once, both chiralities, on the stem of a
  // tripod: 3 - 2 = 1 copy of the tripod.
  for (bool left : {true, false}) {
    WB b(3);
    b.source({WB::E(1), WB::B(3), WB::B(1)});
    if (left)
      b.crossing({WB::B(2), WB::E(1), WB::E(2), WB::E(2)}, {true, false, false, true});
    else
      b.crossing({WB::B(2), WB::E(2), WB::E(2), WB::E(1)}, {true, true, false, false});
    Web w = b.build();
    CHECK(w.crossing_count() == 1);
    CHECK(resolve_and_reduce(w, 1) == single(tripod_row(1)));
  }
}

TEST_CASE("antiparallel double crossing cancels") {
  // The arch of (1,5,6) dips under the right leg of (2,3,4) and back out:
  // two crossings of oppositely directed strands.
  WB b(6);
  b.source({WB::B(3), WB::E(1), WB::B(2)});                            // fork over 3
  b.source({WB::B(5), WB::B(6), WB::E(4)});                            // fork over 5
  b.crossing({WB::E(4), WB::E(2), WB::E(5), WB::B(4)}, {false, false, true, true});
  b.crossing({WB::B(1), WB::E(1), WB::E(5), WB::E(2)}, {true, false, false, true});
  Web w = b.build();
  CHECK(w.crossing_count() == 2);
  WebSum nested = web_of_fork(fd({{2, 3, 4}, {1, 5, 6}}));
  CHECK(resolve_and_reduce(w, 1) == nested);
}

TEST_CASE("strand slides across a whole fork") {
  // The arch of (1,5,6) drawn through the wedges of the fork (2,3,4),
  // crossing its three legs once each, equals the canonical nested picture.
  WB b(6);
  b.source({WB::E(6), WB::E(8), WB::E(4)});                            // fork over 3
  b.source({WB::B(5), WB::B(6), WB::E(3)});                            // fork over 5
  b.crossing({WB::E(1), WB::E(4), WB::B(1), WB::B(2)}, {false, false, true, true});
  b.crossing({WB::E(2), WB::E(6), WB::E(1), WB::B(3)}, {false, false, true, true});
  b.crossing({WB::E(3), WB::E(8), WB::E(2), WB::B(4)}, {false, false, true, true});
  Web slid = b.build();
  CHECK(slid.crossing_count() == 3);
  WebSum nested = web_of_fork(fd({{2, 3, 4}, {1, 5, 6}}));
  CHECK(resolve_and_reduce(slid, 1) == nested);
}

TEST_CASE("fork diagram values") {
  WebSum m0 = web_of_fork(fd({{1, 2, 3}, {4, 5, 6}}));
  CHECK(m0 == single(tripod_row(2)));
  WebSum m4 = web_of_fork(fd({{1, 4, 5}, {2, 3, 6}}));
  CHECK(m4.size() == 2);
  CHECK(m4.coeff(tripod_row(2).canonical_encoding()) == 1);
  WebSum v4 = web_of_fork(fd({{1, 3, 5}, {2, 4, 6}}));
  CHECK(v4.size() == 5);
  for (const auto& [k, t] : v4.terms()) CHECK(is_non_elliptic(t.web));
}

TEST_CASE("leading webs of M-diagrams") {
  Web top4 = top_web(fd({{1, 4, 5}, {2, 3, 6}}));
  CHECK(is_non_elliptic(top4));
  CHECK(top4.canonical_encoding() != tripod_row(2).canonical_encoding());
  WebSum value = web_of_fork(fd({{1, 4, 5}, {2, 3, 6}}));
  CHECK(value.coeff(top4.canonical_encoding()) == 1);
  CHECK_THROWS_AS(top_web(fd({{1, 3, 5}, {2, 4, 6}})), std::invalid_argument);
}

TEST_CASE("two construction routes agree") {
  for (int n : {1, 2}) {
    for (const ForkDiagram& d : enumerate_fork_diagrams(n))
      CHECK(web_of_fork(d) == web_of_fork_via_action(d));
  }
}

TEST_CASE("schedules do not change values") {
  ForkDiagram d = fd({{1, 3, 5}, {2, 4, 6}});
  WebSum base = web_of_fork(d);
  for (unsigned long seed : {7UL, 99UL, 1234UL}) CHECK(web_of_fork(d, Schedule(seed)) == base);
}

TEST_CASE("non-elliptic rejects crossing diagrams") {
  CrossingDiagram cd = stack_crossing(tripod_row(2), 2);
  CHECK_THROWS_AS(is_non_elliptic(cd), std::invalid_argument);
}
