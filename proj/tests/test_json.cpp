#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spechtweb/json_io.hpp"

using namespace spechtweb;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("tableau wire format") {
  Tableau t(2, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(dump(to_json(t)) == read_file("tableau.json"));
  CHECK(tableau_from_json(to_json(t)) == t);
  CHECK(tableau_from_text("1,2/3,4/5,6") == t);
  CHECK(tableau_from_text(dump(to_json(t))) == t);
  CHECK_THROWS_AS(tableau_from_text("1,2/3,4"), std::invalid_argument);
}

TEST_CASE("fork diagram wire format") {
  ForkDiagram d = ForkDiagram::from_triples({{2, 3, 4}, {1, 5, 6}});
  CHECK(dump(to_json(d)) == read_file("fork.json"));
  CHECK(fork_from_json(to_json(d)) == d);
}

TEST_CASE("matrix wire format") {
  TransitionMatrix m = transition_matrix(Basis::P, Basis::M, 2);
  Json j = to_json(m);
  CHECK(j == Json::parse(read_file("matrix_p_to_m_n2.json")));
  // byte determinism
  CHECK(dump(j) == dump(Json::parse(dump(j))));
}

TEST_CASE("web round trip") {
  Web w0 = tripod_row(2);
  Web back = web_from_json(to_json(w0));
  CHECK(back.canonical_encoding() == w0.canonical_encoding());
  WebSum s = web_of_fork(ForkDiagram::from_triples({{1, 3, 5}, {2, 4, 6}}));
  Json js = to_json(s);
  CHECK(js.at("terms").size() == s.size());
  // parse each term back and compare keys
  for (const auto& jt : js.at("terms")) {
    Web w = web_from_json(jt.at("web"));
    CHECK(s.coeff(w.canonical_encoding()) == Int(jt.at("coeff").get<long long>()));
  }
}

TEST_CASE("expansion serialisation") {
  ForkDiagram v2 = ForkDiagram::from_triples({{1, 3, 4}, {2, 5, 6}});
  Json j = to_json(expand_in_m(v2), 2);
  CHECK(j.at("terms").size() == 3);
  CHECK(dump(j) == dump(Json::parse(dump(j))));
}
