#include <catch2/catch_amalgamated.hpp>

#include "semithue/graph.hh"
#include "support/corpus.hh"

using namespace semithue;
using namespace semithue::testing;

namespace {

// independent oracle: every single application, found by a hand-rolled
// match-and-splice that shares no code with the library path
std::set<SymbolString> naive_full_successors(const Grammar& g, const SymbolString& s) {
  std::set<SymbolString> out;
  for (const Production& p : g.productions()) {
    if (p.lhs.size() > s.size()) continue;
    for (std::size_t at = 0; at + p.lhs.size() <= s.size(); ++at) {
      bool match = true;
      for (std::size_t k = 0; k < p.lhs.size(); ++k)
        if (s[at + k] != p.lhs[k]) match = false;
      if (!match) continue;
      SymbolString next;
      for (std::size_t k = 0; k < at; ++k) next.push_back(s[k]);
      for (SymbolId id : p.rhs) next.push_back(id);
      for (std::size_t k = at + p.lhs.size(); k < s.size(); ++k) next.push_back(s[k]);
      out.insert(next);
    }
  }
  return out;
}

int production_index(const Grammar& g, const std::string& rendered) {
  for (const Production& p : g.productions())
    if (g.render(p) == rendered) return p.index;
  FAIL("no production " << rendered);
  return -1;
}

}  // namespace

TEST_CASE("occurrences") {
  Grammar g = g1();
  int bc_y = production_index(g, "B C -> y");
  int a_w = production_index(g, "A -> w");
  int ab_x = production_index(g, "A B -> x");

  auto occ = occurrences(g, bc_y, g.parse_string("A B C"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].start == 1);
  CHECK(occ[0].end == 3);

  occ = occurrences(g, a_w, g.parse_string("A B A"));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].start == 0);
  CHECK(occ[1].start == 2);

  CHECK(occurrences(g, ab_x, g.parse_string("B A")).empty());

  SECTION("overlapping matches are all reported") {
    Grammar h = parse_grammar("initial: A\nterminal: t\nA A -> t\n");
    auto all = occurrences(h, 0, h.parse_string("A A A"));
    REQUIRE(all.size() == 2);
    CHECK(all[0].start == 0);
    CHECK(all[1].start == 1);
  }
}

TEST_CASE("apply_at") {
  Grammar g = g1();
  SymbolString abc = g.parse_string("A B C");
  int bc_y = production_index(g, "B C -> y");
  int a_w = production_index(g, "A -> w");

  CHECK(g.render(apply_at(g, abc, {bc_y, 1, 3})) == "A y");
  CHECK(g.render(apply_at(g, abc, {a_w, 0, 1})) == "w B C");
  CHECK_THROWS_AS(apply_at(g, abc, Occurrence{bc_y, 0, 2}), std::invalid_argument);

  SECTION("applying the reversed production at the same start undoes the step") {
    Grammar d = dual(g);
    SymbolString stepped = apply_at(g, abc, {bc_y, 1, 3});  // A y
    // y -> B C sits at the same declaration position in the dual
    SymbolString back = apply_at(d, stepped, {bc_y, 1, 2});
    CHECK(back == abc);
  }

  SECTION("length arithmetic") {
    auto corpus = random_corpus(25, 99);
    for (const Grammar& g2 : corpus) {
      SymbolId start = g2.initial_symbols().front();
      StringGraph graph = transition_graph(g2, Relation::full(), {SymbolString{start}},
                                           {8, 6, 2000});
      for (const SymbolString& node : graph.nodes) {
        for (const Occurrence& o : all_occurrences(g2, node)) {
          const Production& p = g2.productions()[o.production];
          CHECK(apply_at(g2, node, o).size() ==
                node.size() - p.lhs.size() + p.rhs.size());
        }
      }
    }
  }
}

TEST_CASE("leftmost applicability") {
  Grammar g = g1();

  SECTION("operational mode follows the worked derivations") {
    auto occ = leftmost_applicable(g, g.parse_string("A B C"),
                                   ApplicabilityMode::operational);
    REQUIRE(occ.size() == 1);
    CHECK(g.render(g.productions()[occ[0].production]) == "A -> w");
    CHECK(occ[0].start == 0);

    occ = leftmost_applicable(g, g.parse_string("w B C"),
                              ApplicabilityMode::operational);
    REQUIRE(occ.size() == 1);
    CHECK(g.render(g.productions()[occ[0].production]) == "B C -> y");
    CHECK(occ[0].start == 1);

    Grammar d2 = dual(g2());
    occ = leftmost_applicable(d2, d2.parse_string("A B C"),
                              ApplicabilityMode::operational);
    REQUIRE(occ.size() == 1);
    CHECK(d2.render(d2.productions()[occ[0].production]) == "A B -> E");

    CHECK(leftmost_applicable(g, g.parse_string("w y"),
                              ApplicabilityMode::operational)
              .empty());
    CHECK(leftmost_applicable(g, g.parse_string("w y"), ApplicabilityMode::strict)
              .empty());
  }

  SECTION("strict mode can be vacuous where operational is not") {
    Grammar h = parse_grammar("initial: A\nterminal: x y\nB -> x\nA B -> y\n");
    SymbolString ab = h.parse_string("A B");
    CHECK(leftmost_applicable(h, ab, ApplicabilityMode::strict).empty());
    auto op = leftmost_applicable(h, ab, ApplicabilityMode::operational);
    REQUIRE(op.size() == 1);
    CHECK(h.render(h.productions()[op[0].production]) == "A B -> y");
    CHECK(op[0].start == 0);
  }

  SECTION("operational is never empty when occurrences exist, and the "
          "selected occurrences share one location") {
    auto corpus = random_corpus(40, 4242);
    for (const Grammar& g2 : corpus) {
      SymbolId start = g2.initial_symbols().front();
      StringGraph graph = transition_graph(g2, Relation::full(), {SymbolString{start}},
                                           {7, 5, 1000});
      for (const SymbolString& node : graph.nodes) {
        auto all = all_occurrences(g2, node);
        auto op = leftmost_applicable(g2, node, ApplicabilityMode::operational);
        CHECK(op.empty() == all.empty());
        for (const Occurrence& o : op) {
          CHECK(o.start == op.front().start);
          CHECK(o.end == op.front().end);
        }
        // strict selections, when any, agree with some operational choice
        for (const Occurrence& o :
             leftmost_applicable(g2, node, ApplicabilityMode::strict))
          CHECK(std::find(all.begin(), all.end(), o) != all.end());
      }
    }
  }
}

TEST_CASE("successor relations") {
  Grammar g = g1();

  SECTION("leftmost successors") {
    CHECK(rendered(g, leftmost_successors(g, g.parse_string("A B C"),
                                          ApplicabilityMode::operational)) ==
          std::set<std::string>{"w B C"});
    Grammar d2 = dual(g2());
    CHECK(rendered(d2, leftmost_successors(d2, d2.parse_string("x z"),
                                           ApplicabilityMode::operational)) ==
          std::set<std::string>{"A z"});
    CHECK(leftmost_successors(g, g.parse_string("w y"), ApplicabilityMode::operational)
              .empty());
  }

  SECTION("full successors, frozen against the naive oracle") {
    SymbolString abc = g.parse_string("A B C");
    std::set<std::string> expected{"x C", "A y", "A B z", "w B C"};
    CHECK(rendered(g, full_successors(g, abc)) == expected);
    CHECK(rendered(g, naive_full_successors(g, abc)) == expected);

    CHECK(rendered(g, full_successors(g, g.parse_string("x C"))) ==
          std::set<std::string>{"x z"});
    CHECK(full_successors(g, g.parse_string("w y")).empty());
  }

  SECTION("full successors agree with the naive oracle everywhere") {
    auto corpus = random_corpus(40, 31337);
    for (const Grammar& g2 : corpus) {
      SymbolId start = g2.initial_symbols().front();
      StringGraph graph = transition_graph(g2, Relation::full(), {SymbolString{start}},
                                           {7, 5, 1000});
      for (const SymbolString& node : graph.nodes)
        CHECK(full_successors(g2, node) == naive_full_successors(g2, node));
    }
  }
}

TEST_CASE("transition graphs") {
  Grammar g = g1();
  SymbolString s{g.find("S")};

  SECTION("leftmost graph of the example is the expected chain") {
    StringGraph graph = transition_graph(g, Relation::leftmost(), {s}, {16, 16, 1000});
    REQUIRE(graph.layers.size() == 4);
    CHECK(graph.complete);
    auto layer = [&](int d) {
      std::set<std::string> out;
      for (int id : graph.layers[d]) out.insert(g.render(graph.nodes[id]));
      return out;
    };
    CHECK(layer(0) == std::set<std::string>{"S"});
    CHECK(layer(1) == std::set<std::string>{"A B C"});
    CHECK(layer(2) == std::set<std::string>{"w B C"});
    CHECK(layer(3) == std::set<std::string>{"w y"});
  }

  SECTION("full graph reaches both sentences") {
    StringGraph graph = transition_graph(g, Relation::full(), {s}, {16, 16, 1000});
    CHECK(graph.contains(g.parse_string("x z")));
    CHECK(graph.contains(g.parse_string("w y")));
    CHECK(graph.complete);
  }

  SECTION("a sentence generates a single complete layer") {
    StringGraph graph =
        transition_graph(g, Relation::leftmost(), {g.parse_string("w y")}, {16, 16, 100});
    CHECK(graph.layers.size() == 1);
    CHECK(graph.complete);
  }

  SECTION("layers are disjoint and edges stay monotone") {
    auto corpus = random_corpus(30, 555);
    for (const Grammar& g2 : corpus) {
      SymbolId start = g2.initial_symbols().front();
      StringGraph graph = transition_graph(g2, Relation::leftmost(),
                                           {SymbolString{start}}, {8, 10, 2000});
      std::set<int> seen;
      for (const auto& layer : graph.layers)
        for (int id : layer) CHECK(seen.insert(id).second);
      for (const auto& e : graph.edges)
        CHECK((graph.depth[e.to] == graph.depth[e.from] + 1 ||
               graph.depth[e.to] <= graph.depth[e.from]));
    }
  }

  SECTION("bounds are reported, not thrown") {
    Grammar grow = parse_grammar("initial: S\nterminal: a\nS -> S S\nS -> a\n");
    StringGraph graph = transition_graph(grow, Relation::full(),
                                         {SymbolString{grow.find("S")}}, {4, 6, 50});
    CHECK_FALSE(graph.complete);
    CHECK_THROWS_AS(transition_graph(grow, Relation::full(), {}, {4, 6, 50}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        transition_graph(grow, Relation::full(), {SymbolString{grow.find("S")}},
                         Bounds{0, 4, 4}),
        std::invalid_argument);
  }
}

TEST_CASE("language enumeration") {
  Grammar g = g1();
  Bounds b{16, 20, 10000};

  auto full = rendered_language(g, Relation::full(), b);
  CHECK(full.sentences == std::set<std::string>{"x z", "w y"});
  CHECK(full.complete);

  auto leftmost = rendered_language(g, Relation::leftmost(), b);
  CHECK(leftmost.sentences == std::set<std::string>{"w y"});
  CHECK(leftmost.complete);

  auto g2lm = rendered_language(g2(), Relation::leftmost(), b);
  CHECK(g2lm.sentences == std::set<std::string>{"x z"});
  CHECK(g2lm.complete);

  SECTION("an initial symbol that is itself terminal is already a sentence") {
    Grammar odd = parse_grammar("initial: t\nterminal: t\nA -> t\n");
    auto lang = rendered_language(odd, Relation::leftmost(), b);
    CHECK(lang.sentences == std::set<std::string>{"t"});
    CHECK(lang.complete);
  }

  SECTION("leftmost language is contained in the full language") {
    auto corpus = random_corpus(40, 90125);
    for (const Grammar& gg : corpus) {
      auto lm = rendered_language(gg, Relation::leftmost(), {6, 12, 4000});
      auto fl = rendered_language(gg, Relation::full(), {6, 12, 4000});
      if (lm.complete && fl.complete)
        CHECK(std::includes(fl.sentences.begin(), fl.sentences.end(),
                            lm.sentences.begin(), lm.sentences.end()));
    }
  }
}

TEST_CASE("recognition oracle") {
  Bounds b{16, 20, 10000};

  SECTION("the second example rejects its own sentence") {
    Grammar g = g2();
    auto result = recognize_oracle(g, g.parse_string("x z"),
                                   ApplicabilityMode::operational, b);
    CHECK_FALSE(result.recognized);
    // the dual-leftmost graph is the single chain x z, A z, A B C, E C, E F
    REQUIRE(result.graph.layers.size() == 5);
    std::vector<std::string> expected{"x z", "A z", "A B C", "E C", "E F"};
    for (std::size_t d = 0; d < expected.size(); ++d) {
      REQUIRE(result.graph.layers[d].size() == 1);
      CHECK(g.render(result.graph.nodes[result.graph.layers[d][0]]) == expected[d]);
    }
    CHECK(result.graph.edges.size() == 4);  // no branching anywhere
  }

  SECTION("the first example recognizes both full-language sentences") {
    Grammar g = g1();
    CHECK(recognize_oracle(g, g.parse_string("w y"), ApplicabilityMode::operational, b)
              .recognized);
    auto xz = recognize_oracle(g, g.parse_string("x z"),
                               ApplicabilityMode::operational, b);
    CHECK(xz.recognized);  // recognized despite x z not being leftmost-generable
    CHECK(xz.graph.contains(g.parse_string("A B z")));
  }

  SECTION("non-sentences are refused") {
    Grammar g = g1();
    CHECK_THROWS_AS(recognize_oracle(g, g.parse_string("A B"),
                                     ApplicabilityMode::operational, b),
                    std::invalid_argument);
  }
}
