#include "scra/graph_format.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace scra::test {
namespace {

ParseError ParseFailure(std::string_view text) {
  try {
    ParseGraph(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(0, 0, "", "");
}

TEST(ParseGraphTest, MinimalGraph) {
  SystemGraph g = ParseGraph(
      "node a component logic=and r=0.05\n"
      "node b component r=0.1\n"
      "node s1 supplier r=0.01\n"
      "edge b -> a\n"
      "edge s1 -> a   # trailing comment\n"
      "indicators a logic=or\n");
  EXPECT_EQ(g.components().at("a").logic, LogicKind::kAnd);
  EXPECT_EQ(g.components().at("b").logic, LogicKind::kOr);
  EXPECT_DOUBLE_EQ(g.suppliers().at("s1").prob.value(), 0.01);
  EXPECT_EQ(g.supplier_of("a"), NodeId("s1"));
}

TEST(ParseGraphTest, ForwardReferencesAndCrlf) {
  SystemGraph g = ParseGraph(
      "indicators a logic=and\r\nedge b -> a\r\n"
      "node a component r=1\r\nnode b component r=0\r\n");
  EXPECT_EQ(g.indicator_logic(), LogicKind::kAnd);
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(ParseGraphTest, UndeclaredEndpoint) {
  ParseError e = ParseFailure("edge a -> b\n");
  EXPECT_EQ(e.code(), ErrorCode::kUnknownEndpoint);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 6u);
  EXPECT_EQ(e.snippet(), "edge a -> b");
}

TEST(ParseGraphTest, MissingIndicatorsAtEndOfInput) {
  ParseError e = ParseFailure("node a component r=0.1\n");
  EXPECT_EQ(e.code(), ErrorCode::kEmptyIndicators);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_NE(std::string(e.what()).find("indicators"), std::string::npos);
}

TEST(ParseGraphTest, SyntaxErrorsArePositioned) {
  struct Case {
    const char* text;
    std::size_t line;
    std::size_t column;
  };
  const Case cases[] = {
      {"nod a component r=0.1\n", 1, 1},
      {"node a component r=0.1\nnode 9b component r=0.1\n", 2, 6},
      {"node a widget r=0.1\n", 1, 8},
      {"node a component logic=xor r=0.1\n", 1, 24},
      {"node a component r=1.5\n", 1, 20},
      {"node a component r=1e-2\n", 1, 20},
      {"node a component r=-0.1\n", 1, 20},
      {"node a component\n", 1, 17},
      {"node a component r=0.1 extra\n", 1, 24},
      {"edge a b\n", 1, 8},
      {"edge a => b\n", 1, 8},
      {"\n\nindicators logic=or\n", 3, 12},
      {"indicators a\n", 1, 12},
  };
  for (const Case& c : cases) {
    try {
      ParseDocument(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntax) << c.text;
      EXPECT_EQ(e.line(), c.line) << c.text << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << e.what();
      std::string_view text = c.text;
      std::size_t begin = 0;
      for (std::size_t l = 1; l < e.line(); ++l) begin = text.find('\n', begin) + 1;
      EXPECT_EQ(e.snippet(), text.substr(begin, text.find('\n', begin) - begin));
      EXPECT_LE(e.column(), e.snippet().size() + 1);
    }
  }
}

TEST(ParseGraphTest, DuplicateIndicatorsLine) {
  try {
    ParseDocument("indicators a logic=or\nindicators a logic=and\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraphTest, SemanticErrorsCarryRule) {
  struct Case {
    const char* text;
    ErrorCode rule;
    std::size_t line;
  };
  const Case cases[] = {
      {"node a component r=0.1\nnode a supplier r=0.1\nindicators a logic=or\n",
       ErrorCode::kDuplicateNodeId, 2},
      {"node a component r=0.1\nnode s supplier r=0.1\nedge a -> s\n"
       "indicators a logic=or\n",
       ErrorCode::kIllegalEdgeKind, 3},
      {"node a component r=0.1\nnode s supplier r=0.1\nnode t supplier r=0.1\n"
       "edge s -> a\nedge t -> a\nindicators a logic=or\n",
       ErrorCode::kMultipleSuppliers, 5},
      {"node a component r=0.1\nnode b component r=0.1\nedge a -> b\n"
       "edge b -> a\nindicators a logic=or\n",
       ErrorCode::kCycleDetected, 3},
      {"node a component r=0.1\nnode s supplier r=0.1\nedge s -> a\n"
       "indicators s logic=or\n",
       ErrorCode::kNotAComponent, 4},
  };
  for (const Case& c : cases) {
    ParseError e = ParseFailure(c.text);
    EXPECT_EQ(e.code(), c.rule) << c.text;
    EXPECT_EQ(e.line(), c.line) << c.text;
  }
}

TEST(SerializeGraphTest, CanonicalBytes) {
  SystemGraph g = ParseGraph(
      "indicators x logic=or\n"
      "node x component logic=and r=0.5\n"
      "edge s1 -> x\n"
      "node s1 supplier r=0.01\n"
      "node y component r=1\n"
      "edge y -> x\n");
  EXPECT_EQ(SerializeGraph(g),
            "node s1 supplier r=0.01\n"
            "node x component logic=and r=0.5\n"
            "node y component logic=or r=1.0\n"
            "\n"
            "edge s1 -> x\n"
            "edge y -> x\n"
            "\n"
            "indicators x logic=or\n");
}

TEST(SerializeGraphTest, RoundTripFixtures) {
  for (const char* name : {"case0.sg", "supplied.sg"}) {
    SystemGraph g = LoadCase(name);
    std::string text = SerializeGraph(g);
    SystemGraph back = ParseGraph(text);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(SerializeGraph(back), text) << name;
  }
}

TEST(SerializeDocumentTest, PreservesOrderAndImplicitLogic) {
  std::string text =
      "# header\n"
      "edge b -> a\n"
      "node b component r=0.25\n"
      "\n"
      "node a component logic=and r=0.05\n"
      "indicators a logic=or\n";
  GraphDocument doc = ParseDocument(text, "demo");
  EXPECT_EQ(doc.name, "demo");
  EXPECT_EQ(SerializeDocument(doc),
            "edge b -> a\n"
            "node b component r=0.25\n"
            "node a component logic=and r=0.05\n"
            "indicators a logic=or\n");
}

TEST(FormatProbabilityTest, ShortestFixed) {
  EXPECT_EQ(FormatProbability(0.05), "0.05");
  EXPECT_EQ(FormatProbability(0.1 * 3), "0.30000000000000004");
  EXPECT_EQ(FormatProbability(0), "0.0");
  EXPECT_EQ(FormatProbability(1), "1.0");
  EXPECT_EQ(FormatProbability(1e-7), "0.0000001");
}

}  // namespace
}  // namespace scra::test
