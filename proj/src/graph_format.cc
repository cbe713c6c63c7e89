#include "scra/graph_format.h"

#include <algorithm>
#include <charconv>
#include <map>

namespace scra {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<Token> Tokenize(std::string_view line) {
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::size_t number, const std::string& line)
      : number_(number), line_(line), tokens_(Tokenize(line)) {}

  bool blank() const { return tokens_.empty(); }

  Statement Parse() {
    std::string_view keyword = tokens_[0].text;
    if (keyword == "node") return ParseNode();
    if (keyword == "edge") return ParseEdge();
    if (keyword == "indicators") return ParseIndicators();
    Fail(tokens_[0], "expected 'node', 'edge' or 'indicators', found '" +
                         std::string(keyword) + "'");
  }

 private:
  [[noreturn]] void Fail(std::size_t column, const std::string& message) const {
    throw ParseError(number_, column, message, line_);
  }
  [[noreturn]] void Fail(const Token& t, const std::string& message) const {
    Fail(t.column, message);
  }

  SourcePos At(const Token& t) const { return {number_, t.column}; }

  /// Column just past the last token.
  std::size_t EndColumn() const {
    const Token& last = tokens_.back();
    return last.column + last.text.size();
  }

  const Token& Need(std::size_t i, std::string_view what) const {
    if (i >= tokens_.size())
      Fail(EndColumn(), "expected " + std::string(what) + " at end of line");
    return tokens_[i];
  }

  void NoMore(std::size_t i) const {
    if (i < tokens_.size())
      Fail(tokens_[i],
           "unexpected '" + std::string(tokens_[i].text) + "' at end of statement");
  }

  NodeId Id(const Token& t) const {
    if (!NodeId::IsValid(t.text))
      Fail(t, "invalid identifier '" + std::string(t.text) + "'");
    return NodeId(std::string(t.text));
  }

  LogicKind Logic(const Token& t) const {
    std::string_view text = t.text;
    if (!text.starts_with("logic="))
      Fail(t, "expected 'logic=and' or 'logic=or', found '" +
                  std::string(text) + "'");
    text.remove_prefix(6);
    if (text == "and") return LogicKind::kAnd;
    if (text == "or") return LogicKind::kOr;
    Fail(t.column + 6, "logic must be 'and' or 'or', found '" +
                           std::string(text) + "'");
  }

  Probability Prob(const Token& t) const {
    std::string_view text = t.text;
    if (!text.starts_with("r="))
      Fail(t, "expected 'r=<probability>', found '" + std::string(text) + "'");
    text.remove_prefix(2);
    std::size_t column = t.column + 2;
    // Decimal literal: digits with an optional fraction, no sign or exponent.
    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    auto digits = [](std::string_view s) {
      return std::all_of(s.begin(), s.end(),
                         [](char c) { return c >= '0' && c <= '9'; });
    };
    bool well_formed = digits(whole) && digits(frac) &&
                       (!whole.empty() || !frac.empty()) &&
                       (dot == std::string_view::npos || !frac.empty());
    if (!well_formed)
      Fail(column, "probability must be a decimal literal, found '" +
                       std::string(text) + "'");
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value, std::chars_format::fixed);
    if (ec != std::errc() || ptr != text.data() + text.size() || value > 1.0)
      Fail(column, "probability " + std::string(text) + " is outside [0, 1]");
    return Probability(value);
  }

  Statement ParseNode() {
    NodeDecl decl{Id(Need(1, "node id"))};
    decl.pos = At(tokens_[0]);
    decl.id_pos = At(tokens_[1]);
    const Token& kind = Need(2, "'component' or 'supplier'");
    std::size_t i = 3;
    if (kind.text == "component") {
      decl.kind = NodeKind::kComponent;
      const Token& next = Need(i, "'r=<probability>'");
      if (next.text.starts_with("logic")) {
        decl.logic = Logic(next);
        decl.logic_explicit = true;
        ++i;
      }
    } else if (kind.text == "supplier") {
      decl.kind = NodeKind::kSupplier;
    } else {
      Fail(kind, "expected 'component' or 'supplier', found '" +
                     std::string(kind.text) + "'");
    }
    decl.prob = Prob(Need(i, "'r=<probability>'"));
    NoMore(i + 1);
    return decl;
  }

  Statement ParseEdge() {
    const Token& src = Need(1, "source id");
    NodeId src_id = Id(src);
    const Token& arrow = Need(2, "'->'");
    if (arrow.text != "->")
      Fail(arrow, "expected '->', found '" + std::string(arrow.text) + "'");
    EdgeDecl decl{src_id, Id(Need(3, "target id"))};
    decl.pos = At(tokens_[0]);
    decl.src_pos = At(src);
    decl.dst_pos = At(tokens_[3]);
    NoMore(4);
    return decl;
  }

  Statement ParseIndicators() {
    IndicatorsDecl decl;
    decl.pos = At(tokens_[0]);
    if (tokens_.size() < 2 || tokens_.back().text.starts_with("logic=") == false)
      Fail(tokens_.size() < 2 ? EndColumn() : tokens_.back().column,
           "indicators line must end with 'logic=and' or 'logic=or'");
    for (std::size_t i = 1; i + 1 < tokens_.size(); ++i) {
      decl.ids.push_back(Id(tokens_[i]));
      decl.id_pos.push_back(At(tokens_[i]));
    }
    if (decl.ids.empty())
      Fail(tokens_.back(), "indicators line lists no indicator ids");
    decl.logic = Logic(tokens_.back());
    return decl;
  }

  std::size_t number_;
  const std::string& line_;
  std::vector<Token> tokens_;
};

/// Finds where a violation should be reported.
class Locator {
 public:
  explicit Locator(const GraphDocument& doc) : doc_(doc) {
    for (const Statement& s : doc.statements) {
      if (auto* n = std::get_if<NodeDecl>(&s)) declared_.insert(n->id);
    }
  }

  SourcePos Find(const Violation& v) const {
    std::vector<NodeId> ids;
    for (const auto& s : v.ids) ids.emplace_back(s);
    switch (v.rule) {
      case ErrorCode::kDuplicateNodeId: {
        int seen = 0;
        for (const auto& s : doc_.statements) {
          auto* n = std::get_if<NodeDecl>(&s);
          if (n && n->id == ids[0] && ++seen == 2) return n->id_pos;
        }
        break;
      }
      case ErrorCode::kUnknownEndpoint:
        if (ids.size() == 2) {
          if (const EdgeDecl* e = FindEdge(ids[0], ids[1]))
            return declared_.count(e->src) ? e->dst_pos : e->src_pos;
        } else if (ids.size() == 1) {
          return IndicatorPos(ids[0]);
        }
        break;
      case ErrorCode::kIllegalEdgeKind:
        if (const EdgeDecl* e = FindEdge(ids[0], ids[1])) return e->pos;
        break;
      case ErrorCode::kMultipleSuppliers: {
        int seen = 0;
        for (const auto& s : doc_.statements) {
          auto* e = std::get_if<EdgeDecl>(&s);
          if (!e || e->dst != ids[0]) continue;
          if (std::find(ids.begin() + 1, ids.end(), e->src) == ids.end())
            continue;
          if (++seen == 2) return e->pos;
        }
        break;
      }
      case ErrorCode::kCycleDetected: {
        std::vector<Edge> loop;
        for (std::size_t i = 0; i < ids.size(); ++i)
          loop.push_back({ids[i], ids[(i + 1) % ids.size()]});
        for (const auto& s : doc_.statements) {
          auto* e = std::get_if<EdgeDecl>(&s);
          if (e && std::find(loop.begin(), loop.end(), Edge{e->src, e->dst}) !=
                       loop.end())
            return e->pos;
        }
        break;
      }
      case ErrorCode::kNotAComponent:
        return IndicatorPos(ids[0]);
      case ErrorCode::kEmptyIndicators:
        return EndOfInput();
      default:
        break;
    }
    return {1, 1};
  }

  SourcePos EndOfInput() const {
    if (doc_.lines.empty()) return {1, 1};
    return {doc_.lines.size(), doc_.lines.back().size() + 1};
  }

 private:
  const EdgeDecl* FindEdge(const NodeId& src, const NodeId& dst) const {
    for (const auto& s : doc_.statements) {
      auto* e = std::get_if<EdgeDecl>(&s);
      if (e && e->src == src && e->dst == dst) return e;
    }
    return nullptr;
  }

  SourcePos IndicatorPos(const NodeId& id) const {
    for (const auto& s : doc_.statements) {
      if (auto* ind = std::get_if<IndicatorsDecl>(&s)) {
        for (std::size_t i = 0; i < ind->ids.size(); ++i)
          if (ind->ids[i] == id) return ind->id_pos[i];
      }
    }
    return {1, 1};
  }

  const GraphDocument& doc_;
  std::set<NodeId> declared_;
};

std::string NodeLine(const NodeId& id, NodeKind kind, std::optional<LogicKind> logic,
                     Probability prob) {
  std::string line = "node " + id.str();
  if (kind == NodeKind::kSupplier) {
    line += " supplier";
  } else {
    line += " component";
    if (logic) line += " logic=" + std::string(ToString(*logic));
  }
  return line + " r=" + FormatProbability(prob.value());
}

std::string EdgeLine(const NodeId& src, const NodeId& dst) {
  return "edge " + src.str() + " -> " + dst.str();
}

template <class Ids>
std::string IndicatorsLine(const Ids& ids, LogicKind logic) {
  std::string line = "indicators";
  for (const NodeId& id : ids) line += " " + id.str();
  return line + " logic=" + std::string(ToString(logic));
}

}  // namespace

GraphDocument ParseDocument(std::string_view text,
                            std::optional<std::string> name) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.lines = SplitLines(text);
  const IndicatorsDecl* indicators = nullptr;
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    LineParser parser(i + 1, doc.lines[i]);
    if (parser.blank()) continue;
    doc.statements.push_back(parser.Parse());
    if (auto* ind = std::get_if<IndicatorsDecl>(&doc.statements.back())) {
      if (indicators)
        throw ParseError(i + 1, ind->pos.column,
                         "duplicate indicators declaration (first on line " +
                             std::to_string(indicators->pos.line) + ")",
                         doc.lines[i]);
      indicators = ind;
    }
  }
  return doc;
}

SystemGraph ToGraph(const GraphDocument& doc) {
  GraphParts parts;
  for (const Statement& s : doc.statements) {
    if (auto* n = std::get_if<NodeDecl>(&s)) {
      if (n->kind == NodeKind::kComponent)
        parts.components.push_back({n->id, n->logic, n->prob});
      else
        parts.suppliers.push_back({n->id, n->prob});
    } else if (auto* e = std::get_if<EdgeDecl>(&s)) {
      parts.edges.push_back({e->src, e->dst});
    } else {
      auto& ind = std::get<IndicatorsDecl>(s);
      parts.indicators = ind.ids;
      parts.indicator_logic = ind.logic;
    }
  }
  for (const Violation& v : Validate(parts)) {
    if (v.severity != Severity::kError) continue;
    SourcePos pos = Locator(doc).Find(v);
    std::string snippet =
        pos.line <= doc.lines.size() ? doc.lines[pos.line - 1] : std::string();
    std::string message = v.message;
    if (v.rule == ErrorCode::kEmptyIndicators)
      message = "missing 'indicators' declaration";
    throw ParseError(pos.line, pos.column, message, snippet, v.rule);
  }
  return BuildGraph(std::move(parts));
}

SystemGraph ParseGraph(std::string_view text) {
  return ToGraph(ParseDocument(text));
}

std::string SerializeGraph(const SystemGraph& graph) {
  std::map<NodeId, std::string> nodes;
  for (const auto& [id, c] : graph.components())
    nodes.emplace(id, NodeLine(id, NodeKind::kComponent, c.logic, c.local_prob));
  for (const auto& [id, s] : graph.suppliers())
    nodes.emplace(id, NodeLine(id, NodeKind::kSupplier, std::nullopt, s.prob));

  std::string out;
  for (const auto& [id, line] : nodes) out += line + "\n";
  if (!graph.edges().empty()) {
    out += "\n";
    for (const Edge& e : graph.edges()) out += EdgeLine(e.src, e.dst) + "\n";
  }
  out += "\n";
  out += IndicatorsLine(graph.indicators(), graph.indicator_logic()) + "\n";
  return out;
}

std::string SerializeDocument(const GraphDocument& doc) {
  std::string out;
  for (const Statement& s : doc.statements) {
    if (auto* n = std::get_if<NodeDecl>(&s)) {
      std::optional<LogicKind> logic;
      if (n->logic_explicit) logic = n->logic;
      out += NodeLine(n->id, n->kind, logic, n->prob);
    } else if (auto* e = std::get_if<EdgeDecl>(&s)) {
      out += EdgeLine(e->src, e->dst);
    } else {
      auto& ind = std::get<IndicatorsDecl>(s);
      out += IndicatorsLine(ind.ids, ind.logic);
    }
    out += "\n";
  }
  return out;
}

std::string FormatProbability(double value) {
  char buf[400];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed);
  if (ec != std::errc()) return std::to_string(value);
  std::string out(buf, ptr);
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

}  // namespace scra
