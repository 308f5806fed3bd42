#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>
#include <system_error>

#include "fuzzytl/error.hpp"
#include "fuzzytl/syntax.hpp"

namespace fuzzytl {

namespace {

enum class Tok {
  Ident,
  Var,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  At,
  Neck,
  QueryOp,
  Dot,
  Invalid,
  End,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::At: return "'@'";
    case Tok::Neck: return "':-'";
    case Tok::QueryOp: return "'?-'";
    case Tok::Dot: return "'.'";
    case Tok::Invalid: return "invalid character";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SyntaxError {
  std::string message;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // An unknown character becomes an Invalid token; the parser reports it.
  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      const char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      if (std::islower(static_cast<unsigned char>(c))) {
        t.kind = Tok::Ident;
        t.text = take_word();
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Var;
        t.text = take_word();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && std::isdigit(static_cast<unsigned char>(next)))) {
        t.kind = Tok::Number;
        t.text = take_number();
      } else if (c == ':' && next == '-') {
        t.kind = Tok::Neck;
        advance(2);
      } else if (c == '?' && next == '-') {
        t.kind = Tok::QueryOp;
        advance(2);
      } else if (auto single = punctuation(c)) {
        t.kind = *single;
        advance(1);
      } else {
        t.kind = Tok::Invalid;
        std::size_t width = 1;
        while (pos_ + width < text_.size() && (static_cast<unsigned char>(text_[pos_ + width]) & 0xC0) == 0x80) ++width;
        t.text = std::string(text_.substr(pos_, width));
        advance(width);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static std::optional<Tok> punctuation(char c) {
    switch (c) {
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case '[': return Tok::LBracket;
      case ']': return Tok::RBracket;
      case '{': return Tok::LBrace;
      case '}': return Tok::RBrace;
      case ',': return Tok::Comma;
      case ':': return Tok::Colon;
      case '@': return Tok::At;
      case '.': return Tok::Dot;
      default: return std::nullopt;
    }
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  bool at_digit(std::size_t at) const {
    return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
  }

  std::string take_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance(1);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string take_number() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') advance(1);
    while (at_digit(pos_)) advance(1);
    if (pos_ < text_.size() && text_[pos_] == '.' && at_digit(pos_ + 1)) {
      advance(1);
      while (at_digit(pos_)) advance(1);
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
      if (at_digit(probe)) {
        advance(probe - pos_);
        while (at_digit(pos_)) advance(1);
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, TimelinePtr context) : tokens_(std::move(tokens)), timeline_(std::move(context)) {
    context_timeline_ = timeline_ != nullptr;
  }

  void parse_program(SourceProgram& program, std::vector<Diagnostic>& diagnostics) {
    while (peek().kind != Tok::End) {
      const std::size_t start = pos_;
      try {
        anonymous_ = 0;
        program.statements.push_back(statement());
      } catch (const SyntaxError& e) {
        diagnostics.push_back({Diagnostic::Severity::Error, e.message, e.line, e.column});
        synchronize(start);
      }
    }
    program.timeline = timeline_;
  }

  std::vector<Goal> parse_query(std::vector<Diagnostic>& diagnostics) {
    try {
      accept(Tok::QueryOp);
      auto goals = goal_list();
      accept(Tok::Dot);
      if (peek().kind != Tok::End) fail(peek(), "unexpected " + std::string(describe(peek().kind)) + " after query");
      return goals;
    } catch (const SyntaxError& e) {
      diagnostics.push_back({Diagnostic::Severity::Error, e.message, e.line, e.column});
      return {};
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[at];
  }

  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  [[noreturn]] static void fail(const Token& at, std::string message) {
    if (at.kind == Tok::Invalid) message = "unexpected character '" + at.text + "'";
    throw SyntaxError{std::move(message), at.line, at.column};
  }

  const Token& expect(Tok kind, std::string_view context) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + std::string(describe(kind)) + " " + std::string(context) + ", found " +
                       std::string(describe(peek().kind)));
    }
    return take();
  }

  // Skip to just past the next '.', always making progress.
  void synchronize(std::size_t start) {
    if (pos_ > start && tokens_[pos_ - 1].kind == Tok::Dot) return;
    if (pos_ == start && take().kind == Tok::Dot) return;
    while (peek().kind != Tok::End) {
      if (take().kind == Tok::Dot) return;
    }
  }

  Statement statement() {
    if (accept(Tok::QueryOp)) {
      const std::size_t line = tokens_[pos_ > 0 ? pos_ - 1 : 0].line;
      auto goals = goal_list();
      expect(Tok::Dot, "at end of query");
      return QueryStmt{std::move(goals), line};
    }
    if (peek().kind == Tok::Ident && peek().text == "timeline" && peek(1).kind == Tok::Ident) {
      return timeline_decl();
    }
    if (peek().kind != Tok::Ident) {
      fail(peek(), "expected a fact, rule, query or timeline declaration, found " + std::string(describe(peek().kind)));
    }

    const Token head_token = peek();
    Goal head = goal();
    if (std::holds_alternative<TemporalConstraint>(head)) {
      fail(head_token, "temporal relation " + head_token.text + "/3 cannot be a clause head");
    }
    Clause clause{std::get<TemporalAtom>(std::move(head)), {}};
    if (accept(Tok::Neck)) {
      clause.body = goal_list();
      expect(Tok::Dot, "at end of rule");
      return RuleStmt{std::move(clause)};
    }
    expect(Tok::Dot, "at end of fact");
    return FactStmt{std::move(clause)};
  }

  TimelineDecl timeline_decl() {
    const Token keyword = take();
    if (timeline_) {
      fail(keyword, context_timeline_ ? "a timeline is already defined" : "duplicate timeline declaration");
    }
    TimelineDecl decl;
    do {
      const Token id = expect(Tok::Ident, "naming an interval");
      expect(Tok::LBracket, "before interval start");
      const double start = number(expect(Tok::Number, "for interval start"));
      expect(Tok::Comma, "between interval endpoints");
      const double end = number(expect(Tok::Number, "for interval end"));
      expect(Tok::RParen, "closing the half-open interval");
      decl.intervals.push_back(Interval{id.text, start, end});
    } while (accept(Tok::Comma));
    expect(Tok::Dot, "at end of timeline declaration");
    try {
      timeline_ = Timeline::build(decl.intervals);
    } catch (const Error& e) {
      fail(keyword, std::string("invalid timeline: ") + e.what());
    }
    return decl;
  }

  std::vector<Goal> goal_list() {
    std::vector<Goal> goals;
    do {
      goals.push_back(goal());
    } while (accept(Tok::Comma));
    return goals;
  }

  Goal goal() {
    const Token name = expect(Tok::Ident, "naming a predicate");
    std::vector<Term> args;
    if (accept(Tok::LParen)) args = term_list();

    if (auto relation = relation_from_name(name.text); relation && args.size() == 3) {
      if (peek().kind == Tok::At) fail(peek(), "temporal relation " + name.text + "/3 cannot be annotated");
      if (!args[2].is_variable()) {
        fail(name, "third argument of " + name.text + "/3 must be a variable");
      }
      return TemporalConstraint{*relation, event_expr(args[0], name), event_expr(args[1], name),
                                args[2].as_variable()};
    }

    TemporalAtom atom{name.text, std::move(args), std::nullopt};
    if (peek().kind == Tok::At) atom.annotation = annotation();
    return atom;
  }

  EventExpr event_expr(const Term& t, const Token& where) {
    switch (t.kind()) {
      case Term::Kind::Atom: return EventExpr::predicate(TemporalAtom{t.name(), {}, std::nullopt});
      case Term::Kind::Compound: {
        const auto args = t.args();
        if (t.name() == "union" && args.size() == 2) {
          return EventExpr::unite(event_expr(args[0], where), event_expr(args[1], where));
        }
        if (t.name() == "intersect" && args.size() == 2) {
          return EventExpr::intersect(event_expr(args[0], where), event_expr(args[1], where));
        }
        if (t.name() == "complement" && args.size() == 1) return EventExpr::complement(event_expr(args[0], where));
        return EventExpr::predicate(TemporalAtom{t.name(), std::vector<Term>(args.begin(), args.end()), std::nullopt});
      }
      case Term::Kind::Variable:
      case Term::Kind::Number: break;
    }
    fail(where, "event expression must name a predicate, found " + to_string(t));
  }

  Event annotation() {
    const Token at = take();
    if (!timeline_) fail(at, "annotation requires a preceding timeline declaration");
    expect(Tok::LBrace, "opening the annotation");
    if (peek().kind == Tok::RBrace) fail(peek(), "annotation must list at least one interval");
    std::vector<Membership> entries;
    std::set<std::string> seen;
    do {
      const Token id = expect(Tok::Ident, "naming an interval");
      if (!timeline_->find(id.text)) fail(id, "unknown interval '" + id.text + "'");
      if (!seen.insert(id.text).second) fail(id, "interval '" + id.text + "' appears twice in annotation");
      expect(Tok::Colon, "after interval id");
      const Token value = expect(Tok::Number, "for the possibility degree");
      const double degree = number(value);
      if (!(degree > 0.0 && degree <= 1.0)) fail(value, "degree " + value.text + " is outside (0, 1]");
      entries.emplace_back(id.text, degree);
    } while (accept(Tok::Comma));
    expect(Tok::RBrace, "closing the annotation");
    return Event(timeline_, entries);
  }

  std::vector<Term> term_list() {
    std::vector<Term> terms;
    do {
      terms.push_back(term());
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "closing the argument list");
    return terms;
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var: {
        std::string name = take().text;
        if (name == "_") name = "_" + std::to_string(++anonymous_);
        return Term::variable(std::move(name));
      }
      case Tok::Number: return Term::number(number(take()));
      case Tok::Ident: {
        std::string name = take().text;
        if (accept(Tok::LParen)) return Term::compound(std::move(name), term_list());
        return Term::atom(std::move(name));
      }
      default: fail(t, "expected a term, found " + std::string(describe(t.kind)));
    }
  }

  static double number(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail(t, "number " + t.text + " is out of range");
    if (ec != std::errc() || ptr != last) fail(t, "malformed number " + t.text);
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  TimelinePtr timeline_;
  bool context_timeline_ = false;
  int anonymous_ = 0;
};

}  // namespace

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ") + d.message;
}

bool operator==(const SourceProgram& a, const SourceProgram& b) {
  const bool same_timeline = (!a.timeline && !b.timeline) ||
                             (a.timeline && b.timeline && a.timeline->compatible_with(*b.timeline));
  return same_timeline && a.statements == b.statements;
}

ParseResult parse_program(std::string_view text, TimelinePtr context) {
  ParseResult result;
  auto tokens = Lexer(text).run();
  Parser(std::move(tokens), std::move(context)).parse_program(result.program, result.diagnostics);
  return result;
}

QueryParseResult parse_query(std::string_view text, TimelinePtr context) {
  QueryParseResult result;
  auto tokens = Lexer(text).run();
  auto goals = Parser(std::move(tokens), std::move(context)).parse_query(result.diagnostics);
  if (result.diagnostics.empty()) result.goals = std::move(goals);
  return result;
}

}  // namespace fuzzytl
