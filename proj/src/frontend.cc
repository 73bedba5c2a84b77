// Copyright 2026 The L4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "l4/frontend.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace l4 {
namespace {

enum class Tok {
  kIdent,
  kString,
  kColon,
  kArrow,
  kComma,
  kLBrace,
  kRBrace,
  kLAngle,
  kRAngle,
  kLParen,
  kRParen,
  kDot,
  kAndAnd,
  kAt,
  kEnd,
};

std::string_view TokName(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kString: return "string literal";
    case Tok::kColon: return "':'";
    case Tok::kArrow: return "'->'";
    case Tok::kComma: return "','";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLAngle: return "'<'";
    case Tok::kRAngle: return "'>'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kDot: return "'.'";
    case Tok::kAndAnd: return "'&&'";
    case Tok::kAt: return "'@'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;  // identifier text or decoded string literal
  Span span;
  bool line_start = false;
};

constexpr std::string_view kArrowGlyph = "\xE2\x86\x92";  // U+2192

bool IsIdentStart(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool IsIdentChar(unsigned char c) { return std::isalnum(c) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>* diags)
      : src_(src), diags_(diags) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        Advance();
        at_line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        Advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        continue;
      }
      Token tok;
      tok.line_start = at_line_start;
      tok.span.line = line_;
      tok.span.column = column_;
      if (!LexOne(&tok)) continue;
      tok.span.end_line = line_;
      tok.span.end_column = column_;
      at_line_start = false;
      out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Tok::kEnd;
    end.line_start = true;
    end.span = {line_, column_, line_, column_};
    out.push_back(end);
    return out;
  }

 private:
  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool Peek(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void Skip(size_t n) {
    for (size_t i = 0; i < n && pos_ < src_.size(); ++i) Advance();
  }

  void Error(Span span, std::string message) {
    diags_->push_back({DiagCode::kSyntaxError, span, std::move(message), {}});
  }

  // Returns false when the character was rejected (a diagnostic is recorded).
  bool LexOne(Token* tok) {
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (IsIdentStart(c)) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             IsIdentChar(static_cast<unsigned char>(src_[pos_]))) {
        Advance();
      }
      tok->kind = Tok::kIdent;
      tok->text = std::string(src_.substr(start, pos_ - start));
      return true;
    }
    if (c == '"') return LexString(tok);
    if (Peek(kArrowGlyph) || Peek("->")) {
      Skip(Peek("->") ? 2 : kArrowGlyph.size());
      tok->kind = Tok::kArrow;
      return true;
    }
    if (Peek("&&")) {
      Skip(2);
      tok->kind = Tok::kAndAnd;
      return true;
    }
    static constexpr std::pair<char, Tok> kSingles[] = {
        {':', Tok::kColon},  {',', Tok::kComma},  {'{', Tok::kLBrace},
        {'}', Tok::kRBrace}, {'<', Tok::kLAngle}, {'>', Tok::kRAngle},
        {'(', Tok::kLParen}, {')', Tok::kRParen}, {'.', Tok::kDot},
        {'@', Tok::kAt},
    };
    for (auto [ch, kind] : kSingles) {
      if (src_[pos_] == ch) {
        Advance();
        tok->kind = kind;
        return true;
      }
    }
    Span span{line_, column_, line_, column_ + 1};
    // Swallow a whole UTF-8 sequence so the column stays on a boundary.
    size_t len = 1;
    if (c >= 0xC0) len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : 2;
    std::ostringstream msg;
    if (c < 0x20 || c >= 0x7F) {
      msg << "unexpected byte 0x" << std::hex << static_cast<int>(c);
    } else {
      msg << "unexpected character '" << static_cast<char>(c) << "'";
    }
    Error(span, msg.str());
    for (size_t i = 0; i < len && pos_ < src_.size() && src_[pos_] != '\n';
         ++i) {
      Advance();
    }
    return false;
  }

  bool LexString(Token* tok) {
    Span start{line_, column_, line_, column_};
    Advance();  // opening quote
    std::string value;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size() &&
          (src_[pos_ + 1] == '"' || src_[pos_ + 1] == '\\')) {
        Advance();
      }
      value += src_[pos_];
      Advance();
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      start.end_line = line_;
      start.end_column = column_;
      Error(start, "unterminated string literal");
      return false;
    }
    Advance();  // closing quote
    tok->kind = Tok::kString;
    tok->text = std::move(value);
    return true;
  }

  std::string_view src_;
  std::vector<Diagnostic>* diags_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

const std::set<std::string, std::less<>>& Keywords() {
  static const std::set<std::string, std::less<>> kWords = {
      "class", "decl", "rule", "lexicon", "for", "if", "then", "exists"};
  return kWords;
}

bool IsBlockKeyword(std::string_view w) {
  return w == "class" || w == "decl" || w == "rule" || w == "lexicon";
}

struct ParseFail {
  Diagnostic diag;
};

Span Join(const Span& a, const Span& b) {
  return {a.line, a.column, b.end_line, b.end_column};
}

// Recursive-descent parser over the token slice [pos, end) of one block
// entry. `end` always indexes a real token (possibly kEnd) that terminates
// the slice.
class EntryParser {
 public:
  EntryParser(const std::vector<Token>& toks, size_t pos, size_t end)
      : toks_(toks), pos_(pos), end_(end) {}

  bool AtEnd() const { return pos_ >= end_; }

  const Token& Cur() const { return AtEnd() ? toks_[end_] : toks_[pos_]; }
  const Token& Prev() const { return toks_[pos_ > 0 ? pos_ - 1 : 0]; }

  bool Is(Tok kind) const { return !AtEnd() && Cur().kind == kind; }
  bool IsWord(std::string_view w) const {
    return Is(Tok::kIdent) && Cur().text == w;
  }
  bool IsName() const {
    return Is(Tok::kIdent) && !IsKeyword(Cur().text);
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const Token& t = Cur();
    std::string got = AtEnd() ? std::string("end of entry")
                      : t.kind == Tok::kIdent
                          ? "'" + t.text + "'"
                          : std::string(TokName(t.kind));
    std::string msg = "expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + got;
    throw ParseFail{{DiagCode::kSyntaxError, t.span, msg, std::move(expected)}};
  }

  const Token& Expect(Tok kind) {
    if (!Is(kind)) Fail({std::string(TokName(kind))});
    return toks_[pos_++];
  }

  const Token& ExpectName() {
    if (!IsName()) Fail({"identifier"});
    return toks_[pos_++];
  }

  void ExpectWord(std::string_view w) {
    if (!IsWord(w)) Fail({"'" + std::string(w) + "'"});
    ++pos_;
  }

  void ExpectDone() {
    if (!AtEnd()) Fail({"end of entry"});
  }

  TypeExpr ParseType() {
    TypeExpr left = ParseTypeAtom();
    if (Is(Tok::kArrow)) {
      ++pos_;
      TypeExpr right = ParseType();
      Span span = Join(left.span, right.span);
      return TypeExpr::Arrow(std::move(left), std::move(right), span);
    }
    return left;
  }

  TypeExpr ParseTypeAtom() {
    if (Is(Tok::kLParen)) {
      ++pos_;
      TypeExpr inner = ParseType();
      Expect(Tok::kRParen);
      return inner;
    }
    if (!IsName()) Fail({"type name", "'('"});
    const Token& t = toks_[pos_++];
    if (t.text == "Bool") return TypeExpr::Bool(t.span);
    return TypeExpr::ClassRef(t.text, t.span);
  }

  ClassDecl ParseClass() {
    ClassDecl decl;
    const Token& name = ExpectName();
    decl.name = name.text;
    decl.span = name.span;
    if (Is(Tok::kLBrace)) {
      ++pos_;
      while (!Is(Tok::kRBrace)) {
        if (!decl.fields.empty()) {
          if (Is(Tok::kComma)) {
            ++pos_;
          } else if (!(IsName() && Cur().line_start)) {
            Fail({"','", "newline", "'}'"});
          }
        }
        FieldDecl field;
        const Token& fname = ExpectName();
        field.name = fname.text;
        Expect(Tok::kColon);
        field.type = ParseType();
        field.span = Join(fname.span, field.type.span);
        decl.fields.push_back(std::move(field));
      }
      decl.span = Join(decl.span, Expect(Tok::kRBrace).span);
    }
    ExpectDone();
    return decl;
  }

  ValueDecl ParseValue() {
    ValueDecl decl;
    const Token& name = ExpectName();
    decl.name = name.text;
    Expect(Tok::kColon);
    decl.type = ParseType();
    decl.span = Join(name.span, decl.type.span);
    ExpectDone();
    return decl;
  }

  LexiconDecl ParseLexicon() {
    LexiconDecl decl;
    const Token& key = ExpectName();
    decl.key = key.text;
    Expect(Tok::kAt);
    const Token& str = Expect(Tok::kString);
    if (str.text.empty()) {
      throw ParseFail{{DiagCode::kSyntaxError, str.span,
                       "lexicon description must not be empty", {}}};
    }
    decl.surface = str.text;
    decl.span = Join(key.span, str.span);
    ExpectDone();
    return decl;
  }

  RuleDecl ParseRule(const Span& keyword_span) {
    RuleDecl rule;
    Expect(Tok::kLAngle);
    rule.name = ExpectName().text;
    Expect(Tok::kRAngle);
    if (IsWord("for")) {
      ++pos_;
      do {
        if (!rule.binders.empty()) ++pos_;  // ','
        Binder b;
        const Token& var = ExpectName();
        b.var = var.text;
        Expect(Tok::kColon);
        const Token& cls = ExpectName();
        b.class_name = cls.text;
        b.span = Join(var.span, cls.span);
        rule.binders.push_back(std::move(b));
      } while (Is(Tok::kComma));
    }
    for (const auto& b : rule.binders) scope_.push_back(b.var);
    if (IsWord("if")) {
      ++pos_;
      rule.condition = ParseExpr();
    }
    if (!IsWord("then")) {
      if (rule.condition) Fail({"'&&'", "'then'"});
      if (rule.binders.empty()) Fail({"'for'", "'if'", "'then'"});
      Fail({"','", "'if'", "'then'"});
    }
    ++pos_;
    rule.conclusion = ParseApply();
    ExpectDone();
    rule.span = Join(keyword_span, Prev().span);
    return rule;
  }

  Expr ParseExpr() {
    if (IsWord("exists")) {
      const Span start = Cur().span;
      ++pos_;
      const Token& var = ExpectName();
      Expect(Tok::kColon);
      const Token& cls = ExpectName();
      Expect(Tok::kDot);
      scope_.push_back(var.text);
      Expr body = ParseExpr();
      scope_.pop_back();
      Span span = Join(start, body.span);
      return Expr::Exists(var.text, cls.text, std::move(body), span);
    }
    Expr left = ParseTerm();
    if (Is(Tok::kAndAnd)) {
      ++pos_;
      Expr right = ParseExpr();
      Span span = Join(left.span, right.span);
      return Expr::Conj(std::move(left), std::move(right), span);
    }
    return left;
  }

  Expr ParseTerm() {
    if (Is(Tok::kLParen)) {
      ++pos_;
      Expr inner = ParseExpr();
      Expect(Tok::kRParen);
      return inner;
    }
    if (!IsName()) Fail({"predicate", "'exists'", "'('"});
    return ParseApply();
  }

  Expr ParseApply() {
    const Token& pred = ExpectName();
    std::vector<Expr> args;
    Span span = pred.span;
    while (IsName()) {
      const Token& arg = toks_[pos_++];
      bool bound =
          std::find(scope_.begin(), scope_.end(), arg.text) != scope_.end();
      args.push_back(bound ? Expr::Var(arg.text, arg.span)
                           : Expr::Const(arg.text, arg.span));
      span = Join(span, arg.span);
    }
    return Expr::Apply(pred.text, std::move(args), span);
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_;
  size_t end_;
  std::vector<std::string> scope_;
};

bool IsBlockStart(const Token& t) {
  return t.kind == Tok::kEnd || (t.line_start && t.span.column == 1);
}

// Splits [begin, end) into layout entries.
std::vector<std::pair<size_t, size_t>> SplitEntries(
    const std::vector<Token>& toks, size_t begin, size_t end) {
  std::vector<std::pair<size_t, size_t>> out;
  size_t k = begin;
  while (k < end) {
    size_t start = k;
    int start_col = toks[start].span.column;
    int depth = 0;
    do {
      if (toks[k].kind == Tok::kLBrace) ++depth;
      if (toks[k].kind == Tok::kRBrace && depth > 0) --depth;
      ++k;
    } while (k < end && (depth > 0 || !toks[k].line_start ||
                         toks[k].span.column > start_col));
    out.emplace_back(start, k);
  }
  return out;
}

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view src) {
    toks_ = Lexer(src, &diags_).Run();
  }

  ParseResult Run() {
    ParseResult result;
    size_t i = 0;
    while (toks_[i].kind != Tok::kEnd) {
      const Token& t = toks_[i];
      size_t j = i + 1;
      while (!IsBlockStart(toks_[j])) ++j;
      if (!IsBlockStart(t) || t.kind != Tok::kIdent ||
          !IsBlockKeyword(t.text)) {
        diags_.push_back({DiagCode::kSyntaxError, t.span,
                          "expected block keyword at column 1",
                          {"'class'", "'decl'", "'rule'", "'lexicon'"}});
        i = j;
        continue;
      }
      Span span = Join(t.span, toks_[j - 1].span);
      try {
        if (t.text == "class") {
          ClassBlock block{{}, span};
          for (auto [a, b] : SplitEntries(toks_, i + 1, j)) {
            block.classes.push_back(EntryParser(toks_, a, b).ParseClass());
          }
          result.program.blocks.emplace_back(std::move(block));
        } else if (t.text == "decl") {
          DeclBlock block{{}, span};
          for (auto [a, b] : SplitEntries(toks_, i + 1, j)) {
            block.decls.push_back(EntryParser(toks_, a, b).ParseValue());
          }
          result.program.blocks.emplace_back(std::move(block));
        } else if (t.text == "lexicon") {
          LexiconBlock block{{}, span};
          for (auto [a, b] : SplitEntries(toks_, i + 1, j)) {
            block.entries.push_back(EntryParser(toks_, a, b).ParseLexicon());
          }
          result.program.blocks.emplace_back(std::move(block));
        } else {
          RuleBlock block;
          block.rule = EntryParser(toks_, i + 1, j).ParseRule(t.span);
          block.span = span;
          result.program.blocks.emplace_back(std::move(block));
        }
      } catch (const ParseFail& fail) {
        diags_.push_back(fail.diag);
      }
      i = j;
    }
    std::stable_sort(diags_.begin(), diags_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return std::pair(a.span.line, a.span.column) <
                              std::pair(b.span.line, b.span.column);
                     });
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  std::vector<Diagnostic> diags_;
  std::vector<Token> toks_;
};

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void PrintExpr(const Expr& e, std::string* out) {
  switch (e.kind) {
    case Expr::Kind::kApply:
      *out += e.name;
      for (const auto& arg : e.children) *out += " " + arg.name;
      break;
    case Expr::Kind::kVar:
    case Expr::Kind::kConst:
      *out += e.name;
      break;
    case Expr::Kind::kConj: {
      const Expr& left = e.children[0];
      bool paren = left.kind == Expr::Kind::kConj ||
                   left.kind == Expr::Kind::kExists;
      if (paren) *out += "(";
      PrintExpr(left, out);
      if (paren) *out += ")";
      *out += " && ";
      PrintExpr(e.children[1], out);
      break;
    }
    case Expr::Kind::kExists:
      *out += "exists " + e.name + " : " + e.class_name + " . ";
      PrintExpr(e.children[0], out);
      break;
  }
}

}  // namespace

bool IsKeyword(std::string_view word) {
  return Keywords().count(word) > 0;
}

ParseResult Parse(std::string_view source) {
  return ProgramParser(source).Run();
}

std::string PrettyPrint(const TypeExpr& type) {
  switch (type.kind) {
    case TypeExpr::Kind::kBool:
      return "Bool";
    case TypeExpr::Kind::kClassRef:
      return type.name;
    case TypeExpr::Kind::kArrow: {
      std::string left = PrettyPrint(type.argument());
      if (type.argument().kind == TypeExpr::Kind::kArrow) {
        left = "(" + left + ")";
      }
      return left + " \xE2\x86\x92 " + PrettyPrint(type.result());
    }
  }
  return {};
}

std::string PrettyPrint(const Expr& expr) {
  std::string out;
  PrintExpr(expr, &out);
  return out;
}

std::string PrettyPrint(const SourceProgram& program) {
  std::string out;
  for (const Block& block : program.blocks) {
    if (!out.empty()) out += "\n";
    if (const auto* b = std::get_if<ClassBlock>(&block)) {
      out += "class\n";
      for (const auto& c : b->classes) {
        out += "  " + c.name;
        if (!c.fields.empty()) {
          out += " { ";
          for (size_t i = 0; i < c.fields.size(); ++i) {
            if (i > 0) out += ", ";
            out += c.fields[i].name + " : " + PrettyPrint(c.fields[i].type);
          }
          out += " }";
        }
        out += "\n";
      }
    } else if (const auto* b = std::get_if<DeclBlock>(&block)) {
      out += "decl\n";
      for (const auto& d : b->decls) {
        out += "  " + d.name + " : " + PrettyPrint(d.type) + "\n";
      }
    } else if (const auto* b = std::get_if<LexiconBlock>(&block)) {
      out += "lexicon\n";
      for (const auto& e : b->entries) {
        out += "  " + e.key + " @ " + Quote(e.surface) + "\n";
      }
    } else if (const auto* b = std::get_if<RuleBlock>(&block)) {
      const RuleDecl& r = b->rule;
      out += "rule <" + r.name + ">\n";
      if (!r.binders.empty()) {
        out += "  for ";
        for (size_t i = 0; i < r.binders.size(); ++i) {
          if (i > 0) out += ", ";
          out += r.binders[i].var + " : " + r.binders[i].class_name;
        }
        out += "\n";
      }
      if (r.condition) out += "  if " + PrettyPrint(*r.condition) + "\n";
      out += "  then " + PrettyPrint(r.conclusion) + "\n";
    }
  }
  return out;
}

}  // namespace l4
