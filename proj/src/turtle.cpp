// Copyright 2026 The sebikg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "sebikg/error.hpp"
#include "sebikg/rdf.hpp"

namespace sebikg::rdf {

namespace {

bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsLocalChar(char c) {
  return IsAlpha(c) || IsDigit(c) || c == '_' || c == '-' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsValidLocalName(std::string_view local) {
  if (local.empty()) return false;
  const char first = local.front();
  if (!(IsAlpha(first) || IsDigit(first) || first == '_' ||
        static_cast<unsigned char>(first) >= 0x80)) {
    return false;
  }
  if (local.back() == '.') return false;
  return std::all_of(local.begin(), local.end(), IsLocalChar);
}

bool IsDecimalLexical(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t int_digits = 0;
  while (i < s.size() && IsDigit(s[i])) ++i, ++int_digits;
  if (i >= s.size() || s[i] != '.') return false;
  ++i;
  size_t frac = 0;
  while (i < s.size() && IsDigit(s[i])) ++i, ++frac;
  return frac > 0 && i == s.size();
}

bool IsIntegerLexical(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), IsDigit);
}

std::string EscapeString(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string RenderIri(const std::string& iri, const PrefixMap& prefixes) {
  const std::string* best_prefix = nullptr;
  size_t best_len = 0;
  for (const auto& [prefix, ns_iri] : prefixes) {
    if (ns_iri.size() > best_len && iri.size() > ns_iri.size() &&
        iri.compare(0, ns_iri.size(), ns_iri) == 0 &&
        IsValidLocalName(std::string_view(iri).substr(ns_iri.size()))) {
      best_prefix = &prefix;
      best_len = ns_iri.size();
    }
  }
  if (best_prefix != nullptr) return *best_prefix + ":" + iri.substr(best_len);
  return "<" + iri + ">";
}

std::string RenderLiteral(const Literal& lit, const PrefixMap& prefixes) {
  if (!lit.lang.empty()) return "\"" + EscapeString(lit.lexical) + "\"@" + lit.lang;
  if (lit.datatype.empty()) return "\"" + EscapeString(lit.lexical) + "\"";
  if (lit.datatype == XsdDecimal() && IsDecimalLexical(lit.lexical)) return lit.lexical;
  if (lit.datatype == XsdInteger() && IsIntegerLexical(lit.lexical)) return lit.lexical;
  if (lit.datatype == XsdBoolean() && (lit.lexical == "true" || lit.lexical == "false")) {
    return lit.lexical;
  }
  return "\"" + EscapeString(lit.lexical) + "\"^^" + RenderIri(lit.datatype, prefixes);
}

std::string RenderPredicate(const Term& p, const PrefixMap& prefixes) {
  if (p.iri() == RdfType()) return "a";
  return RenderIri(p.iri(), prefixes);
}

}  // namespace

std::string RenderTerm(const Term& term, const PrefixMap& prefixes) {
  if (term.is_iri()) return RenderIri(term.iri(), prefixes);
  if (term.is_literal()) return RenderLiteral(term.literal(), prefixes);
  const Triple& q = term.quoted();
  return "<< " + RenderTerm(q.subject, prefixes) + " " + RenderPredicate(q.predicate, prefixes) +
         " " + RenderTerm(q.object, prefixes) + " >>";
}

std::string SerializeTurtleStar(const Graph& graph) {
  const PrefixMap& prefixes = graph.prefixes();
  std::ostringstream out;
  for (const auto& [prefix, iri] : prefixes) {
    out << "@prefix " << prefix << ": <" << iri << "> .\n";
  }

  // subject -> (sort key of predicate -> objects); `a` sorts first.
  using PredicateKey = std::pair<int, std::string>;
  std::map<std::string, std::map<PredicateKey, std::vector<std::string>>> blocks;
  for (const auto& t : graph.triples()) {
    const std::string pred = RenderPredicate(t.predicate, prefixes);
    blocks[RenderTerm(t.subject, prefixes)][{pred == "a" ? 0 : 1, pred}].push_back(
        RenderTerm(t.object, prefixes));
  }

  for (auto& [subject, predicates] : blocks) {
    out << "\n" << subject;
    bool first_pred = true;
    for (auto& [key, objects] : predicates) {
      std::sort(objects.begin(), objects.end());
      out << (first_pred ? " " : " ;\n    ") << key.second << " ";
      for (size_t i = 0; i < objects.size(); ++i) {
        if (i > 0) out << ", ";
        out << objects[i];
      }
      first_pred = false;
    }
    out << " .\n";
  }
  return out.str();
}

namespace {

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  Graph Parse() {
    for (;;) {
      SkipTrivia();
      if (AtEnd()) break;
      if (StartsWith("@prefix")) {
        Advance(7);
        ParsePrefixDirective(true);
      } else if (StartsWithKeyword("PREFIX")) {
        Advance(6);
        ParsePrefixDirective(false);
      } else {
        ParseStatement();
      }
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool StartsWith(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  bool StartsWithKeyword(std::string_view kw) const {
    if (!StartsWith(kw)) return false;
    const char next = Peek(kw.size());
    return next == ' ' || next == '\t' || next == '\n' || next == '\r';
  }

  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void SkipTrivia() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  void Expect(char c, const char* what) {
    SkipTrivia();
    if (Peek() != c) Fail(std::string("expected ") + what);
    Advance();
  }

  void ParsePrefixDirective(bool needs_dot) {
    SkipTrivia();
    std::string prefix;
    while (!AtEnd() && Peek() != ':') {
      const char c = Peek();
      if (!(IsAlpha(c) || IsDigit(c) || c == '_' || c == '-')) Fail("bad prefix name");
      prefix.push_back(c);
      Advance();
    }
    if (AtEnd()) Fail("expected ':' in prefix directive");
    Advance();
    SkipTrivia();
    if (Peek() != '<') Fail("expected IRI in prefix directive");
    std::string iri = ParseIriRef();
    graph_.SetPrefix(prefix, iri);
    if (needs_dot) Expect('.', "'.' after prefix directive");
  }

  std::string ParseIriRef() {
    Advance();  // '<'
    std::string iri;
    while (!AtEnd() && Peek() != '>') {
      const char c = Peek();
      if (c == ' ' || c == '\n' || c == '<' || c == '"') Fail("illegal character in IRI");
      iri.push_back(c);
      Advance();
    }
    if (AtEnd()) Fail("unterminated IRI");
    Advance();
    if (iri.find(':') == std::string::npos) Fail("relative IRI not supported: " + iri);
    return iri;
  }

  std::string ParsePrefixedName() {
    std::string prefix;
    while (!AtEnd() && Peek() != ':') {
      const char c = Peek();
      if (!(IsAlpha(c) || IsDigit(c) || c == '_' || c == '-')) Fail("unexpected character");
      prefix.push_back(c);
      Advance();
    }
    if (AtEnd()) Fail("expected ':' in prefixed name");
    Advance();
    std::string local;
    while (!AtEnd() && IsLocalChar(Peek())) {
      // A trailing '.' terminates the statement rather than the name.
      if (Peek() == '.' && !IsLocalChar(Peek(1))) break;
      if (Peek() == '.' && Peek(1) == '.') break;
      local.push_back(Peek());
      Advance();
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) Fail("undeclared prefix '" + prefix + "'");
    return it->second + local;
  }

  std::string ParseIri() {
    SkipTrivia();
    if (Peek() == '<' && Peek(1) != '<') return ParseIriRef();
    return ParsePrefixedName();
  }

  Term ParseVerb() {
    SkipTrivia();
    if (Peek() == 'a') {
      const char next = Peek(1);
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == '<') {
        Advance();
        return Term::MakeIri(RdfType());
      }
    }
    if (Peek() == '"' || IsDigit(Peek()) || (Peek() == '<' && Peek(1) == '<')) {
      Fail("expected predicate");
    }
    return Term::MakeIri(ParseIri());
  }

  std::string ParseStringBody() {
    Advance();  // opening quote
    std::string out;
    for (;;) {
      if (AtEnd()) Fail("unterminated string literal");
      const char c = Peek();
      if (c == '"') {
        Advance();
        return out;
      }
      if (c == '\n') Fail("newline in string literal");
      if (c == '\\') {
        Advance();
        const char e = Peek();
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case 'u': {
            std::string hex(text_.substr(pos_ + 1, 4));
            if (hex.size() != 4) Fail("bad \\u escape");
            unsigned cp = 0;
            for (char h : hex) {
              cp <<= 4;
              if (IsDigit(h)) cp |= static_cast<unsigned>(h - '0');
              else if (h >= 'a' && h <= 'f') cp |= static_cast<unsigned>(h - 'a' + 10);
              else if (h >= 'A' && h <= 'F') cp |= static_cast<unsigned>(h - 'A' + 10);
              else Fail("bad \\u escape");
            }
            AppendUtf8(out, cp);
            Advance(4);
            break;
          }
          default:
            Fail("unknown escape sequence");
        }
        Advance();
        continue;
      }
      out.push_back(c);
      Advance();
    }
  }

  static void AppendUtf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  Term ParseLiteral() {
    if (Peek() == '"') {
      std::string lexical = ParseStringBody();
      if (Peek() == '@') {
        Advance();
        std::string lang;
        while (!AtEnd() && (IsAlpha(Peek()) || IsDigit(Peek()) || Peek() == '-')) {
          lang.push_back(Peek());
          Advance();
        }
        if (lang.empty()) Fail("empty language tag");
        return Term::LangLiteral(std::move(lexical), std::move(lang));
      }
      if (StartsWith("^^")) {
        Advance(2);
        return Term::TypedLiteral(std::move(lexical), ParseIri());
      }
      return Term::PlainLiteral(std::move(lexical));
    }
    if (StartsWith("true")) {
      Advance(4);
      return Term::TypedLiteral("true", XsdBoolean());
    }
    if (StartsWith("false")) {
      Advance(5);
      return Term::TypedLiteral("false", XsdBoolean());
    }
    // Numeric.
    std::string lexical;
    if (Peek() == '+' || Peek() == '-') {
      lexical.push_back(Peek());
      Advance();
    }
    while (IsDigit(Peek())) {
      lexical.push_back(Peek());
      Advance();
    }
    if (Peek() == '.' && IsDigit(Peek(1))) {
      lexical.push_back('.');
      Advance();
      while (IsDigit(Peek())) {
        lexical.push_back(Peek());
        Advance();
      }
      return Term::TypedLiteral(std::move(lexical), XsdDecimal());
    }
    if (!IsIntegerLexical(lexical)) Fail("malformed numeric literal");
    return Term::TypedLiteral(std::move(lexical), XsdInteger());
  }

  // depth: nesting level of the enclosing quoted triple (0 = top level).
  Term ParseQuoted(int depth) {
    if (depth >= 1) Fail("nested quoted triples are not supported");
    Advance(2);  // "<<"
    Term s = ParseSubject(depth + 1);
    Term p = ParseVerb();
    SkipTrivia();
    if (StartsWith(">>")) Fail("quoted triple needs subject, predicate and object");
    Term o = ParseObject(depth + 1);
    SkipTrivia();
    if (!StartsWith(">>")) Fail("expected '>>' to close quoted triple");
    Advance(2);
    return Term::Quoted(Triple{std::move(s), std::move(p), std::move(o)});
  }

  Term ParseSubject(int depth) {
    SkipTrivia();
    if (StartsWith("<<")) return ParseQuoted(depth);
    if (Peek() == '"' || IsDigit(Peek())) Fail("literal in subject position");
    if (StartsWith(">>")) Fail("quoted triple needs subject, predicate and object");
    return Term::MakeIri(ParseIri());
  }

  Term ParseObject(int depth) {
    SkipTrivia();
    if (StartsWith("<<")) return ParseQuoted(depth);
    if (StartsWith(">>")) Fail("quoted triple needs subject, predicate and object");
    const char c = Peek();
    if (c == '"' || IsDigit(c) || c == '+' || c == '-') return ParseLiteral();
    for (std::string_view word : {"true", "false"}) {
      // "trueish:x" is a prefixed name, "true ." a boolean.
      const char next = Peek(word.size());
      if (StartsWith(word) && next != ':' && (next == '.' || !IsLocalChar(next))) {
        return ParseLiteral();
      }
    }
    if (AtEnd()) Fail("unexpected end of input");
    return Term::MakeIri(ParseIri());
  }

  void ParseStatement() {
    Term subject = ParseSubject(0);
    for (;;) {
      Term predicate = ParseVerb();
      for (;;) {
        Term object = ParseObject(0);
        try {
          graph_.Add(Triple{subject, predicate, std::move(object)});
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          Fail(e.what());
        }
        SkipTrivia();
        if (Peek() != ',') break;
        Advance();
      }
      SkipTrivia();
      if (Peek() == ';') {
        while (Peek() == ';') {
          Advance();
          SkipTrivia();
        }
        if (Peek() == '.') break;
        continue;
      }
      break;
    }
    Expect('.', "'.' at end of statement");
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t column_ = 1;
  Graph graph_;
};

}  // namespace

Graph ParseTurtleStar(std::string_view text) { return TurtleParser(text).Parse(); }

}  // namespace sebikg::rdf
