/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Recursive-descent reader for the Turtle subset used by shapes and payload
// fixtures: directives, `a`, predicate/object lists, blank node property
// lists, labeled blank nodes, collections, and single-line literals.

#include <cctype>
#include <map>

#include "rdf/escape.hpp"
#include "shaclform/error.hpp"
#include "shaclform/rdf.hpp"

namespace shaclform::rdf {

namespace {

bool is_pn_chars_base(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c >= 0x80;
}
bool is_pn_chars_u(unsigned char c) { return is_pn_chars_base(c) || c == '_'; }
bool is_pn_chars(unsigned char c) { return is_pn_chars_u(c) || c == '-' || (c >= '0' && c <= '9'); }
bool is_hex(char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

class TurtleReader {
public:
    TurtleReader(std::string_view text, std::string_view base) : text_(text), base_(base) {}

    Graph run() {
        skip_ws();
        while (!at_end()) {
            statement();
            skip_ws();
        }
        return std::move(graph_);
    }

private:
    // Input handling -----------------------------------------------------

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            line_start_ = pos_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, pos_ - line_start_ + 1);
    }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c || at_end()) {
            fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
        }
        advance();
    }

    bool keyword_ahead(std::string_view kw, bool case_insensitive) const {
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            char a = text_[pos_ + i];
            char b = kw[i];
            if (case_insensitive) {
                a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
                b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
            }
            if (a != b) return false;
        }
        char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
        return !is_pn_chars(static_cast<unsigned char>(after)) && after != ':';
    }

    // Statements ---------------------------------------------------------

    void statement() {
        if (peek() == '@') {
            if (keyword_ahead("@prefix", false)) {
                pos_ += 7;
                prefix_directive();
                expect('.');
                return;
            }
            if (keyword_ahead("@base", false)) {
                pos_ += 5;
                base_directive();
                expect('.');
                return;
            }
            fail("unknown directive");
        }
        if (keyword_ahead("PREFIX", true)) {
            pos_ += 6;
            prefix_directive();
            return;
        }
        if (keyword_ahead("BASE", true)) {
            pos_ += 4;
            base_directive();
            return;
        }
        triples();
        expect('.');
    }

    void prefix_directive() {
        skip_ws();
        std::string prefix;
        if (peek() != ':') prefix = pn_prefix();
        if (peek() != ':') fail("expected ':' after prefix name");
        advance();
        skip_ws();
        std::string ns = iri_ref();
        prefixes_[prefix] = ns;
        graph_.set_prefix(prefix, ns);
    }

    void base_directive() {
        skip_ws();
        base_ = iri_ref();
    }

    void triples() {
        skip_ws();
        if (peek() == '[') {
            Term subject = blank_node_property_list();
            skip_ws();
            if (peek() != '.') predicate_object_list(subject);
            return;
        }
        Term subject = subject_term();
        predicate_object_list(subject);
    }

    Term subject_term() {
        char c = peek();
        if (c == '<') return Term::iri(iri_ref());
        if (c == '_' && peek(1) == ':') return blank_label();
        if (c == '(') return collection();
        if (c == '"' || c == '\'') fail("literal in subject position");
        return Term::iri(prefixed_name());
    }

    void predicate_object_list(const Term& subject) {
        for (;;) {
            skip_ws();
            Term predicate = verb();
            object_list(subject, predicate);
            skip_ws();
            if (peek() != ';') return;
            while (peek() == ';') {
                advance();
                skip_ws();
            }
            // A trailing ';' may close the list.
            if (peek() == '.' || peek() == ']' || at_end()) return;
        }
    }

    Term verb() {
        if (peek() == 'a' && keyword_ahead("a", false)) {
            advance();
            return Term::iri(vocab::kRdfType);
        }
        if (peek() == '<') return Term::iri(iri_ref());
        if (peek() == '[' || peek() == '(' || peek() == '"' || peek() == '\'' || peek() == '_') {
            fail("predicate must be an IRI");
        }
        return Term::iri(prefixed_name());
    }

    void object_list(const Term& subject, const Term& predicate) {
        for (;;) {
            skip_ws();
            Term object = object_term();
            graph_.insert(subject, predicate, std::move(object));
            skip_ws();
            if (peek() != ',') return;
            advance();
        }
    }

    Term object_term() {
        if (at_end()) fail("expected object before end of input");
        char c = peek();
        if (c == '<') return Term::iri(iri_ref());
        if (c == '_' && peek(1) == ':') return blank_label();
        if (c == '[') return blank_node_property_list();
        if (c == '(') return collection();
        if (c == '"' || c == '\'') return rdf_literal();
        if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return numeric_literal();
        if (keyword_ahead("true", false)) {
            pos_ += 4;
            return Term::literal("true", vocab::kXsdBoolean);
        }
        if (keyword_ahead("false", false)) {
            pos_ += 5;
            return Term::literal("false", vocab::kXsdBoolean);
        }
        return Term::iri(prefixed_name());
    }

    Term blank_node_property_list() {
        expect('[');
        Term node = fresh_blank();
        skip_ws();
        if (peek() != ']') predicate_object_list(node);
        expect(']');
        return node;
    }

    Term collection() {
        expect('(');
        std::vector<Term> members;
        for (;;) {
            skip_ws();
            if (at_end()) fail("unterminated collection");
            if (peek() == ')') break;
            members.push_back(object_term());
        }
        advance();
        Term head = Term::iri(vocab::kRdfNil);
        // Cells are allocated front to back so labels follow document order.
        std::vector<Term> cells;
        for (std::size_t i = 0; i < members.size(); ++i) cells.push_back(fresh_blank());
        for (std::size_t i = 0; i < members.size(); ++i) {
            graph_.insert(cells[i], Term::iri(vocab::kRdfFirst), members[i]);
            graph_.insert(cells[i], Term::iri(vocab::kRdfRest),
                          i + 1 < cells.size() ? cells[i + 1] : Term::iri(vocab::kRdfNil));
        }
        if (!cells.empty()) head = cells.front();
        return head;
    }

    // Terms --------------------------------------------------------------

    Term fresh_blank() { return Term::blank("b" + std::to_string(next_blank_++)); }

    Term blank_label() {
        pos_ += 2;
        std::size_t start = pos_;
        unsigned char c = static_cast<unsigned char>(peek());
        if (!(is_pn_chars_u(c) || (c >= '0' && c <= '9'))) fail("invalid blank node label");
        advance();
        while (!at_end()) {
            unsigned char d = static_cast<unsigned char>(peek());
            if (is_pn_chars(d)) {
                advance();
            } else if (d == '.' && is_pn_chars(static_cast<unsigned char>(peek(1)))) {
                advance();
            } else {
                break;
            }
        }
        std::string label(text_.substr(start, pos_ - start));
        auto [it, inserted] = labels_.try_emplace(label);
        if (inserted) it->second = fresh_blank();
        return it->second;
    }

    std::uint32_t hex_escape(std::size_t digits) {
        std::uint32_t cp = 0;
        for (std::size_t i = 0; i < digits; ++i) {
            if (!is_hex(peek())) fail("invalid unicode escape");
            char h = advance();
            cp = cp * 16 + static_cast<std::uint32_t>(h <= '9' ? h - '0' : (h | 0x20) - 'a' + 10);
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in escape");
        return cp;
    }

    std::string iri_ref() {
        if (peek() != '<') fail("expected '<'");
        advance();
        std::string iri;
        for (;;) {
            if (at_end()) fail("unterminated IRI");
            char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                char kind = at_end() ? '\0' : advance();
                if (kind == 'u') {
                    detail::append_utf8(iri, hex_escape(4));
                } else if (kind == 'U') {
                    detail::append_utf8(iri, hex_escape(8));
                } else {
                    fail("invalid escape in IRI");
                }
                continue;
            }
            if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
                c == '|' || c == '^' || c == '`') {
                fail("invalid character in IRI");
            }
            iri += c;
        }
        return absolute(iri);
    }

    std::string absolute(const std::string& iri) {
        if (is_absolute_iri(iri)) return iri;
        if (base_.empty()) fail("relative IRI <" + iri + "> with no base IRI");
        return resolve_iri(base_, iri);
    }

    std::string pn_prefix() {
        std::size_t start = pos_;
        if (!is_pn_chars_base(static_cast<unsigned char>(peek()))) fail("invalid prefix name");
        advance();
        while (!at_end()) {
            unsigned char c = static_cast<unsigned char>(peek());
            if (is_pn_chars(c)) {
                advance();
            } else if (c == '.' && (is_pn_chars(static_cast<unsigned char>(peek(1))) || peek(1) == '.')) {
                advance();
            } else {
                break;
            }
        }
        if (text_[pos_ - 1] == '.') fail("prefix name may not end with '.'");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string prefixed_name() {
        std::size_t start_line = line_;
        std::size_t start_col = pos_ - line_start_ + 1;
        std::string prefix;
        if (peek() != ':') {
            if (!is_pn_chars_base(static_cast<unsigned char>(peek()))) {
                fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + peek() + "'");
            }
            prefix = pn_prefix();
        }
        if (peek() != ':') fail("expected ':' in prefixed name");
        advance();
        std::string local = pn_local();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) throw ParseError("unknown prefix '" + prefix + ":'", start_line, start_col);
        return absolute(it->second + local);
    }

    bool local_char_ahead(bool first) const {
        unsigned char c = static_cast<unsigned char>(peek());
        if (at_end()) return false;
        if (is_pn_chars_u(c) || c == ':' || (c >= '0' && c <= '9')) return true;
        if (!first && c == '-') return true;
        if (c == '%') return true;
        if (c == '\\') return true;
        return false;
    }

    std::string pn_local() {
        std::string local;
        bool first = true;
        for (;;) {
            if (local_char_ahead(first)) {
                char c = peek();
                if (c == '%') {
                    advance();
                    if (!is_hex(peek()) || !is_hex(peek(1))) fail("invalid percent escape in local name");
                    local += '%';
                    local += advance();
                    local += advance();
                } else if (c == '\\') {
                    advance();
                    static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
                    if (at_end() || kEscapable.find(peek()) == std::string_view::npos) {
                        fail("invalid escape in local name");
                    }
                    local += advance();
                } else {
                    local += advance();
                }
                first = false;
                continue;
            }
            // '.' belongs to the name only when more name characters follow.
            if (!first && peek() == '.') {
                std::size_t ahead = 0;
                while (peek(ahead) == '.') ++ahead;
                unsigned char next = static_cast<unsigned char>(peek(ahead));
                if (pos_ + ahead < text_.size() &&
                    (is_pn_chars(next) || next == ':' || next == '%' || next == '\\')) {
                    for (std::size_t i = 0; i < ahead; ++i) local += advance();
                    continue;
                }
            }
            break;
        }
        return local;
    }

    std::string quoted_string() {
        char quote = advance();
        if (peek() == quote && peek(1) == quote) fail("long (triple-quoted) strings are not supported");
        std::string value;
        for (;;) {
            if (at_end()) fail("unterminated string literal");
            if (peek() == '\n' || peek() == '\r') fail("line break in string literal");
            char c = advance();
            if (c == quote) break;
            if (c != '\\') {
                value += c;
                continue;
            }
            if (at_end()) fail("unterminated string literal");
            char e = advance();
            switch (e) {
                case 't': value += '\t'; break;
                case 'b': value += '\b'; break;
                case 'n': value += '\n'; break;
                case 'r': value += '\r'; break;
                case 'f': value += '\f'; break;
                case '"': value += '"'; break;
                case '\'': value += '\''; break;
                case '\\': value += '\\'; break;
                case 'u': detail::append_utf8(value, hex_escape(4)); break;
                case 'U': detail::append_utf8(value, hex_escape(8)); break;
                default: fail(std::string("invalid escape '\\") + e + "' in string literal");
            }
        }
        return value;
    }

    Term rdf_literal() {
        std::string lexical = quoted_string();
        if (peek() == '@') {
            advance();
            std::size_t start = pos_;
            while (std::isalpha(static_cast<unsigned char>(peek()))) advance();
            if (pos_ == start) fail("empty language tag");
            while (peek() == '-' && std::isalnum(static_cast<unsigned char>(peek(1)))) {
                advance();
                while (std::isalnum(static_cast<unsigned char>(peek()))) advance();
            }
            return Term::lang_literal(std::move(lexical), std::string(text_.substr(start, pos_ - start)));
        }
        if (peek() == '^' && peek(1) == '^') {
            pos_ += 2;
            std::string datatype = peek() == '<' ? iri_ref() : prefixed_name();
            return Term::literal(std::move(lexical), std::move(datatype));
        }
        return Term::literal(std::move(lexical));
    }

    Term numeric_literal() {
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') advance();
        std::size_t int_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        bool int_digits = pos_ > int_start;
        bool fraction = false;
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            fraction = true;
        }
        bool exponent = false;
        if ((peek() == 'e' || peek() == 'E') && (int_digits || fraction)) {
            std::size_t save = pos_;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
                exponent = true;
            } else {
                pos_ = save;
            }
        }
        if (!int_digits && !fraction) fail("invalid numeric literal");
        std::string lexical(text_.substr(start, pos_ - start));
        if (exponent) return Term::literal(std::move(lexical), vocab::kXsdDouble);
        if (fraction) return Term::literal(std::move(lexical), vocab::kXsdDecimal);
        return Term::literal(std::move(lexical), vocab::kXsdInteger);
    }

    std::string_view text_;
    std::string base_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
    std::map<std::string, std::string> prefixes_;
    std::map<std::string, Term> labels_;
    std::uint64_t next_blank_ = 0;
    Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, std::string_view base_iri) {
    if (!base_iri.empty() && !is_absolute_iri(base_iri)) {
        throw ParseError("base IRI <" + std::string(base_iri) + "> is not absolute", 1, 1);
    }
    return TurtleReader(text, base_iri).run();
}

}  // namespace shaclform::rdf
