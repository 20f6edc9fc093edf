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

#include <cctype>
#include <cstdio>

#include "rdf/escape.hpp"
#include "shaclform/rdf.hpp"

namespace shaclform::rdf {

namespace detail {

std::string escape_string(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (unsigned char c : in) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default:
                if (c < 0x20 || c == 0x7f) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

std::string escape_iri(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (unsigned char c : in) {
        if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
            c == '`' || c == '\\') {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04X", c);
            out += buf;
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

}  // namespace detail

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Consumes `count` digits (at least `count` when `at_least`) starting at pos.
bool digits(std::string_view s, std::size_t& pos, std::size_t count, bool at_least = false) {
    std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos]) && (at_least || pos - start < count)) ++pos;
    return pos - start >= count && (at_least || pos - start == count);
}

int number(std::string_view s, std::size_t from, std::size_t to) {
    int v = 0;
    for (std::size_t i = from; i < to; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

bool is_leap(long long year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

bool integer_form(std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    return digits(s, pos, 1, true) && pos == s.size();
}

bool decimal_form(std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t int_start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    bool int_digits = pos > int_start;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t frac_start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (!int_digits && pos == frac_start) return false;
    } else if (!int_digits) {
        return false;
    }
    return pos == s.size();
}

// (Z | (+|-)hh:mm) with |offset| <= 14:00, or nothing.
bool timezone(std::string_view s, std::size_t& pos) {
    if (pos == s.size()) return true;
    if (s[pos] == 'Z') return ++pos == s.size();
    if (s[pos] != '+' && s[pos] != '-') return false;
    ++pos;
    std::size_t h = pos;
    if (!digits(s, pos, 2) || pos >= s.size() || s[pos] != ':') return false;
    ++pos;
    std::size_t m = pos;
    if (!digits(s, pos, 2)) return false;
    int hours = number(s, h, h + 2);
    int minutes = number(s, m, m + 2);
    if (minutes > 59 || hours > 14 || (hours == 14 && minutes != 0)) return false;
    return pos == s.size();
}

bool date_part(std::string_view s, std::size_t& pos) {
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t year_start = pos;
    if (!digits(s, pos, 4, true)) return false;
    // More than four digits may not start with zero.
    if (pos - year_start > 4 && s[year_start] == '0') return false;
    if (pos - year_start > 15) return false;
    long long year = 0;
    for (std::size_t i = year_start; i < pos; ++i) year = year * 10 + (s[i] - '0');
    if (pos >= s.size() || s[pos] != '-') return false;
    ++pos;
    std::size_t m = pos;
    if (!digits(s, pos, 2) || pos >= s.size() || s[pos] != '-') return false;
    ++pos;
    std::size_t d = pos;
    if (!digits(s, pos, 2)) return false;
    int month = number(s, m, m + 2);
    int day = number(s, d, d + 2);
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12 || day < 1) return false;
    int limit = kDays[month - 1] + (month == 2 && is_leap(year) ? 1 : 0);
    return day <= limit;
}

bool date_form(std::string_view s) {
    std::size_t pos = 0;
    return date_part(s, pos) && timezone(s, pos);
}

bool date_time_form(std::string_view s) {
    std::size_t pos = 0;
    if (!date_part(s, pos) || pos >= s.size() || s[pos] != 'T') return false;
    ++pos;
    std::size_t h = pos;
    if (!digits(s, pos, 2) || pos >= s.size() || s[pos] != ':') return false;
    ++pos;
    std::size_t m = pos;
    if (!digits(s, pos, 2) || pos >= s.size() || s[pos] != ':') return false;
    ++pos;
    std::size_t sec = pos;
    if (!digits(s, pos, 2)) return false;
    bool nonzero_fraction = false;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t frac = pos;
        while (pos < s.size() && is_digit(s[pos])) {
            if (s[pos] != '0') nonzero_fraction = true;
            ++pos;
        }
        if (pos == frac) return false;
    }
    int hours = number(s, h, h + 2);
    int minutes = number(s, m, m + 2);
    int seconds = number(s, sec, sec + 2);
    if (hours == 24) {
        if (minutes != 0 || seconds != 0 || nonzero_fraction) return false;
    } else if (hours > 23 || minutes > 59 || seconds > 59) {
        return false;
    }
    return timezone(s, pos);
}

bool any_uri_form(std::string_view s) {
    for (unsigned char c : s) {
        if (c <= 0x20 || c == 0x7f) return false;
    }
    return true;
}

}  // namespace

LexicalStatus check_lexical(std::string_view value, std::string_view datatype) {
    auto verdict = [](bool ok) { return ok ? LexicalStatus::valid : LexicalStatus::invalid; };
    if (datatype == vocab::kXsdString) return LexicalStatus::valid;
    if (datatype == vocab::kXsdInteger) return verdict(integer_form(value));
    if (datatype == vocab::kXsdDecimal) return verdict(decimal_form(value));
    if (datatype == vocab::kXsdBoolean) {
        return verdict(value == "true" || value == "false" || value == "1" || value == "0");
    }
    if (datatype == vocab::kXsdDate) return verdict(date_form(value));
    if (datatype == vocab::kXsdDateTime) return verdict(date_time_form(value));
    if (datatype == vocab::kXsdAnyUri) return verdict(any_uri_form(value));
    return LexicalStatus::unknown_datatype;
}

bool is_absolute_iri(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
    for (unsigned char c : iri) {
        if (c <= 0x20 || std::string_view("<>\"{}|^`\\").find(static_cast<char>(c)) != std::string_view::npos) {
            return false;
        }
    }
    for (std::size_t i = 1; i < iri.size(); ++i) {
        char c = iri[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
    }
    return false;
}

namespace {

struct IriParts {
    std::string scheme;
    bool has_authority = false;
    std::string authority;
    std::string path;
    bool has_query = false;
    std::string query;
    bool has_fragment = false;
    std::string fragment;
};

IriParts split_iri(std::string_view ref) {
    IriParts p;
    if (is_absolute_iri(ref)) {
        auto colon = ref.find(':');
        p.scheme = std::string(ref.substr(0, colon));
        ref.remove_prefix(colon + 1);
    }
    if (auto hash = ref.find('#'); hash != std::string_view::npos) {
        p.has_fragment = true;
        p.fragment = std::string(ref.substr(hash + 1));
        ref = ref.substr(0, hash);
    }
    if (auto q = ref.find('?'); q != std::string_view::npos) {
        p.has_query = true;
        p.query = std::string(ref.substr(q + 1));
        ref = ref.substr(0, q);
    }
    if (ref.starts_with("//")) {
        p.has_authority = true;
        ref.remove_prefix(2);
        auto slash = ref.find('/');
        p.authority = std::string(ref.substr(0, slash));
        ref = slash == std::string_view::npos ? std::string_view{} : ref.substr(slash);
    }
    p.path = std::string(ref);
    return p;
}

std::string remove_dot_segments(std::string input) {
    std::string output;
    while (!input.empty()) {
        if (input.starts_with("../")) {
            input.erase(0, 3);
        } else if (input.starts_with("./")) {
            input.erase(0, 2);
        } else if (input.starts_with("/./")) {
            input.erase(0, 2);
        } else if (input == "/.") {
            input = "/";
        } else if (input.starts_with("/../") || input == "/..") {
            input = input == "/.." ? "/" : input.substr(3);
            auto last = output.rfind('/');
            output.erase(last == std::string::npos ? 0 : last);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t start = input[0] == '/' ? 1 : 0;
            auto next = input.find('/', start);
            output += input.substr(0, next);
            input.erase(0, next == std::string::npos ? input.size() : next);
        }
    }
    return output;
}

std::string join(const IriParts& p) {
    std::string out = p.scheme + ":";
    if (p.has_authority) out += "//" + p.authority;
    out += p.path;
    if (p.has_query) out += "?" + p.query;
    if (p.has_fragment) out += "#" + p.fragment;
    return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
    IriParts r = split_iri(reference);
    if (!r.scheme.empty()) {
        r.path = remove_dot_segments(r.path);
        return join(r);
    }
    IriParts b = split_iri(base);
    IriParts t;
    t.scheme = b.scheme;
    t.has_fragment = r.has_fragment;
    t.fragment = r.fragment;
    if (r.has_authority) {
        t.has_authority = true;
        t.authority = r.authority;
        t.path = remove_dot_segments(r.path);
        t.has_query = r.has_query;
        t.query = r.query;
        return join(t);
    }
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
        t.path = b.path;
        t.has_query = r.has_query || b.has_query;
        t.query = r.has_query ? r.query : b.query;
    } else {
        if (r.path[0] == '/') {
            t.path = remove_dot_segments(r.path);
        } else {
            std::string merged;
            if (b.has_authority && b.path.empty()) {
                merged = "/" + r.path;
            } else {
                auto last = b.path.rfind('/');
                merged = (last == std::string::npos ? std::string{} : b.path.substr(0, last + 1)) + r.path;
            }
            t.path = remove_dot_segments(merged);
        }
        t.has_query = r.has_query;
        t.query = r.query;
    }
    return join(t);
}

}  // namespace shaclform::rdf
