// Copyright 2026 The LGS Authors
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

#include "lgs/literal.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <vector>

#include "lgs/error.hpp"

namespace lgs {

namespace {

[[noreturn]] void parse_error(const std::string &what, std::string_view text, std::size_t pos) {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t n = 1) { pos_ += n; }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool consume(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!consume(c)) parse_error(std::string("expected '") + c + "'", text_, pos_);
    }
    [[noreturn]] void fail(const std::string &what) const { parse_error(what, text_, pos_); }

    std::optional<double> number() {
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        if (begin == end || !(std::isdigit(static_cast<unsigned char>(*begin)) || *begin == '.')) return std::nullopt;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    unsigned integer() {
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::string_view text() const { return text_; }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Parses an optional coefficient; the caller supplies the leading sign.
// `is_symbol_start` tells where the coefficient ends.
template <typename SymbolStart>
Amplitude coefficient(Cursor &c, SymbolStart is_symbol_start) {
    if (c.consume('(')) {
        double sign = 1.0;
        if (c.consume('-')) sign = -1.0;
        else c.consume('+');
        Amplitude v{};
        auto re = c.number();
        if (!re && c.peek() == 'i') {
            c.advance();
            v = Amplitude(0.0, sign);
        } else {
            if (!re) c.fail("expected a number");
            if (c.consume('i')) {
                v = Amplitude(0.0, sign * *re);
            } else {
                v = Amplitude(sign * *re, 0.0);
                if (c.peek() == '+' || c.peek() == '-') {
                    double isign = c.peek() == '-' ? -1.0 : 1.0;
                    c.advance();
                    auto im = c.number();
                    double mag = im ? *im : 1.0;
                    c.expect('i');
                    v += Amplitude(0.0, isign * mag);
                }
            }
        }
        c.expect(')');
        return v;
    }
    auto re = c.number();
    if (!re) {
        if (c.peek() == 'i' && is_symbol_start(c, 1)) {
            c.advance();
            return {0.0, 1.0};
        }
        return {1.0, 0.0};
    }
    if (c.peek() == 'i') {
        c.advance();
        return {0.0, *re};
    }
    if ((c.peek() == '+' || c.peek() == '-') && !is_symbol_start(c, 0)) {
        // a+bi written without parentheses
        double isign = c.peek() == '-' ? -1.0 : 1.0;
        c.advance();
        auto im = c.number();
        double mag = im ? *im : 1.0;
        c.expect('i');
        return {*re, isign * mag};
    }
    return {*re, 0.0};
}

double leading_sign(Cursor &c) {
    if (c.consume('-')) return -1.0;
    c.consume('+');
    return 1.0;
}

// Linear combination over a two-symbol alphabet, e.g. "0.6gh+0.8gv".
QubitCoeffs qubit_expression(Cursor &c, std::string_view sym0, std::string_view sym1, char terminator) {
    QubitCoeffs out{};
    auto symbol_start = [&](const Cursor &cur, std::size_t skip) {
        std::string_view rest = cur.text().substr(std::min(cur.pos() + skip, cur.text().size()));
        return rest.starts_with(sym0) || rest.starts_with(sym1);
    };
    bool any = false;
    while (!c.done() && c.peek() != terminator) {
        double sign = leading_sign(c);
        Amplitude coef = sign * coefficient(c, symbol_start);
        if (c.consume(sym0)) out.first += coef;
        else if (c.consume(sym1)) out.second += coef;
        else c.fail("expected '" + std::string(sym0) + "' or '" + std::string(sym1) + "'");
        any = true;
    }
    if (!any) c.fail("empty qubit expression");
    return out;
}

// Decimal literals such as 0.7071 are rounded; pairs this close to unit norm
// are rescaled, anything further off is left for make_product_state to reject.
constexpr double kRoundingSlack = 1e-3;

QubitCoeffs rounded_to_unit(QubitCoeffs c) {
    const double n2 = std::norm(c.first) + std::norm(c.second);
    if (n2 > 0.0 && std::abs(n2 - 1.0) <= kRoundingSlack) {
        const double s = 1.0 / std::sqrt(n2);
        c.first *= s;
        c.second *= s;
    }
    return c;
}

HybridState parse_product(std::string_view text, double prune_threshold) {
    std::optional<QubitCoeffs> photon;
    Line line{0};
    std::map<unsigned, QubitCoeffs> atoms;
    Cursor c(text);
    while (!c.done()) {
        if (c.consume("photon")) {
            if (photon) c.fail("photon given twice");
            if (c.consume('(')) {
                c.expect('l');
                unsigned id = c.integer();
                if (id > 0xFFFF) c.fail("line id too large");
                line = Line{static_cast<std::uint16_t>(id)};
                c.expect(')');
            }
            c.expect('=');
            photon = qubit_expression(c, "H", "V", ';');
        } else if (c.consume("atom")) {
            unsigned idx = c.integer();
            if (idx == 0) c.fail("atoms are numbered from 1");
            if (atoms.contains(idx)) c.fail("atom" + std::to_string(idx) + " given twice");
            c.expect('=');
            atoms[idx] = qubit_expression(c, "gh", "gv", ';');
        } else {
            c.fail("expected 'photon' or 'atomN'");
        }
        if (!c.done()) c.expect(';');
    }
    if (!photon) throw Error(ErrorCode::Parse, "state literal has no photon: '" + std::string(text) + "'");
    std::vector<QubitCoeffs> ordered;
    for (const auto &[idx, coeffs] : atoms) {
        if (idx != ordered.size() + 1) {
            throw Error(ErrorCode::Parse, "atoms must be numbered 1..n without gaps (missing atom" +
                                              std::to_string(ordered.size() + 1) + ")");
        }
        ordered.push_back(rounded_to_unit(coeffs));
    }
    return make_product_state(rounded_to_unit(*photon), line, ordered, prune_threshold);
}

HybridState parse_terms(std::string_view text, double prune_threshold) {
    Cursor c(text);
    std::vector<std::pair<BasisKet, Amplitude>> parsed;
    std::optional<std::size_t> atom_count;
    auto ket_start = [](const Cursor &cur, std::size_t skip) { return cur.peek(skip) == '|'; };
    while (!c.done()) {
        double sign = leading_sign(c);
        Amplitude coef = sign * coefficient(c, ket_start);
        c.expect('|');
        BasisKet k;
        if (c.consume('H')) k.pol = Polarization::H;
        else if (c.consume('V')) k.pol = Polarization::V;
        else c.fail("expected H or V");
        c.expect(',');
        c.expect('l');
        unsigned id = c.integer();
        if (id > 0xFFFF) c.fail("line id too large");
        k.line = Line{static_cast<std::uint16_t>(id)};
        std::size_t n = 0;
        while (c.consume(',')) {
            if (n >= kMaxAtoms) c.fail("too many atoms");
            if (c.consume("gh")) {
            } else if (c.consume("gv")) {
                k.atoms |= std::uint64_t{1} << n;
            } else {
                c.fail("expected gh or gv");
            }
            ++n;
        }
        c.expect('>');
        if (atom_count && *atom_count != n) c.fail("kets disagree on the number of atoms");
        atom_count = n;
        parsed.emplace_back(k, coef);
    }
    if (!atom_count) throw Error(ErrorCode::Parse, "empty state literal");
    HybridState s(*atom_count, prune_threshold);
    for (const auto &[k, a] : parsed) s.accumulate(k, a);
    return s.pruned();
}

}  // namespace

HybridState parse_state_literal(std::string_view text, double prune_threshold) {
    std::string compact = strip_spaces(text);
    if (compact.empty()) throw Error(ErrorCode::Parse, "empty state literal");
    if (compact == "0") throw Error(ErrorCode::Parse, "the zero literal carries no atom count");
    if (compact.find('|') != std::string::npos) return parse_terms(compact, prune_threshold);
    return parse_product(compact, prune_threshold);
}

std::string format_amplitude(Amplitude a, int digits) {
    char buf[96];
    double re = a.real() == 0.0 ? 0.0 : a.real();  // drop negative zero
    double im = a.imag() == 0.0 ? 0.0 : a.imag();
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, re, digits, im);
    return buf;
}

std::string format_ket(const BasisKet &k, std::size_t atom_count) {
    std::string out = "|";
    out += polarization_char(k.pol);
    out += ",l" + std::to_string(k.line.id);
    for (std::size_t i = 0; i < atom_count; ++i) {
        out += ',';
        out += atom_ground_name(k.atom(i));
    }
    out += '>';
    return out;
}

std::string format_state(const HybridState &s, int digits) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto &[k, a] : s.terms()) {
        if (!out.empty()) out += " + ";
        out += '(' + format_amplitude(a, digits) + ')' + format_ket(k, s.atom_count());
    }
    return out;
}

}  // namespace lgs
