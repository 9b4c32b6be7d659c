// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/grammar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skewlcd {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// split at top-level +/- (outside parentheses); each piece keeps its sign
std::vector<std::pair<int, std::string>> signed_terms(const std::string& s) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0;
    int sign = 1;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-') && i > 0) {
            if (!cur.empty()) out.emplace_back(sign, cur);
            cur.clear();
            sign = (c == '-') ? -1 : 1;
            continue;
        }
        if (depth == 0 && c == '-' && i == 0) {
            sign = -1;
            continue;
        }
        if (depth == 0 && c == '+' && i == 0) continue;
        cur.push_back(c);
    }
    if (!cur.empty()) out.emplace_back(sign, cur);
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
    return out;
}

uint64_t parse_uint(const std::string& s, size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("expected integer in '" + s + "'");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
        ++pos;
    }
    return v;
}

// one term of the element grammar: [INT] ['*'] [SYM ['^' INT]]
FieldElement parse_element_term(const FieldPtr& field, const std::string& term) {
    const std::string& sym = field->generator_symbol();
    size_t pos = 0;
    FieldElement coef = field->one();
    bool have_any = false;
    if (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
        coef = field->from_int(static_cast<int64_t>(parse_uint(term, pos)));
        have_any = true;
        if (pos < term.size() && term[pos] == '*') ++pos;
    }
    if (term.compare(pos, sym.size(), sym) == 0) {
        pos += sym.size();
        uint64_t k = 1;
        if (pos < term.size() && term[pos] == '^') {
            ++pos;
            k = parse_uint(term, pos);
        }
        if (field->extension_degree() < 2)
            throw std::invalid_argument("prime field element must be an integer: '" + term + "'");
        coef = coef * field->generator().pow(static_cast<int64_t>(k));
        have_any = true;
    }
    if (!have_any || pos != term.size())
        throw std::invalid_argument("cannot parse field element term '" + term + "'");
    return coef;
}

FieldElement parse_element_stripped(const FieldPtr& field, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty field element");
    FieldElement acc = field->zero();
    for (const auto& [sign, term] : signed_terms(text)) {
        FieldElement e = field->zero();
        if (term.size() >= 2 && term.front() == '(' && term.back() == ')')
            e = parse_element_stripped(field, term.substr(1, term.size() - 2));
        else
            e = parse_element_term(field, term);
        acc = (sign > 0) ? acc + e : acc - e;
    }
    return acc;
}

}  // namespace

FieldPtr parse_field(const std::string& spec) {
    const std::string s = strip_spaces(spec);
    if (s.compare(0, 3, "GF(") != 0 || s.back() != ')')
        throw std::invalid_argument("field spec must look like GF(p^t; m0,...,mt): '" + spec + "'");
    const std::string body = s.substr(3, s.size() - 4);
    const size_t semi = body.find(';');
    const std::string head = body.substr(0, semi == std::string::npos ? body.size() : semi);
    size_t pos = 0;
    const uint64_t p = parse_uint(head, pos);
    uint64_t t = 1;
    if (pos < head.size()) {
        if (head[pos] != '^') throw std::invalid_argument("bad field spec '" + spec + "'");
        ++pos;
        t = parse_uint(head, pos);
        if (pos != head.size()) throw std::invalid_argument("bad field spec '" + spec + "'");
    }
    if (semi == std::string::npos)
        return Field::with_default_modulus(static_cast<uint32_t>(p), static_cast<uint32_t>(t));
    std::vector<uint32_t> modulus;
    const std::string tail = body.substr(semi + 1);
    size_t mp = 0;
    while (mp < tail.size()) {
        modulus.push_back(static_cast<uint32_t>(parse_uint(tail, mp)));
        if (mp < tail.size()) {
            if (tail[mp] != ',') throw std::invalid_argument("bad modulus list in '" + spec + "'");
            ++mp;
        }
    }
    return Field::create(static_cast<uint32_t>(p), static_cast<uint32_t>(t), std::move(modulus));
}

std::string field_spec(const Field& field) {
    std::ostringstream os;
    os << "GF(" << field.characteristic();
    if (field.extension_degree() == 1) {
        os << ")";
        return os.str();
    }
    os << "^" << field.extension_degree() << "; ";
    const auto& m = field.modulus();
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    os << ")";
    return os.str();
}

FieldElement parse_element(const FieldPtr& field, const std::string& text) {
    return parse_element_stripped(field, strip_spaces(text));
}

SkewPoly parse_poly(const FieldPtr& field, uint32_t r, const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s == "0") return SkewPoly::zero(field, r);
    SkewPoly acc = SkewPoly::zero(field, r);
    for (const auto& [sign, term] : signed_terms(s)) {
        // find 'x' at paren depth 0; everything before it is the coefficient
        size_t xpos = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (depth == 0 && term[i] == 'x') {
                xpos = i;
                break;
            }
        }
        FieldElement coef = field->one();
        uint32_t deg = 0;
        if (xpos == std::string::npos) {
            coef = parse_element_stripped(field, term);
        } else {
            std::string chead = term.substr(0, xpos);
            if (!chead.empty() && chead.back() == '*') chead.pop_back();
            if (!chead.empty()) {
                if (chead.size() >= 2 && chead.front() == '(' && chead.back() == ')')
                    chead = chead.substr(1, chead.size() - 2);
                coef = parse_element_stripped(field, chead);
            }
            size_t pos = xpos + 1;
            deg = 1;
            if (pos < term.size() && term[pos] == '^') {
                ++pos;
                deg = static_cast<uint32_t>(parse_uint(term, pos));
            }
            if (pos != term.size())
                throw std::invalid_argument("cannot parse polynomial term '" + term + "'");
        }
        if (sign < 0) coef = -coef;
        acc = acc + SkewPoly::monomial(coef, deg, r);
    }
    return acc;
}

std::string poly_str(const SkewPoly& f) { return f.str(); }

RingElement parse_ring_element(const FieldPtr& field, const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty ring element");
    FieldElement a = field->zero();
    FieldElement b = field->zero();
    for (const auto& [sign, term] : signed_terms(s)) {
        // locate a standalone 'v' at depth 0
        size_t vpos = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (depth == 0 && term[i] == 'v') {
                vpos = i;
                break;
            }
        }
        FieldElement e = field->one();
        bool is_v_term = vpos != std::string::npos;
        if (is_v_term) {
            std::string rest = term.substr(0, vpos) + term.substr(vpos + 1);
            // drop one joining '*'
            if (vpos > 0 && vpos - 1 < rest.size() && rest[vpos - 1] == '*')
                rest.erase(vpos - 1, 1);
            else if (vpos < rest.size() && rest[vpos] == '*')
                rest.erase(vpos, 1);
            if (!rest.empty()) {
                if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
                    rest = rest.substr(1, rest.size() - 2);
                e = parse_element_stripped(field, rest);
            }
        } else {
            std::string body = term;
            if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
                body = body.substr(1, body.size() - 2);
            e = parse_element_stripped(field, body);
        }
        if (sign < 0) e = -e;
        if (is_v_term)
            b += e;
        else
            a += e;
    }
    return {a, b};
}

std::string ring_element_str(const RingElement& x) { return x.str(); }

}  // namespace skewlcd
