#include "cevian/serialize.hpp"

#include "cevian/error.hpp"

#include <cctype>
#include <limits>

namespace cevian {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    FieldElement expression() {
        FieldElement acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Triple triple() {
        skip_space();
        expect('[');
        Triple t{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (i > 0) expect(',');
            t[i] = expression();
        }
        expect(']');
        return t;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

  private:
    FieldElement term() {
        FieldElement acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const FieldElement d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    FieldElement unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return atom();
    }

    FieldElement atom() {
        skip_space();
        if (accept('(')) {
            FieldElement inner = expression();
            expect(')');
            return inner;
        }
        if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            skip_space();
            const Integer n = integer();
            expect(')');
            if (!n.fits_slong_p()) fail("radicand too large");
            try {
                return FieldElement::root_of(n.get_si());
            } catch (const Error &e) {
                fail(e.what());
            }
        }
        return FieldElement(Rational(integer()));
    }

    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw Error(ErrorKind::ParseError,
                    why + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Integer integer_from_json(const Json &j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Integer out;
        if (s.empty() || out.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad integer string " + s);
        return out;
    }
    throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Json integer_json(const Integer &n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

} // namespace

FieldElement parse_field(std::string_view text) {
    Parser p(text);
    FieldElement out = p.expression();
    p.finish();
    return out;
}

Triple parse_triple(std::string_view text) {
    Parser p(text);
    Triple out = p.triple();
    p.finish();
    return out;
}

BaryPoint parse_point(std::string_view text) {
    const Triple t = parse_triple(text);
    if (is_zero(t)) throw Error(ErrorKind::ParseError, "point with all coordinates zero");
    return BaryPoint(t);
}

BaryLine parse_line(std::string_view text) {
    const Triple t = parse_triple(text);
    if (is_zero(t)) throw Error(ErrorKind::ParseError, "line with all coefficients zero");
    return BaryLine(t);
}

Json to_json(const FieldElement &a) {
    if (a.is_rational() && a.coeffs()[0].get_den() == 1) return integer_json(a.coeffs()[0].get_num());
    Json coeffs = Json::array();
    for (const auto &c : a.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return Json{{"tower", a.tower().radicands()}, {"coeffs", coeffs}};
}

Json to_json(const Triple &t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

Json to_json(const BaryPoint &p) { return to_json(p.coords()); }

Json to_json(const BaryLine &l) { return to_json(l.coeffs()); }

Json to_json(const Conic &c) {
    Json out = Json::array();
    for (const auto &e : c.upper()) out.push_back(to_json(e));
    return out;
}

Json to_json(const WPoint &p) {
    if (p.is_infinity()) return "infinity";
    return Json{{"u", to_json(p.u())}, {"v", to_json(p.v())}};
}

Json to_json(const NFPoint &p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const Report &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        Json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return Json{{"passed", r.all_passed()}, {"checks", checks}};
}

FieldElement field_from_json(const Json &j) {
    if (j.is_number_integer() || j.is_string()) return FieldElement(Rational(integer_from_json(j)));
    if (!j.is_object() || !j.contains("tower") || !j.contains("coeffs")) {
        throw Error(ErrorKind::ParseError, "expected a field element, got " + j.dump());
    }
    std::vector<std::int64_t> radicands;
    for (const auto &d : j.at("tower")) {
        if (!d.is_number_integer()) throw Error(ErrorKind::ParseError, "tower radicands must be integers");
        radicands.push_back(d.get<std::int64_t>());
    }
    std::vector<Rational> coeffs;
    for (const auto &pair : j.at("coeffs")) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::ParseError, "coefficient must be [num, den]");
        const Integer den = integer_from_json(pair[1]);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
        Rational q(integer_from_json(pair[0]), den);
        q.canonicalize();
        coeffs.push_back(q);
    }
    try {
        return FieldElement(Tower(radicands), std::move(coeffs));
    } catch (const Error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

BaryPoint point_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::ParseError, "point must be a 3-element array");
    const Triple t{field_from_json(j[0]), field_from_json(j[1]), field_from_json(j[2])};
    if (is_zero(t)) throw Error(ErrorKind::ParseError, "point with all coordinates zero");
    return BaryPoint(t);
}

Conic conic_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 6) throw Error(ErrorKind::ParseError, "conic must be a 6-element array");
    std::array<FieldElement, 6> upper;
    for (std::size_t i = 0; i < 6; ++i) upper[i] = field_from_json(j[i]);
    return Conic::from_upper(upper);
}

WPoint wpoint_from_json(const Json &j) {
    if (j.is_string() && j.get<std::string>() == "infinity") return WPoint::infinity();
    if (!j.is_object() || !j.contains("u") || !j.contains("v")) {
        throw Error(ErrorKind::ParseError, "expected a curve point, got " + j.dump());
    }
    return {field_from_json(j.at("u")), field_from_json(j.at("v"))};
}

} // namespace cevian
