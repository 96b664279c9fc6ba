#pragma once

// Field selection strings:
//   "Q" | "Q(x)" | "Q[theta]/(theta^2-2)" | "F5" | "F25:theta^2+theta+1"
// (the generator name may be any identifier, unicode included).

#include <variant>

#include "../core/factorqz.hpp"
#include "parse.hpp"

namespace adilog {

using FieldVariant = std::variant<Rationals, QxField, NumberField, FiniteField>;

namespace detail {

// evaluate an expression as a polynomial in `sym` over Q
inline PolyQ expr_to_poly(const ExprPtr& e, const std::string& sym) {
    Rationals Q;
    switch (e->kind) {
        case Expr::Number: return poly_const(Q, Rat(e->number));
        case Expr::Ident:
            require(e->name == sym, errc::unknown_identifier,
                    "unknown symbol '" + e->name + "' in field modulus at " + e->pos.str());
            return poly_gen(Q);
        case Expr::Neg: return poly_neg(Q, expr_to_poly(e->args[0], sym));
        case Expr::Add:
            return poly_add(Q, expr_to_poly(e->args[0], sym), expr_to_poly(e->args[1], sym));
        case Expr::Sub:
            return poly_sub(Q, expr_to_poly(e->args[0], sym), expr_to_poly(e->args[1], sym));
        case Expr::Mul:
            return poly_mul(Q, expr_to_poly(e->args[0], sym), expr_to_poly(e->args[1], sym));
        case Expr::Div: {
            auto d = expr_to_poly(e->args[1], sym);
            require(poly_deg<Rationals>(d) == 0 && !d.empty(), errc::syntax_error,
                    "modulus polynomials allow division by constants only");
            return poly_scale(Q, expr_to_poly(e->args[0], sym), Rat(1) / d[0]);
        }
        case Expr::Pow: {
            require(e->exponent >= 0, errc::syntax_error, "negative power in a modulus polynomial");
            auto b = expr_to_poly(e->args[0], sym);
            PolyQ acc = poly_const(Q, Rat(1));
            for (long i = 0; i < e->exponent; ++i) acc = poly_mul(Q, acc, b);
            return acc;
        }
        case Expr::Call:
            fail(errc::syntax_error, "function calls are not allowed in field moduli");
    }
    fail(errc::internal, "unreachable");
}

inline std::string first_ident(const ExprPtr& e) {
    if (e->kind == Expr::Ident) return e->name;
    for (const auto& a : e->args) {
        auto s = first_ident(a);
        if (!s.empty()) return s;
    }
    return {};
}

} // namespace detail

inline FieldVariant parse_field_spec(const std::string& spec_in) {
    std::string spec;
    for (char c : spec_in)
        if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
    require(!spec.empty(), errc::syntax_error, "empty field spec");
    if (spec == "Q") return Rationals{};
    if (spec.rfind("Q(", 0) == 0 && spec.back() == ')') {
        std::string var = spec.substr(2, spec.size() - 3);
        require(!var.empty(), errc::syntax_error, "missing variable name in Q(...)");
        return QxField(Rationals{}, var);
    }
    if (spec.rfind("Q[", 0) == 0) {
        auto close = spec.find(']');
        require(close != std::string::npos && spec.substr(close + 1, 2) == "/(" && spec.back() == ')',
                errc::syntax_error, "number fields are written Q[gen]/(modulus)");
        std::string gen = spec.substr(2, close - 2);
        std::string body = spec.substr(close + 3, spec.size() - close - 4);
        auto poly = detail::expr_to_poly(parse_expression(body), gen);
        auto nf = make_number_field(poly, gen);
        return nf;
    }
    if (spec[0] == 'F') {
        auto colon = spec.find(':');
        std::string qs = colon == std::string::npos ? spec.substr(1) : spec.substr(1, colon - 1);
        require(!qs.empty() && qs.find_first_not_of("0123456789") == std::string::npos,
                errc::syntax_error, "finite fields are written F<p^e>[:modulus]");
        Int q(qs);
        auto fac = factor_int(q);
        require(fac.size() == 1, errc::unsupported_field, "finite field order must be a prime power");
        long p = to_long(fac.begin()->first);
        long e = fac.begin()->second;
        if (colon == std::string::npos) return FiniteField(p, e);
        std::string body = spec.substr(colon + 1);
        auto ast = parse_expression(body);
        std::string gen = detail::first_ident(ast);
        require(!gen.empty(), errc::syntax_error, "modulus must mention the generator");
        auto poly = detail::expr_to_poly(ast, gen);
        std::vector<long> mod(poly.size());
        FiniteField Fp(p, 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            auto r = Fp.from_rat(poly[i]);
            mod[i] = r.empty() ? 0 : r[0];
        }
        return FiniteField(p, e, mod, gen);
    }
    fail(errc::syntax_error, "unrecognized field spec '" + spec_in + "'");
}

inline std::string field_spec_name(const FieldVariant& f) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Rationals>) return "Q";
            else if constexpr (std::is_same_v<T, QxField>) return "Q(" + k.var_name() + ")";
            else if constexpr (std::is_same_v<T, NumberField>)
                return "Q[" + k.gen_name() + "]/(" +
                       poly_to_string(Rationals{}, k.minpoly(), k.gen_name()) + ")";
            else
                return "F" + k.order().str();
        },
        f);
}

} // namespace adilog
