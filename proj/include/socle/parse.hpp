#pragma once

#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/multipoly.hpp"

namespace socle {

/// Base-field descriptors:
///   Q                    rationals
///   F7 | Fp(7)           prime field
///   Fq(3,4) | Fq(3,4;g)  F_{3^4} with generator symbol (default "g")
///   Q(zeta5)             cyclotomic field
///   Q(r5:x^5-2)          extension by a certified-irreducible monic minimal
///                        polynomial in x; extensions chain left to right.
FieldPtr parse_base_field(const std::string& text);

/// Function-field descriptors: a base field followed by a variable list,
///   F7(t,u)                       partition by default: names starting with
///                                 'u' or 'v' are U-variables, the rest T
///   Fq(7,1)(t,u | t:T u:U)        explicit partition tags
FunFieldPtr parse_function_field(const std::string& text);

/// Infix element expressions over a function field: variables, base-field
/// generator symbols, integers, + - * / ^ and parentheses.
RatFunc parse_element(const FunFieldPtr& field, const std::string& text);

/// Comma-separated list of element expressions.
std::vector<RatFunc> parse_element_list(const FunFieldPtr& field,
                                        const std::string& text);

/// Element expression over a plain field tower (no function-field variables).
FieldElement parse_field_element(const FieldPtr& field, const std::string& text);

/// Guards translating ill-posed requests into SemanticError before any
/// computation starts.
void require_kummer_request(const FunFieldPtr& field, const Int& p);
void require_artin_schreier_request(const FunFieldPtr& field, const Int& p);

}  // namespace socle
