#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/automorphism.hpp"
#include "gsv/lie.hpp"
#include "gsv/verma.hpp"

/// Text forms shared by the CLI and the tests.
///
///   element := term (('+'|'-') term)*        a leading sign is allowed
///   term    := [rational '*'] gen            Lie element
///            | [rational '*'] gen* 'v'       Verma vector
///   gen     := ('L'|'M'|'Y') '(' rational ')'
///   aut     := prim ('*' prim)*              applied right to left
///   prim    := 'id' | 'diag(' t ';' s ')' | 'scale(' a ')' | 'cocycle(' l ')' | 'inner(' element ')'
///
/// U+2212 is accepted wherever '-' is. "0" denotes the zero element.
namespace gsv::text {

std::string format(const Rational& q);
std::string format(const Generator& g);
std::string format(const LieElement& e);
std::string format(const VermaVector& v);
std::string format(const Primitive& p);
std::string format(const Automorphism& theta);
/// Juxtaposed generators, e.g. "L(1)L(2)"; "1" for the empty word.
std::string format_word(std::span<const Generator> word);

/// Throws Error{Syntax} or Error{IndexDomain}.
Rational parse_rational(std::string_view s);
LieElement parse_element(const Algebra& alg, std::string_view s);
VermaVector parse_vector(const VermaModule& mod, std::string_view s);
std::vector<Generator> parse_word(const Algebra& alg, std::string_view s);
Automorphism parse_automorphism(const Algebra& alg, std::string_view s);

}  // namespace gsv::text
