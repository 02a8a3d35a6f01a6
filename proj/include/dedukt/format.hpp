#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "dedukt/lambda.hpp"
#include "dedukt/prop.hpp"
#include "dedukt/sexpr.hpp"

namespace dedukt::format {

// An unchecked morphism description: renaming clauses in declaration order.
// Validation against a pair of signatures happens in make_morphism.
struct MorphismDoc {
  std::vector<std::pair<std::string, std::string>> connectives;
  std::vector<std::tuple<std::string, std::string, std::string>> rules;  // (conn, rule, image)
  std::vector<std::pair<std::string, std::string>> variables;

  bool operator==(const MorphismDoc&) const = default;
};

// ---------------------------------------------------------------------------
// Printers. Output is canonical: single line, one space between atoms,
// declaration order preserved. parse_*(print_*(x)) == x for every value.

sexpr::Node to_sexpr(const prop::Proposition& p);
sexpr::Node to_sexpr(const prop::Judgement& j);
sexpr::Node to_sexpr(const prop::RuleName& name);
sexpr::Node to_sexpr(const prop::Proof& tree);
sexpr::Node to_sexpr(const prop::Signature& sig);
sexpr::Node to_sexpr(const lam::Signature& sig);
sexpr::Node to_sexpr(const lam::Term& t);
sexpr::Node to_sexpr(const lam::Judgement& j);
sexpr::Node to_sexpr(const lam::RuleName& name);
sexpr::Node to_sexpr(const lam::Proof& tree);
sexpr::Node to_sexpr(const MorphismDoc& doc);

std::string print(const prop::Proposition& p);
std::string print(const prop::Judgement& j);
std::string print(const prop::Proof& tree);
std::string print(const prop::Signature& sig);
std::string print(const lam::Signature& sig);
std::string print(const lam::Term& t);
std::string print(const lam::Judgement& j);
std::string print(const lam::Proof& tree);
std::string print(const MorphismDoc& doc);

// ---------------------------------------------------------------------------
// Parsers. Purely syntactic: names are not resolved against any signature
// here. Throw sexpr::ParseError with position information on bad input.

prop::Proposition parse_proposition(const sexpr::Node& node);
prop::Judgement parse_prop_judgement(const sexpr::Node& node);
prop::Proof parse_prop_proof(const sexpr::Node& node);
prop::Signature parse_prop_signature(const sexpr::Node& node);
lam::Signature parse_lambda_signature(const sexpr::Node& node);
lam::Term parse_term(const sexpr::Node& node);
lam::Judgement parse_lambda_judgement(const sexpr::Node& node);
lam::Proof parse_lambda_proof(const sexpr::Node& node);
MorphismDoc parse_morphism(const sexpr::Node& node);

prop::Proposition parse_proposition(const std::string& text);
prop::Judgement parse_prop_judgement(const std::string& text);
prop::Proof parse_prop_proof(const std::string& text);
prop::Signature parse_prop_signature(const std::string& text);
lam::Signature parse_lambda_signature(const std::string& text);
lam::Term parse_term(const std::string& text);
lam::Judgement parse_lambda_judgement(const std::string& text);
lam::Proof parse_lambda_proof(const std::string& text);
MorphismDoc parse_morphism(const std::string& text);

// Builds a checked signature morphism from a parsed description.
prop::SignatureMorphism make_morphism(const prop::Signature& source, const prop::Signature& target,
                                      const MorphismDoc& doc);
MorphismDoc to_doc(const prop::SignatureMorphism& m);

}  // namespace dedukt::format
