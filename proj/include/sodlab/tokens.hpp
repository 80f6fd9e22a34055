#pragma once

#include <string>
#include <vector>

#include "sodlab/sod.hpp"
#include "sodlab/wpl2.hpp"

namespace sodlab {

// Human-readable tokens resolved against a concrete quiver. Grammar:
//   interval   := S<a> | P<a> | I<b> | [a,b]
//   object     := term (+ term)*            term := [<mult>*] interval [ [<shift>] ]
//   thick set  := interval (, interval)*    closed under cones on parse
//   sod/tstab  := ( thick set (| thick set)* )
//   sequence   := ( interval (| interval)* )
//   factors    := [ object@<phase> (, object@<phase>)* ]
//   wpl2       := O | O(m) | S10 | S11 | Sx, each with optional [<shift>]

Interval parse_interval(const TypeACategory& cat, const std::string& tok);
DerivedObject parse_object(const TypeACategory& cat, const std::string& expr);
ThickSet parse_thick(const TypeACategory& cat, const std::string& text);
Sod parse_sod(const TypeACategory& cat, const std::string& tok);
TStability parse_tstab(const TypeACategory& cat, const std::string& tok);
// Pieces only, no whole-category generation check: local refinement data is
// validated against its ambient piece by the splicing operation.
TStability parse_tstab_local(const TypeACategory& cat, const std::string& tok);
ExceptionalSequence parse_sequence(const TypeACategory& cat, const std::string& tok);
std::vector<HNFactor> parse_factors(const TypeACategory& cat, const std::string& text);

std::string object_token(const TypeACategory& cat, const DerivedObject& x);
std::string thick_token(const TypeACategory& cat, const ThickSet& s);
std::string sod_token(const TypeACategory& cat, const Sod& s);
std::string tstab_token(const TypeACategory& cat, const TStability& t);
std::string sequence_token(const TypeACategory& cat, const ExceptionalSequence& s);
std::string factors_token(const TypeACategory& cat, const std::vector<HNFactor>& fs);

Wpl2Object parse_wpl2_object(const std::string& tok);
Wpl2Triple parse_wpl2_triple(const std::string& tok);
std::string wpl2_triple_token(const Wpl2Triple& t);

}  // namespace sodlab
