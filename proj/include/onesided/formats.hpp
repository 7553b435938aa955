#pragma once

#include <iosfwd>
#include <string>

#include "onesided/plat.hpp"
#include "onesided/tau.hpp"

namespace onesided {

// Plain-text tau file: line 1 "k=<k>", then one unordered pair "a b" per
// line.  Parsing is whitespace-tolerant and skips blank lines; the emitter
// is canonical (pairs normalized and sorted), so emitting what was parsed is
// byte-stable.
std::string emit_tau_file(const TauInvolution& tau);
TauInvolution parse_tau_file(std::istream& in);
TauInvolution parse_tau_file(const std::string& text);

// Plain-text Morse word file: line 1 "genus=<g> strands=<n0>", then one
// event per line: cup <i> | cap <i> | sigma <i> +|- | handle a|b <r> <i>.
std::string emit_word_file(const MorseWord& word);
MorseWord parse_word_file(std::istream& in);
MorseWord parse_word_file(const std::string& text);

// Canonical JSON for a plat presentation:
// {"band_heuristic":…,"bottom":[[a,b,decoration]…],"braid":[event…],
//  "genus":…,"n":…,"top":[[a,b,band]…]} with events encoded as
// ["cup",i] | ["cap",i] | ["sigma",i,"+"|"-"] | ["handle","a"|"b",r,i].
// Keys are emitted sorted, so parse/emit round trips are byte-identical.
std::string presentation_to_json(const PlatPresentation& p);
PlatPresentation presentation_from_json(const std::string& text);

}  // namespace onesided
