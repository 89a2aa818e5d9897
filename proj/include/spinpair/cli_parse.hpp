#pragma once

// Parsers for the compact command-line value specs. All throw DomainError on
// malformed input.

#include <string>
#include <string_view>
#include <vector>

#include "spinpair/phase_maps.hpp"

namespace spinpair::cli {

/// Comma-separated doubles, e.g. "0,0,1".
std::vector<double> parse_list(std::string_view text);

/// "x,y,z", normalized.
UnitAxis parse_axis(std::string_view text);

/// "zero" | "constant:A1,A2,A3,A4" | "solenoid:FLUX" | "pure-gauge:AMP,K1,K2,K3,K4"
GaugeField parse_field(std::string_view text, double charge);

/// "a:b:n"
GridRange parse_range(std::string_view text);

/// "qi,qj" or "i,j", returns the 1-based indices.
std::pair<int, int> parse_plane(std::string_view text);

/// "qk=V,ql=W" applied on top of `base`.
Event4 parse_fixed(std::string_view text, Event4 base = {});

/// "q1,q2,q3,q4"
Event4 parse_event(std::string_view text);

}  // namespace spinpair::cli
