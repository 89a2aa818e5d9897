#include "spinpair/cli_parse.hpp"

#include <charconv>
#include <string>

#include "spinpair/errors.hpp"

namespace spinpair::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("not a number: '" + std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

int parse_coordinate_index(std::string_view s) {
  s = trim(s);
  if (!s.empty() && (s.front() == 'q' || s.front() == 'Q')) s.remove_prefix(1);
  const int i = parse_int(s);
  if (i < 1 || i > 4) throw DomainError("coordinate index must be in 1..4");
  return i;
}

std::vector<double> expect(std::string_view text, std::size_t count, const char* what) {
  auto v = parse_list(text);
  if (v.size() != count)
    throw DomainError(std::string(what) + " needs " + std::to_string(count) + " values");
  return v;
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

UnitAxis parse_axis(std::string_view text) {
  const auto v = expect(text, 3, "axis");
  return UnitAxis::normalized(v[0], v[1], v[2]);
}

GaugeField parse_field(std::string_view text, double charge) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (kind == "zero") {
    if (!args.empty()) throw DomainError("field 'zero' takes no arguments");
    return GaugeField::zero();
  }
  if (kind == "constant") {
    const auto v = expect(args, 4, "constant field");
    return GaugeField::constant({{v[0], v[1], v[2], v[3]}}, charge);
  }
  if (kind == "solenoid") {
    const auto v = expect(args, 1, "solenoid field");
    return GaugeField::solenoid(v[0], charge);
  }
  if (kind == "pure-gauge") {
    const auto v = expect(args, 5, "pure-gauge field");
    ScalarGauge g;
    g.amplitude = v[0];
    g.wavevector = {v[1], v[2], v[3], v[4]};
    return GaugeField::pure_gauge(g, charge);
  }
  throw DomainError("unknown field kind '" + std::string(kind) + "'");
}

GridRange parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw DomainError("range must look like a:b:n");
  GridRange r{parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2])};
  if (r.count < 1) throw DomainError("range needs at least one point");
  return r;
}

std::pair<int, int> parse_plane(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw DomainError("plane must name two coordinates, e.g. q1,q4");
  const int a = parse_coordinate_index(parts[0]);
  const int b = parse_coordinate_index(parts[1]);
  if (a == b) throw DomainError("plane coordinates must differ");
  return {a, b};
}

Event4 parse_fixed(std::string_view text, Event4 base) {
  if (trim(text).empty()) return base;
  for (auto part : split(text, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw DomainError("fixed coordinate must look like qk=V");
    base(parse_coordinate_index(part.substr(0, eq))) = parse_double(part.substr(eq + 1));
  }
  return base;
}

Event4 parse_event(std::string_view text) {
  const auto v = expect(text, 4, "event");
  return event(v[0], v[1], v[2], v[3]);
}

}  // namespace spinpair::cli
