#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twgr/serialize.hpp"

namespace twgr::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRejected = 2, kDisagreement = 3 };

/// A (group, field, cocycle) triple with the descriptors it was built from.
struct Config {
  GroupPtr group;
  FieldPtr field;
  RingPtr ring;
  json group_desc;
  json field_desc;
  json cocycle_desc;
  std::vector<std::string> warnings;
};

/// dihedral:N | abelian:m1,m2,... | @file.json
GroupPtr parse_group_spec(const std::string& spec);
/// P or P^M
FieldPtr parse_field_spec(const std::string& spec);
/// alpha1 | alpha2 | alpha3 | trivial | @file.json
Config build_config(const std::string& group_spec, const std::string& field_spec,
                    const std::string& cocycle_spec);

struct Dims {
  std::size_t der = 0;
  std::size_t inn = 0;
  std::size_t center = 0;
  std::size_t hh1 = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct CrossCheck {
  std::string method;  // "generators", "oracle" or "closed-form"
  std::size_t der_dim = 0;
  friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

struct Report {
  json config;  // {"group":..., "field":..., "cocycle":...}
  Dims dims;
  bool p_divides_order = false;
  std::optional<bool> p_divides_n;  // dihedral groups only
  std::vector<CrossCheck> cross_checks;
  bool agree = true;
  std::vector<std::string> warnings;
  std::optional<json> bases;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs the pipeline. With `oracle`, adds the brute-force and (for dihedral
/// groups with a named cocycle) closed-form derivation dimensions.
Report make_report(const Config& cfg, bool oracle, bool bases);

json report_to_json(const Report& r);
Report report_from_json(const json& j);
std::string format_report(const Report& r);

/// Entry point of the `twgr` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twgr::cli
