#include "twgr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "twgr/error.hpp"

namespace twgr::cli {

namespace {

constexpr std::size_t kOracleBound = 24;

std::string strip_at(const std::string& s) { return !s.empty() && s[0] == '@' ? s.substr(1) : s; }

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw InvalidInput("expected a positive integer, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

std::string describe_group(const json& desc) {
  const auto kind = desc.at("kind").get<std::string>();
  if (kind == "dihedral") {
    const auto n = desc.at("n").get<std::size_t>();
    return "D_" + std::to_string(2 * n) + " (dihedral, n = " + std::to_string(n) + ")";
  }
  if (kind == "abelian") {
    std::string s;
    for (auto m : desc.at("orders").get<std::vector<std::size_t>>()) {
      if (!s.empty()) s += " x ";
      s += "C_" + std::to_string(m);
    }
    return s.empty() ? "trivial group" : s;
  }
  return "table group of order " + std::to_string(desc.at("mul").size());
}

std::string describe_cocycle(const json& desc) {
  std::string s = desc.at("kind").get<std::string>();
  if (desc.value("sign_collapsed", false)) s += " (collapsed to trivial in characteristic 2)";
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << content;
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return group_from_json(read_json_file(spec.substr(1)));
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidInput("group must be dihedral:N, abelian:m1,... or @file");
  const std::string kind = spec.substr(0, colon);
  const auto values = parse_size_list(spec.substr(colon + 1));
  if (kind == "dihedral") {
    if (values.size() != 1) throw InvalidInput("dihedral takes one parameter");
    return dihedral(values[0]);
  }
  if (kind == "abelian") return abelian(values);
  throw InvalidInput("unknown group kind '" + kind + "'");
}

FieldPtr parse_field_spec(const std::string& spec) {
  const auto caret = spec.find('^');
  const auto p = parse_size_list(spec.substr(0, caret));
  std::size_t m = 1;
  if (caret != std::string::npos) {
    const auto mv = parse_size_list(spec.substr(caret + 1));
    m = mv[0];
    if (mv.size() != 1) throw InvalidInput("field must be P or P^M");
  }
  if (p.size() != 1) throw InvalidInput("field must be P or P^M");
  if (p[0] > 0xffffffffu || m > 64) throw InvalidInput("field parameters out of range");
  return make_field(static_cast<std::uint32_t>(p[0]), static_cast<std::uint32_t>(m));
}

Config build_config(const std::string& group_spec, const std::string& field_spec,
                    const std::string& cocycle_spec) {
  Config cfg;
  cfg.group = parse_group_spec(group_spec);
  cfg.field = parse_field_spec(field_spec);
  cfg.group_desc = group_to_json(*cfg.group);
  cfg.field_desc = field_to_json(*cfg.field);

  json cdesc;
  if (!cocycle_spec.empty() && cocycle_spec[0] == '@') {
    cdesc = read_json_file(cocycle_spec.substr(1));
  } else if (cocycle_spec == "trivial") {
    cdesc = json{{"kind", "trivial"}};
  } else if (cocycle_spec == "alpha1" || cocycle_spec == "alpha2" || cocycle_spec == "alpha3") {
    cdesc = json{{"kind", "dihedral_" + cocycle_spec}};
  } else {
    throw InvalidInput("cocycle must be alpha1, alpha2, alpha3, trivial or @file");
  }
  const Cocycle alpha = cocycle_from_json(cdesc, cfg.group, cfg.field);
  if (alpha.sign_collapsed()) {
    cdesc["sign_collapsed"] = true;
    cfg.warnings.push_back("sign cocycle requested in characteristic 2; using the trivial cocycle");
  }
  if (!alpha.is_normalized()) cfg.warnings.push_back("cocycle was not normalized; divided by alpha(1,1)");
  cfg.cocycle_desc = std::move(cdesc);
  cfg.ring = TwistedRing::make(alpha);
  return cfg;
}

Report make_report(const Config& cfg, bool oracle, bool bases) {
  const Group& G = *cfg.group;
  const std::size_t p = cfg.field->p();
  const HH1 h = hh1(cfg.ring);

  Report r;
  r.config = json{{"group", cfg.group_desc}, {"field", cfg.field_desc}, {"cocycle", cfg.cocycle_desc}};
  r.dims = Dims{h.der.dim, h.inn.dim, h.inn.center_dim, h.dim};
  r.p_divides_order = G.order() % p == 0;
  if (G.kind() == GroupKind::Dihedral) r.p_divides_n = G.dihedral_n() % p == 0;
  r.warnings = cfg.warnings;

  r.cross_checks.push_back({"generators", h.der.dim});
  if (oracle) {
    if (G.order() <= kOracleBound) {
      r.cross_checks.push_back({"oracle", der_space_oracle(cfg.ring, kOracleBound).dim});
    } else {
      r.warnings.push_back("oracle skipped: |G| = " + std::to_string(G.order()) + " exceeds " +
                           std::to_string(kOracleBound));
    }
    if (G.kind() == GroupKind::Dihedral && cfg.ring->cocycle().kind() != CocycleKind::Table) {
      const Matrix m = dihedral_constraints(cfg.ring);
      r.cross_checks.push_back({"closed-form", m.cols() - rank(m)});
    }
  }
  for (const auto& c : r.cross_checks) r.agree = r.agree && c.der_dim == h.der.dim;

  const std::size_t n = G.dihedral_n();
  if (G.kind() == GroupKind::Dihedral && cfg.ring->cocycle().kind() == CocycleKind::Alpha1 &&
      n % 2 == 0 && (n / 2) % 2 == 1 && h.dim != 3 * (n / 2)) {
    std::string w = "computed dim HH^1 = " + std::to_string(h.dim) +
                    " differs from the closed-form value 3n' = " + std::to_string(3 * (n / 2)) +
                    " stated for alpha1 with n = 2n', n' odd";
    if (h.inn.dim == 3 * (n / 2)) w += "; 3n' equals dim Inn here";
    r.warnings.push_back(std::move(w));
  }

  if (bases) {
    json b;
    b["center"] = json::array();
    for (const auto& z : center_basis(cfg.ring)) b["center"].push_back(ring_elem_to_json(z));
    b["inn_representatives"] = json::array();
    for (auto g : h.inn.representatives) b["inn_representatives"].push_back(G.name(g));
    b["der"] = json::array();
    for (const auto& v : h.der.basis) {
      b["der"].push_back(generator_map_to_json(GeneratorMap::from_flat(cfg.ring, v)));
    }
    b["hh1"] = json::array();
    for (const auto& f : h.representatives) b["hh1"].push_back(generator_map_to_json(f));
    r.bases = std::move(b);
  }
  return r;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.cross_checks) checks.push_back({{"method", c.method}, {"der", c.der_dim}});
  json regime{{"p_divides_order", r.p_divides_order}};
  regime["p_divides_n"] = r.p_divides_n ? json(*r.p_divides_n) : json(nullptr);
  json j{{"config", r.config},
         {"dims", {{"der", r.dims.der}, {"inn", r.dims.inn}, {"center", r.dims.center}, {"hh1", r.dims.hh1}}},
         {"regime", regime},
         {"cross_checks", checks},
         {"agree", r.agree},
         {"warnings", r.warnings}};
  if (r.bases) j["bases"] = *r.bases;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.config = j.at("config");
    const auto& d = j.at("dims");
    r.dims = Dims{d.at("der").get<std::size_t>(), d.at("inn").get<std::size_t>(),
                  d.at("center").get<std::size_t>(), d.at("hh1").get<std::size_t>()};
    const auto& reg = j.at("regime");
    r.p_divides_order = reg.at("p_divides_order").get<bool>();
    if (!reg.at("p_divides_n").is_null()) r.p_divides_n = reg.at("p_divides_n").get<bool>();
    for (const auto& c : j.at("cross_checks")) {
      r.cross_checks.push_back({c.at("method").get<std::string>(), c.at("der").get<std::size_t>()});
    }
    r.agree = j.at("agree").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("bases")) r.bases = j.at("bases");
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  const FieldPtr f = field_from_json(r.config.at("field"));
  out << "group    " << describe_group(r.config.at("group")) << '\n';
  out << "field    " << f->describe() << '\n';
  out << "cocycle  " << describe_cocycle(r.config.at("cocycle")) << '\n';
  out << "dims     der=" << r.dims.der << " inn=" << r.dims.inn << " center=" << r.dims.center
      << " hh1=" << r.dims.hh1 << '\n';
  out << "regime   p | |G|: " << (r.p_divides_order ? "yes" : "no");
  if (r.p_divides_n) out << ", p | n: " << (*r.p_divides_n ? "yes" : "no");
  out << '\n';
  out << "methods ";
  for (const auto& c : r.cross_checks) out << ' ' << c.method << '=' << c.der_dim;
  out << (r.agree ? "  (agree)" : "  (DISAGREE)") << '\n';
  for (const auto& w : r.warnings) out << "warning  " << w << '\n';
  if (r.bases) out << "bases\n" << r.bases->dump(2) << '\n';
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivations and first Hochschild cohomology of twisted group rings", "twgr"};
  app.require_subcommand(1);

  struct Common {
    std::string group;
    std::string field;
    std::string cocycle = "trivial";
  };
  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("--group", c.group, "dihedral:N | abelian:m1,m2,... | @file.json")->required();
    sub->add_option("--field", c.field, "P or P^M")->required();
    sub->add_option("--cocycle", c.cocycle, "alpha1 | alpha2 | alpha3 | trivial | @file.json")
        ->capture_default_str();
  };

  Common rep_c;
  std::string rep_json;
  bool rep_bases = false, rep_oracle = false;
  auto* rep = app.add_subcommand("report", "Dimensions of Der, Inn, the center and HH^1");
  add_common(rep, rep_c);
  rep->add_option("--json", rep_json, "Also write the report as JSON");
  rep->add_flag("--bases", rep_bases, "Include bases");
  rep->add_flag("--oracle", rep_oracle, "Cross-check against the brute-force and closed-form systems");

  Common exp_c;
  std::string exp_out, exp_format = "csv", exp_which = "generators";
  auto* exp = app.add_subcommand("export-matrix", "Write a derivation constraint matrix");
  add_common(exp, exp_c);
  exp->add_option("--out", exp_out, "Output file")->required();
  exp->add_option("--format", exp_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  exp->add_option("--which", exp_which, "generators | closed-form")
      ->check(CLI::IsMember({"generators", "closed-form"}))
      ->capture_default_str();

  Common chk_c;
  std::string chk_map;
  bool chk_images = false;
  auto* chk = app.add_subcommand("check", "Decide whether generator values extend to a derivation");
  add_common(chk, chk_c);
  chk->add_option("--map", chk_map, "@file.json holding {\"f\": [...]}")->required();
  chk->add_flag("--images", chk_images, "Print the image of every basis element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*rep) {
      const Config cfg = build_config(rep_c.group, rep_c.field, rep_c.cocycle);
      const Report r = make_report(cfg, rep_oracle, rep_bases);
      out << format_report(r);
      if (!rep_json.empty()) write_file(rep_json, report_to_json(r).dump(2) + "\n");
      return r.agree ? kOk : kDisagreement;
    }
    if (*exp) {
      const Config cfg = build_config(exp_c.group, exp_c.field, exp_c.cocycle);
      const Matrix m = exp_which == "generators" ? der_space_generators(cfg.ring).constraints
                                                 : dihedral_constraints(cfg.ring);
      write_file(exp_out, exp_format == "csv" ? matrix_to_csv(m) : matrix_to_json(m).dump() + "\n");
      out << "wrote " << m.rows() << "x" << m.cols() << " matrix, kernel dimension "
          << m.cols() - rank(m) << ", to " << exp_out << '\n';
      return kOk;
    }
    const Config cfg = build_config(chk_c.group, chk_c.field, chk_c.cocycle);
    const GeneratorMap f = generator_map_from_json(read_json_file(strip_at(chk_map)), cfg.ring);
    const ExtendResult res = extend(f);
    if (const auto* rej = std::get_if<Rejection>(&res)) {
      out << "rejected: relator " << rej->relator_text << " has word derivative "
          << cfg.ring->element(rej->residual).to_string() << '\n';
      return kRejected;
    }
    const auto& d = std::get<Derivation>(res);
    out << "accepted\n";
    out << "inner: " << (is_inner(f, inn_space(cfg.ring)) ? "yes" : "no") << '\n';
    if (chk_images) out << derivation_to_json(d).dump(2) << '\n';
    return kOk;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace twgr::cli
