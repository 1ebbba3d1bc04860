#include "lenspec/cli.hpp"

#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lenspec/fixtures.hpp"
#include "lenspec/geometry.hpp"
#include "lenspec/search.hpp"

namespace lenspec::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();  // exact decimal string beyond 64 bits
}

json to_json(const Rat& v) {
  return json{{"num", to_json(numerator(v))}, {"den", to_json(denominator(v))}};
}

json to_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

json entries_json(const std::vector<long long>& v) {
  return json(v);
}

std::vector<long long> parse_tuple(const std::string& text) {
  std::vector<long long> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad tuple entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty tuple");
  return out;
}

json invariant_json(const ResidueSystem& sys, const SpectralInvariant& inv) {
  json payload;
  if (inv.kind == SpectralInvariant::Kind::Polynomial) {
    payload["kind"] = "polynomial";
    json polys = json::array();
    for (const auto& poly : inv.polynomials) {
      json entry;
      entry["set"] = sys.label(poly.source);
      json coeffs = json::array();
      for (const auto& c : poly.coefficients) coeffs.push_back(to_json(c));
      entry["coefficients"] = coeffs;
      polys.push_back(entry);
    }
    payload["polynomials"] = polys;
  } else {
    payload["kind"] = "series-prefix";
    payload["cutoff"] = series_cutoff(inv.q, inv.n);
    payload["prefix"] = to_json(inv.prefix);
  }
  return payload;
}

struct Request {
  long long q = 0;
  std::string tuple_text, a_text, b_text;
  long long n = 0;
  long long max_k = 0;
  long long w = 0;
  bool count_only = false;
  std::string method = "invariant";
  std::string output = "json";
  std::string fixture_case;
};

int emit(std::ostream& out, json& doc) {
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_spectrum(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto raw = parse_tuple(req.tuple_text);
  auto t = LensTuple::make(sys, raw);
  json doc;
  doc["command"] = "spectrum";
  doc["parameters"] = {{"q", req.q},
                       {"tuple", entries_json(raw)},
                       {"max_k", req.max_k},
                       {"w", req.w},
                       {"folded", entries_json(t.entries())},
                       {"canonical", entries_json(canonicalize(t).entries())}};
  doc["status"] = "ok";
  json lines = json::array();
  for (const auto& line : spectrum(t, req.max_k, req.w))
    lines.push_back(json{{"k", line.k},
                         {"eigenvalue", line.eigenvalue},
                         {"multiplicity", to_json(line.multiplicity)}});
  doc["payload"] = lines;
  return emit(out, doc);
}

int cmd_invariant(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto raw = parse_tuple(req.tuple_text);
  auto t = LensTuple::make(sys, raw);
  auto inv = spectral_invariant(t);
  json doc;
  doc["command"] = "invariant";
  doc["parameters"] = {{"q", req.q},
                       {"tuple", entries_json(raw)},
                       {"folded", entries_json(t.entries())},
                       {"canonical", entries_json(canonicalize(t).entries())}};
  doc["status"] = "ok";
  json payload = invariant_json(*sys, inv);
  if (inv.kind == SpectralInvariant::Kind::Polynomial)
    payload["complement"] = entries_json(complement_entries(t));
  doc["payload"] = payload;
  return emit(out, doc);
}

int cmd_isometric(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto a = LensTuple::make(sys, parse_tuple(req.a_text));
  auto b = LensTuple::make(sys, parse_tuple(req.b_text));
  json doc;
  doc["command"] = "isometric";
  doc["parameters"] = {{"q", req.q},
                       {"a", entries_json(parse_tuple(req.a_text))},
                       {"b", entries_json(parse_tuple(req.b_text))}};
  doc["status"] = "ok";
  doc["payload"] = {{"isometric", is_isometric(a, b)},
                    {"canonical_a", entries_json(canonicalize(a).entries())},
                    {"canonical_b", entries_json(canonicalize(b).entries())}};
  return emit(out, doc);
}

int cmd_isospectral(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto a = LensTuple::make(sys, parse_tuple(req.a_text));
  auto b = LensTuple::make(sys, parse_tuple(req.b_text));
  IsoMethod method;
  if (req.method == "invariant")
    method = IsoMethod::Invariant;
  else if (req.method == "series")
    method = IsoMethod::Series;
  else
    throw std::invalid_argument("method must be 'invariant' or 'series'");
  std::optional<long long> depth;
  if (req.max_k > 0) depth = req.max_k;
  auto res = is_isospectral(a, b, method, depth);
  json doc;
  doc["command"] = "isospectral";
  doc["parameters"] = {{"q", req.q},
                       {"a", entries_json(parse_tuple(req.a_text))},
                       {"b", entries_json(parse_tuple(req.b_text))},
                       {"method", req.method}};
  doc["status"] = "ok";
  json cert = {{"method", req.method},
               {"q", res.certificate.q},
               {"n", res.certificate.n},
               {"detail", res.certificate.detail}};
  if (res.certificate.series_depth >= 0)
    cert["depth"] = res.certificate.series_depth;
  doc["payload"] = {{"isospectral", res.isospectral}, {"certificate", cert}};
  return emit(out, doc);
}

int cmd_enumerate(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto classes = enumerate_classes(sys, req.n);
  if (req.output == "csv") {
    out << "class,entries\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out << i << ",";
      const auto& e = classes[i].entries();
      for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
      out << "\n";
    }
    return 0;
  }
  json doc;
  doc["command"] = "enumerate";
  doc["parameters"] = {{"q", req.q}, {"n", req.n}};
  doc["status"] = "ok";
  json payload;
  payload["count"] = classes.size();
  if (!req.count_only) {
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(entries_json(c.entries()));
    payload["classes"] = arr;
  }
  doc["payload"] = payload;
  return emit(out, doc);
}

int cmd_search(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto families = find_families(sys, req.n);
  if (req.output == "csv") {
    out << "family,member,entries\n";
    for (std::size_t f = 0; f < families.size(); ++f) {
      for (std::size_t m = 0; m < families[f].members.size(); ++m) {
        out << f << "," << m << ",";
        const auto& e = families[f].members[m].entries();
        for (std::size_t j = 0; j < e.size(); ++j)
          out << (j ? " " : "") << e[j];
        out << "\n";
      }
    }
    return 0;
  }
  json doc;
  doc["command"] = "search";
  doc["parameters"] = {{"q", req.q}, {"n", req.n}};
  doc["status"] = "ok";
  json fams = json::array();
  for (const auto& fam : families) {
    json members = json::array();
    for (const auto& m : fam.members) members.push_back(entries_json(m.entries()));
    fams.push_back(json{{"members", members},
                        {"verified_to", fam.verified_to},
                        {"invariant", invariant_json(*sys, fam.invariant)}});
  }
  doc["payload"] = {{"family_count", families.size()}, {"families", fams}};
  return emit(out, doc);
}

int cmd_singular(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  auto raw = parse_tuple(req.tuple_text);
  auto t = LensTuple::make(sys, raw);
  auto sig = singular_signature(t);
  json doc;
  doc["command"] = "singular";
  doc["parameters"] = {{"q", req.q},
                       {"tuple", entries_json(raw)},
                       {"canonical", entries_json(canonicalize(t).entries())}};
  doc["status"] = "ok";
  json strata = json::array();
  for (const auto& s : sig.strata)
    strata.push_back(json{{"isotropy_order", s.divisor},
                          {"fixed_coordinates", s.fixed_count},
                          {"fixed_sphere_dim", s.sphere_dim}});
  doc["payload"] = {{"manifold", sig.manifold()}, {"strata", strata}};
  return emit(out, doc);
}

int cmd_bounds(const Request& req, std::ostream& out) {
  auto sys = ResidueSystem::build(req.q);
  json doc;
  doc["command"] = "bounds";
  doc["parameters"] = {{"q", req.q}, {"n", req.n}};
  doc["status"] = "ok";
  json payload;
  payload["lower_bound"] = to_json(lower_bound(*sys, req.n));
  switch (sys->shape()) {
    case Shape::PrimePower:
      payload["shape"] = "prime-power";
      break;
    case Shape::Semiprime:
      payload["shape"] = "semiprime";
      break;
    case Shape::General:
      payload["shape"] = "general";
      break;
  }
  if (sys->shape() == Shape::General) {
    // The k=2 pattern machinery is defined for p^m and p1*p2 only.
    payload["pattern_bound"] = nullptr;
    payload["realized_pattern_count"] = nullptr;
    payload["sufficiency"] = nullptr;
  } else {
    payload["pattern_bound"] = pattern_bound(*sys);
    payload["realized_pattern_count"] = realized_pattern_count(sys);
    auto rec = sufficiency_check(*sys);
    payload["sufficiency"] = {{"lhs", rec.lhs},
                              {"rhs", rec.rhs},
                              {"relation", rec.relation},
                              {"satisfied", rec.satisfied}};
  }
  doc["payload"] = payload;
  return emit(out, doc);
}

int cmd_verify_paper(const Request& req, std::ostream& out) {
  auto results = fixtures::run_paper_fixtures(req.fixture_case);
  json doc;
  doc["command"] = "verify-paper";
  doc["parameters"] = {{"case", req.fixture_case}};
  std::size_t passed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    arr.push_back(json{{"name", r.name},
                       {"criterion", r.criterion},
                       {"passed", r.passed},
                       {"detail", r.detail}});
  }
  doc["status"] = "ok";
  doc["payload"] = {{"total", results.size()},
                    {"passed", passed},
                    {"failed", results.size() - passed},
                    {"fixtures", arr}};
  emit(out, doc);
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Laplace spectra of orbifold lens spaces"};
  app.require_subcommand(1);
  Request req;

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", req.q, "order of the cyclic group")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", req.output, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalue multiplicities");
  add_q(spectrum_cmd);
  spectrum_cmd->add_option("--tuple", req.tuple_text, "comma-separated rotation parameters")->required();
  spectrum_cmd->add_option("--max-k", req.max_k, "largest harmonic degree k")->required();
  spectrum_cmd->add_option("--w", req.w, "identity-block extension size W");

  auto* invariant_cmd = app.add_subcommand("invariant", "spectral invariant (character polynomials)");
  add_q(invariant_cmd);
  invariant_cmd->add_option("--tuple", req.tuple_text)->required();

  auto* isometric_cmd = app.add_subcommand("isometric", "isometry decision");
  add_q(isometric_cmd);
  isometric_cmd->add_option("--a", req.a_text)->required();
  isometric_cmd->add_option("--b", req.b_text)->required();

  auto* isospectral_cmd = app.add_subcommand("isospectral", "isospectrality decision with certificate");
  add_q(isospectral_cmd);
  isospectral_cmd->add_option("--a", req.a_text)->required();
  isospectral_cmd->add_option("--b", req.b_text)->required();
  isospectral_cmd->add_option("--method", req.method, "invariant (default) or series")
      ->check(CLI::IsMember({"invariant", "series"}));
  isospectral_cmd->add_option("--max-k", req.max_k, "series comparison depth");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "canonical classes of I0(q,n)");
  add_q(enumerate_cmd);
  enumerate_cmd->add_option("--n", req.n)->required();
  enumerate_cmd->add_flag("--count-only", req.count_only);
  add_output(enumerate_cmd);

  auto* search_cmd = app.add_subcommand("search", "isospectral non-isometric families");
  add_q(search_cmd);
  search_cmd->add_option("--n", req.n)->required();
  add_output(search_cmd);

  auto* singular_cmd = app.add_subcommand("singular", "singular set signature");
  add_q(singular_cmd);
  singular_cmd->add_option("--tuple", req.tuple_text)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "counting bounds and sufficiency record");
  add_q(bounds_cmd);
  bounds_cmd->add_option("--n", req.n)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in reference fixtures");
  verify_cmd->add_option("--case", req.fixture_case, "substring filter on fixture names");

  std::vector<const char*> argv;
  argv.push_back("lenspec");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(req, out);
    if (invariant_cmd->parsed()) return cmd_invariant(req, out);
    if (isometric_cmd->parsed()) return cmd_isometric(req, out);
    if (isospectral_cmd->parsed()) return cmd_isospectral(req, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(req, out);
    if (search_cmd->parsed()) return cmd_search(req, out);
    if (singular_cmd->parsed()) return cmd_singular(req, out);
    if (bounds_cmd->parsed()) return cmd_bounds(req, out);
    if (verify_cmd->parsed()) return cmd_verify_paper(req, out);
  } catch (const std::exception& e) {
    json doc;
    doc["command"] = app.get_subcommands().empty()
                         ? ""
                         : app.get_subcommands()[0]->get_name();
    doc["status"] = "error";
    doc["message"] = e.what();
    out << doc.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace lenspec::cli
