#include "nilorb/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "nilorb/excdata.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/jets.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/rc.hpp"
#include "nilorb/rootsys.hpp"

#include <ostream>
#include <sstream>

namespace nilorb {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, std::string& format, std::initializer_list<std::string> allowed) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::vector<std::string>(allowed)));
}

Format to_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (seps.find(c) != std::string::npos)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ",")) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError("expected a list of integers, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

json orbit_info_json(const Orbit& o) {
  json j;
  j["orbit"] = o.to_string();
  j["algebra"] = {{"name", o.algebra().name()}, {"dim", o.algebra().dim()}, {"rank", o.algebra().rank()}};
  j["dim"] = orbit_dim(o);
  j["codim"] = codim(o);
  j["little"] = is_little(o);
  j["rigid"] = is_rigid(o);
  const Rc1Verdict rc1 = rc1_status(o);
  j["rc1"] = {{"status", to_string(rc1.status)}, {"reason", to_string(rc1.reason)}};
  if (rc1.reason == Rc1Reason::Restriction) j["rc1"]["restriction_row"] = rc1.restriction_row;
  const Rc2Status rc2 = rc2_status(o);
  j["rc2"] = {{"status", rc2.verdict == Rc2Verdict::ProvenAllM ? "ProvenAllM" : "Unknown"}};
  if (rc2.certificate) j["rc2"]["certificate"] = certificate_to_json(*rc2.certificate);
  if (!rc2.exceptional_witness.empty()) j["rc2"]["witness"] = rc2.exceptional_witness;
  return j;
}

void print_orbit_info(const Orbit& o, Format f, std::ostream& out) {
  const json j = orbit_info_json(o);
  if (f == Format::Json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << "orbit: " << o.to_string() << '\n'
      << "algebra: " << o.algebra().name() << " (dim " << o.algebra().dim() << ", rank " << o.algebra().rank()
      << ")\n"
      << "dim: " << j["dim"] << '\n'
      << "codim: " << j["codim"] << '\n'
      << "little: " << yes_no(j["little"]) << '\n'
      << "rigid: " << yes_no(j["rigid"]) << '\n'
      << "rc1: " << j["rc1"]["status"].get<std::string>();
  if (j["rc1"]["reason"] != "None") out << " (" << j["rc1"]["reason"].get<std::string>() << ")";
  out << '\n' << "rc2: " << j["rc2"]["status"].get<std::string>() << '\n';
  if (j["rc2"].contains("certificate")) out << "certificate: " << j["rc2"]["certificate"].dump() << '\n';
  if (j["rc2"].contains("witness")) out << "witness: " << j["rc2"]["witness"].get<std::string>() << '\n';
}

std::string record_text(const ExceptionalOrbitRecord& r) {
  std::ostringstream s;
  s << "label: " << r.label << '\n' << "characteristic: [";
  for (std::size_t i = 0; i < r.characteristic.size(); ++i) s << (i ? "," : "") << r.characteristic[i];
  s << "]\n"
    << "dim: " << r.dim << '\n'
    << "rc1: " << (r.rc1 ? "Yes" : "No") << (r.rc1_reason.empty() ? "" : " (" + r.rc1_reason + ")") << '\n'
    << "rc2: " << (r.rc2 == Rc2Table::Yes ? "Yes" : "Unknown")
    << (r.rc2_witness.empty() ? "" : " (" + r.rc2_witness + ")") << '\n'
    << "rigid: " << yes_no(r.rigid) << '\n'
    << "little: " << yes_no(r.little) << '\n';
  if (!r.notes.empty()) s << "notes: " << r.notes << '\n';
  return s.str();
}

json record_json(const ExceptionalOrbitRecord& r) {
  return {{"type", Algebra::exceptional(r.type).name()},
          {"label", r.label},
          {"characteristic", r.characteristic},
          {"dim", r.dim},
          {"rc1", r.rc1 ? "Yes" : "No"},
          {"rc1_reason", r.rc1_reason},
          {"rc2", r.rc2 == Rc2Table::Yes ? "Yes" : "Unknown"},
          {"rc2_witness", r.rc2_witness},
          {"rigid", r.rigid},
          {"little", r.little},
          {"notes", r.notes}};
}

Family exceptional_family(const std::string& type) {
  const Algebra a = Algebra::parse(type);
  if (a.classical()) throw UsageError("--type must be one of G2, F4, E6, E7, E8");
  return a.family();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbit combinatorics: dimensions, induction, RC certificates, jet equations"};
  app.name("nilorb");
  app.require_subcommand(1);
  app.footer(
      "Orbits are written algebra:label, e.g. sl6:3,3  so8:2^4:I  sp4:2,2  E7:A4+A1.\n"
      "Simple roots use Bourbaki numbering. Set NILORB_EXCEPTIONAL_DATA to replace the exceptional tables.");

  std::string format = "text";

  auto* orbit = app.add_subcommand("orbit", "Orbit queries")->require_subcommand(1);
  std::string orbit_text;
  auto* info = orbit->add_subcommand("info", "Dimension, littleness, rigidity and RC verdicts of an orbit");
  info->add_option("orbit", orbit_text, "Orbit, e.g. so11:4,4,3")->required();
  add_format(info, format, {"text", "json"});

  std::string algebra_text;
  bool only_little = false, only_rigid = false, only_rc2 = false;
  auto* list = orbit->add_subcommand("list", "List the orbits of an algebra");
  list->add_option("--algebra", algebra_text, "Algebra, e.g. so8 or F4")->required();
  auto* little_flag = list->add_flag("--little", only_little, "Only little orbits");
  auto* rigid_flag = list->add_flag("--rigid", only_rigid, "Only rigid orbits");
  auto* rc2_flag = list->add_flag("--rc2", only_rc2, "Only orbits with an RC2 certificate");
  little_flag->excludes(rigid_flag)->excludes(rc2_flag);
  rigid_flag->excludes(rc2_flag);
  add_format(list, format, {"text", "json", "csv"});

  std::string levi_text, orbits_text;
  auto* induce = app.add_subcommand("induce", "Induce an orbit from a Levi subalgebra");
  induce->add_option("--algebra", algebra_text, "Classical algebra, e.g. so11 or sl5")->required();
  induce->add_option("--levi", levi_text, "Composition (sl) or blocks:r (so/sp), e.g. 3:5")->required();
  induce->add_option("--orbits", orbits_text,
                     "Partitions separated by ';' or '/': one per block, then the base orbit (so/sp)")
      ->required();
  add_format(induce, format, {"text", "json"});

  auto* stats = app.add_subcommand("stats", "Batch statistics")->require_subcommand(1);
  std::string family;
  int max_n = 0, min_n = 1;
  std::string scope_text = "published";
  auto* little_induced = stats->add_subcommand(
      "little-induced", "Count partitions induced from little orbits (rows n: so_n, or sp_2n)");
  little_induced->add_option("--family", family, "so or sp")->required()->check(CLI::IsMember({"so", "sp"}));
  little_induced->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::Range(1, 200));
  little_induced->add_option("--min-n", min_n, "Smallest n")->check(CLI::Range(1, 200));
  little_induced->add_option("--scope", scope_text, "Levi scope: published or all")
      ->check(CLI::IsMember({"published", "all"}));
  add_format(little_induced, format, {"csv", "text", "json"});

  auto* jet = app.add_subcommand("jet", "Jet-scheme equations")->require_subcommand(1);
  std::string poly_text;
  int order = 0, mat_n = 0, power = 0;
  bool with_trace = false;
  auto* expand = jet->add_subcommand("expand", "Expand f(x + x1 t + ... + xm t^m) mod t^(m+1)");
  expand->add_option("--poly", poly_text, "Polynomial, e.g. \"x^2+y*z\"")->required();
  expand->add_option("--order", order, "Jet order m")->required()->check(CLI::Range(0, 32));
  add_format(expand, format, {"text", "json"});
  auto* matrix = jet->add_subcommand("matrix", "Jet equations of X^d = 0 for a generic n x n matrix");
  matrix->add_option("--n", mat_n, "Matrix size")->required()->check(CLI::Range(2, 12));
  matrix->add_option("--power", power, "Power d (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  matrix->add_option("--order", order, "Jet order m")->required()->check(CLI::Range(0, 8));
  matrix->add_flag("--gl", with_trace, "Do not eliminate the last diagonal entry (gl instead of sl)");
  add_format(matrix, format, {"text", "json"});

  auto* exc = app.add_subcommand("exceptional", "Exceptional orbit tables")->require_subcommand(1);
  std::string type_text, label_text, filter_text = "all";
  auto* lookup_cmd = exc->add_subcommand("lookup", "Look up one orbit");
  lookup_cmd->add_option("--type", type_text, "G2, F4, E6, E7 or E8")->required();
  lookup_cmd->add_option("--label", label_text, "Bala-Carter label, e.g. F4(a3)")->required();
  add_format(lookup_cmd, format, {"text", "json"});
  auto* exc_list = exc->add_subcommand("list", "List a table");
  exc_list->add_option("--type", type_text, "G2, F4, E6, E7 or E8")->required();
  exc_list->add_option("--filter", filter_text, "all, little, rigid or rc2_unknown")
      ->check(CLI::IsMember({"all", "little", "rigid", "rc2_unknown"}));
  add_format(exc_list, format, {"text", "json", "csv"});
  auto* validate = exc->add_subcommand("validate", "Check every table invariant and replay the witnesses");
  add_format(validate, format, {"text", "json"});

  auto* levi = app.add_subcommand("levi", "Levi subalgebra tests")->require_subcommand(1);
  int rank = 0;
  std::string subset_text;
  auto* check_i = levi->add_subcommand("check-i", "Does [l_S, l_S] contain a regular semisimple element?");
  check_i->add_option("--type", type_text, "A, B, C, D, E6, E7, E8, F4 or G2")->required();
  check_i->add_option("--rank", rank, "Rank")->required();
  check_i->add_option("--subset", subset_text, "Simple-root indices, e.g. 2,3,4")->required();
  add_format(check_i, format, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Format fmt =
      little_induced->parsed() && little_induced->count("--format") == 0 ? Format::Csv : to_format(format);
  try {
    if (info->parsed()) {
      print_orbit_info(Orbit::parse(orbit_text), fmt, out);
    } else if (list->parsed()) {
      const Algebra a = Algebra::parse(algebra_text);
      std::vector<Orbit> orbits;
      if (a.classical()) {
        orbits = all_orbits(a);
      } else {
        orbits.push_back(Orbit::exceptional(a, "0"));
        for (const auto* r : ExceptionalTables::instance().of_type(a.family()))
          orbits.push_back(Orbit::exceptional(a, r->label));
        orbits.push_back(Orbit::exceptional(a, a.name()));
      }
      json arr = json::array();
      if (fmt == Format::Csv) out << "orbit,dim,little,rigid,rc2\n";
      for (const auto& o : orbits) {
        const bool rc2 = rc2_status(o).verdict == Rc2Verdict::ProvenAllM;
        if ((only_little && !is_little(o)) || (only_rigid && !is_rigid(o)) || (only_rc2 && !rc2)) continue;
        if (fmt == Format::Json)
          arr.push_back({{"orbit", o.to_string()}, {"dim", orbit_dim(o)}, {"little", is_little(o)},
                         {"rigid", is_rigid(o)}, {"rc2", rc2}});
        else if (fmt == Format::Csv)
          out << '"' << o.to_string() << "\"," << orbit_dim(o) << ',' << yes_no(is_little(o)) << ','
              << yes_no(is_rigid(o)) << ',' << yes_no(rc2) << '\n';
        else
          out << o.to_string() << "  dim " << orbit_dim(o) << '\n';
      }
      if (fmt == Format::Json) out << arr.dump(2) << '\n';
    } else if (induce->parsed()) {
      const Algebra a = Algebra::parse(algebra_text);
      if (!a.classical()) throw UsageError("induce supports sl, so and sp only");
      std::vector<Partition> parts;
      for (const auto& item : split(orbits_text, ";/")) parts.push_back(parse_partition(item == "0" ? "" : item));
      Partition result;
      bool codim_ok = false;
      json levi_json;
      if (a.eps() == EpsClass::A) {
        const LeviShapeA shape{parse_ints(levi_text)};
        result = induce_A(shape, parts);
        if (result.size() != a.n()) throw std::invalid_argument("Levi does not fit " + a.name());
        codim_ok = codim_preserved(shape, parts, result);
        levi_json = {{"composition", shape.composition}};
      } else {
        const auto colon = levi_text.find(':');
        if (colon == std::string::npos) throw UsageError("--levi for so/sp is blocks:r, e.g. 3:5 or 2,1:0");
        InductionDatum d;
        d.levi.blocks = parse_ints(levi_text.substr(0, colon));
        const auto r = parse_ints(levi_text.substr(colon + 1));
        if (r.size() != 1) throw UsageError("--levi needs a single r after ':'");
        d.levi.r = r.front();
        if (parts.size() != d.levi.blocks.size() + 1)
          throw UsageError("--orbits needs one partition per block plus the base orbit");
        d.base_orbit = parts.back();
        parts.pop_back();
        d.gl_orbits = parts;
        result = induce_BCD(a.n(), a.eps(), d);
        codim_ok = codim_preserved(a.n(), a.eps(), d, result);
        levi_json = {{"blocks", d.levi.blocks}, {"r", d.levi.r}};
      }
      const std::string tags = needs_tag(a, result) ? " (I and II)" : "";
      if (fmt == Format::Json) {
        out << json{{"algebra", a.name()}, {"levi", levi_json}, {"result", result.parts()},
                    {"both_very_even_orbits", !tags.empty()}, {"codim_preserved", codim_ok}}
                   .dump(2)
            << '\n';
      } else {
        out << "induced: " << a.name() << ':' << result.to_string() << tags << '\n'
            << "codim preserved: " << yes_no(codim_ok) << '\n';
      }
    } else if (little_induced->parsed()) {
      const EpsClass eps = family == "so" ? EpsClass::Plus : EpsClass::Minus;
      const LeviScope scope = scope_text == "all" ? LeviScope::AllLevis : LeviScope::PublishedTables;
      json arr = json::array();
      if (fmt == Format::Csv) out << "n,count,total\n";
      for (int n = min_n; n <= max_n; ++n) {
        const int size = eps == EpsClass::Plus ? n : 2 * n;
        const auto count = induced_from_little_set(size, eps, scope).size();
        const auto total = enumerate(size, eps).size();
        if (fmt == Format::Csv)
          out << n << ',' << count << ',' << total << '\n';
        else if (fmt == Format::Json)
          arr.push_back({{"n", n}, {"count", count}, {"total", total}});
        else
          out << family << (eps == EpsClass::Plus ? n : 2 * n) << ": " << count << " of " << total << '\n';
      }
      if (fmt == Format::Json) out << arr.dump(2) << '\n';
    } else if (expand->parsed()) {
      const ParsedPolynomial p = parse_polynomial(poly_text);
      const auto gens = jet_expand(p.poly, order);
      if (fmt == Format::Json) {
        json j = {{"variables", p.names}, {"order", order}, {"components", json::array()}};
        for (const auto& g : gens) j["components"].push_back(g.to_json());
        out << j.dump(2) << '\n';
      } else {
        out << "# variables:";
        for (std::size_t i = 0; i < p.names.size(); ++i) out << (i ? ", " : " ") << p.names[i] << " -> x" << i;
        out << '\n';
        for (std::size_t j = 0; j < gens.size(); ++j) out << "f^(" << j << ") = " << gens[j].to_string() << '\n';
      }
    } else if (matrix->parsed()) {
      const auto gens = matrix_power_jet_ideal(mat_n, power, order, !with_trace);
      if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& g : gens) arr.push_back(g.to_json());
        out << json{{"n", mat_n}, {"power", power}, {"order", order}, {"traceless", !with_trace},
                    {"generators", arr}}
                   .dump(2)
            << '\n';
      } else {
        out << "# x_{a,b} = x(a*" << mat_n << "+b), 0-based";
        if (!with_trace) out << "; x" << mat_n * mat_n - 1 << " eliminated by the trace";
        out << '\n';
        for (const auto& g : gens) out << g.to_string() << '\n';
      }
    } else if (lookup_cmd->parsed()) {
      const auto& r = lookup(exceptional_family(type_text), label_text);
      out << (fmt == Format::Json ? record_json(r).dump(2) + "\n" : record_text(r));
    } else if (exc_list->parsed()) {
      const OrbitFilter f = filter_text == "little"        ? OrbitFilter::Little
                            : filter_text == "rigid"       ? OrbitFilter::Rigid
                            : filter_text == "rc2_unknown" ? OrbitFilter::Rc2Unknown
                                                           : OrbitFilter::All;
      const auto rows = list_orbits(exceptional_family(type_text), f);
      json arr = json::array();
      if (fmt == Format::Csv) out << "label,dim,rc1,rc2,rigid,little\n";
      for (const auto* r : rows) {
        if (fmt == Format::Json)
          arr.push_back(record_json(*r));
        else if (fmt == Format::Csv)
          out << '"' << r->label << "\"," << r->dim << ',' << (r->rc1 ? "Yes" : "No") << ','
              << (r->rc2 == Rc2Table::Yes ? "Yes" : "Unknown") << ',' << yes_no(r->rigid) << ','
              << yes_no(r->little) << '\n';
        else
          out << r->label << "  dim " << r->dim << '\n';
      }
      if (fmt == Format::Json) out << arr.dump(2) << '\n';
    } else if (validate->parsed()) {
      const auto& tables = ExceptionalTables::instance();
      const ValidationReport rep = validate_tables(tables);
      if (fmt == Format::Json) {
        out << json{{"source", tables.source()},
                    {"records_checked", rep.records_checked},
                    {"witnesses_replayed", rep.witnesses_replayed},
                    {"violations", rep.violations}}
                   .dump(2)
            << '\n';
      } else {
        out << "source: " << tables.source() << '\n'
            << "records checked: " << rep.records_checked << '\n'
            << "witnesses replayed: " << rep.witnesses_replayed << '\n'
            << "violations: " << rep.violations.size() << '\n';
        for (const auto& v : rep.violations) out << "  " << v << '\n';
      }
      return rep.ok() ? 0 : 1;
    } else if (check_i->parsed()) {
      const RootSystem rs = RootSystem::build(parse_root_type(type_text), rank);
      const auto nodes = parse_ints(subset_text);
      const std::set<int> subset(nodes.begin(), nodes.end());
      const bool ok = levi_condition_i(rs, subset);
      if (fmt == Format::Json)
        out << json{{"type", std::string(to_string(rs.type()))}, {"rank", rank}, {"subset", nodes},
                    {"condition_i", ok}}
                   .dump(2)
            << '\n';
      else
        out << "condition (i): " << (ok ? "holds" : "fails") << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace nilorb
