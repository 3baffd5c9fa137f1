#include "sfs/cli.hpp"

#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sfs/decide.hpp"
#include "sfs/error.hpp"
#include "sfs/parse.hpp"
#include "sfs/presentation.hpp"

namespace sfs {

namespace {

using nlohmann::json;

json degree_json(const Int& d) {
  if (d <= Int(std::numeric_limits<long long>::max()))
    return d.convert_to<long long>();
  return d.str();  // beyond int64: decimal string
}

json verdict_json(const Verdict& v) {
  json j;
  j["kind"] = to_string(v.kind);
  if (v.witness && v.witness->covers) {
    j["degree"] = degree_json(v.witness->degree);
    j["orientation"] = to_string(v.witness->orientation);
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

json covering_json(const CoveringVerdict& cv) {
  json j;
  j["kind"] = cv.covers ? "yes" : "no";
  if (cv.covers) {
    j["degree"] = degree_json(cv.degree);
    j["orientation"] = to_string(cv.orientation);
  } else {
    j["reason"] = cv.reason;
  }
  return j;
}

json bool_verdict_json(bool yes, const std::string& reason) {
  json j;
  j["kind"] = yes ? "yes" : "no";
  j["reason"] = reason;
  return j;
}

// Shared fields every expression command reports.
json common_report(const std::string& command, const std::string& input,
                   const SeifertInvariant& m) {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["normalized"] = render(normalize(m));
  j["euler"] = to_string(euler_number(m));
  j["geometry"] = to_string(classify_geometry(m.base()));
  return j;
}

struct Invocation {
  std::string format = "text";
  std::string text;
  json report;
};

void run_expression_command(Invocation& inv, const std::string& command,
                            const std::string& expr) {
  SeifertInvariant m = parse_sfs(expr);
  inv.report = common_report(command, expr, m);
  std::ostringstream os;

  if (command == "normalize") {
    os << render(normalize(m));
  } else if (command == "euler") {
    os << euler_number(m);
  } else if (command == "geometry") {
    os << classify_geometry(m.base());
  } else if (command == "covers-t1") {
    CoveringVerdict cv = covers_unit_tangent_bundle(m);
    inv.report["verdict"] = covering_json(cv);
    os << cv;
  } else if (command == "anosov") {
    Verdict v = admits_anosov(m);
    inv.report["verdict"] = verdict_json(v);
    os << v;
  } else if (command == "ph") {
    Verdict v = admits_transitive_ph(m);
    inv.report["verdict"] = verdict_json(v);
    os << v;
  } else if (command == "turnover-ph") {
    Verdict v = admits_ph_turnover(m);
    inv.report["verdict"] = verdict_json(v);
    os << v;
  } else if (command == "horizontal") {
    bool yes = horizontal_foliation_sufficient(m);
    Rational sum;
    SeifertInvariant n = normalize(m);
    for (const Fiber& f : n.fibers()) sum += Rational(f.beta, f.alpha);
    std::string detail = "sum beta/alpha = " + to_string(sum) + (yes ? " < 1" : " >= 1");
    std::string reason = yes ? "horizontal foliation guaranteed (" + detail + ")"
                             : "inconclusive: sufficient condition fails (" + detail + ")";
    inv.report["verdict"] = bool_verdict_json(yes, reason);
    os << (yes ? "guaranteed: " : "inconclusive: ") << detail;
  } else if (command == "milnor-wood") {
    bool yes = milnor_wood_necessary(m);
    std::string detail = "|e| = " + to_string(euler_number(m).abs()) + (yes ? " <= " : " > ") +
                         to_string(-orbifold_euler_characteristic(m.base()));
    std::string reason = yes ? "necessary bound satisfied (" + detail + ")"
                             : "horizontal foliation excluded (" + detail + ")";
    inv.report["verdict"] = bool_verdict_json(yes, reason);
    os << (yes ? "satisfied: " : "excluded: ") << detail;
  } else if (command == "pi1") {
    SeifertInvariant n = normalize(m);
    if (!n.base_orientable() || !n.fibers().empty())
      throw Error(Errc::invalid_argument,
                  "pi1 emitter handles only orientable circle bundles (no exceptional fibers)");
    Presentation p = circle_bundle_presentation(n.base_genus(), -n.b());
    inv.report["presentation"] = render(p);
    os << render(p);
  } else if (command == "double-cover") {
    SeifertInvariant d = orientation_double_cover(m);
    inv.report["result"] = render(d);
    os << render(d);
  }

  inv.text = os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert fibered space calculator: exact invariants, coverings and "
               "flow/foliation decisions"};
  app.require_subcommand(1);

  Invocation inv;
  app.add_option("--format", inv.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  struct ExprCmd {
    const char* name;
    const char* help;
  };
  const ExprCmd expr_cmds[] = {
      {"normalize", "canonical form of a Seifert invariant"},
      {"euler", "exact Euler number e = -(b + sum beta/alpha)"},
      {"geometry", "geometry of the base orbifold"},
      {"covers-t1", "fiberwise covering onto the unit tangent bundle of the base"},
      {"anosov", "existence of an Anosov flow"},
      {"ph", "existence of a transitive partially hyperbolic diffeomorphism"},
      {"turnover-ph", "partial hyperbolicity over a turnover base (no transitivity needed)"},
      {"horizontal", "sufficient test for a horizontal foliation"},
      {"milnor-wood", "necessary Milnor-Wood bound for horizontal foliations"},
      {"pi1", "fundamental group presentation of a circle bundle"},
      {"double-cover", "invariant over the orientation double cover of the base"},
  };

  std::string expr;
  for (const auto& [name, help] : expr_cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", expr, "SFS(g=..; b=..; (a,b),...)")->required();
    sub->add_option("--format", inv.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([&inv, name = std::string(name), &expr] {
      run_expression_command(inv, name, expr);
    });
  }

  long long max_alpha = 0;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "turnovers carrying horizontal foliations but no partially hyperbolic maps");
  enumerate->add_option("--max-alpha", max_alpha, "largest cone order to search")->required();
  enumerate->add_option("--format", inv.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->callback([&inv, &max_alpha] {
    auto examples = enumerate_turnover_gap_examples(max_alpha);
    inv.report["command"] = "enumerate";
    inv.report["max_alpha"] = max_alpha;
    inv.report["count"] = examples.size();
    inv.report["results"] = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < examples.size(); ++i) {
      std::string r = render(examples[i]);
      inv.report["results"].push_back(r);
      os << (i ? "\n" : "") << r;
    }
    inv.text = os.str();
  });

  std::string expr2;
  bool oriented = false;
  CLI::App* same = app.add_subcommand("same", "fiber-preserving homeomorphism test");
  same->add_option("expr", expr, "first invariant")->required();
  same->add_option("expr2", expr2, "second invariant")->required();
  same->add_flag("--oriented", oriented, "require matching orientations");
  same->add_option("--format", inv.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  same->callback([&inv, &expr, &expr2, &oriented] {
    SeifertInvariant m1 = parse_sfs(expr);
    SeifertInvariant m2 = parse_sfs(expr2);
    bool equal = same_manifold(m1, m2, oriented);
    inv.report = common_report("same", expr, m1);
    inv.report["input2"] = expr2;
    inv.report["verdict"] = bool_verdict_json(
        equal, equal ? (oriented ? "equal normalized invariants"
                                 : "equal normalized invariants up to orientation")
                     : "normalized invariants differ");
    inv.text = equal ? "same fibered space" : "different fibered spaces";
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::internal ? 1 : 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (inv.format == "json")
    out << inv.report.dump(2) << "\n";
  else
    out << inv.text << "\n";
  return 0;
}

}  // namespace sfs
