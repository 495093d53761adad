#include "gbox/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "gbox/containment.hpp"
#include "gbox/engine.hpp"
#include "gbox/errors.hpp"
#include "gbox/parser.hpp"
#include "gbox/printer.hpp"
#include "gbox/reasoner.hpp"
#include "gbox/stratification.hpp"

namespace gbox::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string ontology;
  std::string gbox;
  std::string lang;
  std::string out;
  std::string left;
  std::string right;
  std::string axiom;
  std::string template_text;
  std::size_t max_steps = 1000;
  std::size_t budget = TableauConfig{}.max_nodes;
  std::uint64_t activation_budget = ActivationConfig{}.budget;
  bool allow_inconsistent = false;
  bool freeze_into_lang = false;
  std::string freeze_mode = "grounded";
  std::string format = "text";

  bool machine() const { return format == "machine"; }
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseOptions options_for(const std::string& path, const std::set<std::string>& roles) {
  ParseOptions o;
  o.source_name = path;
  o.role_names = roles;
  return o;
}

struct Inputs {
  LanguageSpec lang;
  std::set<std::string> roles;

  explicit Inputs(const RunConfig& cfg) {
    if (!cfg.lang.empty()) {
      lang = parse_language(read_text(cfg.lang), options_for(cfg.lang, {}));
      roles = role_names_of(lang);
    }
  }

  Ontology ontology(const std::string& path) const {
    return path.empty() ? Ontology{} : parse_ontology(read_text(path), options_for(path, roles));
  }
  GBox gbox(const std::string& path) const { return parse_gbox(read_text(path), options_for(path, roles)); }
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
}

json substitution_json(const Substitution& s) {
  json j = json::object();
  for (const auto& [name, term] : s) j[name] = to_string(term);
  return j;
}

void print(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

// Writes to --out when given, otherwise to `out`.
template <typename F>
void emit(const RunConfig& cfg, std::ostream& out, F write) {
  if (cfg.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + cfg.out);
  write(file);
}

void check_output_path(const RunConfig& cfg) {
  if (cfg.out.empty()) return;
  namespace fs = std::filesystem;
  for (const std::string* in : {&cfg.ontology, &cfg.gbox, &cfg.lang, &cfg.left, &cfg.right}) {
    if (in->empty()) continue;
    std::error_code ec;
    if (*in == cfg.out || fs::equivalent(*in, cfg.out, ec)) {
      throw UsageError("output path " + cfg.out + " is also an input");
    }
  }
}

void write_result(std::ostream& out, const RunConfig& cfg, const Ontology& result) {
  if (cfg.machine()) {
    json axioms = json::array();
    for (const auto& a : result.axioms()) axioms.push_back(to_string(a));
    print(out, {{"type", "result"}, {"axioms", axioms}});
  } else {
    write_ontology(out, result);
  }
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require(cfg.ontology, "--ontology");
  require(cfg.gbox, "--gbox");
  require(cfg.lang, "--lang");
  check_output_path(cfg);
  const Inputs in(cfg);
  const Ontology o = in.ontology(cfg.ontology);
  const GBox g = in.gbox(cfg.gbox);
  Reasoner reasoner(TableauConfig{cfg.budget});
  ActivationConfig act;
  act.budget = cfg.activation_budget;

  if (!cfg.allow_inconsistent && !reasoner.is_consistent(o)) throw InconsistentInput("input ontology is inconsistent");
  ExpandOptions opts;
  opts.max_steps = cfg.max_steps;
  opts.allow_inconsistent = cfg.allow_inconsistent;
  opts.allow_negation = true;

  std::string semantics = "positive";
  bool unstratifiable = false;
  ExpansionReport rep;
  if (g.has_negation()) {
    const StratifyResult s = stratify(g, o, in.lang, reasoner, act);
    if (s.stratifiable()) {
      semantics = "stratified";
      rep = expand_with_strata(g, o, in.lang, s.levels, reasoner, opts);
    } else {
      // no stratified semantics; fall back to the inflationary fixpoint
      semantics = "inflationary";
      unstratifiable = true;
      rep = expand_fixpoint(g, o, in.lang, reasoner, opts);
    }
  } else {
    rep = expand_fixpoint(g, o, in.lang, reasoner, opts);
  }

  std::vector<std::string> warnings;
  if (!rep.consistent && unstratifiable) {
    warnings.push_back("result inconsistent; GBox unstratifiable");
  } else if (!rep.consistent) {
    warnings.push_back("result inconsistent");
  } else if (unstratifiable) {
    warnings.push_back("GBox unstratifiable");
  }
  if (rep.limits_hit) warnings.push_back("no fixpoint within " + std::to_string(cfg.max_steps) + " steps");

  for (std::size_t i = 0; i < rep.added_axioms.size(); ++i) {
    for (const auto& d : rep.added_axioms[i]) {
      if (cfg.machine()) {
        print(out, {{"type", "step"},
                    {"step", i + 1},
                    {"generator", d.generator},
                    {"substitution", substitution_json(d.substitution)},
                    {"axiom", to_string(d.axiom)}});
      } else {
        out << "step " << i + 1 << ": " << to_string(d.axiom) << "  [" << d.generator << " "
            << to_string(d.substitution) << "]\n";
      }
    }
  }
  if (cfg.machine()) {
    print(out, {{"type", "summary"},
                {"command", "expand"},
                {"semantics", semantics},
                {"steps", rep.steps},
                {"added", rep.added_count()},
                {"axioms", rep.result.axioms().size()},
                {"consistent", rep.consistent},
                {"fixpoint", !rep.limits_hit},
                {"warning", !warnings.empty()},
                {"warnings", warnings}});
  } else {
    out << (rep.limits_hit ? "stopped" : "fixpoint") << " after " << rep.steps << " steps (" << semantics
        << "), " << rep.added_count() << " axioms added\n";
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  if (!cfg.out.empty()) {
    emit(cfg, out, [&](std::ostream& s) { write_ontology(s, rep.result); });
  } else {
    if (!cfg.machine()) out << '\n';
    write_result(out, cfg, rep.result);
  }
  return rep.limits_hit ? kLimit : kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.gbox, "--gbox");
  require(cfg.lang, "--lang");
  const Inputs in(cfg);
  const Ontology o = in.ontology(cfg.ontology);
  const GBox g = in.gbox(cfg.gbox);
  Reasoner reasoner(TableauConfig{cfg.budget});
  ActivationConfig act;
  act.budget = cfg.activation_budget;

  std::string verdict;
  std::vector<std::vector<std::string>> strata;
  std::string cycle;
  bool ok = true;
  if (!g.has_negation()) {
    verdict = "positive";
  } else {
    const StratifyResult s = stratify(g, o, in.lang, reasoner, act);
    if (!s.stratifiable()) {
      ok = false;
      verdict = "unstratifiable";
      cycle = describe_cycle(s.graph, s.cycle);
    } else {
      const bool semi = is_semi_positive(g, o, in.lang, reasoner, act);
      verdict = std::string(semi ? "semi-positive; " : "") + "stratifiable, " + std::to_string(s.strata()) +
                (s.strata() == 1 ? " stratum" : " strata");
      for (const auto& part : s.partition) {
        std::vector<std::string> names;
        for (const auto& gen : part) names.push_back(gen.name());
        strata.push_back(std::move(names));
      }
    }
  }
  if (cfg.machine()) {
    json j = {{"type", "check"}, {"verdict", verdict}, {"stratifiable", ok}};
    if (!strata.empty()) j["strata"] = strata;
    if (!cycle.empty()) j["cycle"] = cycle;
    print(out, j);
  } else {
    out << verdict << '\n';
    for (std::size_t i = 0; i < strata.size(); ++i) {
      out << "stratum " << i + 1 << ":";
      for (const auto& n : strata[i]) out << ' ' << n;
      out << '\n';
    }
    if (!cycle.empty()) out << "cycle: " << cycle << '\n';
  }
  return ok ? kOk : kFails;
}

FreezeMode freeze_mode(const RunConfig& cfg) {
  if (cfg.freeze_into_lang) return FreezeMode::IntoLanguage;
  if (cfg.freeze_mode == "plain") return FreezeMode::Plain;
  if (cfg.freeze_mode == "into-lang") return FreezeMode::IntoLanguage;
  return FreezeMode::Grounded;
}

int cmd_contains(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.left, "--left");
  require(cfg.right, "--right");
  require(cfg.lang, "--lang");
  const Inputs in(cfg);
  const GBox left = in.gbox(cfg.left);
  const GBox right = in.gbox(cfg.right);
  Reasoner reasoner(TableauConfig{cfg.budget});
  ContainmentOptions opts;
  opts.mode = freeze_mode(cfg);
  opts.expand.max_steps = cfg.max_steps;
  const ContainmentResult res = is_contained(left, right, in.lang, reasoner, opts);
  if (cfg.machine()) {
    for (const auto& f : res.failures) {
      print(out, {{"type", "failure"},
                  {"generator", f.generator},
                  {"missing", to_string(f.missing)},
                  {"substitution", substitution_json(f.substitution)}});
    }
    print(out, {{"type", "contains"}, {"mode", to_string(opts.mode)}, {"contained", res.contained}});
  } else {
    out << (res.contained ? "contained" : "not contained") << '\n';
    for (const auto& f : res.failures) {
      out << "generator " << f.generator << ": " << to_string(f.missing) << " not derived under "
          << to_string(f.substitution) << '\n';
    }
  }
  return res.contained ? kOk : kFails;
}

int cmd_ground(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.gbox, "--gbox");
  require(cfg.lang, "--lang");
  check_output_path(cfg);
  const Inputs in(cfg);
  const GBox ground = ground_gbox(in.gbox(cfg.gbox), in.lang);
  if (cfg.machine() && cfg.out.empty()) {
    for (const auto& g : ground) {
      std::ostringstream s;
      write_generator(s, g);
      std::string line = s.str();
      while (!line.empty() && line.back() == '\n') line.pop_back();
      print(out, {{"type", "generator"}, {"name", g.name()}, {"text", line}});
    }
    print(out, {{"type", "ground"}, {"generators", ground.size()}});
    return kOk;
  }
  emit(cfg, out, [&](std::ostream& s) { write_gbox(s, ground); });
  return kOk;
}

int cmd_entails(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.ontology, "--ontology");
  require(cfg.axiom, "--axiom");
  const Inputs in(cfg);
  const Ontology o = in.ontology(cfg.ontology);
  const Axiom a = parse_axiom(cfg.axiom, options_for("--axiom", in.roles));
  Reasoner reasoner(TableauConfig{cfg.budget});
  const bool holds = reasoner.entails(o, a);
  if (cfg.machine()) {
    print(out, {{"type", "entails"}, {"axiom", to_string(a)}, {"entailed", holds}});
  } else {
    out << (holds ? "entailed" : "not entailed") << '\n';
  }
  return holds ? kOk : kFails;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.template_text, "--template");
  require(cfg.lang, "--lang");
  const Inputs in(cfg);
  const Ontology o = in.ontology(cfg.ontology);
  const Template t = parse_template(cfg.template_text, options_for("--template", in.roles));
  Reasoner reasoner(TableauConfig{cfg.budget});
  const auto bindings = eval_template(t, o, in.lang, reasoner, EvalOptions{cfg.allow_inconsistent});
  for (const auto& s : bindings) {
    if (cfg.machine()) {
      print(out, {{"type", "binding"}, {"substitution", substitution_json(s)}});
    } else {
      out << to_string(s) << '\n';
    }
  }
  if (cfg.machine()) print(out, {{"type", "eval"}, {"bindings", bindings.size()}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expansion, stratification and containment of GBoxes over ALCHI ontologies", "gbox"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* c) {
    c->add_option("--lang", cfg.lang, "Language file");
    c->add_option("--out", cfg.out, "Output file (default: standard output)");
    c->add_option("--max-steps", cfg.max_steps, "Expansion steps before giving up")->check(CLI::PositiveNumber);
    c->add_option("--budget", cfg.budget, "Tableau node budget per reasoning call")->check(CLI::PositiveNumber);
    c->add_option("--activation-budget", cfg.activation_budget, "Entailment checks per activation query")
        ->check(CLI::PositiveNumber);
    c->add_flag("--allow-inconsistent", cfg.allow_inconsistent, "Proceed on an inconsistent input ontology");
    c->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  };

  auto* expand = app.add_subcommand("expand", "Expand an ontology with a GBox");
  common(expand);
  expand->add_option("--ontology", cfg.ontology, "Ontology file");
  expand->add_option("--gbox", cfg.gbox, "GBox file");

  auto* check = app.add_subcommand("check", "Classify a GBox: positive, semi-positive, stratifiable");
  common(check);
  check->add_option("--ontology", cfg.ontology, "Ontology file (default: empty)");
  check->add_option("--gbox", cfg.gbox, "GBox file");

  auto* contains = app.add_subcommand("contains", "Decide whether --left is L-contained in --right");
  common(contains);
  contains->add_option("--left", cfg.left, "Contained GBox");
  contains->add_option("--right", cfg.right, "Containing GBox");
  contains->add_flag("--freeze-into-lang", cfg.freeze_into_lang, "Same as --freeze-mode into-lang");
  contains->add_option("--freeze-mode", cfg.freeze_mode, "grounded (exact), plain or into-lang")
      ->check(CLI::IsMember({"grounded", "plain", "into-lang"}));

  auto* ground = app.add_subcommand("ground", "L-grounding of a GBox");
  common(ground);
  ground->add_option("--gbox", cfg.gbox, "GBox file");

  auto* entails = app.add_subcommand("entails", "Decide whether an ontology entails an axiom");
  common(entails);
  entails->add_option("--ontology", cfg.ontology, "Ontology file");
  entails->add_option("--axiom", cfg.axiom, "Axiom, e.g. \"A SubClassOf C\"");

  auto* eval = app.add_subcommand("eval", "L-evaluation of a template over an ontology");
  common(eval);
  eval->add_option("--ontology", cfg.ontology, "Ontology file (default: empty)");
  eval->add_option("--template", cfg.template_text, "Template, e.g. \"{?X SubClassOf C}\"");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*expand) return cmd_expand(cfg, out, err);
    if (*check) return cmd_check(cfg, out, err);
    if (*contains) return cmd_contains(cfg, out, err);
    if (*ground) return cmd_ground(cfg, out, err);
    if (*entails) return cmd_entails(cfg, out, err);
    return cmd_eval(cfg, out, err);
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kLimit;
  } catch (const InconsistentInput& e) {
    err << "error: " << e.what() << " (use --allow-inconsistent to proceed)\n";
    return kFails;
  } catch (const Error& e) {
    // parse, type, usage and unsupported-input errors
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gbox::cli
