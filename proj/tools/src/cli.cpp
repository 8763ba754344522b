#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hammock/dot.hpp"
#include "hammock/hammock.hpp"
#include "hammock/oracle.hpp"
#include "hammock/report.hpp"
#include "hammock/spec_file.hpp"
#include "hammock/theorems.hpp"

namespace hammock::cli {

namespace {

// Bad flags or names in an otherwise readable invocation.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string emit = "text";
  bool no_timings = false;
  std::string category;
  std::string from;
  std::string to;
  std::size_t stage = kDefaultStage;
  std::size_t max_stage = kDefaultStage;
  std::size_t bound = kDefaultBound;
  bool assume_model = false;
  std::string output;
  std::string x;
  std::string y;
  std::string object;
  std::optional<std::size_t> pos_i;
  std::optional<std::size_t> pos_j;
  std::string homotopy;
  std::string nat;
  std::string idem;
  std::string algebra;
  std::string morphism;
  bool pre = false;
};

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::fail:
      return kExitFail;
    case Verdict::unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

template <class Map>
std::string pick(const Map& map, const std::string& requested, const std::string& kind,
                 const std::function<bool(const std::string&)>& eligible) {
  if (!requested.empty()) {
    if (!map.contains(requested)) throw InputError("unknown " + kind + " '" + requested + "'");
    return requested;
  }
  std::vector<std::string> names;
  for (const auto& [name, value] : map) {
    if (eligible(name)) names.push_back(name);
  }
  if (names.size() != 1) {
    throw InputError(names.empty() ? "no " + kind + " declared"
                                   : "several " + kind + "s declared; choose one with --" + kind);
  }
  return names.front();
}

class Command {
 public:
  Command(std::string name, const Options& o) : o_(o) {
    report_.command = std::move(name);
    report_.inputs["file"] = o.file;
  }

  int run(const std::function<void(Command&)>& body, std::ostream& out, std::ostream& err) {
    try {
      model_ = load_model_file(o_.file);
    } catch (const ParseError& e) {
      err << "error: " << o_.file << ":" << e.what() << "\n";
      return kExitInput;
    } catch (const ValidationError& e) {
      if (report_.command != "validate") {
        err << "error: " << o_.file << ": " << to_string(e.violation()) << "\n";
        return kExitInput;
      }
      report_.inputs["category"] = nullptr;
      fail(to_json(e.violation()));
      report_.timings.emplace_back("load", clock_.lap());
      emit(out);
      return exit_code(report_.verdict);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
    report_.timings.emplace_back("load", clock_.lap());
    try {
      body(*this);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    } catch (const ValidationError& e) {
      fail(to_json(e.violation()));
    }
    report_.timings.emplace_back("compute", clock_.lap());
    if (!dot_.empty()) {
      out << dot_;
    } else {
      emit(out);
    }
    return exit_code(report_.verdict);
  }

  const Model& model() const { return *model_; }
  Report& report() { return report_; }
  const Options& options() const { return o_; }
  void set_dot(std::string dot) { dot_ = std::move(dot); }

  void fail(Json counterexample) {
    report_.verdict = Verdict::fail;
    if (!report_.counterexample) report_.counterexample = std::move(counterexample);
  }

  std::shared_ptr<const RelCat> category() {
    const auto& name = o_.category.empty() ? model_->order.front() : o_.category;
    if (!model_->categories.contains(name)) throw InputError("unknown category '" + name + "'");
    report_.inputs["category"] = name;
    return model_->categories.at(name);
  }

  ObjectId object(const RelCat& r, const std::string& name, const char* key) {
    auto o = r.cat().find_object(name);
    if (!o) throw InputError("unknown object '" + name + "' in " + r.cat().name());
    report_.inputs[key] = name;
    return *o;
  }

  /// `name`, or the first object when empty.
  ObjectId object_or_first(const RelCat& r, const std::string& name, const char* key) {
    return object(r, name.empty() ? r.cat().object_name(ObjectId{0}) : name, key);
  }

  MorphismId morphism(const RelCat& r, const std::string& name, const char* key) {
    auto m = r.cat().find_morphism(name);
    if (!m) throw InputError("unknown morphism '" + name + "' in " + r.cat().name());
    report_.inputs[key] = name;
    return *m;
  }

  void theorem(const TheoremReport& t) {
    report_.verdict = t.verdict;
    for (const auto& c : t.checks) report_.witnesses.push_back(to_json(c));
    if (!t.notes.empty()) report_.witnesses.push_back(Json{{"notes", t.notes}});
    if (const auto* f = t.first_failure(); f && t.verdict == Verdict::fail) report_.counterexample = to_json(*f);
  }

 private:
  void emit(std::ostream& out) const {
    bool timings = !o_.no_timings;
    if (o_.emit == "json") {
      out << to_json(report_, timings).dump(2) << "\n";
    } else {
      out << to_text(report_, timings);
    }
  }

  const Options& o_;
  Report report_;
  std::optional<Model> model_;
  Stopwatch clock_;
  std::string dot_;
};

// ---------------------------------------------------------------------------

void payload(Command& cmd, const char* kind, const std::string& name, const Check& check) {
  Json j;
  j["kind"] = kind;
  j["name"] = name;
  j["verdict"] = std::string(to_string(check ? Verdict::fail : Verdict::pass));
  if (check) {
    j["violation"] = to_json(*check);
    cmd.fail(j);
  }
  cmd.report().witnesses.push_back(j);
}

void validate(Command& cmd) {
  const Model& m = cmd.model();
  auto& r = cmd.report();
  r.bounds["bound"] = cmd.options().bound;
  for (const auto& name : m.order) {
    const auto& rc = m.categories.at(name);
    Json j;
    j["kind"] = "category";
    j["name"] = name;
    j["objects"] = rc->cat().object_count();
    j["morphisms"] = rc->cat().morphism_count();
    j["weqs"] = rc->weqs().size();
    j["verdict"] = "PASS";
    auto two = check_two_out_of_three(*rc);
    j["two_out_of_three"] = two ? two->message : "holds";
    r.witnesses.push_back(j);
  }
  auto relcat_of = [&](const std::string& category) -> const RelCat& { return *m.categories.at(category); };
  for (const auto& [name, f] : m.functors) payload(cmd, "functor", name, check_functor(f));
  for (const auto& [name, n] : m.nats) payload(cmd, "nat", name, check_nat_trans(n));
  for (const auto& [category, cyls] : m.cylinders) {
    for (const auto& [base, c] : cyls) {
      payload(cmd, "cylinder", category + "." + base, validate_cylinder(relcat_of(category), c));
    }
  }
  for (const auto& [name, h] : m.homotopies) {
    payload(cmd, "lhomotopy", name,
                              validate_left_homotopy(relcat_of(m.homotopy_category.at(name)), h));
  }
  for (const auto& [name, mo] : m.monads) {
    payload(cmd, "monad", name, validate_monad(relcat_of(m.monad_category.at(name)), mo));
  }
  for (const auto& [name, a] : m.algebras) {
    payload(cmd, "algebra", name, validate_hoalgebra(relcat_of(m.algebra_category.at(name)), a));
  }
  for (const auto& [name, d] : m.idems) {
    auto rep = validate_idempotent(relcat_of(m.idem_category.at(name)), d, cmd.options().bound);
    Json j;
    j["kind"] = "idem";
    j["name"] = name;
    j["verdict"] = std::string(to_string(rep.verdict));
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    if (rep.failure) {
      j["violation"] = to_json(*rep.failure);
      cmd.fail(j);
    } else if (rep.verdict == Verdict::unknown && r.verdict == Verdict::pass) {
      r.verdict = Verdict::unknown;
    }
    r.witnesses.push_back(j);
  }
}

void hom(Command& cmd) {
  const auto& o = cmd.options();
  auto rc = cmd.category();
  auto x = cmd.object(*rc, o.from, "from");
  auto y = cmd.object(*rc, o.to, "to");
  cmd.report().bounds["stage"] = o.stage;
  auto s = make_stage(rc, x, y, o.stage);
  if (o.emit == "dot") {
    cmd.set_dot(stage_to_dot(*s));
    return;
  }
  const auto& zs = s->objects();
  std::size_t ladders = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    s->for_each_ladder(i, [&](std::size_t, std::span<const MorphismId>) { ++ladders; });
  }
  Json j;
  j["stage"] = o.stage;
  j["zigzags"] = zs.size();
  j["ladders"] = ladders;
  j["nonidentity_ladders"] = ladders - zs.size();
  j["components"] = pi0_stage(*s).size();
  constexpr std::size_t kListed = 64;
  Json listed = Json::array();
  for (std::size_t i = 0; i < zs.size() && i < kListed; ++i) listed.push_back(to_json(rc->cat(), zs[i]));
  j["objects"] = listed;
  if (zs.size() > kListed) j["objects_truncated"] = true;
  cmd.report().witnesses.push_back(j);
}

void pi0(Command& cmd) {
  const auto& o = cmd.options();
  auto rc = cmd.category();
  auto x = cmd.object(*rc, o.from, "from");
  auto y = cmd.object(*rc, o.to, "to");
  cmd.report().inputs["assume_model"] = o.assume_model;
  cmd.report().bounds["max_stage"] = o.max_stage;
  auto tower = pi0_tower(rc, x, y, o.max_stage, o.assume_model);
  cmd.report().witnesses.push_back(to_json(tower));
  // --assume-model takes stage 3 as the answer, so it settles the count too.
  cmd.report().verdict = tower.final_components ? Verdict::pass : Verdict::unknown;
}

void oracle(Command& cmd) {
  const auto& o = cmd.options();
  auto rc = cmd.category();
  auto x = cmd.object(*rc, o.from, "from");
  auto y = cmd.object(*rc, o.to, "to");
  cmd.report().bounds["bound"] = o.bound;
  auto sat = localize_hom(*rc, x, y, o.bound);
  cmd.report().witnesses.push_back(to_json(rc->cat(), sat));
  cmd.report().verdict = sat.verdict == Saturation::saturated ? Verdict::pass : Verdict::unknown;
}

void export_dot(Command& cmd) {
  const auto& o = cmd.options();
  auto rc = cmd.category();
  auto x = cmd.object(*rc, o.from, "from");
  auto y = cmd.object(*rc, o.to, "to");
  cmd.report().bounds["stage"] = o.stage;
  cmd.report().inputs["output"] = o.output;
  DotSummary summary;
  auto dot = stage_to_dot(*make_stage(rc, x, y, o.stage), &summary);
  std::ofstream file(o.output, std::ios::binary);
  file << dot;
  file.close();
  if (!file) throw InputError("cannot write " + o.output);
  Json j;
  j["nodes"] = summary.nodes;
  j["edges"] = summary.edges;
  cmd.report().witnesses.push_back(j);
}

// ---------------------------------------------------------------------------

void in_category(Command& cmd, const std::string& category) {
  if (!cmd.options().category.empty() && cmd.options().category != category) {
    throw InputError("the selected payload lives in category " + category);
  }
  cmd.report().inputs["category"] = category;
}

void verify_thm31_cmd(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = pick(m.homotopies, o.homotopy, "homotopy", [&](const std::string& n) {
    return o.category.empty() || m.homotopy_category.at(n) == o.category;
  });
  in_category(cmd, m.homotopy_category.at(name));
  auto rc = m.categories.at(m.homotopy_category.at(name));
  const auto& h = m.homotopies.at(name);
  cmd.report().inputs["homotopy"] = name;
  cmd.report().inputs["variant"] = o.pre ? "precompose" : "postcompose";
  cmd.report().bounds["max_stage"] = o.max_stage;
  const auto& c = rc->cat();
  // Post: stages L_n(X, A) for A the cylinder base; pre: L_n(B, Y).
  auto chosen = o.object.empty() ? o.x : o.object;
  if (!o.pre) {
    auto x = cmd.object(*rc, chosen.empty() ? c.object_name(h.cylinder.base) : chosen, "object");
    cmd.theorem(verify_thm31(rc, h, x, o.max_stage));
    return;
  }
  auto y = cmd.object(*rc, chosen.empty() ? c.object_name(c.target(h.f)) : chosen, "object");
  TheoremReport t{"thm31", Verdict::pass, {}, {}};
  if (auto v = validate_left_homotopy(*rc, h)) {
    t.add({"left homotopy data", Verdict::fail, to_string(*v)});
  } else {
    t.add({"left homotopy data", Verdict::pass, "H∘i0 = f, H∘i1 = g"});
    for (auto& check : verify_family(build_thm31_pre(rc, h, y, o.max_stage))) t.add(std::move(check));
  }
  cmd.theorem(t);
}

void verify_thm32_cmd(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = pick(m.nats, o.nat, "nat", [&](const std::string& n) {
    return o.category.empty() || m.nats.at(n).from.target->name() == o.category;
  });
  const auto& eta = m.nats.at(name);
  auto source = m.category(eta.from.source->name());
  auto target = m.category(eta.from.target->name());
  cmd.report().inputs["category"] = target->cat().name();
  cmd.report().inputs["nat"] = name;
  cmd.report().bounds["max_stage"] = o.max_stage;
  auto x = cmd.object_or_first(*source, o.x, "x");
  auto y = cmd.object_or_first(*source, o.y, "y");
  cmd.theorem(verify_thm32(TransformationInput{source, target, eta.from, eta.to, eta}, x, y, o.max_stage));
}

void verify_rmk33_cmd(Command& cmd) {
  const auto& o = cmd.options();
  auto rc = cmd.category();
  auto x = cmd.object_or_first(*rc, o.x, "x");
  auto y = cmd.object_or_first(*rc, o.y, "y");
  cmd.report().bounds["max_stage"] = o.max_stage;
  if (o.pos_i) cmd.report().inputs["pos_i"] = *o.pos_i;
  if (o.pos_j) cmd.report().inputs["pos_j"] = *o.pos_j;
  cmd.theorem(verify_rmk33(rc, x, y, o.max_stage, o.pos_i, o.pos_j));
}

std::string chosen_idem(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = pick(m.idems, o.idem, "idem", [&](const std::string& n) {
    return o.category.empty() || m.idem_category.at(n) == o.category;
  });
  in_category(cmd, m.idem_category.at(name));
  cmd.report().inputs["idem"] = name;
  return name;
}

void verify_lemma53_cmd(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = chosen_idem(cmd);
  auto rc = m.categories.at(m.idem_category.at(name));
  auto x = cmd.object_or_first(*rc, o.x, "x");
  auto y = cmd.object_or_first(*rc, o.y, "y");
  cmd.report().bounds["max_stage"] = o.max_stage;
  cmd.report().bounds["bound"] = o.bound;
  cmd.theorem(verify_lemma53(rc, m.idems.at(name), x, y, o.max_stage, o.bound));
}

void verify_prop52_cmd(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = chosen_idem(cmd);
  auto rc = m.categories.at(m.idem_category.at(name));
  auto g = cmd.morphism(*rc, o.morphism, "morphism");
  auto z = cmd.object_or_first(*rc, o.object, "object");
  cmd.report().bounds["max_stage"] = o.max_stage;
  cmd.report().bounds["bound"] = o.bound;
  cmd.theorem(check_prop52_pi0(rc, m.idems.at(name), g, z, o.max_stage, o.bound));
}

void verify_hoalg_cmd(Command& cmd) {
  const auto& o = cmd.options();
  const Model& m = cmd.model();
  auto name = pick(m.algebras, o.algebra, "algebra", [&](const std::string& n) {
    return o.category.empty() || m.algebra_category.at(n) == o.category;
  });
  in_category(cmd, m.algebra_category.at(name));
  auto rc = m.categories.at(m.algebra_category.at(name));
  cmd.report().inputs["algebra"] = name;
  auto f = cmd.morphism(*rc, o.morphism, "morphism");
  cmd.report().bounds["max_stage"] = o.max_stage;
  cmd.theorem(verify_hoalg_retract(rc, m.algebras.at(name), f, o.max_stage));
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, Options& o, bool dot = false) {
  sub->add_option("FILE", o.file, "Model file")->required();
  sub->add_option("--emit", o.emit, "Report format")
      ->check(dot ? CLI::IsMember({"text", "json", "dot"}) : CLI::IsMember({"text", "json"}));
  sub->add_flag("--no-timings", o.no_timings, "Omit timings from the report");
  sub->add_option("--category", o.category, "Category to use (default: the first declared)");
}

void add_endpoints(CLI::App* sub, Options& o) {
  sub->add_option("--from", o.from, "Source object")->required();
  sub->add_option("--to", o.to, "Target object")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hammock mapping spaces of finite categories with weak equivalences"};
  app.name("hammock");
  app.require_subcommand(1);
  app.footer("Exit codes: 0 PASS, 1 FAIL, 2 UNKNOWN/INCONCLUSIVE, 3 input error.\nDefaults: stage " +
             std::to_string(kDefaultStage) + ", word bound " + std::to_string(kDefaultBound) + ".");

  std::function<void(Command&)> body;
  std::string name;
  auto bind = [&](CLI::App* sub, std::string command, void (*fn)(Command&)) {
    sub->callback([&body, &name, command, fn] {
      name = command;
      body = fn;
    });
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a model file and every payload it declares");
  add_common(validate_cmd, o);
  validate_cmd->add_option("--bound", o.bound, "Word bound for localization checks")->capture_default_str();
  bind(validate_cmd, "validate", validate);

  auto* hom_cmd = app.add_subcommand("hom", "Enumerate one stage L_n(X,Y)");
  add_common(hom_cmd, o, true);
  add_endpoints(hom_cmd, o);
  hom_cmd->add_option("--stage", o.stage, "Odd stage n")->capture_default_str();
  bind(hom_cmd, "hom", hom);

  auto* pi0_cmd = app.add_subcommand("pi0", "Component tower of the stages up to --max-stage");
  add_common(pi0_cmd, o);
  add_endpoints(pi0_cmd, o);
  pi0_cmd->add_option("--max-stage", o.max_stage, "Largest odd stage")->capture_default_str();
  pi0_cmd->add_flag("--assume-model", o.assume_model, "Read the answer off stage 3");
  bind(pi0_cmd, "pi0", pi0);

  auto* oracle_cmd = app.add_subcommand("oracle", "Bounded localization of one hom-set");
  add_common(oracle_cmd, o);
  add_endpoints(oracle_cmd, o);
  oracle_cmd->add_option("--bound", o.bound, "Maximal word length")->capture_default_str();
  bind(oracle_cmd, "oracle", oracle);

  auto* dot_cmd = app.add_subcommand("export-dot", "Write a stage category as Graphviz");
  add_common(dot_cmd, o);
  add_endpoints(dot_cmd, o);
  dot_cmd->add_option("--stage", o.stage, "Odd stage n")->capture_default_str();
  dot_cmd->add_option("-o,--output", o.output, "Output path")->required();
  bind(dot_cmd, "export-dot", export_dot);

  auto* verify = app.add_subcommand("verify", "Build and check homotopy witnesses");
  verify->require_subcommand(1);
  auto verify_sub = [&](const char* sub_name, const char* help, void (*fn)(Command&)) {
    auto* sub = verify->add_subcommand(sub_name, help);
    add_common(sub, o);
    sub->add_option("--max-stage", o.max_stage, "Largest odd stage")->capture_default_str();
    bind(sub, std::string("verify ") + sub_name, fn);
    return sub;
  };
  auto* thm31 = verify_sub("thm31", "Homotopic maps induce homotopic maps of stages", verify_thm31_cmd);
  thm31->add_option("--object,--x", o.object, "Fixed end of the stages");
  thm31->add_option("--homotopy", o.homotopy, "Left homotopy to use");
  thm31->add_flag("--pre", o.pre, "Precomposition instead of postcomposition");
  auto* thm32 = verify_sub("thm32", "A transformation induces a homotopy of stages", verify_thm32_cmd);
  thm32->add_option("--x", o.x, "Source object (default: first)");
  thm32->add_option("--y", o.y, "Target object (default: first)");
  thm32->add_option("--nat", o.nat, "Transformation to use");
  auto* rmk33 = verify_sub("rmk33", "Identity insertions at different positions are homotopic", verify_rmk33_cmd);
  rmk33->add_option("--x", o.x, "Source object (default: first)");
  rmk33->add_option("--y", o.y, "Target object (default: first)");
  rmk33->add_option("--pos-i", o.pos_i, "First position (default: all)");
  rmk33->add_option("--pos-j", o.pos_j, "Second position (default: all)");
  auto* lemma53 = verify_sub("lemma53", "Homotopy idempotent functors on mapping spaces", verify_lemma53_cmd);
  lemma53->add_option("--x", o.x, "Source object (default: first)");
  lemma53->add_option("--y", o.y, "Target object (default: first)");
  lemma53->add_option("--idem", o.idem, "Idempotent to use");
  lemma53->add_option("--bound", o.bound, "Word bound")->capture_default_str();
  auto* hoalg = verify_sub("hoalg", "Mapping spaces into a homotopy algebra are retracts", verify_hoalg_cmd);
  hoalg->add_option("--morphism", o.morphism, "The map f")->required();
  hoalg->add_option("--algebra", o.algebra, "Algebra to use");
  auto* prop52 = verify_sub("prop52", "Orthogonality against LZ at the level of components", verify_prop52_cmd);
  prop52->add_option("--morphism", o.morphism, "The map g")->required();
  prop52->add_option("--object", o.object, "The object Z (default: first)");
  prop52->add_option("--idem", o.idem, "Idempotent to use");
  prop52->add_option("--bound", o.bound, "Word bound")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }
  if (o.stage % 2 == 0 || o.max_stage % 2 == 0) {
    err << "error: stages must be odd\n";
    return kExitInput;
  }
  Command cmd(name, o);
  return cmd.run(body, out, err);
}

}  // namespace hammock::cli
