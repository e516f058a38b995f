// Command-line front end: Wagner measures, diameter, colors, the colorful
// FDFA, FDFA algebra, black&white automata, DOT export and the self-test
// property suites.  Machine-readable JSON goes to stdout, a short human
// summary to stderr.  Exit codes: 0 ok, 1 property violated (witness in
// the JSON), 2 input error, 3 capacity error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegacanon/blackwhite.hpp"
#include "omegacanon/colors.hpp"
#include "omegacanon/io.hpp"
#include "omegacanon/persistent.hpp"
#include "omegacanon/selftest.hpp"
#include "omegacanon/wagner.hpp"

using namespace omegacanon;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "json";
  int cap = 0;  // 0: defaults
  std::string out_file;
  std::string bounds;

  Limits limits() const {
    Limits l;
    if (cap > 0) l.subset_cap = cap;
    return l;
  }
};

void emit(const Options& opt, const ordered_json& result, const std::string& summary) {
  if (opt.format == "text")
    std::cout << summary << "\n";
  else
    std::cout << result.dump(2) << "\n";
  std::cerr << summary << "\n";
}

ordered_json upword_json(const UPWord& w, const Alphabet& sigma) {
  ordered_json j;
  j["u"] = sigma.format(w.spoke);
  j["v"] = sigma.format(w.cycle);
  return j;
}

UPWord word_from_flags(const Alphabet& sigma, const std::string& u, const std::string& v,
                       const std::string& word_file) {
  if (!word_file.empty()) return load_upword(read_file(word_file), sigma);
  return UPWord(sigma.parse(u), sigma.parse(v));
}

std::pair<int, int> parse_bounds(const std::string& text, std::pair<int, int> fallback) {
  if (text.empty()) return fallback;
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--bounds expects U,V");
  try {
    int u = std::stoi(text.substr(0, comma));
    int v = std::stoi(text.substr(comma + 1));
    if (u < 1 || v < 1) throw InputError("--bounds entries must be >= 1");
    return {u, v};
  } catch (const std::logic_error&) {
    throw InputError("--bounds expects integers U,V");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"omega-regular languages as families of DFAs: robust measures, "
               "natural colors, canonical acceptors"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format on stdout")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", opt.cap, "Subset enumeration capacity")->envname("OMEGACANON_CAP");
  app.add_option("--out", opt.out_file, "Write the produced document to FILE");
  app.add_option("--bounds", opt.bounds, "Search bounds U,V");

  std::string in1, in2, flag_u, flag_v, word_file, bw_kind, op;
  bool infinite = false, inject_bug = false;

  CLI::App* wagner = app.add_subcommand("wagner", "Inclusion measures and hierarchy class");
  wagner->add_option("automaton", in1)->required();

  CLI::App* diam = app.add_subcommand("diameter", "Diameter measure of an FDFA");
  diam->add_option("fdfa", in1)->required();

  CLI::App* colorful = app.add_subcommand("colorful", "Build the colorful FDFA");
  colorful->add_option("automaton", in1)->required();

  CLI::App* color = app.add_subcommand("color", "Natural color of a finite or infinite word");
  color->add_option("automaton", in1)->required();
  color->add_option("-u", flag_u, "Spoke (single-character symbols)");
  color->add_option("-v", flag_v, "Period (single-character symbols)");
  color->add_option("--word", word_file, "UPWord JSON file");
  color->add_flag("--infinite", infinite, "Color of u v^omega instead of the finite color");

  CLI::App* ops = app.add_subcommand("fdfa-ops", "complement|intersect|union|empty|universal|"
                                                 "contains|equiv on FDFA files");
  ops->add_option("op", op)->required()->check(
      CLI::IsMember({"complement", "intersect", "union", "empty", "universal", "contains",
                     "equiv"}));
  ops->add_option("fdfa1", in1)->required();
  ops->add_option("fdfa2", in2);

  CLI::App* acc = app.add_subcommand("accepts", "Membership of u v^omega in an FDFA or automaton");
  acc->add_option("file", in1)->required();
  acc->add_option("-u", flag_u, "Spoke");
  acc->add_option("-v", flag_v, "Period");
  acc->add_option("--word", word_file, "UPWord JSON file");

  CLI::App* bw = app.add_subcommand("bw", "Black&white DBA/DCA of a recognizable language");
  bw->add_option("kind", bw_kind)->required()->check(CLI::IsMember({"dba", "dca"}));
  bw->add_option("automaton", in1)->required();

  CLI::App* dot = app.add_subcommand("dot", "DOT export of an automaton or FDFA file");
  dot->add_option("file", in1)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_flag("--inject-bug", inject_bug,
                     "Run the saturation checker against the bundled unsaturated gadget");

  for (CLI::App* sub : {wagner, diam, colorful, color, ops, acc, bw, dot, selftest})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad command lines are input errors
  }
  Limits limits = opt.limits();

  if (wagner->parsed()) {
    OmegaAutomaton m = load_automaton(read_file(in1));
    WagnerMeasure wm = inclusion_measures(m, limits);
    HierarchyClass cls = classify(wm);
    ordered_json j;
    j["m_plus"] = wm.m_plus;
    j["m_minus"] = wm.m_minus;
    j["class"] = {{"k", cls.k}, {"polarity", to_string(cls.polarity)}};
    std::ostringstream s;
    s << "m+=" << wm.m_plus << " m-=" << wm.m_minus << " class=DM" << cls.k << "/"
      << to_string(cls.polarity);
    emit(opt, j, s.str());
    return 0;
  }

  if (diam->parsed()) {
    Fdfa f = load_fdfa(read_file(in1));
    DiameterMeasure d = diameter(f, limits);
    ordered_json j;
    j["d_plus"] = d.d_plus;
    j["d_minus"] = d.d_minus;
    std::ostringstream s;
    s << "d+=" << d.d_plus << " d-=" << d.d_minus;
    emit(opt, j, s.str());
    return 0;
  }

  if (colorful->parsed()) {
    OmegaAutomaton m = load_automaton(read_file(in1));
    ColorContext ctx = ColorContext::build(m, limits);
    ColorfulFdfa cf = build_colorful_fdfa(ctx);
    ordered_json j;
    j["leading_states"] = cf.fdfa.leading_states();
    ordered_json progress;
    for (int c = 0; c < cf.fdfa.leading_states(); ++c) {
      ordered_json p;
      p["states"] = cf.fdfa.progress[c].state_count();
      p["colors"] = cf.colors[c];
      p["mincolor"] = cf.class_mincolor[c];
      p["epsilon_state"] = cf.epsilon_state[c];
      progress[std::to_string(c)] = std::move(p);
    }
    j["progress"] = std::move(progress);
    j["fdfa"] = ordered_json::parse(save_fdfa(cf.fdfa));
    if (!opt.out_file.empty()) {
      write_file(opt.out_file, save_fdfa(cf.fdfa));
      write_file(opt.out_file + ".dot", colorful_to_dot(cf));
    }
    std::ostringstream s;
    s << "colorful FDFA: " << cf.fdfa.leading_states() << " leading state(s)";
    emit(opt, j, s.str());
    return 0;
  }

  if (color->parsed()) {
    OmegaAutomaton m = load_automaton(read_file(in1));
    ColorContext ctx = ColorContext::build(m, limits);
    UPWord w = word_from_flags(m.structure.alphabet(), flag_u, flag_v, word_file);
    ordered_json j;
    std::ostringstream s;
    if (infinite) {
      int c = ctx.infinite_color(w);
      j["color"] = c;
      s << "infinite color " << c;
    } else {
      Color c = ctx.finite_color(w.spoke, w.cycle);
      int clamped = ctx.finite_color_clamped(w.spoke, w.cycle);
      if (c.bottom)
        j["color"] = "-inf";
      else
        j["color"] = c.value;
      j["clamped"] = clamped;
      s << "finite color " << c.str() << " (clamped " << clamped << ")";
    }
    emit(opt, j, s.str());
    return 0;
  }

  if (ops->parsed()) {
    Fdfa f1 = load_fdfa(read_file(in1));
    const Alphabet sigma = f1.leading.alphabet();
    auto need_second = [&]() {
      if (in2.empty()) throw InputError("fdfa-ops " + op + " needs two FDFA files");
      return load_fdfa(read_file(in2));
    };
    ordered_json j;
    std::ostringstream s;
    int exit_code = 0;
    if (op == "complement" || op == "intersect" || op == "union") {
      Fdfa result = op == "complement" ? complement(f1)
                    : op == "intersect"
                        ? intersect(with_mode(f1, AcceptanceMode::DuoNormalized),
                                    with_mode(need_second(), AcceptanceMode::DuoNormalized))
                        : unite(with_mode(f1, AcceptanceMode::DuoNormalized),
                                with_mode(need_second(), AcceptanceMode::DuoNormalized));
      j["fdfa"] = ordered_json::parse(save_fdfa(result));
      if (!opt.out_file.empty()) write_file(opt.out_file, save_fdfa(result));
      s << op << ": " << result.leading_states() << " leading state(s)";
    } else if (op == "empty") {
      auto witness = is_empty(f1);
      j["empty"] = !witness.has_value();
      if (witness) j["witness"] = upword_json(*witness, sigma);
      s << (witness ? "nonempty" : "empty");
    } else if (op == "universal") {
      CheckResult r = is_universal(f1);
      j["universal"] = r.holds;
      if (r.witness) j["witness"] = upword_json(*r.witness, sigma);
      s << (r.holds ? "universal" : "not universal");
    } else if (op == "contains") {
      CheckResult r = contains(f1, need_second());
      j["contains"] = r.holds;
      if (r.witness) j["witness"] = upword_json(*r.witness, sigma);
      s << (r.holds ? "contains" : "containment fails");
      exit_code = r.holds ? 0 : 1;
    } else {  // equiv
      CheckResult r = equivalent(f1, need_second());
      j["equivalent"] = r.holds;
      if (r.witness) j["witness"] = upword_json(*r.witness, sigma);
      s << (r.holds ? "equivalent" : "not equivalent");
      exit_code = r.holds ? 0 : 1;
    }
    emit(opt, j, s.str());
    return exit_code;
  }

  if (acc->parsed()) {
    std::string text = read_file(in1);
    ordered_json j;
    bool result;
    Alphabet sigma({"a"});
    if (looks_like_fdfa(text)) {
      Fdfa f = load_fdfa(text);
      sigma = f.leading.alphabet();
      UPWord w = word_from_flags(sigma, flag_u, flag_v, word_file);
      result = accepts(f, w);
    } else {
      OmegaAutomaton m = load_automaton(text);
      sigma = m.structure.alphabet();
      UPWord w = word_from_flags(sigma, flag_u, flag_v, word_file);
      result = accepts_up(m, w);
    }
    j["accepts"] = result;
    emit(opt, j, result ? "accept" : "reject");
    return 0;
  }

  if (bw->parsed()) {
    OmegaAutomaton m = load_automaton(read_file(in1));
    ColorContext ctx = ColorContext::build(m, limits);
    ColorfulFdfa cf = build_colorful_fdfa(ctx);
    OmegaAutomaton result =
        bw_kind == "dba" ? black_white_dba(ctx, cf) : black_white_dca(ctx, cf);
    ordered_json j;
    j["kind"] = bw_kind;
    j["states"] = result.structure.state_count();
    j["automaton"] = ordered_json::parse(save_automaton(result));
    if (!opt.out_file.empty()) write_file(opt.out_file, save_automaton(result));
    std::ostringstream s;
    s << "black&white " << bw_kind << ": " << result.structure.state_count() << " states";
    emit(opt, j, s.str());
    return 0;
  }

  if (dot->parsed()) {
    std::string text = read_file(in1);
    std::string out = looks_like_fdfa(text) ? fdfa_to_dot(load_fdfa(text))
                                            : automaton_to_dot(load_automaton(text));
    if (!opt.out_file.empty())
      write_file(opt.out_file, out);
    else
      std::cout << out;
    std::cerr << "dot written\n";
    return 0;
  }

  if (selftest->parsed()) {
    auto [bu, bv] = parse_bounds(opt.bounds, {2, 5});
    SelftestBounds bounds;
    bounds.max_u = bu;
    bounds.max_v = bv;
    std::vector<Violation> violations =
        inject_bug ? run_injected_bug_check(bounds) : run_property_suites(bounds, limits);
    ordered_json j;
    j["violations"] = ordered_json::array();
    for (const Violation& v : violations) {
      ordered_json item;
      item["language"] = v.language;
      item["property"] = v.property;
      item["witness"] = v.witness;
      j["violations"].push_back(std::move(item));
    }
    std::ostringstream s;
    s << violations.size() << " violation(s)";
    emit(opt, j, s.str());
    return violations.empty() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
