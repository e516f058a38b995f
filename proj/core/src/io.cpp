#include "omegacanon/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace omegacanon {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON document");
  return j;
}

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field must be an integer: ") + key);
  return v.get<int>();
}

Alphabet load_alphabet(const ordered_json& j) {
  const ordered_json& arr = field(j, "alphabet");
  if (!arr.is_array() || arr.empty()) throw InputError("alphabet must be a nonempty array");
  std::vector<std::string> symbols;
  for (const auto& s : arr) {
    if (!s.is_string()) throw InputError("alphabet symbols must be strings");
    symbols.push_back(s.get<std::string>());
  }
  return Alphabet(std::move(symbols));
}

std::vector<std::vector<State>> load_delta(const ordered_json& j, int states, int sigma) {
  const ordered_json& rows = field(j, "delta");
  if (!rows.is_array() || static_cast<int>(rows.size()) != states)
    throw InputError("delta must have one row per state");
  std::vector<std::vector<State>> delta(states);
  for (int q = 0; q < states; ++q) {
    const auto& row = rows.at(q);
    if (!row.is_array() || static_cast<int>(row.size()) != sigma)
      throw InputError("delta row length must equal the alphabet size");
    for (const auto& t : row) {
      if (!t.is_number_integer()) throw InputError("delta entries must be integers");
      delta[q].push_back(t.get<State>());
    }
  }
  return delta;
}

AutomatonStructure load_structure(const ordered_json& j, const Alphabet& sigma) {
  int states = int_field(j, "states");
  int initial = int_field(j, "initial");
  return AutomatonStructure(sigma, states, initial, load_delta(j, states, sigma.size()));
}

ordered_json save_structure(const AutomatonStructure& s, bool with_alphabet) {
  ordered_json j;
  if (with_alphabet) j["alphabet"] = s.alphabet().symbols();
  j["states"] = s.state_count();
  j["initial"] = s.initial();
  ordered_json rows = ordered_json::array();
  for (State q = 0; q < s.state_count(); ++q) {
    ordered_json row = ordered_json::array();
    for (Symbol a = 0; a < s.alphabet().size(); ++a) row.push_back(s.step(q, a));
    rows.push_back(std::move(row));
  }
  j["delta"] = std::move(rows);
  return j;
}

std::vector<State> load_state_list(const ordered_json& arr) {
  if (!arr.is_array()) throw InputError("expected an array of states");
  std::vector<State> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw InputError("states must be integers");
    out.push_back(v.get<State>());
  }
  return out;
}

}  // namespace

std::string save_automaton(const OmegaAutomaton& m) {
  ordered_json j = save_structure(m.structure, true);
  ordered_json acc;
  acc["kind"] = to_string(m.acceptance.kind);
  switch (m.acceptance.kind) {
    case AcceptanceKind::Buchi:
    case AcceptanceKind::CoBuchi: {
      ordered_json data = ordered_json::array();
      for (State q = 0; q < m.structure.state_count(); ++q)
        if (m.acceptance.set[q]) data.push_back(q);
      acc["data"] = std::move(data);
      break;
    }
    case AcceptanceKind::Parity:
      acc["data"] = m.acceptance.colors;
      break;
    case AcceptanceKind::Muller: {
      ordered_json data = ordered_json::array();
      for (const auto& f : m.acceptance.alpha) data.push_back(f);
      acc["data"] = std::move(data);
      break;
    }
  }
  j["acceptance"] = std::move(acc);
  return j.dump(2) + "\n";
}

OmegaAutomaton load_automaton(const std::string& json_text) {
  ordered_json j = parse(json_text);
  Alphabet sigma = load_alphabet(j);
  AutomatonStructure s = load_structure(j, sigma);
  const ordered_json& acc = field(j, "acceptance");
  const ordered_json& kind = field(acc, "kind");
  if (!kind.is_string()) throw InputError("acceptance kind must be a string");
  std::string k = kind.get<std::string>();
  const ordered_json& data = field(acc, "data");
  int n = s.state_count();
  if (k == "buchi") return OmegaAutomaton(s, OmegaAcceptance::buchi(load_state_list(data), n));
  if (k == "cobuchi") return OmegaAutomaton(s, OmegaAcceptance::cobuchi(load_state_list(data), n));
  if (k == "parity") {
    std::vector<int> colors = load_state_list(data);
    if (static_cast<int>(colors.size()) != n)
      throw InputError("parity data must list one color per state");
    return OmegaAutomaton(s, OmegaAcceptance::parity(std::move(colors)));
  }
  if (k == "muller") {
    if (!data.is_array()) throw InputError("muller data must be an array of state sets");
    std::vector<std::vector<State>> alpha;
    for (const auto& f : data) alpha.push_back(load_state_list(f));
    return OmegaAutomaton(s, OmegaAcceptance::muller(std::move(alpha), n));
  }
  throw InputError("unknown acceptance kind: " + k);
}

std::string save_fdfa(const Fdfa& f) {
  ordered_json j;
  j["leading"] = save_structure(f.leading, true);
  ordered_json prog;
  for (int q = 0; q < f.leading_states(); ++q) {
    ordered_json p = save_structure(f.progress[q].structure, false);
    ordered_json acc = ordered_json::array();
    for (State s = 0; s < f.progress[q].state_count(); ++s)
      if (f.progress[q].accepting[s]) acc.push_back(s);
    p["accepting"] = std::move(acc);
    prog[std::to_string(q)] = std::move(p);
  }
  j["progress"] = std::move(prog);
  j["mode"] = to_string(f.mode);
  return j.dump(2) + "\n";
}

Fdfa load_fdfa(const std::string& json_text) {
  ordered_json j = parse(json_text);
  const ordered_json& lead_j = field(j, "leading");
  Alphabet sigma = load_alphabet(lead_j);
  AutomatonStructure leading = load_structure(lead_j, sigma);
  const ordered_json& prog_j = field(j, "progress");
  if (!prog_j.is_object()) throw InputError("progress must map leading states to DFAs");
  std::vector<Dfa> progress;
  for (int q = 0; q < leading.state_count(); ++q) {
    std::string key = std::to_string(q);
    if (!prog_j.contains(key))
      throw InputError("progress is missing leading state " + key);
    const ordered_json& p = prog_j.at(key);
    AutomatonStructure s = load_structure(p, sigma);
    std::vector<bool> acc(s.state_count(), false);
    for (State a : load_state_list(field(p, "accepting"))) {
      if (a < 0 || a >= s.state_count()) throw InputError("accepting state out of range");
      acc[a] = true;
    }
    progress.emplace_back(std::move(s), std::move(acc));
  }
  const ordered_json& mode_j = field(j, "mode");
  if (!mode_j.is_string()) throw InputError("mode must be a string");
  std::string mode = mode_j.get<std::string>();
  AcceptanceMode m;
  if (mode == "exact")
    m = AcceptanceMode::Exact;
  else if (mode == "normalized")
    m = AcceptanceMode::Normalized;
  else if (mode == "duo")
    m = AcceptanceMode::DuoNormalized;
  else
    throw InputError("unknown mode: " + mode);
  return Fdfa(std::move(leading), std::move(progress), m);
}

std::string save_upword(const UPWord& w, const Alphabet& sigma) {
  ordered_json j;
  j["u"] = sigma.format(w.spoke);
  j["v"] = sigma.format(w.cycle);
  return j.dump(2) + "\n";
}

UPWord load_upword(const std::string& json_text, const Alphabet& sigma) {
  ordered_json j = parse(json_text);
  const ordered_json& u = field(j, "u");
  const ordered_json& v = field(j, "v");
  if (!u.is_string() || !v.is_string()) throw InputError("upword fields must be strings");
  return UPWord(sigma.parse(u.get<std::string>()), sigma.parse(v.get<std::string>()));
}

bool looks_like_fdfa(const std::string& json_text) {
  ordered_json j = parse(json_text);
  return j.is_object() && j.contains("leading");
}

namespace {

void dot_structure(std::ostringstream& out, const AutomatonStructure& s, const std::string& prefix,
                   const std::vector<std::string>& labels, const std::vector<bool>& doubled) {
  out << "  " << prefix << "init [shape=point, label=\"\"];\n";
  for (State q = 0; q < s.state_count(); ++q) {
    out << "  " << prefix << q << " [shape=" << (doubled[q] ? "doublecircle" : "circle")
        << ", label=\"" << labels[q] << "\"];\n";
  }
  out << "  " << prefix << "init -> " << prefix << s.initial() << ";\n";
  for (State q = 0; q < s.state_count(); ++q) {
    // merge parallel edges into one label
    std::map<State, std::string> edges;
    for (Symbol a = 0; a < s.alphabet().size(); ++a) {
      State t = s.step(q, a);
      if (!edges[t].empty()) edges[t] += ",";
      edges[t] += s.alphabet().name(a);
    }
    for (const auto& [t, label] : edges)
      out << "  " << prefix << q << " -> " << prefix << t << " [label=\"" << label << "\"];\n";
  }
}

std::vector<std::string> plain_labels(int n) {
  std::vector<std::string> out(n);
  for (int q = 0; q < n; ++q) out[q] = std::to_string(q);
  return out;
}

}  // namespace

std::string automaton_to_dot(const OmegaAutomaton& m) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  int n = m.structure.state_count();
  std::vector<std::string> labels = plain_labels(n);
  std::vector<bool> doubled(n, false);
  switch (m.acceptance.kind) {
    case AcceptanceKind::Buchi:
    case AcceptanceKind::CoBuchi:
      for (State q = 0; q < n; ++q) doubled[q] = m.acceptance.set[q];
      break;
    case AcceptanceKind::Parity:
      for (State q = 0; q < n; ++q) labels[q] += ":" + std::to_string(m.acceptance.colors[q]);
      break;
    case AcceptanceKind::Muller:
      break;
  }
  dot_structure(out, m.structure, "q", labels, doubled);
  if (m.acceptance.kind == AcceptanceKind::Muller) {
    out << "  alpha [shape=note, label=\"alpha:";
    for (const auto& f : m.acceptance.alpha) {
      out << " {";
      for (size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << "}";
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string fdfa_dot(const Fdfa& f, const std::vector<std::vector<int>>* colors) {
  std::ostringstream out;
  out << "digraph fdfa {\n  rankdir=LR;\n";
  out << "  subgraph cluster_leading {\n    label=\"leading\";\n";
  {
    std::ostringstream inner;
    dot_structure(inner, f.leading, "L", plain_labels(f.leading_states()),
                  std::vector<bool>(f.leading_states(), false));
    std::istringstream lines(inner.str());
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  out << "  }\n";
  for (int q = 0; q < f.leading_states(); ++q) {
    out << "  subgraph cluster_progress_" << q << " {\n    label=\"progress " << q << "\";\n";
    const Dfa& p = f.progress[q];
    std::vector<std::string> labels = plain_labels(p.state_count());
    if (colors)
      for (State s = 0; s < p.state_count(); ++s)
        labels[s] += ":" + std::to_string((*colors)[q][s]);
    std::ostringstream inner;
    dot_structure(inner, p.structure, "P" + std::to_string(q) + "_", labels, p.accepting);
    std::istringstream lines(inner.str());
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string fdfa_to_dot(const Fdfa& f) { return fdfa_dot(f, nullptr); }

std::string colorful_to_dot(const ColorfulFdfa& f) { return fdfa_dot(f.fdfa, &f.colors); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace omegacanon
