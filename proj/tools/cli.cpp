#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sgm/catalog.hpp"
#include "sgm/negami.hpp"
#include "sgm/recognize.hpp"
#include "sgm/text_io.hpp"

namespace sgm::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "text";
  std::size_t element_bound = kDefaultElementBound;
  std::size_t edge_bound = kDefaultEdgeBound;
  [[nodiscard]] bool json_out() const { return format == "json"; }
  [[nodiscard]] MatroidLimits matroid() const { return {element_bound}; }
  [[nodiscard]] GraphLimits graph() const { return {edge_bound}; }
};

json family_json(const BinaryMatroid& m, const Family& f) {
  json out = json::array();
  for (ElementSet c : f) out.push_back(m.labels_of(c));
  return out;
}

json matroid_json(const BinaryMatroid& m) {
  const Gf2Matrix rep = m.representation();
  json rows = json::array();
  for (std::size_t r = 0; r < rep.rows(); ++r) rows.push_back(rep.row_string(r));
  return {{"labels", m.labels()}, {"rank", m.rank()}, {"rows", rows}};
}

json graph_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json ends = json::array();
    if (e.u >= 0) ends.push_back(g.vertex(e.u));
    if (e.v >= 0 && e.kind == EdgeKind::link) ends.push_back(g.vertex(e.v));
    edges.push_back({{"label", e.label}, {"kind", to_string(e.kind)}, {"ends", ends}});
  }
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

json witness_json(const BinaryMatroid& host, const BinaryMatroid& target, const MinorWitness& w) {
  json mapping = json::object();
  const ElementSet kept = host.ground() & ~w.deleted & ~w.contracted;
  const std::vector<std::size_t> survivors = members(kept);
  for (std::size_t i = 0; i < survivors.size(); ++i)
    mapping[host.label(survivors[i])] = target.label(w.mapping[i]);
  return {{"deleted", host.labels_of(w.deleted)},
          {"contracted", host.labels_of(w.contracted)},
          {"mapping", mapping}};
}

const BinaryMatroid& obstruction_matroid(const std::string& name) {
  if (name == "M*(K3,3)") return bond_k33();
  if (name == "M*(K5)") return bond_k5();
  if (name == "M*(G17)") return bond_g17();
  return bond_g19();
}

json certificate_json(const BinaryMatroid& host, const std::optional<MinorCertificate>& c) {
  if (!c) return nullptr;
  return {{"obstruction", c->obstruction},
          {"witness", witness_json(host, obstruction_matroid(c->obstruction), c->witness)}};
}

json family_name_json(const std::optional<FamilyName>& f) {
  if (!f) return nullptr;
  return {{"name", to_string(*f)}, {"tag", to_string(f->tag)}, {"n", f->n}};
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string set_text(const std::vector<std::string>& v) { return "{" + join(v, ",") + "}"; }

BinaryMatroid load_matroid(const std::string& path) {
  LabeledMatrix m = read_matrix_file(path);
  return BinaryMatroid(std::move(m.labels), m.matrix);
}

Multigraph load_graph_or_catalog(const std::string& source) {
  if (std::filesystem::exists(source)) return read_graph_file(source);
  auto entry = catalog_lookup(source);
  if (!entry || !entry->graph) throw UsageError("'" + source + "' is neither a graph file nor a catalog graph");
  return *entry->graph;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// --- verbs --------------------------------------------------------------

int cmd_rank(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  if (s.json_out())
    emit(out, {{"rank", m.rank()}, {"elements", m.size()}});
  else
    out << m.rank() << '\n';
  return kExitOk;
}

int cmd_family(const Settings& s, const std::string& path, bool co, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  const Family f = co ? cocircuits(m, s.matroid()) : circuits(m, s.matroid());
  if (s.json_out()) {
    emit(out, {{co ? "cocircuits" : "circuits", family_json(m, f)}});
  } else {
    for (ElementSet c : f) out << join(m.labels_of(c)) << '\n';
  }
  return kExitOk;
}

int cmd_dual(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid d = dual(load_matroid(path));
  if (s.json_out())
    emit(out, matroid_json(d));
  else
    write_matroid(out, d);
  return kExitOk;
}

int cmd_minor(const Settings& s, const std::string& host_path, const std::string& target_path,
              std::ostream& out) {
  const BinaryMatroid m = load_matroid(host_path);
  const BinaryMatroid n = load_matroid(target_path);
  const auto w = has_minor(m, n, s.matroid());
  if (s.json_out()) {
    json j = {{"minor", w.has_value()}};
    j["witness"] = w ? witness_json(m, n, *w) : json(nullptr);
    emit(out, j);
  } else if (w) {
    out << "minor found: contract " << set_text(m.labels_of(w->contracted)) << ", delete "
        << set_text(m.labels_of(w->deleted)) << '\n';
  } else {
    out << "no minor\n";
  }
  return kExitOk;
}

int cmd_connectivity(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  const auto k = connectivity(m, s.matroid());
  std::optional<Separation> sep;
  if (k) {
    auto seps = k_separations(m, *k, s.matroid());
    if (!seps.empty()) sep = seps.front();
  }
  if (s.json_out()) {
    json j = {{"connectivity", k ? json(*k) : json("infinite")}};
    j["separation"] = sep ? json{{"x", m.labels_of(sep->side_x)}, {"y", m.labels_of(sep->side_y)}}
                          : json(nullptr);
    emit(out, j);
  } else {
    out << (k ? std::to_string(*k) : std::string("infinite")) << '\n';
    if (sep)
      out << "separation " << set_text(m.labels_of(sep->side_x)) << " "
          << set_text(m.labels_of(sep->side_y)) << '\n';
  }
  return kExitOk;
}

int cmd_graphic(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  const GraphicVerdict v = is_graphic(m, s.matroid());
  if (s.json_out()) {
    emit(out, {{"graphic", v.graphic}, {"certificate", certificate_json(m, v.certificate)}});
  } else {
    out << (v.graphic ? "graphic" : "not graphic") << '\n';
    if (v.certificate) out << "minor " << v.certificate->obstruction << '\n';
  }
  return kExitOk;
}

int cmd_audit(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  const CocircuitAudit audit = has_graphic_cocircuits(m, false, s.matroid());
  if (s.json_out()) {
    json ledger = json::array();
    for (const auto& e : audit.ledger) {
      const BinaryMatroid rest = delete_set(m, e.cocircuit);
      ledger.push_back({{"cocircuit", m.labels_of(e.cocircuit)},
                        {"graphic", e.verdict.graphic},
                        {"certificate", certificate_json(rest, e.verdict.certificate)}});
    }
    emit(out, {{"all_graphic", audit.all_graphic}, {"ledger", ledger}});
  } else {
    for (const auto& e : audit.ledger) {
      out << set_text(m.labels_of(e.cocircuit)) << ' ' << (e.verdict.graphic ? "graphic" : "not-graphic");
      if (e.verdict.certificate) out << ' ' << e.verdict.certificate->obstruction;
      out << '\n';
    }
    out << (audit.all_graphic ? "all cocircuits graphic" : "some cocircuit is not graphic") << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Settings& s, const std::string& path, std::ostream& out) {
  const BinaryMatroid m = load_matroid(path);
  const std::vector<BinaryMatroid> pieces = decompose_1_2_sums(m, s.matroid());
  if (s.json_out()) {
    json arr = json::array();
    for (const auto& p : pieces) arr.push_back(matroid_json(p));
    emit(out, {{"components", arr}});
  } else {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) out << '\n';
      write_matroid(out, pieces[i]);
    }
  }
  return kExitOk;
}

int cmd_realize(const Settings& s, const std::string& path, std::ostream& out) {
  const Multigraph g = realize_graph(load_matroid(path), s.matroid());
  if (s.json_out())
    emit(out, graph_json(g));
  else
    write_graph(out, g);
  return kExitOk;
}

int cmd_recognize(const Settings& s, const std::string& path, bool graph_input, bool check,
                  std::ostream& out) {
  const BinaryMatroid m = graph_input ? bond_matroid(read_graph_file(path)) : load_matroid(path);
  RecognitionOptions options;
  options.check_preconditions = check;
  options.limits = s.matroid();
  const RecognitionReport r = recognize_cographic(m, options);
  if (s.json_out()) {
    json comps = json::array();
    for (const auto& c : r.components)
      comps.push_back({{"elements", c.matroid.labels()},
                       {"rank", c.matroid.rank()},
                       {"graph", graph_json(c.graph)},
                       {"match", family_name_json(c.match)}});
    json witness = nullptr;
    if (r.flagged)
      witness = {{"component", *r.flagged}, {"family", family_name_json(r.components[*r.flagged].match)}};
    emit(out, {{"decision", to_string(r.decision)},
               {"precondition_checked", r.precondition_checked},
               {"components", comps},
               {"witness", witness}});
  } else {
    out << to_string(r.decision) << '\n';
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const auto& c = r.components[i];
      out << "component " << i << ": " << c.matroid.size() << " elements, rank " << c.matroid.rank()
          << ", graph " << c.graph.vertex_count() << "v/" << c.graph.edge_count() << "e, match "
          << (c.match ? to_string(*c.match) : std::string("none")) << '\n';
    }
  }
  return kExitOk;
}

int cmd_catalog(const Settings& s, const std::string& name, std::ostream& out) {
  auto entry = catalog_lookup(name);
  if (!entry) throw UsageError("unknown catalog name '" + name + "'");
  if (s.json_out()) {
    json j = {{"name", entry->name}};
    if (entry->graph) j["graph"] = graph_json(*entry->graph);
    if (entry->matroid) j["matroid"] = matroid_json(*entry->matroid);
    if (entry->signed_graph) {
      j["graph"] = graph_json(entry->signed_graph->graph());
      j["signs"] = entry->signed_graph->signs();
    }
    emit(out, j);
  } else if (entry->graph) {
    write_graph(out, *entry->graph);
  } else if (entry->matroid) {
    write_matroid(out, *entry->matroid);
  } else {
    write_signed_graph(out, *entry->signed_graph);
  }
  return kExitOk;
}

json step_json(const ExtensionStep& st) {
  json j = {{"op", to_string(st.kind)}, {"u", st.u}, {"v", st.v}, {"edge", st.edge}};
  if (st.kind == Operation::O2) {
    j["part1"] = st.part1;
    j["part2"] = st.part2;
  }
  return j;
}

int cmd_closure(const Settings& s, const std::string& seed, std::size_t max_edges,
                const std::string& out_dir, std::ostream& out) {
  const Multigraph h = load_graph_or_catalog(seed);
  const std::vector<ClosureEntry> closure = negami_closure(h, max_edges);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  json graphs = json::array();
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const Multigraph& g = closure[i].graph;
    std::ostringstream name;
    name << "g" << std::setw(4) << std::setfill('0') << i << ".graph";
    json chain = json::array();
    for (const auto& st : provenance(closure, i)) chain.push_back(step_json(st));
    json entry = {{"index", i},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"parent", closure[i].parent ? json(*closure[i].parent) : json(nullptr)},
                  {"provenance", chain},
                  {"family", family_name_json(family_membership(g))}};
    if (!out_dir.empty()) {
      const auto file = std::filesystem::path(out_dir) / name.str();
      std::ofstream f(file);
      if (!f) throw Error("cannot write '" + file.string() + "'");
      write_graph(f, g);
      entry["file"] = name.str();
    }
    graphs.push_back(entry);
  }
  if (s.json_out() || !out_dir.empty()) {
    json manifest = {{"seed", seed}, {"max_edges", max_edges}, {"graphs", graphs}};
    if (!out_dir.empty()) {
      std::ofstream f(std::filesystem::path(out_dir) / "manifest.json");
      f << manifest.dump(2) << '\n';
    }
    if (s.json_out()) emit(out, manifest);
  }
  if (!s.json_out()) {
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const auto fam = family_membership(closure[i].graph);
      out << i << ": " << closure[i].graph.vertex_count() << "v/" << closure[i].graph.edge_count() << "e";
      if (closure[i].parent) out << " from " << *closure[i].parent << " by " << to_string(closure[i].step->kind);
      if (fam) out << " [" << to_string(*fam) << "]";
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Settings& s, const std::string& which, int n_max, std::size_t edge_budget,
               std::ostream& out) {
  bool passed = false;
  json j;
  std::string line;
  if (which == "lemma31") {
    const Lemma31Result r = verify_lemma31(s.matroid());
    passed = r.passed();
    j = {{"g17_cocircuits", r.g17.ledger.size()}, {"g19_cocircuits", r.g19.ledger.size()}};
    line = passed ? "PASS: all cocircuit deletions graphic for M*(G17), M*(G19)"
                  : "FAIL: a cocircuit deletion of M*(G17) or M*(G19) is not graphic";
  } else if (which == "thm34") {
    const Thm34Result r = verify_thm34(s.matroid());
    passed = r.passed();
    auto entry_json = [&](const BinaryMatroid& m, const std::optional<CocircuitEntry>& e) -> json {
      if (!e) return nullptr;
      return {{"cocircuit", m.labels_of(e->cocircuit)},
              {"certificate", certificate_json(delete_set(m, e->cocircuit), e->verdict.certificate)}};
    };
    j = {{"r15_dual", entry_json(dual(r15()), r.r15_dual)}, {"r16_dual", entry_json(dual(r16()), r.r16_dual)}};
    line = passed ? "PASS: R15* and R16* each have a cocircuit with a non-graphic deletion"
                  : "FAIL: no non-graphic cocircuit deletion found for R15* or R16*";
  } else {
    const FamilyVerification r = verify_family_theorems(n_max, edge_budget);
    passed = r.passed();
    json cex = json::array();
    for (const auto& c : r.counterexamples) cex.push_back({{"name", c.name}, {"graph", graph_json(c.graph)}});
    json members = json::array();
    for (const auto& c : r.members)
      members.push_back({{"name", c.name},
                         {"three_connected", c.conditions.three_connected},
                         {"minor", c.conditions.g17_or_g19_minor},
                         {"contraction", c.conditions.contraction_condition}});
    j = {{"members", members},
         {"l_closure", r.l_closure_size},
         {"m_closure", r.m_closure_size},
         {"satisfying", r.satisfying},
         {"counterexamples", cex}};
    line = passed ? "PASS: family conditions hold exactly on family members (" +
                        std::to_string(r.l_closure_size + r.m_closure_size) + " closure graphs)"
                  : "FAIL: " + std::to_string(r.counterexamples.size()) + " counterexample(s)";
  }
  if (s.json_out()) {
    j["check"] = which;
    j["passed"] = passed;
    emit(out, j);
  } else {
    out << line << '\n';
  }
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed-graphic recognition for cographic matroids"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--element-bound", s.element_bound, "Largest ground set for exhaustive matroid searches")
      ->capture_default_str();
  app.add_option("--edge-bound", s.edge_bound, "Largest edge count for exhaustive graph searches")
      ->capture_default_str();

  std::string path;
  std::string second;
  auto matrix_verb = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("matrix", path, "Matrix file")->required();
    return sub;
  };
  CLI::App* rank_cmd = matrix_verb("rank", "GF(2) rank of the matrix");
  CLI::App* circuits_cmd = matrix_verb("circuits", "All circuits");
  CLI::App* cocircuits_cmd = matrix_verb("cocircuits", "All cocircuits");
  CLI::App* dual_cmd = matrix_verb("dual", "Dual matroid as a matrix");
  CLI::App* minor_cmd = app.add_subcommand("minor-test", "Search for N as a minor of M");
  minor_cmd->add_option("M", path, "Host matrix file")->required();
  minor_cmd->add_option("N", second, "Target matrix file")->required();
  CLI::App* conn_cmd = matrix_verb("connectivity", "Matroid connectivity and a witness separation");
  CLI::App* graphic_cmd = matrix_verb("graphic-test", "Graphicness of a regular matroid");
  CLI::App* audit_cmd = matrix_verb("cocircuit-audit", "Graphicness of every cocircuit deletion");
  CLI::App* decompose_cmd = matrix_verb("decompose", "3-connected pieces under 1- and 2-sums");
  CLI::App* realize_cmd = matrix_verb("realize", "Graph realizing a 3-connected graphic matroid");

  CLI::App* recognize_cmd = app.add_subcommand("recognize", "Decide whether a cographic matroid is signed-graphic");
  bool check = false;
  bool graph_input = false;
  recognize_cmd->add_option("input", path, "Matrix file, or graph file with --graph")->required();
  recognize_cmd->add_flag("--check-preconditions", check, "Verify cographicness and graphic cocircuits first");
  recognize_cmd->add_flag("--graph", graph_input, "Input is a graph; recognize its bond matroid");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Export a named instance");
  catalog_cmd->add_option("name", path, "Catalog name")->required();

  CLI::App* closure_cmd = app.add_subcommand("negami-closure", "Closure of a seed graph under O1/O2");
  std::size_t max_edges = 0;
  std::string out_dir;
  closure_cmd->add_option("seed", path, "Graph file or catalog graph name")->required();
  closure_cmd->add_option("--max-edges", max_edges, "Edge budget")->required();
  closure_cmd->add_option("--out-dir", out_dir, "Directory for graph files and manifest.json");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification harness");
  int n_max = 6;
  std::size_t edge_budget = 17;
  verify_cmd->add_option("check", path, "lemma31, thm34 or families")
      ->required()
      ->check(CLI::IsMember({"lemma31", "thm34", "families"}));
  verify_cmd->add_option("--n-max", n_max, "Largest n for K3,n family members")->capture_default_str();
  verify_cmd->add_option("--edge-budget", edge_budget, "Closure edge budget")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(s, path, out);
    if (circuits_cmd->parsed()) return cmd_family(s, path, false, out);
    if (cocircuits_cmd->parsed()) return cmd_family(s, path, true, out);
    if (dual_cmd->parsed()) return cmd_dual(s, path, out);
    if (minor_cmd->parsed()) return cmd_minor(s, path, second, out);
    if (conn_cmd->parsed()) return cmd_connectivity(s, path, out);
    if (graphic_cmd->parsed()) return cmd_graphic(s, path, out);
    if (audit_cmd->parsed()) return cmd_audit(s, path, out);
    if (decompose_cmd->parsed()) return cmd_decompose(s, path, out);
    if (realize_cmd->parsed()) return cmd_realize(s, path, out);
    if (recognize_cmd->parsed()) return cmd_recognize(s, path, graph_input, check, out);
    if (catalog_cmd->parsed()) return cmd_catalog(s, path, out);
    if (closure_cmd->parsed()) return cmd_closure(s, path, max_edges, out_dir, out);
    if (verify_cmd->parsed()) return cmd_verify(s, path, n_max, edge_budget, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: bound exceeded: " << e.what() << '\n';
    return kExitFailure;
  } catch (const PreconditionFailed& e) {
    err << "error: precondition failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const UnknownLabel& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sgm::cli
