// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "sgm/catalog.hpp"
#include "sgm/negami.hpp"
#include "sgm/recognize.hpp"

using namespace sgm;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

BinaryMatroid prefixed(const BinaryMatroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : m.labels()) labels.push_back(prefix + l);
  return BinaryMatroid(labels, m.representation());
}

const BinaryMatroid& obstruction(const std::string& name) {
  if (name == "M*(K3,3)") return bond_k33();
  if (name == "M*(K5)") return bond_k5();
  if (name == "M*(G17)") return bond_g17();
  return bond_g19();
}

bool replays(const BinaryMatroid& host, const MinorCertificate& cert) {
  return is_isomorphic(apply_witness(host, cert.witness), obstruction(cert.obstruction)).has_value();
}

// 1. Every cocircuit deletion of M*(K3,5) and M*(K44-) is graphic.
Outcome lemma31() {
  const Lemma31Result r = verify_lemma31();
  std::ostringstream d;
  bool ok = r.passed();
  for (const auto& [name, g, audit] : {std::tuple{"K3,5", g17(), r.g17}, std::tuple{"K44-", g19(), r.g19}}) {
    const BinaryMatroid m = bond_matroid(g);
    const std::size_t brute = oracle::cocircuits(m).size();
    // M*(G) \ Y is the bond matroid of G / Y, graphic exactly when G / Y is planar.
    std::size_t planar = 0;
    for (const auto& e : audit.ledger) planar += oracle::planar(contract_circle(g, e.cocircuit)) ? 1 : 0;
    ok = ok && audit.ledger.size() == brute && planar == brute;
    d << name << ": " << audit.ledger.size() << " cocircuits (brute force " << brute << "), " << planar
      << " planar contractions; ";
  }
  ok = ok && r.g17.ledger.size() == 90;
  return {ok, d.str()};
}

// 2. R15* and R16* each have a cocircuit whose deletion has a non-graphic minor.
Outcome thm34() {
  const Thm34Result r = verify_thm34();
  if (!r.passed()) return {false, "no witness cocircuit found"};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, m, entry] :
       {std::tuple{"R15*", dual(r15()), *r.r15_dual}, std::tuple{"R16*", dual(r16()), *r.r16_dual}}) {
    const Family cc = cocircuits(m);
    const bool is_cocircuit = std::find(cc.begin(), cc.end(), entry.cocircuit) != cc.end();
    const bool replayed = entry.verdict.certificate && replays(delete_set(m, entry.cocircuit), *entry.verdict.certificate);
    ok = ok && is_cocircuit && replayed;
    d << name << ": Y = {";
    for (const auto& l : m.labels_of(entry.cocircuit)) d << l << (l == m.labels_of(entry.cocircuit).back() ? "" : ",");
    d << "} -> " << (entry.verdict.certificate ? entry.verdict.certificate->obstruction : "?")
      << (replayed ? " (replayed)" : " (replay failed)") << "; ";
  }
  return {ok, d.str()};
}

std::vector<std::pair<std::string, BinaryMatroid>> catalog_matroids() {
  std::vector<std::pair<std::string, BinaryMatroid>> out;
  for (const std::string& name : catalog_names()) {
    const auto e = catalog_lookup(name);
    if (e->matroid) out.emplace_back(name, *e->matroid);
    if (e->graph) {
      out.emplace_back("M(" + name + ")", cycle_matroid(*e->graph));
      out.emplace_back("M*(" + name + ")", bond_matroid(*e->graph));
    }
  }
  return out;
}

// 3. M \ T = (M* / T)* and M / T = (M* \ T)* for |T| <= 2.
Outcome duality() {
  std::size_t checks = 0;
  for (const auto& [name, m] : catalog_matroids()) {
    const BinaryMatroid d = dual(m);
    std::vector<ElementSet> sets = {0};
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i; j < m.size(); ++j) sets.push_back(singleton(i) | singleton(j));
    for (ElementSet t : sets) {
      if (!same_circuits(delete_set(m, t), dual(contract_set(d, t))) ||
          !same_circuits(contract_set(m, t), dual(delete_set(d, t))))
        return {false, name + " fails for T = " + std::to_string(t)};
      checks += 2;
    }
  }
  return {true, std::to_string(checks) + " identities over " + std::to_string(catalog_matroids().size()) + " matroids"};
}

// 4. Circuit axioms for small catalog matroids and the signed corpus.
Outcome axioms() {
  std::size_t binary = 0, signed_count = 0;
  for (const auto& [name, m] : catalog_matroids()) {
    if (m.size() > 14) continue;
    if (!verify_axioms(to_circuit_matroid(m))) return {false, name};
    ++binary;
  }
  std::size_t handcuffs = 0;
  for (const auto& [name, s] : signed_corpus()) {
    const CircuitMatroid cm = signed_matroid(s);
    if (!verify_axioms(cm)) return {false, name};
    for (ElementSet c : cm.circuits)
      if (!is_circle(s.graph(), c)) ++handcuffs;
    ++signed_count;
  }
  const bool ok = signed_count >= 10 && handcuffs > 0;
  return {ok, std::to_string(binary) + " binary matroids, " + std::to_string(signed_count) +
                  " signed graphs with " + std::to_string(handcuffs) + " non-circle circuits"};
}

// 5. Inside both closures the three conditions hold exactly on family members.
Outcome families() {
  const FamilyVerification v = verify_family_theorems(7, 17);
  std::ostringstream d;
  d << v.members.size() << " members, closures " << v.l_closure_size << " + " << v.m_closure_size
    << " graphs, " << v.satisfying << " satisfying, " << v.counterexamples.size() << " counterexamples";
  return {v.passed(), d.str()};
}

// 6. End-to-end recognition on the four reference inputs.
Outcome end_to_end() {
  std::ostringstream d;
  const BinaryMatroid k35 = bond_matroid(complete_bipartite(3, 5));
  const BinaryMatroid k4 = bond_matroid(complete_graph(4));

  const RecognitionReport a = recognize_cographic(k35);
  const bool ok_a = a.decision == Decision::not_signed_graphic && a.flagged &&
                    a.components[*a.flagged].match == FamilyName{FamilyTag::K3n, 5};
  const RecognitionReport b = recognize_cographic(bond_matroid(wheel(5)));
  const bool ok_b = b.decision == Decision::signed_graphic;
  const RecognitionReport c = recognize_cographic(direct_sum(k35, prefixed(k4, "k")));
  const bool ok_c = c.decision == Decision::not_signed_graphic && c.flagged &&
                    same_circuits(c.components[*c.flagged].matroid, k35);
  const RecognitionReport e = recognize_cographic(two_sum(k4, prefixed(k4, "b"), "v1v2", "bv1v2"));
  const bool ok_d = e.decision == Decision::signed_graphic && e.components.size() == 2;
  d << "(a) " << to_string(a.decision) << (ok_a ? " ok" : " WRONG") << "; (b) " << to_string(b.decision)
    << (ok_b ? " ok" : " WRONG") << "; (c) " << to_string(c.decision) << (ok_c ? " ok" : " WRONG")
    << "; (d) " << to_string(e.decision) << (ok_d ? " ok" : " WRONG");
  return {ok_a && ok_b && ok_c && ok_d, d.str()};
}

// 7. Both recognition routes agree on every input meeting the precondition.
Outcome routes() {
  std::vector<std::pair<std::string, BinaryMatroid>> corpus;
  for (const auto& [name, m] : catalog_matroids())
    if (m.size() <= 18) corpus.emplace_back(name, m);
  for (const char* name : {"W3", "W4", "W6", "W7", "W8", "K3,4", "K3,6", "K2,5"})
    corpus.emplace_back(std::string("M*(") + name + ")", bond_matroid(*catalog_lookup(name)->graph));
  const BinaryMatroid k4 = bond_matroid(complete_graph(4));
  const BinaryMatroid k33 = bond_matroid(complete_bipartite(3, 3));
  corpus.emplace_back("M*(K4) + M*(K4)", direct_sum(k4, prefixed(k4, "b")));
  corpus.emplace_back("M*(K4) 2-sum M*(K4)", two_sum(k4, prefixed(k4, "b"), "v1v2", "bv1v2"));
  corpus.emplace_back("M*(K4) 2-sum M*(K3,3)", two_sum(k4, prefixed(k33, "b"), "v1v2", "ba1b1"));
  corpus.emplace_back("M*(W4) + M*(K4)", direct_sum(bond_matroid(wheel(4)), prefixed(k4, "b")));

  std::size_t compared = 0, signed_graphic = 0, skipped = 0;
  for (const auto& [name, m] : corpus) {
    RecognitionOptions opts;
    opts.check_preconditions = true;
    RecognitionReport r;
    try {
      r = recognize_cographic(m, opts);
    } catch (const PreconditionFailed&) {
      ++skipped;
      continue;
    }
    const bool route1 = r.decision == Decision::signed_graphic;
    const bool route2 = regular_signed_graphic_check(m, true).signed_graphic;
    if (route1 != route2) return {false, "routes disagree on " + name};
    ++compared;
    signed_graphic += route1 ? 1 : 0;
  }
  const bool ok = compared >= 15 && signed_graphic > 0 && signed_graphic < compared;
  return {ok, std::to_string(compared) + " inputs agree (" + std::to_string(signed_graphic) +
                  " signed-graphic), " + std::to_string(skipped) + " outside the precondition"};
}

// 8. realize_graph inverts cycle_matroid with the identity label map.
Outcome realize() {
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, g] : {std::pair{"K4", complete_graph(4)}, std::pair{"K3,5", complete_bipartite(3, 5)},
                                std::pair{"K44-", k44_minus_e()}, std::pair{"W5", wheel(5)}}) {
    const BinaryMatroid m = cycle_matroid(g);
    const Multigraph h = realize_graph(m);
    const bool same = h.edge_labels() == m.labels() && same_circuits(cycle_matroid(h), m);
    ok = ok && same;
    d << name << (same ? " ok; " : " FAILED; ");
  }
  return {ok, d.str()};
}

// 9. Built-in R15 / R16 agree byte for byte with the committed transcription.
Outcome golden() {
  std::ifstream in(SGM_GOLDEN_FILE);
  if (!in) return {false, "cannot open golden file"};
  std::map<std::string, std::vector<std::string>> blocks;
  std::string line, current;
  std::size_t expected_rows = 0, expected_cols = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == 'R') {
      std::istringstream head(line);
      head >> current >> expected_rows >> expected_cols;
      continue;
    }
    if (line.size() != expected_cols) return {false, current + ": row width mismatch"};
    blocks[current].push_back(line);
  }
  bool ok = blocks["R15"].size() == 7 && blocks["R16"].size() == 8;
  for (const auto& [name, rows, m] : {std::tuple{"R15", r15_rows(), r15()}, std::tuple{"R16", r16_rows(), r16()}}) {
    ok = ok && rows == blocks[name];
    const Gf2Matrix rep = m.representation();
    for (std::size_t r = 0; r < rep.rows(); ++r) ok = ok && r < rows.size() && rep.row_string(r) == rows[r];
  }
  return {ok, ok ? "R15 7x15 and R16 8x16 identical" : "mismatch against golden file"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cocircuit deletions of M*(K3,5), M*(K44-) graphic", lemma31},
      {"R15*/R16* non-graphic cocircuit deletions", thm34},
      {"duality identities |T| <= 2", duality},
      {"circuit axioms", axioms},
      {"family conditions inside closures", families},
      {"end-to-end recognition", end_to_end},
      {"route equivalence", routes},
      {"realization round trip", realize},
      {"golden R15/R16 matrices", golden},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " -- "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
