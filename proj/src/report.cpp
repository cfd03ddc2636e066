#include "hg/report.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hg/errors.hpp"
#include "hg/gp.hpp"
#include "hg/group_algebra.hpp"

namespace hg {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- helpers

std::string gens_string(const std::vector<Perm>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].cycle_string();
  }
  return out + ">";
}

json cycles_json(const std::vector<Perm>& perms) {
  json arr = json::array();
  for (const Perm& p : perms) arr.push_back(p.cycle_string());
  return arr;
}

struct Assertions {
  std::vector<std::pair<std::string, bool>> list;
  bool all = true;
  std::string first_failure;

  void check(const std::string& name, bool pass) {
    list.push_back({name, pass});
    if (!pass && all) {
      all = false;
      first_failure = name;
    }
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& [name, pass] : list) arr.push_back(json{{"name", name}, {"pass", pass}});
    return arr;
  }
};

// padded table rendering
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line = "  ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

// --------------------------------------------------- pipeline aggregation

struct GeneratorColumn {
  std::string name;
  Perm perm;
  const HGStructure* owner;
};

struct ActionTable {
  std::vector<std::string> row_names;
  std::vector<Perm> row_gens;  // generators of G
  std::vector<GeneratorColumn> columns;
  std::vector<std::vector<std::string>> entries;  // [row][column]
};

ActionTable build_action_table(const GPContext& ctx, const std::vector<HGStructure>& structures) {
  ActionTable table;
  const auto& gens = ctx.G.generators();
  const bool paper_names = gens.size() == 2 && gens[0].cycle_string() == "(1,2,3,4)" &&
                           gens[1].cycle_string() == "(1,2)";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    table.row_gens.push_back(gens[i]);
    if (paper_names)
      table.row_names.push_back(i == 0 ? "tau" : "sigma");
    else
      table.row_names.push_back(gens[i].cycle_string());
  }
  for (const HGStructure& s : structures)
    for (const auto& [name, perm] : s.basis) {
      bool dup = std::any_of(table.columns.begin(), table.columns.end(), [&](const GeneratorColumn& c) {
        return c.name == name && c.perm == perm;
      });
      if (!dup) table.columns.push_back({name, perm, &s});
    }
  // qualify headers when distinct columns share a bare name
  std::map<std::string, int> name_count;
  for (const GeneratorColumn& c : table.columns) ++name_count[c.name];
  for (GeneratorColumn& c : table.columns)
    if (name_count[c.name] > 1) c.name = c.owner->label + "." + c.name;
  for (std::size_t r = 0; r < table.row_gens.size(); ++r) {
    std::vector<std::string> row;
    for (const GeneratorColumn& col : table.columns)
      row.push_back(col.owner->word_for(conjugate(ctx.lambda_of(table.row_gens[r]), col.perm)));
    table.entries.push_back(std::move(row));
  }
  return table;
}

// elements of a structure ordered by word (Id, single letters, products)
std::vector<Perm> word_sorted_support(const HGStructure& s) {
  std::vector<std::pair<std::string, Perm>> tagged;
  for (const Perm& n : s.N.elements()) tagged.emplace_back(s.word_for(n), n);
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first == "Id") return b.first != "Id";
    if (b.first == "Id") return false;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Perm> out;
  for (auto& [w, n] : tagged) out.push_back(n);
  return out;
}

struct PairIsos {
  const HGStructure* source;
  const HGStructure* target;
  std::vector<GIso> isos;
};

struct Pipeline {
  GPContext ctx;
  Perm relabel;
  std::vector<HGStructure> structures;
  ActionTable action_table;
  std::vector<std::vector<StableSubgroup>> stable;  // aligned with structures
  std::vector<PairIsos> pairs;                      // unordered pairs i < j
  std::vector<std::size_t> g_aut_counts;            // aligned with structures
  std::vector<std::vector<ConjOrbit>> orbits;       // aligned with structures
  const PairIsos* first_iso_pair = nullptr;
  ImplementerReport implementer;
};

Pipeline run_pipeline(GPContext ctx, Perm relabel) {
  Pipeline p;
  p.ctx = std::move(ctx);
  p.relabel = std::move(relabel);
  p.structures = find_structures(p.ctx);
  p.action_table = build_action_table(p.ctx, p.structures);
  for (const HGStructure& s : p.structures) {
    p.stable.push_back(stable_subgroups(p.ctx, s));
    p.g_aut_counts.push_back(g_isomorphisms(p.ctx, s, s).size());
    p.orbits.push_back(orbit_fixed_conditions(p.ctx, s));
  }
  for (std::size_t i = 0; i < p.structures.size(); ++i)
    for (std::size_t j = i + 1; j < p.structures.size(); ++j)
      p.pairs.push_back({&p.structures[i], &p.structures[j],
                         g_isomorphisms(p.ctx, p.structures[i], p.structures[j])});
  for (const PairIsos& pair : p.pairs)
    if (!pair.isos.empty()) {
      p.first_iso_pair = &pair;
      break;
    }
  if (p.first_iso_pair)
    p.implementer =
        conjugation_implementer(p.ctx, p.first_iso_pair->source->N, p.first_iso_pair->isos[0].map);
  return p;
}

// ------------------------------------------------------------- rendering

json context_json(const Pipeline& p) {
  json ctx;
  ctx["degree"] = p.ctx.n;
  ctx["group"] = {{"generators", cycles_json(p.ctx.G.generators())},
                  {"order", p.ctx.G.order()}};
  ctx["subgroup"] = {{"generators", cycles_json(p.ctx.Gp.generators())},
                     {"order", p.ctx.Gp.order()}};
  json lambda;
  for (std::size_t i = 0; i < p.ctx.G.generators().size(); ++i)
    lambda[p.ctx.G.generators()[i].cycle_string()] = p.ctx.lambda_gens[i].cycle_string();
  ctx["lambda_generators"] = lambda;
  ctx["lambda_subgroup"] = cycles_json(minimal_generators(p.ctx.lambda_Gp));
  ctx["relabel"] = p.relabel.valid() ? p.relabel.cycle_string() : "()";
  ctx["point_representatives"] = cycles_json(p.ctx.point_reps);
  return ctx;
}

json structures_json(const Pipeline& p) {
  json arr = json::array();
  for (const HGStructure& s : p.structures) {
    json gens = json::array();
    for (const auto& [name, perm] : s.basis)
      gens.push_back(json{{"name", name}, {"perm", perm.cycle_string()}});
    arr.push_back(json{{"label", s.label}, {"type", s.type_name}, {"generators", gens}});
  }
  return arr;
}

json action_table_json(const ActionTable& t) {
  json out;
  json cols = json::array();
  for (const GeneratorColumn& c : t.columns) cols.push_back(c.name);
  out["columns"] = cols;
  json rows = json::array();
  for (std::size_t r = 0; r < t.row_names.size(); ++r)
    rows.push_back(json{{"g", t.row_names[r]}, {"entries", t.entries[r]}});
  out["rows"] = rows;
  return out;
}

json stable_json(const Pipeline& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    json entries = json::array();
    for (const StableSubgroup& st : p.stable[i]) {
      json words = json::array();
      for (const Perm& g : word_generators(p.structures[i], st.S))
        words.push_back(p.structures[i].word_for(g));
      entries.push_back(json{{"generators", words},
                             {"order", st.S.order()},
                             {"fixed_field", st.field},
                             {"degree_over_k", st.degree_over_k},
                             {"G_S", cycles_json(minimal_generators(st.G_S))},
                             {"proper_nontrivial", st.proper_nontrivial}});
    }
    arr.push_back(json{{"structure", p.structures[i].label}, {"stable_subgroups", entries}});
  }
  return arr;
}

json g_iso_json(const Pipeline& p) {
  json out;
  json pairs = json::array();
  for (const PairIsos& pair : p.pairs) {
    json entry{{"source", pair.source->label},
               {"target", pair.target->label},
               {"count", pair.isos.size()}};
    if (!pair.isos.empty() && pair.isos.size() <= 24) {
      json maps = json::array();
      for (const GIso& iso : pair.isos) {
        json m;
        for (const auto& [name, perm] : pair.source->basis)
          m[name] = pair.target->word_for(iso.map.at(perm));
        maps.push_back(m);
      }
      entry["maps"] = maps;
    }
    pairs.push_back(std::move(entry));
  }
  out["pairs"] = pairs;
  json auts;
  for (std::size_t i = 0; i < p.structures.size(); ++i)
    auts[p.structures[i].label] = p.g_aut_counts[i];
  out["g_automorphism_counts"] = auts;
  if (p.first_iso_pair) {
    json impl;
    impl["pair"] = json::array({p.first_iso_pair->source->label, p.first_iso_pair->target->label});
    impl["candidates"] = cycles_json(p.implementer.candidates);
    impl["chosen"] = p.implementer.chosen ? p.implementer.chosen->cycle_string() : "";
    json cbs = json::array();
    for (const auto& cb : p.implementer.coboundaries)
      cbs.push_back(json{{"g", cb.gen.cycle_string()},
                         {"value", cb.value.cycle_string()},
                         {"in_centralizer", cb.in_centralizer}});
    impl["coboundaries"] = cbs;
    out["implementer"] = impl;
  }
  return out;
}

json orbits_json(const Pipeline& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    const HGStructure& s = p.structures[i];
    json orbits = json::array();
    for (const ConjOrbit& orbit : p.orbits[i]) {
      json members = json::array();
      for (const auto& [member, g] : orbit.members)
        members.push_back(json{{"element", s.word_for(member)}, {"transport", g.cycle_string()}});
      orbits.push_back(json{{"representative", s.word_for(orbit.rep)},
                            {"size", orbit.members.size()},
                            {"stabilizer", cycles_json(minimal_generators(orbit.stabilizer))},
                            {"stabilizer_order", orbit.stabilizer.order()},
                            {"coefficient_field", orbit.stabilizer_field},
                            {"members", members}});
    }
    arr.push_back(json{{"structure", s.label}, {"orbits", orbits}});
  }
  return arr;
}

json preimage_json(const Pipeline& p) {
  json arr = json::array();
  for (const HGStructure& s : p.structures) {
    json entries = json::array();
    for (const Perm& n : word_sorted_support(s)) {
      const int point = n.inverse().apply0(0);
      entries.push_back(json{{"n", s.word_for(n)},
                             {"point", point + 1},
                             {"representative",
                              p.ctx.point_reps[static_cast<std::size_t>(point)].cycle_string()}});
    }
    arr.push_back(json{{"structure", s.label}, {"entries", entries}});
  }
  return arr;
}

std::string pipeline_text(const Pipeline& p, const std::string& title) {
  std::ostringstream out;
  out << title << "\n" << std::string(title.size(), '=') << "\n\n";
  out << "G  = " << gens_string(p.ctx.G.generators()) << "   order " << p.ctx.G.order() << "\n";
  out << "G' = " << gens_string(p.ctx.Gp.generators()) << "   order " << p.ctx.Gp.order()
      << ", index " << p.ctx.n << "\n\n";
  for (std::size_t i = 0; i < p.ctx.G.generators().size(); ++i)
    out << "lambda(" << p.action_table.row_names[i]
        << ") = " << p.ctx.lambda_gens[i].cycle_string() << "\n";
  out << "lambda(G') = " << gens_string(minimal_generators(p.ctx.lambda_Gp)) << "\n\n";
  out << "Coset representatives g_i (point i = coset g_i G'):\n";
  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head, vals;
    for (int i = 0; i < p.ctx.n; ++i) {
      head.push_back(std::to_string(i + 1));
      vals.push_back(p.ctx.point_reps[static_cast<std::size_t>(i)].cycle_string());
    }
    rows.push_back(head);
    rows.push_back(vals);
    out << render_table(rows);
  }
  out << "\nHopf-Galois structures (regular subgroups normalized by lambda(G)): "
      << p.structures.size() << "\n";
  for (const HGStructure& s : p.structures) {
    out << "  " << s.label << " = <";
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
      if (i) out << ", ";
      out << s.basis[i].first << " = " << s.basis[i].second.cycle_string();
    }
    out << ">   type " << s.type_name << "\n";
  }

  out << "\nAction on the generators (conjugation through lambda):\n";
  {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{""};
    for (const GeneratorColumn& c : p.action_table.columns) head.push_back(c.name);
    rows.push_back(head);
    for (std::size_t r = 0; r < p.action_table.row_names.size(); ++r) {
      std::vector<std::string> row{p.action_table.row_names[r]};
      for (const std::string& e : p.action_table.entries[r]) row.push_back(e);
      rows.push_back(row);
    }
    out << render_table(rows);
  }

  out << "\nStable subgroups and fixed fields:\n";
  {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"structure", "stable subgroups", "fixed subfields"});
    for (std::size_t i = 0; i < p.structures.size(); ++i) {
      std::string subs, fields;
      for (const StableSubgroup& st : p.stable[i]) {
        if (!st.proper_nontrivial) continue;
        if (!subs.empty()) {
          subs += ", ";
          fields += ", ";
        }
        subs += "<";
        bool first = true;
        for (const Perm& g : word_generators(p.structures[i], st.S)) {
          if (!first) subs += ",";
          subs += p.structures[i].word_for(g);
          first = false;
        }
        subs += ">";
        fields += st.field;
      }
      if (subs.empty()) subs = fields = "(none)";
      rows.push_back({p.structures[i].label, subs, fields});
    }
    out << render_table(rows);
  }

  out << "\nG-isomorphisms between structures:\n";
  for (const PairIsos& pair : p.pairs) {
    out << "  (" << pair.source->label << ", " << pair.target->label << "): " << pair.isos.size();
    if (!pair.isos.empty() && pair.isos.size() <= 4) {
      out << "  [";
      for (std::size_t k = 0; k < pair.isos.size(); ++k) {
        if (k) out << "; ";
        bool first = true;
        for (const auto& [name, perm] : pair.source->basis) {
          if (!first) out << ", ";
          out << name << " -> " << pair.target->word_for(pair.isos[k].map.at(perm));
          first = false;
        }
      }
      out << "]";
    }
    out << "\n";
  }
  out << "  G-automorphism counts:";
  for (std::size_t i = 0; i < p.structures.size(); ++i)
    out << " " << p.structures[i].label << ": " << p.g_aut_counts[i];
  out << "\n";
  if (p.first_iso_pair && p.implementer.chosen) {
    out << "  conjugation implementer for (" << p.first_iso_pair->source->label << ", "
        << p.first_iso_pair->target->label << "): s = " << p.implementer.chosen->cycle_string()
        << "  (" << p.implementer.candidates.size() << " candidates)\n";
    for (const auto& cb : p.implementer.coboundaries)
      out << "    s lambda(" << cb.gen.cycle_string() << ")^-1 s lambda(" << cb.gen.cycle_string()
          << ") = " << cb.value.cycle_string()
          << (cb.in_centralizer ? "  [in Cent(N)]" : "  [NOT in Cent(N)]") << "\n";
  }

  out << "\nConjugation orbits on each N (free coefficient per orbit):\n";
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    out << "  " << p.structures[i].label << ":\n";
    for (const ConjOrbit& orbit : p.orbits[i]) {
      out << "    orbit of " << p.structures[i].word_for(orbit.rep) << " (size "
          << orbit.members.size() << "), coefficient in " << orbit.stabilizer_field
          << ", stabilizer " << gens_string(minimal_generators(orbit.stabilizer)) << "\n";
      for (const auto& [member, g] : orbit.members)
        if (!(member == orbit.rep))
          out << "      " << p.structures[i].word_for(member) << " = " << g.cycle_string() << " . "
              << p.structures[i].word_for(orbit.rep) << " . " << g.cycle_string() << "^-1\n";
    }
  }

  out << "\nPreimage of the identity coset under n^{-1}:\n";
  for (const HGStructure& s : p.structures) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"n in " + s.label}, vals{"(n^-1)(1_G)"};
    for (const Perm& n : word_sorted_support(s)) {
      head.push_back(s.word_for(n));
      const int point = n.inverse().apply0(0);
      vals.push_back(p.ctx.point_reps[static_cast<std::size_t>(point)].cycle_string() + " G'");
    }
    rows.push_back(head);
    rows.push_back(vals);
    out << render_table(rows);
  }
  return out.str();
}

std::string assertions_text(const Assertions& a) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& [name, pass] : a.list)
    if (pass) ++passed;
  out << "\nChecks: " << passed << "/" << a.list.size() << " passed\n";
  for (const auto& [name, pass] : a.list)
    out << "  [" << (pass ? "ok" : "FAIL") << "] " << name << "\n";
  return out.str();
}

}  // namespace

// ------------------------------------------------------------- commands

CommandResult run_paper_example() {
  const PermGroup G =
      PermGroup::from_generators(4, {Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)});
  const PermGroup Gp = PermGroup::from_generators(4, {Perm::parse("(2,3,4)", 4)});
  GPContext ctx = build_lambda(G, Gp);
  Perm relabel = canonical_relabel(
      ctx, {Perm::parse("(1,2,3,4)(5,6,7,8)", 8), Perm::parse("(1,2)(3,5)(4,6)(7,8)", 8)});
  Pipeline p = run_pipeline(std::move(ctx), std::move(relabel));

  Assertions checks;

  // discovery
  checks.check("four_structures_of_type_C2xC2xC2",
               p.structures.size() == 4 &&
                   std::all_of(p.structures.begin(), p.structures.end(),
                               [](const HGStructure& s) { return s.type_name == "C2xC2xC2"; }));
  {
    bool catalog = p.structures.size() == reference_catalog().size();
    for (std::size_t i = 0; catalog && i < p.structures.size(); ++i) {
      const CatalogEntry& entry = reference_catalog()[i];
      catalog = p.structures[i].label == entry.label;
      if (!catalog) break;
      std::vector<Perm> gens;
      for (const auto& [name, cyc] : entry.gens) gens.push_back(Perm::parse(cyc, 8));
      catalog = p.structures[i].N.same_elements(PermGroup::from_generators(8, gens));
    }
    checks.check("structures_equal_published_generator_sets", catalog);
  }
  checks.check("lambda_matches_published",
               p.ctx.lambda_gens[0].cycle_string() == "(1,2,3,4)(5,6,7,8)" &&
                   p.ctx.lambda_gens[1].cycle_string() == "(1,2)(3,5)(4,6)(7,8)" &&
                   p.ctx.lambda_Gp.same_elements(
                       PermGroup::from_generators(8, {Perm::parse("(2,4,5)(3,8,6)", 8)})));

  // action table, row tau then row sigma over the published column order
  {
    static const std::vector<std::string> expect_cols{"r_1", "s_1", "t",   "r_2", "s_2", "r_3",
                                                      "s_3", "t_3", "r_4", "s_4", "t_4"};
    static const std::vector<std::string> expect_tau{"r_1",    "r_1s_1", "t",   "r_2t",
                                                     "r_2s_2t", "r_3t_3", "r_3s_3", "t_3",
                                                     "r_4t_4", "r_4s_4", "t_4"};
    static const std::vector<std::string> expect_sigma{"r_1s_1", "s_1",    "t",      "s_2",
                                                       "r_2",    "r_3",    "r_3s_3", "r_3t_3",
                                                       "r_4",    "r_4s_4", "r_4t_4"};
    std::vector<std::string> cols;
    for (const GeneratorColumn& c : p.action_table.columns) cols.push_back(c.name);
    checks.check("action_table_22_entries", cols == expect_cols &&
                                                p.action_table.entries.size() == 2 &&
                                                p.action_table.entries[0] == expect_tau &&
                                                p.action_table.entries[1] == expect_sigma);
  }

  // stable subgroups and fixed fields
  {
    auto stable_words = [&](std::size_t i) {
      std::vector<std::pair<std::string, std::string>> rows;
      for (const StableSubgroup& st : p.stable[i]) {
        if (!st.proper_nontrivial) continue;
        std::string w;
        for (const Perm& g : word_generators(p.structures[i], st.S)) {
          if (!w.empty()) w += ",";
          w += p.structures[i].word_for(g);
        }
        rows.push_back({w, st.field});
      }
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    using Rows = std::vector<std::pair<std::string, std::string>>;
    const bool ok = stable_words(0) == Rows{{"r_1,s_1", "k(√δ)"}, {"t", "k(α)"}} &&
                    stable_words(1) == Rows{{"t", "k(α)"}} &&
                    stable_words(2) == Rows{{"r_3,t_3", "k(√δ)"}} &&
                    stable_words(3) == Rows{{"r_4,t_4", "k(√δ)"}};
    checks.check("stable_table_matches_published", ok);
  }

  // G-isomorphisms
  {
    bool only34 = true;
    std::size_t count34 = 0;
    for (const PairIsos& pair : p.pairs) {
      const bool is34 = pair.source->label == "N_3" && pair.target->label == "N_4";
      if (is34)
        count34 = pair.isos.size();
      else if (!pair.isos.empty())
        only34 = false;
    }
    checks.check("only_pair_N3_N4_is_G_isomorphic", only34 && count34 == 1);
    bool generator_wise = false;
    if (p.first_iso_pair && p.first_iso_pair->source->label == "N_3") {
      const GroupMap& phi = p.first_iso_pair->isos[0].map;
      generator_wise = true;
      for (std::size_t k = 0; k < 3; ++k)
        generator_wise = generator_wise &&
                         phi.at(p.structures[2].basis[k].second) == p.structures[3].basis[k].second;
    }
    checks.check("unique_G_isomorphism_maps_generators_in_order", generator_wise);
    checks.check("N_3_has_exactly_one_G_automorphism", p.g_aut_counts[2] == 1);
    const Perm s = Perm::parse("(1,7)(2,8)(3,5)(4,6)", 8);
    checks.check("published_implementer_among_candidates",
                 std::find(p.implementer.candidates.begin(), p.implementer.candidates.end(), s) !=
                     p.implementer.candidates.end());
    checks.check("chosen_implementer_is_published_one",
                 p.implementer.chosen && *p.implementer.chosen == s);
    checks.check("coboundaries_are_identity",
                 !p.implementer.coboundaries.empty() &&
                     std::all_of(p.implementer.coboundaries.begin(), p.implementer.coboundaries.end(),
                                 [](const auto& cb) {
                                   return cb.value.is_identity() && cb.in_centralizer;
                                 }));
  }

  // preimage tables: published representatives up to G'
  {
    auto same_coset = [&](const Perm& a, const Perm& b) {
      return p.ctx.Gp.contains(compose(a.inverse(), b));
    };
    static const std::vector<std::pair<std::string, std::string>> published3{
        {"Id", "()"},        {"r_3", "(1,4,2)"},    {"s_3", "(2,3)"},      {"t_3", "(1,2,3)"},
        {"r_3s_3", "(1,3)"}, {"r_3t_3", "(1,3,4)"}, {"s_3t_3", "(1,4)"},   {"r_3s_3t_3", "(1,2)"}};
    static const std::vector<std::pair<std::string, std::string>> published4{
        {"Id", "()"},        {"r_4", "(1,3,4)"},    {"s_4", "(2,3)"},      {"t_4", "(1,4,2)"},
        {"r_4s_4", "(1,4)"}, {"r_4t_4", "(1,2,3)"}, {"s_4t_4", "(1,2)"},   {"r_4s_4t_4", "(1,3)"}};
    bool ok = true;
    for (std::size_t si : {std::size_t{2}, std::size_t{3}}) {
      const auto& published = si == 2 ? published3 : published4;
      const HGStructure& s = p.structures[si];
      for (const auto& [word, rep_str] : published) {
        const Perm* n = nullptr;
        for (const Perm& cand : s.N.elements())
          if (s.word_for(cand) == word) n = &cand;
        if (!n) {
          ok = false;
          break;
        }
        const int point = n->inverse().apply0(0);
        ok = ok && same_coset(p.ctx.point_reps[static_cast<std::size_t>(point)],
                              Perm::parse(rep_str, 4));
      }
    }
    checks.check("preimage_tables_match_published_cosets", ok);
  }

  // orbit structure of N_3
  {
    const auto& orbits = p.orbits[2];
    bool sizes = orbits.size() == 3 && orbits[0].members.size() == 1 &&
                 orbits[1].members.size() == 3 && orbits[2].members.size() == 4;
    const HGStructure& s3 = p.structures[2];
    const Perm r3 = s3.basis[0].second, ss3 = s3.basis[1].second, t3 = s3.basis[2].second;
    const Perm tau = Perm::parse("(1,2,3,4)", 4), sigma = Perm::parse("(1,2)", 4);
    const PermGroup sigma_tau2 =
        PermGroup::from_generators(4, {sigma, compose(tau, tau)});
    bool stab_r3 = conj_stabilizer(p.ctx, r3).same_elements(sigma_tau2);
    bool stab_s3 = conj_stabilizer(p.ctx, ss3).same_elements(p.ctx.G.stabilizer_of(0)) &&
                   field_label(p.ctx, conj_stabilizer(p.ctx, ss3)) == "k(α)";
    const Perm sigmatau = compose(sigma, tau);
    bool transports = conjugate(p.ctx.lambda_of(sigmatau), r3) == t3 &&
                      conjugate(p.ctx.lambda_of(tau), r3) == compose(r3, t3);
    checks.check("N_3_orbit_structure_matches_published",
                 sizes && stab_r3 && stab_s3 && transports);
  }

  // symbolic comparison
  InequalityReport ineq;
  {
    const GIso& phi = p.first_iso_pair->isos[0];
    ineq = inequality_check(p.ctx, p.structures[2], p.structures[3], phi.map);
    checks.check("expansions_match_published", ineq.expansions_match_reference);
    checks.check("expansion_difference_nonzero", ineq.difference_nonzero);
    checks.check("h_lies_in_H_3", ineq.h_in_source);
    checks.check("phi_h_lies_in_H_4", ineq.phi_h_in_target);
    checks.check("hopf_actions_differ_on_alpha_1", ineq.mu_values_differ);
    checks.check("difference_survives_b_specialization", ineq.specialized_difference_nonzero);
  }

  // counit fixed-field identities on every stable subgroup
  std::vector<std::pair<std::string, bool>> counit_rows;
  {
    const GaloisEmbedding emb(p.ctx);
    const FieldElt alpha1 = FieldElt::alpha(1);
    const FieldElt delta = sqrt_disc();
    bool all_ok = true;
    for (std::size_t i = 0; i < p.structures.size(); ++i)
      for (const StableSubgroup& st : p.stable[i]) {
        FieldElt x;
        if (st.field == "k")
          x = FieldElt::b(2);
        else if (st.field == "k(α)")
          x = alpha1;
        else if (st.field == "k(√δ)")
          x = delta;
        else if (st.field == "K")
          x = alpha1 + delta;
        else
          continue;
        AlgElt h;
        for (const Perm& n : st.S.elements()) h.add(n, FieldElt::one());
        const bool fixed = is_in_H(p.ctx, p.structures[i], h) &&
                           hopf_action(emb, p.structures[i], h, x) == h.counit() * x;
        std::string label = p.structures[i].label + ": mu(sum over <";
        bool first = true;
        for (const Perm& g : word_generators(p.structures[i], st.S)) {
          if (!first) label += ",";
          label += p.structures[i].word_for(g);
          first = false;
        }
        label += ">) acts as counit on " + st.field;
        counit_rows.push_back({label, fixed});
        all_ok = all_ok && fixed;
      }
    checks.check("counit_fixed_field_identities", all_ok);
  }

  CommandResult result;
  result.ok = checks.all;
  result.first_failure = checks.first_failure;

  json j;
  j["command"] = "paper-example";
  j["context"] = context_json(p);
  j["structures"] = structures_json(p);
  j["action_table"] = action_table_json(p.action_table);
  j["stable_table"] = stable_json(p);
  j["g_isomorphisms"] = g_iso_json(p);
  j["orbit_structure"] = orbits_json(p);
  j["preimage_tables"] = preimage_json(p);
  {
    json mu;
    const HGStructure& s3 = p.structures[2];
    mu["h"] = "a1^2*" + s3.basis[1].first + " + a2^2*" + s3.word_for(compose(s3.basis[0].second, s3.basis[1].second)) +
              " + a3^2*" + s3.word_for(compose(s3.basis[1].second, s3.basis[2].second)) + " + a4^2*" +
              s3.word_for(compose(compose(s3.basis[0].second, s3.basis[1].second), s3.basis[2].second));
    mu["mu_3_of_h_at_alpha_1"] = ineq.mu_source.to_string();
    mu["mu_4_of_phi_h_at_alpha_1"] = ineq.mu_target.to_string();
    mu["first_expansion"] = ineq.first_expansion.to_string();
    mu["second_expansion"] = ineq.second_expansion.to_string();
    mu["difference_nonzero"] = ineq.difference_nonzero;
    mu["mu_values_differ"] = ineq.mu_values_differ;
    mu["h_in_H_3"] = ineq.h_in_source;
    mu["phi_h_in_H_4"] = ineq.phi_h_in_target;
    mu["specialized_difference_nonzero"] = ineq.specialized_difference_nonzero;
    j["mu_comparison"] = mu;
  }
  {
    json rows = json::array();
    for (const auto& [label, okrow] : counit_rows)
      rows.push_back(json{{"check", label}, {"pass", okrow}});
    j["counit_fixed_field_checks"] = rows;
  }
  j["assertions"] = checks.to_json();
  j["all_assertions_pass"] = checks.all;
  result.json = std::move(j);

  std::ostringstream text;
  text << pipeline_text(p, "Hopf-Galois structures of the generic quartic extension (degree 8)");
  text << "\nHopf action comparison (non-isomorphy of the N_3 and N_4 structures):\n";
  text << "  h = " << result.json["mu_comparison"]["h"].get<std::string>() << "\n";
  text << "  mu_3(h)(a1)        = " << ineq.mu_source.to_string() << "\n";
  text << "  mu_4(Phi(h))(a1)   = " << ineq.mu_target.to_string() << "\n";
  text << "  NF(a2^2*a3 + a3^2*a4 + a4^2*a2) = " << ineq.first_expansion.to_string() << "\n";
  text << "  NF(a2^2*a4 + a3^2*a2 + a4^2*a3) = " << ineq.second_expansion.to_string() << "\n";
  text << "  difference nonzero: " << (ineq.difference_nonzero ? "yes" : "no")
       << ";  Phi(h) in H_4: " << (ineq.phi_h_in_target ? "yes" : "no") << "\n";
  text << "  => isomorphic Hopf algebras H_3 ~ H_4, non-isomorphic Hopf-Galois structures\n";
  text << assertions_text(checks);
  result.text = text.str();
  return result;
}

CommandResult run_discover(const std::string& group_gens, const std::string& subgroup_gens) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ';') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto max_point = [](const std::string& s) {
    int best = 1;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        best = std::max(best, std::stoi(s.substr(start, i - start)));
      } else {
        ++i;
      }
    }
    return best;
  };
  const int degree = std::max(max_point(group_gens), max_point(subgroup_gens));
  if (degree > Perm::max_degree) throw ParseError("discover: points above 16 are not supported");

  std::vector<Perm> ggens, sgens;
  for (const std::string& tok : split(group_gens)) ggens.push_back(Perm::parse(tok, degree));
  for (const std::string& tok : split(subgroup_gens)) sgens.push_back(Perm::parse(tok, degree));

  const PermGroup G = PermGroup::from_generators(degree, ggens, 40320);
  const PermGroup Gp = PermGroup::from_generators(degree, sgens, 40320);
  if (!G.contains_all(Gp)) throw PreconditionError("discover: subgroup is not contained in the group");
  if (G.order() / Gp.order() > 8)
    throw SizeLimitError("discover: index [G:G'] above 8 is not supported");

  GPContext ctx = build_lambda(G, Gp);
  Pipeline p = run_pipeline(std::move(ctx), Perm::identity(0));

  CommandResult result;
  json j;
  j["command"] = "discover";
  j["context"] = context_json(p);
  j["structures"] = structures_json(p);
  j["action_table"] = action_table_json(p.action_table);
  j["stable_table"] = stable_json(p);
  j["g_isomorphisms"] = g_iso_json(p);
  j["orbit_structure"] = orbits_json(p);
  j["preimage_tables"] = preimage_json(p);
  result.json = std::move(j);
  result.text = pipeline_text(p, "Hopf-Galois structure discovery");
  return result;
}

CommandResult run_hamiltonian() {
  LambdaRhoReport lr = lambda_rho_compare(CayleyTable::quaternion());

  Assertions checks;
  checks.check("lambda_and_rho_isomorphic_as_groups", lr.isomorphic);
  checks.check("no_G_isomorphism_between_lambda_and_rho", lr.g_isos.empty());
  checks.check("both_stable_lattices_have_6_subgroups",
               lr.lambda_stable.size() == 6 && lr.rho_stable.size() == 6);
  checks.check("correspondence_images_coincide", lr.same_correspondence_image);
  checks.check("lambda_acts_trivially_on_rho", lr.conjugation_action_on_rho_trivial);

  CommandResult result;
  result.ok = checks.all;
  result.first_failure = checks.first_failure;

  auto lattice_json = [&](const std::vector<StableSubgroup>& lattice) {
    json arr = json::array();
    for (const StableSubgroup& st : lattice)
      arr.push_back(json{{"generators", cycles_json(minimal_generators(st.S))},
                         {"order", st.S.order()},
                         {"G_S", cycles_json(minimal_generators(st.G_S))},
                         {"degree_over_k", st.degree_over_k},
                         {"fixed_field", st.field}});
    return arr;
  };

  json j;
  j["command"] = "hamiltonian";
  j["group"] = "Q8";
  j["degree"] = lr.ctx.n;
  j["lambda"] = cycles_json(minimal_generators(lr.lambda_structure.N));
  j["rho"] = cycles_json(minimal_generators(lr.rho_structure.N));
  j["isomorphic_as_groups"] = lr.isomorphic;
  j["g_isomorphism_count"] = lr.g_isos.size();
  j["lambda_stable_lattice"] = lattice_json(lr.lambda_stable);
  j["rho_stable_lattice"] = lattice_json(lr.rho_stable);
  j["same_correspondence_image"] = lr.same_correspondence_image;
  j["conjugation_action_on_rho_trivial"] = lr.conjugation_action_on_rho_trivial;
  j["assertions"] = checks.to_json();
  j["all_assertions_pass"] = checks.all;
  result.json = std::move(j);

  std::ostringstream text;
  const std::string title = "Hamiltonian comparison: lambda(Q8) vs rho(Q8) inside S_8";
  text << title << "\n" << std::string(title.size(), '=') << "\n\n";
  text << "lambda(Q8) = " << gens_string(minimal_generators(lr.lambda_structure.N)) << "\n";
  text << "rho(Q8)    = " << gens_string(minimal_generators(lr.rho_structure.N)) << "\n\n";
  text << "isomorphic as groups: " << (lr.isomorphic ? "yes" : "no") << "\n";
  text << "G-isomorphisms lambda -> rho: " << lr.g_isos.size() << "\n";
  text << "stable lattice sizes: lambda " << lr.lambda_stable.size() << ", rho "
       << lr.rho_stable.size() << "\n";
  text << "correspondence images coincide: " << (lr.same_correspondence_image ? "yes" : "no")
       << "\n\n";
  auto lattice_text = [&](const char* name, const std::vector<StableSubgroup>& lattice) {
    text << name << " stable subgroups:\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"order", "generators", "G_S", "degree over k"});
    for (const StableSubgroup& st : lattice)
      rows.push_back({std::to_string(st.S.order()), gens_string(minimal_generators(st.S)),
                      gens_string(minimal_generators(st.G_S)), std::to_string(st.degree_over_k)});
    text << render_table(rows);
  };
  lattice_text("lambda(Q8)", lr.lambda_stable);
  text << "\n";
  lattice_text("rho(Q8)", lr.rho_stable);
  text << assertions_text(checks);
  result.text = text.str();
  return result;
}

}  // namespace hg
