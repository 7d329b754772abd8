#include "wexlat/report.hpp"

#include <json.hpp>

namespace wexlat {

using nlohmann::ordered_json;

Pipeline run_pipeline(Category cat, const EnumOptions& opts) {
  Pipeline p;
  p.bm = std::make_shared<const ExtBimodule>(build_ext_bimodule(build_algebra(cat.indecs)));
  p.cat = std::move(cat);
  p.lat = enumerate_submodules(*p.bm, opts);
  p.verdicts = closed_flags(p.lat);
  return p;
}

std::string coord_label(const ExtBimodule& bm, const std::vector<std::string>& names,
                        std::size_t k) {
  const GlobalCoord& gc = bm.coords()[k];
  std::string label = "e(" + names[gc.c] + "," + names[gc.a] + ")";
  if (bm.block(gc.c, gc.a).dim() > 1) label += "#" + std::to_string(gc.local);
  return label;
}

namespace {

std::vector<std::size_t> socle_support(const SubmoduleLattice& lat, const Matrix& soc,
                                       std::size_t node) {
  std::vector<std::size_t> out;
  RrefResult r = rref(lat.nodes()[node].basis);
  for (std::size_t l = 0; l < soc.rows(); ++l)
    if (subspace_contains(r, soc.row(l))) out.push_back(l);
  return out;
}

std::vector<std::size_t> coord_support(const SubmoduleLattice& lat, std::size_t node) {
  std::vector<std::size_t> out;
  const Matrix& b = lat.nodes()[node].basis;
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t r = 0; r < b.rows(); ++r)
      if (b.at(r, c) != 0) {
        out.push_back(c);
        break;
      }
  return out;
}

std::string node_label(const Pipeline& p, std::size_t i) {
  if (p.lat.nodes()[i].dim() == 0) return "0";
  if (p.lat.used_fast_path()) {
    std::string s;
    for (std::size_t c : coord_support(p.lat, i)) {
      if (!s.empty()) s += ",";
      s += coord_label(*p.bm, p.cat.names, c);
    }
    return s;
  }
  return "N" + std::to_string(i) + " (dim " + std::to_string(p.lat.nodes()[i].dim()) + ")";
}

}  // namespace

std::string report_json(const Pipeline& p, const ReportOptions& opts) {
  const ExtBimodule& bm = *p.bm;
  const SubmoduleLattice& lat = p.lat;
  const std::size_t n = bm.algebra().num_indecs();
  ordered_json j;
  std::vector<std::string> notes;

  ordered_json jcat;
  jcat["field"] = bm.field().modulus();
  jcat["vertices"] = p.cat.quiver->num_vertices();
  jcat["indecomposables"] = p.cat.names;
  j["category"] = std::move(jcat);

  ordered_json jbm;
  jbm["dim"] = bm.dim();
  jbm["blocks"] = ordered_json::array();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      if (bm.block(c, a).dim() > 0)
        jbm["blocks"].push_back({{"c", p.cat.names[c]},
                                 {"a", p.cat.names[a]},
                                 {"dim", bm.block(c, a).dim()}});
  jbm["coords"] = ordered_json::array();
  for (std::size_t k = 0; k < bm.dim(); ++k)
    jbm["coords"].push_back(coord_label(bm, p.cat.names, k));
  j["bimodule"] = std::move(jbm);

  Matrix soc = bm.socle_of_whole();
  std::size_t n_closed = 0;
  for (const auto& v : p.verdicts) n_closed += v.closed;

  ordered_json jlat;
  jlat["num_nodes"] = lat.size();
  jlat["num_closed"] = n_closed;
  jlat["fast_path"] = lat.used_fast_path();
  jlat["bottom"] = lat.bottom();
  jlat["top"] = lat.top();
  jlat["atoms"] = lat.atom_indices();
  jlat["socle_dim"] = soc.rows();

  const bool detailed = lat.size() <= opts.detail_limit;
  const bool run_oracle = lat.size() <= opts.oracle_limit;
  std::vector<int> middle_ok;  // -1 unknown
  std::vector<ordered_json> witnesses(lat.size());
  if (run_oracle) {
    MiddleExactChecker checker(bm);
    middle_ok.assign(lat.size(), -1);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      MiddleExactWitness w;
      bool ok = checker.check(lat.nodes()[i].basis, &w);
      middle_ok[i] = ok ? 1 : 0;
      if (!ok)
        witnesses[i] = {{"x", p.cat.names[w.x]},
                        {"block", {p.cat.names[w.c], p.cat.names[w.a]}},
                        {"class", w.local_class},
                        {"position", w.position}};
    }
  } else {
    notes.push_back("middle-exactness oracle skipped: " + std::to_string(lat.size()) +
                    " nodes exceed the oracle limit of " + std::to_string(opts.oracle_limit));
  }

  if (detailed) {
    jlat["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      ordered_json jn;
      jn["id"] = i;
      jn["dim"] = lat.nodes()[i].dim();
      ordered_json basis = ordered_json::array();
      for (std::size_t r = 0; r < lat.nodes()[i].basis.rows(); ++r)
        basis.push_back(lat.nodes()[i].basis.row(r));
      jn["basis"] = std::move(basis);
      if (lat.used_fast_path()) jn["support"] = coord_support(lat, i);
      jn["socle_support"] = socle_support(lat, soc, i);
      jn["closed"] = p.verdicts[i].closed;
      jn["maximal_with_socle"] = p.verdicts[i].maximal_with_socle;
      if (run_oracle) {
        jn["middle_exact"] = middle_ok[i] == 1;
        if (middle_ok[i] == 0) jn["middle_exact_witness"] = witnesses[i];
      }
      jlat["nodes"].push_back(std::move(jn));
    }
    jlat["hasse"] = ordered_json::array();
    for (const auto& [a, b] : hasse(lat)) jlat["hasse"].push_back({a, b});
  } else {
    notes.push_back("node listing and Hasse edges truncated: " + std::to_string(lat.size()) +
                    " nodes exceed the detail limit of " + std::to_string(opts.detail_limit));
    std::vector<std::size_t> closed_ids;
    for (const auto& v : p.verdicts)
      if (v.closed) closed_ids.push_back(v.node);
    jlat["closed_nodes"] = closed_ids;
  }
  j["lattice"] = std::move(jlat);

  ordered_json jchecks;
  if (lat.size() <= opts.modularity_limit) {
    auto viol = modularity_violation(lattice_tables(lat));
    ordered_json jm;
    jm["checked"] = true;
    jm["modular"] = !viol.has_value();
    if (viol) jm["witness"] = {(*viol)[0], (*viol)[1], (*viol)[2]};
    jchecks["modularity"] = std::move(jm);
  } else {
    jchecks["modularity"] = {{"checked", false}};
    notes.push_back("modularity check skipped: " + std::to_string(lat.size()) +
                    " nodes exceed the limit of " + std::to_string(opts.modularity_limit));
  }

  jchecks["boolean"] = {{"holds", boolean_check(lat, p.verdicts)},
                        {"socle_dim", soc.rows()},
                        {"closed_count", n_closed}};

  if (run_oracle) {
    bool agree = true;
    for (std::size_t i = 0; i < lat.size(); ++i)
      agree = agree && (p.verdicts[i].closed == (middle_ok[i] == 1));
    jchecks["oracle_agreement"] = {{"checked", true}, {"agree", agree}};
  } else {
    jchecks["oracle_agreement"] = {{"checked", false}};
  }

  if (lat.size() <= opts.composition_limit) {
    bool consistent = true;
    ordered_json example;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto w = composition_counterexample(bm, lat.nodes()[i].basis);
      consistent = consistent && (w.has_value() != p.verdicts[i].closed);
      if (w && example.is_null())
        example = {{"node", i},
                   {"first_block", {p.cat.names[w->c1], p.cat.names[w->a]}},
                   {"first_class", w->first_class},
                   {"second_cokernel", p.cat.names[w->c2]},
                   {"second_class", w->second_class},
                   {"probe", p.cat.names[w->probe]},
                   {"escaped_class", w->escaped_class}};
    }
    ordered_json jc;
    jc["checked"] = true;
    jc["consistent"] = consistent;
    if (!example.is_null()) jc["example_witness"] = std::move(example);
    jchecks["composition"] = std::move(jc);
  } else {
    jchecks["composition"] = {{"checked", false}};
    notes.push_back("composition search skipped: " + std::to_string(lat.size()) +
                    " nodes exceed the limit of " + std::to_string(opts.composition_limit));
  }

  if (n_closed <= 128) {
    ordered_json jd;
    for (std::size_t i = 0; i < lat.size() && jd.is_null(); ++i) {
      if (!p.verdicts[i].closed) continue;
      for (std::size_t k = i + 1; k < lat.size() && jd.is_null(); ++k) {
        if (!p.verdicts[k].closed) continue;
        std::size_t pj = lat.join_index(i, k);
        std::size_t cj = closed_join_index(lat, p.verdicts, i, k);
        if (pj != cj)
          jd = {{"left", i},
                {"right", k},
                {"join", pj},
                {"join_dim", lat.nodes()[pj].dim()},
                {"closed_join", cj},
                {"closed_join_dim", lat.nodes()[cj].dim()}};
      }
    }
    jchecks["join_discrepancy"] = jd.is_null() ? ordered_json(nullptr) : jd;
  } else {
    jchecks["join_discrepancy"] = nullptr;
    notes.push_back("join-discrepancy search skipped: " + std::to_string(n_closed) +
                    " closed nodes exceed the limit of 128");
  }
  j["checks"] = std::move(jchecks);

  ordered_json jconv;
  jconv["coordinate_order"] =
      "blocks sorted by (first-argument index, second-argument index), then local Ext basis";
  jconv["scalar_normalization"] =
      "Ext basis classes are unit vectors on the non-pivot coordinates of Hom(P1,A) modulo the "
      "image of Hom(P0,A); leading coordinate 1";
  jconv["node_order"] = "nodes sorted by (dimension, canonical RREF basis bytes)";
  jconv["oracle_truncation"] =
      "middle-exactness is tested for X ranging over indecomposables and for one realized "
      "sequence per basis class of each Peirce block";
  jconv["truncation_notes"] = notes;
  j["conventions"] = std::move(jconv);

  return j.dump(2) + "\n";
}

std::string report_dot(const Pipeline& p, bool closed_only) {
  const SubmoduleLattice& lat = p.lat;
  std::string out = "digraph wexlat {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  auto quote = [](const std::string& s) {
    std::string q;
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q;
  };
  if (!closed_only) {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      out += "  n" + std::to_string(i) + " [label=\"" + quote(node_label(p, i)) + "\"";
      if (p.verdicts[i].closed) out += ", peripheries=2";
      out += "];\n";
    }
    for (const auto& [a, b] : hasse(lat))
      out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  } else {
    std::vector<std::size_t> closed;
    for (const auto& v : p.verdicts)
      if (v.closed) closed.push_back(v.node);
    for (std::size_t i : closed)
      out += "  n" + std::to_string(i) + " [label=\"" + quote(node_label(p, i)) +
             "\", peripheries=2];\n";
    // covers within the closed sublattice (its join is closed_join, but the
    // order is induced, so covers only need the order relation)
    const std::size_t m = closed.size();
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) le[x][y] = lat.leq(closed[x], closed[y]);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (x == y || !le[x][y]) continue;
        bool cover = true;
        for (std::size_t z = 0; z < m && cover; ++z)
          if (z != x && z != y && le[x][z] && le[z][y]) cover = false;
        if (cover)
          out += "  n" + std::to_string(closed[x]) + " -> n" + std::to_string(closed[y]) + ";\n";
      }
  }
  out += "}\n";
  return out;
}

}  // namespace wexlat
