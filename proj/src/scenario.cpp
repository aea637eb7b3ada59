#include "scenario.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"

namespace crb {

using nlohmann::json;

namespace {

const std::vector<std::string> kAnalyses = {"cr",       "sigma_cr",         "gsigma_cr", "relative_cr",
                                            "clifford", "sigma_variant_cr", "tau_search", "topology",
                                            "levi_sphere", "corpus"};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(Errc::parse, "scenario line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& v, int line) {
  try {
    size_t pos = 0;
    long long out = std::stoll(v, &pos);
    if (pos != v.size()) parse_fail(line, "trailing characters after integer '" + v + "'");
    return out;
  } catch (const Error&) {
    throw;
  } catch (...) {
    parse_fail(line, "expected an integer, got '" + v + "'");
  }
}

RawMat parse_matrix(const std::string& v, int line) {
  json j;
  try {
    j = json::parse(v);
  } catch (...) {
    parse_fail(line, "expected a matrix like [[1,0],[0,1]]");
  }
  if (!j.is_array() || j.empty()) parse_fail(line, "matrix must be a nonempty array of rows");
  RawMat out;
  size_t width = 0;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) parse_fail(line, "matrix rows must be nonempty arrays");
    std::vector<long long> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) parse_fail(line, "matrix entries must be integers");
      r.push_back(e.get<long long>());
    }
    if (width == 0) width = r.size();
    if (r.size() != width) parse_fail(line, "matrix rows have unequal lengths");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& v, int line) {
  json j;
  try {
    j = json::parse(v);
  } catch (...) {
    parse_fail(line, "expected an integer list like [2,1]");
  }
  if (!j.is_array() || j.empty()) parse_fail(line, "expected a nonempty integer list");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) parse_fail(line, "list entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

AutoSpec parse_auto(const std::string& v, int line) {
  AutoSpec spec;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < v.size() && std::isspace((unsigned char)v[i])) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= v.size()) break;
    size_t start = i;
    while (i < v.size() && (std::isalnum((unsigned char)v[i]) || v[i] == '_')) ++i;
    std::string word = v.substr(start, i - start);
    AutoSpecPart part;
    if (word == "duality") {
      part.kind = "duality";
    } else if (word == "frobenius") {
      part.kind = "frobenius";
      skip_ws();
      size_t ns = i;
      while (i < v.size() && (std::isdigit((unsigned char)v[i]))) ++i;
      if (ns == i) parse_fail(line, "frobenius needs a power, e.g. 'frobenius 1'");
      part.power = (int)parse_int(v.substr(ns, i - ns), line);
      if (part.power < 1) parse_fail(line, "frobenius power must be >= 1");
    } else if (word == "inner") {
      part.kind = "inner";
      skip_ws();
      if (i >= v.size() || v[i] != '[') parse_fail(line, "inner needs a matrix, e.g. 'inner [[0,1],[1,0]]'");
      int depth = 0;
      size_t ms = i;
      while (i < v.size()) {
        if (v[i] == '[') ++depth;
        if (v[i] == ']') --depth;
        ++i;
        if (depth == 0) break;
      }
      if (depth != 0) parse_fail(line, "unbalanced brackets in inner matrix");
      part.mat = parse_matrix(v.substr(ms, i - ms), line);
    } else {
      parse_fail(line, "unknown automorphism kind '" + word + "'");
    }
    spec.push_back(std::move(part));
  }
  if (spec.empty()) parse_fail(line, "empty automorphism specification");
  return spec;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  bool have_n = false, have_p = false, have_m = false, have_id = false, have_analysis = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) parse_fail(lineno, "empty value for key '" + key + "'");

    if (key == "id") {
      sc.id = value;
      have_id = true;
    } else if (key == "analysis") {
      sc.analysis = value;
      have_analysis = true;
    } else if (key == "n") {
      sc.n = (int)parse_int(value, lineno);
      have_n = true;
    } else if (key == "p") {
      sc.p = (int)parse_int(value, lineno);
      have_p = true;
    } else if (key == "m") {
      sc.m = (int)parse_int(value, lineno);
      have_m = true;
    } else if (key == "gen") {
      sc.gens.push_back(parse_matrix(value, lineno));
    } else if (key == "ngen") {
      sc.ngens.push_back(parse_matrix(value, lineno));
    } else if (key == "auto") {
      sc.autos.push_back(parse_auto(value, lineno));
    } else if (key == "k_blocks") {
      sc.k_blocks = parse_int_list(value, lineno);
    } else if (key == "k_conj") {
      sc.k_conj = parse_matrix(value, lineno);
    } else if (key == "blocks") {
      sc.blocks = parse_int_list(value, lineno);
    } else if (key == "r") {
      sc.r = (int)parse_int(value, lineno);
    } else if (key == "frob") {
      sc.frob = (int)parse_int(value, lineno);
    } else if (key == "r_max") {
      sc.r_max = (int)parse_int(value, lineno);
    } else if (key == "cap_order") {
      sc.cap_order = parse_int(value, lineno);
    } else if (key == "cap_subspaces") {
      sc.cap_subspaces = parse_int(value, lineno);
    } else {
      parse_fail(lineno, "unknown key '" + key + "'");
    }
  }

  if (!have_id) throw Error(Errc::parse, "scenario is missing required key 'id'");
  if (!have_analysis) throw Error(Errc::parse, "scenario is missing required key 'analysis'");
  if (!have_n) throw Error(Errc::parse, "scenario is missing required key 'n'");
  if (!have_p) throw Error(Errc::parse, "scenario is missing required key 'p'");
  if (!have_m) throw Error(Errc::parse, "scenario is missing required key 'm'");
  bool known = false;
  for (const auto& a : kAnalyses) known = known || a == sc.analysis;
  if (!known) throw Error(Errc::parse, "unknown analysis '" + sc.analysis + "'");
  if (sc.n < 2) throw Error(Errc::parse, "n must be >= 2");
  if (sc.m < 1) throw Error(Errc::parse, "m must be >= 1");

  auto check_mat = [&](const RawMat& m, const char* what) {
    if ((int)m.size() != sc.n || (int)m[0].size() != sc.n)
      throw Error(Errc::parse, std::string(what) + " must be " + std::to_string(sc.n) + "x" + std::to_string(sc.n));
  };
  for (const auto& g : sc.gens) check_mat(g, "generator");
  for (const auto& g : sc.ngens) check_mat(g, "normal-subgroup generator");
  if (sc.k_conj) check_mat(*sc.k_conj, "k_conj");
  for (const auto& a : sc.autos)
    for (const auto& part : a)
      if (part.kind == "inner") check_mat(part.mat, "inner automorphism matrix");

  if (sc.analysis == "relative_cr" && sc.k_blocks.empty())
    throw Error(Errc::parse, "relative_cr needs k_blocks");
  if (sc.analysis == "levi_sphere" && sc.blocks.empty())
    throw Error(Errc::parse, "levi_sphere needs blocks");
  if (sc.analysis == "clifford" && sc.ngens.empty())
    throw Error(Errc::parse, "clifford needs at least one ngen");
  if (sc.analysis == "sigma_variant_cr" && sc.autos.empty())
    throw Error(Errc::parse, "sigma_variant_cr needs at least one auto");
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

// ---- serialization ----

static json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (int i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.ambient; ++j) row.push_back((long long)s.basis.at(i, j));
    basis.push_back(row);
  }
  return json{{"basis", basis}, {"dim", s.dim()}};
}

json flag_to_json(const Building& b, const Flag& f) {
  json subs = json::array();
  for (int v : f.verts) subs.push_back(subspace_to_json(b.vertex(v)));
  return json{{"subspaces", subs}};
}

json verdict_to_json(const Building& b, const CrVerdict& v) {
  json out;
  out["cr"] = v.cr;
  if (v.counterexample) out["counterexample"] = flag_to_json(b, b.flags()[*v.counterexample]);
  json ws = json::array();
  for (const auto& [f, g] : v.witness)
    ws.push_back(json{{"flag", flag_to_json(b, b.flags()[f])}, {"opposite", flag_to_json(b, b.flags()[g])}});
  out["witnesses"] = ws;
  return out;
}

json homology_to_json(const HomologyProfile& hp) {
  json out;
  out["empty"] = hp.empty_complex;
  out["reduced_betti"] = hp.reduced_betti;
  out["euler_reduced"] = hp.euler_reduced;
  json tors = json::array();
  for (const auto& degree : hp.torsion) {
    json level = json::array();
    for (const auto& d : degree) level.push_back(d.str());
    tors.push_back(level);
  }
  out["torsion"] = tors;
  return out;
}

json topo_class_to_json(const TopoClass& tc) {
  json out;
  out["tag"] = topo_tag_name(tc.tag);
  if (tc.tag == TopoTag::SphereBouquetLike) {
    out["degree"] = tc.degree;
    out["count"] = tc.count;
  }
  return out;
}

// ---- running ----

namespace {

struct Instance {
  const Field* field;
  Caps caps;
  MatGroup h;
};

Mat raw_to_mat(const Field& F, const RawMat& raw) {
  Mat m((int)raw.size(), (int)raw[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.from_int(raw[i][j]);
  return m;
}

std::vector<Mat> raw_gens(const Field& F, int n, const std::vector<RawMat>& raws, const char* what) {
  std::vector<Mat> out;
  for (size_t i = 0; i < raws.size(); ++i) {
    Mat g = raw_to_mat(F, raws[i]);
    if (g.rows != n || g.cols != n)
      throw Error(Errc::invalid_argument, std::string(what) + " " + std::to_string(i + 1) + " has wrong shape");
    if (!inverse(F, g))
      throw Error(Errc::singular, std::string(what) + " " + std::to_string(i + 1) + " is not invertible");
    out.push_back(std::move(g));
  }
  return out;
}

BuildingAuto auto_from_spec(const Field& F, const AutoSpec& spec) {
  BuildingAuto acc;  // identity
  bool first = true;
  for (const auto& part : spec) {
    BuildingAuto a;
    if (part.kind == "duality")
      a = BuildingAuto::duality();
    else if (part.kind == "frobenius")
      a = BuildingAuto::frobenius(part.power);
    else {
      Mat g = raw_to_mat(F, part.mat);
      if (!inverse(F, g)) throw Error(Errc::singular, "inner automorphism matrix is not invertible");
      a = BuildingAuto::inner_auto(g);
    }
    acc = first ? a : compose(F, acc, a);
    first = false;
  }
  return acc;
}

json caps_to_json(const Caps& c) {
  return json{{"order", c.order}, {"subspaces", c.subspaces}, {"corpus_group", c.corpus_group}};
}

json run_cr(const Instance& in, json& result) {
  Building b(*in.field, in.h.n, in.caps.subspaces);
  FixedComplex fc = fixed_complex(b, inner_autos(in.h));
  CrVerdict v = is_cr(fc);
  result["building"] = json{{"vertices", (long long)b.vertices().size()},
                            {"chambers", b.chamber_count()},
                            {"simplices", (long long)b.flags().size()}};
  result["stable_count"] = (long long)fc.stable.size();
  result["type_preserving"] = fc.type_preserving;
  result["verdict"] = verdict_to_json(b, v);
  return json{{"consistent", true}};
}

json run_sigma_cr(const Scenario& sc, const Instance& in, json& result) {
  int r = sc.r > 0 ? sc.r : 1;
  int frob = sc.frob > 0 ? sc.frob : in.field->m();
  const Field& E = Field::get(in.field->p(), in.field->m() * r);
  Embedding em = make_embedding(*in.field, E);
  std::vector<Mat> gens;
  for (const auto& g : in.h.generators) gens.push_back(map_entries(em, g));
  MatGroup h_ext = closure(E, in.h.n, gens, in.caps.order);
  Building b(E, in.h.n, in.caps.subspaces);
  SigmaCrResult res = sigma_cr(b, h_ext, BuildingAuto::frobenius(frob));
  result["ambient_field"] = json{{"p", E.p()}, {"m", E.m()}, {"q", (long long)E.q()}};
  result["frobenius_power"] = frob;
  result["sigma_stable_subgroup"] = res.sigma_stable_subgroup;
  result["stable_count"] = (long long)res.fc.stable.size();
  result["verdict"] = verdict_to_json(b, res.building);
  result["definitional_cr"] = res.definitional;
  result["agreement"] = res.agree;
  return json{{"consistent", res.agree}};
}

json run_gsigma_cr(const Scenario& sc, const Instance& in, json& result) {
  int r = sc.r > 0 ? sc.r : 2;
  GsigmaCrResult res = gsigma_cr(in.h, r, in.caps.order, in.caps.subspaces);
  Building b(*in.field, in.h.n, in.caps.subspaces);
  result["verdict"] = verdict_to_json(b, res.base);
  result["extension_degree"] = r;
  if (res.has_extension) {
    result["extension_cr"] = res.extension_cr;
    result["extension_definitional_cr"] = res.extension_definitional;
  }
  result["agreement"] = res.agree;
  return json{{"consistent", res.agree}};
}

json run_relative_cr(const Scenario& sc, const Instance& in, json& result) {
  LeviBlockGroup k;
  k.sizes = sc.k_blocks;
  if (sc.k_conj) {
    Mat c = raw_to_mat(*in.field, *sc.k_conj);
    if (!inverse(*in.field, c)) throw Error(Errc::singular, "k_conj is not invertible");
    k.conj = c;
  }
  RelativeCrResult res = relative_cr(*in.field, in.h.n, in.h, k, in.caps.order);
  result["direct"] = res.direct;
  result["via_building"] = res.via_building;
  result["k_blocks"] = sc.k_blocks;
  result["k_simplices"] = res.k_simplices;
  result["k_stable"] = res.k_stable;
  result["agreement"] = res.agree;
  return json{{"consistent", res.agree}};
}

json run_sigma_variant_cr(const Scenario& sc, const Instance& in, json& result) {
  Building b(*in.field, in.h.n, in.caps.subspaces);
  AutoSet sigma;
  sigma.description = "scenario automorphisms";
  for (const auto& spec : sc.autos) sigma.autos.push_back(auto_from_spec(*in.field, spec));
  AutoCrResult res = sigma_variant_cr(b, in.h, sigma);
  result["sigma_generators"] = (long long)sigma.autos.size();
  result["type_preserving"] = res.fc.type_preserving;
  result["stable_count"] = (long long)res.fc.stable.size();
  result["verdict"] = verdict_to_json(b, res.building);
  result["definitional_cr"] = res.definitional;
  result["agreement"] = res.agree;
  return json{{"consistent", res.agree}};
}

json run_clifford(const Scenario& sc, const Instance& in, json& result) {
  Building b(*in.field, in.h.n, in.caps.subspaces);
  std::vector<Mat> ngens = raw_gens(*in.field, in.h.n, sc.ngens, "normal-subgroup generator");
  MatGroup ngrp = closure(*in.field, in.h.n, ngens, in.caps.order);
  CliffordResult res = clifford_check(b, in.h, ngrp);
  result["h_cr"] = res.h_verdict.cr;
  result["n_cr"] = res.n_verdict.cr;
  result["n_order"] = ngrp.order();
  result["consistent_implication"] = res.consistent;
  return json{{"consistent", res.consistent}};
}

json run_tau_search(const Scenario& sc, const Instance& in, json& result) {
  int r_max = sc.r_max > 0 ? sc.r_max : 3;
  TauSearchResult res = tau_search(in.h, r_max, in.caps.order, in.caps.subspaces);
  result["r_max"] = r_max;
  if (res.found)
    result["found_r"] = *res.found;
  else
    result["found_r"] = nullptr;
  json attempts = json::array();
  for (const auto& at : res.attempts)
    attempts.push_back(json{{"r", at.r},
                            {"h_cr", at.h_cr},
                            {"normalizer_cr", at.normalizer_cr},
                            {"normalizer_order", at.normalizer_order}});
  result["attempts"] = attempts;
  return json{{"consistent", true}};
}

json run_topology(const Instance& in, json& result) {
  Building b(*in.field, in.h.n, in.caps.subspaces);
  FixedComplex fc = fixed_complex(b, inner_autos(in.h));
  CrVerdict v = is_cr(fc);
  SimplicialComplex sc = order_complex(fc);
  HomologyProfile hp = reduced_homology(sc);
  TopoClass tc = classify(hp, fc.poset_dim());
  LeviSphereSearch ls = levi_sphere_containment(fc, in.caps.subspaces);

  result["stable_count"] = (long long)fc.stable.size();
  result["poset_dim"] = fc.poset_dim();
  result["cr"] = v.cr;
  result["homology"] = homology_to_json(hp);
  result["class"] = topo_class_to_json(tc);
  result["levi_sphere_found"] = ls.status == LeviSphereSearch::Status::Found;
  result["levi_sphere_search"] = ls.status == LeviSphereSearch::Status::Found      ? "found"
                                 : ls.status == LeviSphereSearch::Status::NotFound ? "not_found"
                                                                                   : "inconclusive";
  // theorem-level equivalences, vacuous for an empty stable set
  bool consistent = true;
  if (!fc.stable.empty() && ls.status != LeviSphereSearch::Status::Inconclusive) {
    bool not_point = tc.tag != TopoTag::PointLike;
    bool sphere = ls.status == LeviSphereSearch::Status::Found;
    consistent = (v.cr == not_point) && (v.cr == sphere);
    if (v.cr && consistent) consistent = tc.tag == TopoTag::SphereBouquetLike && tc.degree == fc.poset_dim();
  }
  result["equivalences_hold"] = consistent;
  return json{{"consistent", consistent}};
}

json run_levi_sphere(const Scenario& sc, const Instance& in, json& result) {
  Building b(*in.field, in.h.n, in.caps.subspaces);
  auto pieces = standard_blocks(*in.field, in.h.n, sc.blocks);
  auto flags = levi_sphere_flags(b, pieces);

  // opposition inside s(L) must be a perfect matching
  bool perfect = true;
  json matching = json::array();
  for (int f : flags) {
    int count = 0, mate = -1;
    for (int g : flags)
      if (b.opposite(b.flags()[f], b.flags()[g])) {
        ++count;
        mate = g;
      }
    if (count != 1) perfect = false;
    json entry;
    entry["flag"] = flag_to_json(b, b.flags()[f]);
    entry["opposites_in_sphere"] = count;
    if (count == 1) entry["opposite"] = flag_to_json(b, b.flags()[mate]);
    matching.push_back(entry);
  }

  SimplicialComplex scx = order_complex_of_flags(b, flags);
  HomologyProfile hp = reduced_homology(scx);
  int sphere_dim = (int)sc.blocks.size() - 2;
  TopoClass tc = classify(hp, sphere_dim);
  bool class_ok = tc.tag == TopoTag::SphereBouquetLike && tc.degree == sphere_dim && tc.count == 1;

  result["blocks"] = sc.blocks;
  result["sphere_flags"] = (long long)flags.size();
  result["sphere_dim"] = sphere_dim;
  result["perfect_matching"] = perfect;
  result["matching"] = matching;
  result["homology"] = homology_to_json(hp);
  result["class"] = topo_class_to_json(tc);
  result["single_sphere"] = class_ok;
  return json{{"consistent", perfect && class_ok}};
}

json run_corpus(const Instance& in, json& result, std::uint64_t seed) {
  const Field& F = *in.field;
  int n = in.h.n;
  Building b(F, n, in.caps.subspaces);
  std::vector<Mat> ambient = gl_elements(F, n, in.caps.order);
  auto corpus = enumerate_subgroups(F, n, ambient, in.caps.corpus_group);

  long long mismatches = 0;
  json rows = json::array();
  for (const auto& rec : corpus) {
    FixedComplex fc = fixed_complex(b, inner_autos(rec.group));
    CrVerdict v = is_cr(fc);
    bool semisimple = is_semisimple_module(F, rec.group, in.caps.subspaces);
    bool oracle_agree = (v.cr == semisimple);

    json row;
    row["order"] = rec.group.order();
    json gens = json::array();
    for (const auto& g : rec.generators) {
      json gm = json::array();
      for (int i = 0; i < g.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < g.cols; ++j) r.push_back((long long)g.at(i, j));
        gm.push_back(r);
      }
      gens.push_back(gm);
    }
    row["generators"] = gens;
    row["cr"] = v.cr;
    row["semisimple_module"] = semisimple;
    row["stable_count"] = (long long)fc.stable.size();
    bool topo_agree = true;
    if (!fc.stable.empty()) {
      HomologyProfile hp = reduced_homology(order_complex(fc));
      TopoClass tc = classify(hp, fc.poset_dim());
      LeviSphereSearch ls = levi_sphere_containment(fc, in.caps.subspaces);
      row["class"] = topo_class_to_json(tc);
      row["levi_sphere_found"] = ls.status == LeviSphereSearch::Status::Found;
      bool not_point = tc.tag != TopoTag::PointLike;
      bool sphere = ls.status == LeviSphereSearch::Status::Found;
      topo_agree = (v.cr == not_point) && (v.cr == sphere);
    }
    row["agreement"] = oracle_agree && topo_agree;
    if (!(oracle_agree && topo_agree)) ++mismatches;
    rows.push_back(std::move(row));
  }

  // seeded spot check: the oracle verdict is conjugation invariant
  std::mt19937_64 rng(seed);
  long long spot_failures = 0;
  int spot_count = std::min<int>(8, (int)corpus.size());
  for (int t = 0; t < spot_count; ++t) {
    const auto& rec = corpus[rng() % corpus.size()];
    const Mat& g = ambient[rng() % ambient.size()];
    Mat gi = inverse_or_throw(F, g);
    std::vector<Mat> conj_gens;
    for (const auto& x : rec.generators.empty() ? rec.group.elements : rec.generators)
      conj_gens.push_back(mul(F, mul(F, g, x), gi));
    MatGroup conj = closure(F, n, conj_gens, in.caps.order);
    if (is_semisimple_module(F, rec.group, in.caps.subspaces) != is_semisimple_module(F, conj, in.caps.subspaces))
      ++spot_failures;
  }

  result["ambient_order"] = (long long)ambient.size();
  result["subgroups"] = rows;
  result["subgroup_count"] = (long long)corpus.size();
  result["mismatches"] = mismatches;
  result["conjugation_spot_failures"] = spot_failures;
  return json{{"consistent", mismatches == 0 && spot_failures == 0}};
}

}  // namespace

bool report_consistent(const json& report) {
  return report.value("consistent", false);
}

json run_scenario(const Scenario& sc, const Caps& caps_in, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  Caps caps = caps_in;
  if (sc.cap_order) caps.order = *sc.cap_order;
  if (sc.cap_subspaces) caps.subspaces = *sc.cap_subspaces;

  const Field& F = Field::get(sc.p, sc.m);
  Instance in;
  in.field = &F;
  in.caps = caps;
  std::vector<Mat> gens = raw_gens(F, sc.n, sc.gens, "generator");
  in.h = closure(F, sc.n, gens, caps.order);

  json report;
  report["id"] = sc.id;
  report["analysis"] = sc.analysis;
  report["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  report["caps"] = caps_to_json(caps);
  report["field"] = json{{"p", F.p()}, {"m", F.m()}, {"q", (long long)F.q()}, {"modulus", F.modulus()}};
  report["group"] = json{{"n", sc.n}, {"order", in.h.order()}, {"generator_count", (long long)sc.gens.size()}};

  json result;
  json verdict;
  if (sc.analysis == "cr")
    verdict = run_cr(in, result);
  else if (sc.analysis == "sigma_cr")
    verdict = run_sigma_cr(sc, in, result);
  else if (sc.analysis == "gsigma_cr")
    verdict = run_gsigma_cr(sc, in, result);
  else if (sc.analysis == "relative_cr")
    verdict = run_relative_cr(sc, in, result);
  else if (sc.analysis == "sigma_variant_cr")
    verdict = run_sigma_variant_cr(sc, in, result);
  else if (sc.analysis == "clifford")
    verdict = run_clifford(sc, in, result);
  else if (sc.analysis == "tau_search")
    verdict = run_tau_search(sc, in, result);
  else if (sc.analysis == "topology")
    verdict = run_topology(in, result);
  else if (sc.analysis == "levi_sphere")
    verdict = run_levi_sphere(sc, in, result);
  else if (sc.analysis == "corpus")
    verdict = run_corpus(in, result, seed);
  else
    throw Error(Errc::invalid_argument, "unknown analysis '" + sc.analysis + "'");

  report["result"] = result;
  report["consistent"] = verdict["consistent"];
  auto t1 = std::chrono::steady_clock::now();
  report["timings"] = json{{"total_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}};
  return report;
}

}  // namespace crb
