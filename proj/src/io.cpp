#include "bandq/io.hpp"

#include <fstream>

namespace bandq {

namespace {

json json_int(const Int& x) {
  static const Int lim = Int(1) << 53;
  if (x > -lim && x < lim) return (long long)x.convert_to<long long>();
  return x.str();
}

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(json_int(x));
  return a;
}

}  // namespace

MulTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw ParseError("table JSON needs fields n and table");
  int n = j.at("n").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::optional<int> identity;
  if (j.contains("identity") && !j.at("identity").is_null())
    identity = j.at("identity").get<int>();
  std::vector<std::string> names;
  if (j.contains("names") && !j.at("names").is_null())
    names = j.at("names").get<std::vector<std::string>>();
  return from_table(n, std::move(table), identity, std::move(names));
}

json table_to_json(const MulTable& t) {
  json j;
  j["n"] = t.n;
  j["table"] = t.table;
  j["identity"] = t.identity ? json(*t.identity) : json(nullptr);
  if (!t.names.empty())
    j["names"] = t.names;
  else
    j["names"] = nullptr;
  return j;
}

namespace {

MulTable from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  in >> j;
  return table_from_json(j);
}

int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer: " + s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer: " + s);
  }
}

// Splits "a,b" at the top-level comma (respecting parentheses).
std::pair<std::string, std::string> split_args(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0)
      return {s.substr(0, i), s.substr(i + 1)};
  }
  throw ParseError("expected two arguments in: " + s);
}

}  // namespace

MulTable build_from_spec(const std::string& spec0) {
  std::string spec = spec0;
  // trim
  while (!spec.empty() && spec.front() == ' ') spec.erase(spec.begin());
  while (!spec.empty() && spec.back() == ' ') spec.pop_back();
  if (spec.empty()) throw ParseError("empty constructor spec");

  if (spec[0] == '@') return from_file(spec.substr(1));
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    return from_file(spec);

  auto starts = [&](const std::string& p) {
    return spec.rfind(p, 0) == 0;
  };
  if (spec == "b5") return b5_example();
  if (starts("prod(") && spec.back() == ')') {
    auto [a, b] = split_args(spec.substr(5, spec.size() - 6));
    return direct_product(build_from_spec(a), build_from_spec(b));
  }
  if (starts("adjoin1(") && spec.back() == ')')
    return adjoin_identity(build_from_spec(spec.substr(8, spec.size() - 9)));

  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("unrecognized constructor spec: " + spec);
  std::string head = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (head == "left_zero") return left_zero(parse_int(arg));
  if (head == "right_zero") return right_zero(parse_int(arg));
  if (head == "chain") return chain_semilattice(parse_int(arg));
  if (head == "signs") return sign_face_monoid(parse_int(arg));
  if (head == "free_lrb1") return free_lrb_with_identity(parse_int(arg));
  if (head == "rect") {
    auto x = arg.find('x');
    if (x == std::string::npos) throw ParseError("rect wants MxN");
    return rectangular(parse_int(arg.substr(0, x)),
                       parse_int(arg.substr(x + 1)));
  }
  throw ParseError("unrecognized constructor spec: " + spec);
}

json lattice_to_json(const MulTable& t, const SupportLattice& lat) {
  json j;
  j["m"] = lat.m;
  j["meet"] = lat.meet;
  j["rank"] = lat.rank;
  j["mobius"] = lat.mobius;
  j["sigma"] = lat.sigma;
  j["classes"] = lat.classes;
  j["basepoints"] = lat.basepoint;
  json names = json::array();
  for (int X = 0; X < lat.m; ++X) names.push_back(lat.name(t, X));
  j["names"] = names;
  return j;
}

json quiver_to_json(const MulTable& t, const Quiver& q) {
  json j;
  j["vertices"] = q.num_vertices;
  json arrows = json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"name", a.name},
                      {"src", a.src},
                      {"dst", a.dst},
                      {"label", a.label},
                      {"label_name", t.name(a.label)},
                      {"kind", a.kind == ArrowKind::RisingR ? "R" : "L"}});
  j["arrows"] = arrows;
  j["acyclic"] = q.is_acyclic();
  return j;
}

json analyze_report(const MulTable& t) {
  json j;
  j["schema"] = "bandq.analyze.v1";
  j["n"] = t.n;
  BandReport br = validate(t);
  j["flags"] = {{"semigroup", br.is_semigroup},
                {"band", br.is_band},
                {"left_regular", br.is_left_regular},
                {"monoid", br.is_monoid}};
  if (br.failing_triple) {
    auto [a, b, c] = *br.failing_triple;
    j["failing_triple"] = {a, b, c};
  }
  if (!br.is_band) return j;

  SupportLattice lat = support_lattice(t);
  j["lattice"] = lattice_to_json(t, lat);
  auto wit = find_disconnect(t, lat);
  j["connected"] = !wit.has_value();
  if (wit) {
    json w;
    w["support"] = wit->X;
    w["side"] = wit->side == Side::R ? "R" : "L";
    json comps = json::array();
    for (int c = 0; c < wit->graph.num_components; ++c) {
      json comp = json::array();
      for (size_t i = 0; i < wit->graph.vertices.size(); ++i)
        if (wit->graph.component[i] == c)
          comp.push_back(t.name(wit->graph.vertices[i]));
      comps.push_back(comp);
    }
    w["components"] = comps;
    j["disconnect_witness"] = w;
  }
  auto unit = find_identity(t, lat);
  j["unit"] = unit ? vec_to_json(unit->c) : json(nullptr);
  IntLattice J = jradical(t, lat);
  j["jradical_rank"] = J.rank();
  j["nilpotency_index"] = nilpotency_index(t, lat, J);
  j["brown_bound"] = brown_bound(lat);
  return j;
}

namespace {

json idems_to_json(const MulTable& t, const IdempotentSystem& sys) {
  json j;
  j["basepoints"] = sys.basepoints;
  json es = json::array();
  for (const auto& e : sys.idems) es.push_back(vec_to_json(e.c));
  j["idempotents"] = es;
  j["nilpotency_index"] = sys.nilpotency;
  j["lrb_fast_path"] = sys.used_lrb_fast_path;
  (void)t;
  return j;
}

}  // namespace

json present_report(const MulTable& t, const PipelineOptions& opt) {
  json j;
  j["schema"] = "bandq.present.v1";
  SupportLattice lat = support_lattice(t);
  IdempotentSystem idems =
      lift_idempotents(t, lat, opt.force_generic_idempotents);
  Quiver q = build_quiver(t, lat);
  Presentation pres =
      compute_presentation(t, lat, idems, q, opt.truncation_override);
  minimal_relations(t, lat, pres);
  IsoCertificate iso = verify_isomorphism(t, lat, pres);

  j["lattice"] = lattice_to_json(t, lat);
  j["idempotent_system"] = idems_to_json(t, idems);
  j["quiver"] = quiver_to_json(t, q);
  j["cutoff"] = pres.cutoff;
  j["truncation_rank"] = pres.trunc.rank();
  j["kernel_rank"] = pres.kernel_lattice.rank();
  json psi = json::object();
  for (int X = 0; X < lat.m; ++X) {
    AlgElem e = idems.idems[X];
    psi["ε" + std::to_string(X)] = alg_to_string(t, e);
  }
  for (const auto& a : q.arrows)
    psi[a.name] = alg_to_string(t, psi_arrow(t, lat, idems, a));
  j["psi"] = psi;
  j["certificates"] = {{"surjective", pres.cert.surjective},
                       {"kernel_in_j2", pres.cert.i_in_j2},
                       {"jn_in_kernel", pres.cert.jn_in_i},
                       {"rank_match", pres.cert.rank_match},
                       {"ideal_closure", pres.ideal_closure_ok},
                       {"quotient_free_of_rank_n", iso.quotient_free_of_rank_n},
                       {"multiplicative", iso.multiplicative}};
  json divisors = json::array();
  for (const auto& d : iso.elementary_divisors) divisors.push_back(json_int(d));
  j["elementary_divisors"] = divisors;
  json groups = json::array();
  for (const auto& g : pres.min_generators) {
    json gg;
    gg["src"] = g.src;
    gg["dst"] = g.dst;
    json vecs = json::array();
    for (const auto& v : g.gens) vecs.push_back(vec_to_json(v));
    gg["generators"] = vecs;
    groups.push_back(gg);
  }
  j["min_relations"] = groups;
  j["relations_text"] = relation_report(t, pres);
  j["hereditary"] = hereditary_test(pres);
  json tor = json::array();
  for (const auto& [pair, e] : tor1_table(t, lat, pres))
    tor.push_back({{"src", pair.first},
                   {"dst", pair.second},
                   {"arrows", e.arrows},
                   {"lattice_rank", e.lattice_rank},
                   {"torsion_free", e.torsion_free}});
  j["tor1"] = tor;
  return j;
}

json cw_report_json(const MulTable& t, const PipelineOptions& opt) {
  json j;
  j["schema"] = "bandq.cw.v1";
  SupportLattice lat = support_lattice(t);
  IdempotentSystem idems =
      lift_idempotents(t, lat, opt.force_generic_idempotents);
  Quiver q = build_quiver(t, lat);
  CwReport rep = verify_cw_theorem(t, lat, idems, q);
  j["graded"] = rep.graded_ok;
  j["two_cover"] = rep.two_cover_ok;
  j["quiver_is_hasse"] = rep.quiver_is_hasse;
  j["sign_vector"] = rep.sign_vector ? json(*rep.sign_vector) : json(nullptr);
  j["kernel_equals_sum_of_2paths"] = rep.kernel_equals_r;
  j["quotient_rank"] = rep.quotient_rank;
  return j;
}

std::string quiver_dot_spec(const MulTable& t) {
  SupportLattice lat = support_lattice(t);
  Quiver q = build_quiver(t, lat);
  return quiver_dot(t, lat, q);
}

json verify_report(const MulTable& t, const PipelineOptions& opt) {
  json checks = json::array();
  auto push = [&](const std::string& name, const char* status) {
    checks.push_back({{"check", name}, {"status", status}});
  };
  auto run = [&](const std::string& name, auto&& fn) {
    try {
      push(name, fn() ? "pass" : "fail");
    } catch (const Error& e) {
      checks.push_back(
          {{"check", name}, {"status", "fail"}, {"error", e.what()}});
    }
  };

  BandReport br = validate(t);
  if (!br.is_band) {
    push("band_axioms", "fail");
    json j;
    j["schema"] = "bandq.verify.v1";
    j["checks"] = checks;
    return j;
  }
  push("band_axioms", "pass");
  run("clifford", [&] { return check_clifford(t); });
  run("swallow_delete", [&] { return check_swallow_delete(t); });

  SupportLattice lat = support_lattice(t);
  run("tau_multiplicative", [&] {
    for (int a = 0; a < t.n; ++a)
      for (int b = 0; b < t.n; ++b) {
        auto ta = tau_vector(lat, a), tb = tau_vector(lat, b);
        auto tab = tau_vector(lat, t.mul(a, b));
        for (int Y = 0; Y < lat.m; ++Y)
          if (ta[Y] * tb[Y] != tab[Y]) return false;
      }
    return true;
  });
  run("unit_iff_connected", [&] {
    // find_identity throws TheoremViolation on disagreement
    find_identity(t, lat);
    return true;
  });
  run("brown_bound", [&] {
    IntLattice J = jradical(t, lat);
    return nilpotency_index(t, lat, J) <= brown_bound(lat);
  });

  bool connected = is_connected(t, lat);
  if (!connected) {
    push("presentation", "skipped (disconnected)");
    json j;
    j["schema"] = "bandq.verify.v1";
    j["checks"] = checks;
    return j;
  }

  try {
    IdempotentSystem idems =
        lift_idempotents(t, lat, opt.force_generic_idempotents);
    push("idempotent_postconditions", "pass");
    Quiver q = build_quiver(t, lat);
    Presentation pres =
        compute_presentation(t, lat, idems, q, opt.truncation_override);
    push("admissibility_certificates", "pass");
    run("tor1_triple_agreement", [&] {
      for (const auto& [pair, e] : tor1_table(t, lat, pres))
        if (e.arrows != e.lattice_rank || !e.torsion_free) return false;
      return true;
    });
    run("iso_certificate",
        [&] { return verify_isomorphism(t, lat, pres).pass; });
    run("minimal_relations_ideal_closure", [&] {
      minimal_relations(t, lat, pres);
      return pres.ideal_closure_ok;
    });
    run("hereditary_consistency", [&] {
      hereditary_test(pres);  // throws on inconsistency
      return true;
    });
    if (validate(t).is_left_regular) {
      bool graded = false;
      bool tc = two_cover_check(t, lat, &graded);
      bool hasse = quiver_is_hasse(q, lat);
      if (tc && hasse)
        run("cw_theorem", [&] {
          return verify_cw_theorem(t, lat, idems, q).kernel_equals_r;
        });
      else
        push("cw_theorem", "skipped (not declared-CW shaped)");
    }
  } catch (const Error& e) {
    checks.push_back({{"check", "presentation_pipeline"},
                      {"status", "fail"},
                      {"error", e.what()}});
  }

  json j;
  j["schema"] = "bandq.verify.v1";
  j["checks"] = checks;
  return j;
}

bool verify_all_passed(const json& report) {
  for (const auto& c : report.at("checks"))
    if (c.at("status") == "fail") return false;
  return true;
}

}  // namespace bandq
