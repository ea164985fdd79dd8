#include "cuspcert/replay.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcert/congruence.hpp"
#include "cuspcert/cusps.hpp"
#include "cuspcert/default_config.hpp"
#include "cuspcert/error.hpp"
#include "cuspcert/gassmann.hpp"
#include "cuspcert/splitting.hpp"
#include "cuspcert/sweeps.hpp"

namespace cuspcert {

using report::Json;
using RawJson = nlohmann::json;

std::string_view default_config_text() { return kDefaultReplayConfig; }

namespace {

std::uint64_t parse_prime_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(key, &used);
    if (used != key.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a prime as object key, got '" + key + "'");
  }
}

template <class T>
T get_or(const RawJson& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const RawJson::exception& e) {
    throw ParseError(std::string("config field '") + key + "': " + e.what());
  }
}

ZPoly poly_from_json(const RawJson& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      c.emplace_back(x.get<long>());
    } else if (x.is_string()) {
      c.emplace_back(x.get<std::string>());
    } else {
      throw ParseError("polynomial coefficient must be an integer: " + x.dump());
    }
  }
  return ZPoly(std::move(c));
}

// Smallest p and f with p^f = q; throws DomainError if q is not a prime power.
std::pair<std::uint64_t, int> prime_power(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int f = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++f;
    }
    if (r != 1) break;
    return {p, f};
  }
  throw DomainError(std::to_string(q) + " is not a prime power");
}

FieldPtr field_for_q(std::uint64_t q) {
  const auto [p, f] = prime_power(q);
  return FiniteField::extension(p, f);
}

Json ideal_json(const PrimeIdeal& ideal) {
  Json factor = Json::array();
  for (auto c : ideal.local_factor.coeffs()) factor.push_back(c);
  return Json{{"label", ideal.label()},
              {"local_factor", ideal.local_factor.to_string("t")},
              {"local_factor_coeffs", factor},
              {"inertia_degree", ideal.inertia_degree},
              {"ramification_degree", ideal.ramification_degree}};
}

Json split_json(const std::vector<PrimeIdeal>& ideals) {
  Json out = Json::array();
  for (const auto& i : ideals) out.push_back(ideal_json(i));
  return out;
}

std::vector<int> inertia_degrees(const std::vector<PrimeIdeal>& ideals) {
  std::vector<int> d;
  for (const auto& i : ideals) d.push_back(i.inertia_degree);
  std::sort(d.begin(), d.end());
  return d;
}

Json prep_json(const PRepCertificate& cert) {
  Json peripherals = Json::array();
  for (const auto& pc : cert.peripherals) {
    Json elements = Json::array();
    for (const auto& m : pc.image_elements) elements.push_back(report::matrix(m));
    Json entry{{"meridian_image", report::matrix(pc.meridian_image)},
               {"longitude_image", report::matrix(pc.longitude_image)},
               {"meridian_parabolic", pc.meridian_parabolic},
               {"longitude_parabolic", pc.longitude_parabolic},
               {"image_order", pc.image_order()},
               {"image_elements", elements},
               {"nontrivial", pc.nontrivial},
               {"all_nontrivial_parabolic", pc.all_nontrivial_parabolic}};
    if (pc.order_is_p) entry["order_is_p"] = *pc.order_is_p;
    entry["ok"] = pc.ok();
    peripherals.push_back(std::move(entry));
  }
  return Json{{"surjectivity",
               {{"closure_size", cert.surjectivity.closure_size},
                {"group_order", cert.surjectivity.group_order},
                {"surjective", cert.surjectivity.surjective}}},
              {"peripherals", peripherals},
              {"overall", cert.overall}};
}

Json decomposition_json(const FiniteGroup& g, const CuspDecomposition& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries)
    entries.push_back(Json{{"representative", report::matrix(g.element(e.representative))},
                           {"representative_id", e.representative},
                           {"local_degree", e.local_degree},
                           {"coset_count", e.coset_count}});
  return Json{{"cover_order", d.cover_order},
              {"peripheral_order", d.peripheral_order},
              {"index", d.index()},
              {"cusp_count", d.cusp_count()},
              {"local_degree_sum", d.local_degree_sum()},
              {"entries", entries}};
}

Json intersection_json(const IntersectionVector& v) { return Json(v.counts); }

Json class_table_json(const ConjClassTable& cc, const FiniteGroup& g) {
  Json out = Json::array();
  for (std::size_t i = 0; i < cc.count(); ++i)
    out.push_back(Json{{"representative", report::matrix(g.element(cc.representatives[i]))},
                       {"size", cc.sizes[i]},
                       {"element_order", g.element_order(cc.representatives[i])}});
  return out;
}

Json pair_json(const FiniteGroup& g, const GassmannPair& pair) {
  return Json{{"first", report::subgroup(g, pair.first)},
              {"second", report::subgroup(g, pair.second)},
              {"intersection_vector", intersection_json(pair.vector)},
              {"conjugators_checked", pair.conjugators_checked},
              {"conjugate", false}};
}

Subgroup peripheral_subgroup(const CongruenceRep& rep, const FiniteGroup& g, std::size_t which = 0) {
  const auto& pair = rep.spec->peripherals.at(which);
  const ElementId gens[] = {g.id_of(rep.image_of(pair.meridian)), g.id_of(rep.image_of(pair.longitude))};
  return subgroup_closure(g, gens);
}

// Accumulates checks, printed-value comparisons and discrepancies for one run.
class Ledger {
 public:
  void check(const std::string& id, bool pass) {
    checks_.push_back(Json{{"id", id}, {"pass", pass}});
    all_pass_ = all_pass_ && pass;
  }

  // kind: "asserted" claims also become checks; "display" mismatches become
  // discrepancies; "informational" comparisons are recorded only.
  void printed(const std::string& id, const std::string& kind, Json printed, Json recomputed, bool match,
             const std::string& note = {}) {
    Json entry{{"id", id}, {"source", "paper"}, {"kind", kind}, {"printed", printed}, {"recomputed", recomputed},
               {"match", match}};
    if (!note.empty()) entry["note"] = note;
    paper_values_.push_back(entry);
    if (kind == "asserted") check("printed:" + id, match);
    if (kind == "display" && !match) {
      Json d{{"id", id}, {"printed", printed}, {"recomputed", recomputed}};
      if (!note.empty()) d["note"] = note;
      discrepancies_.push_back(std::move(d));
    }
  }

  [[nodiscard]] bool all_pass() const { return all_pass_; }
  [[nodiscard]] const Json& checks() const { return checks_; }
  [[nodiscard]] const Json& paper_values() const { return paper_values_; }
  [[nodiscard]] const Json& discrepancies() const { return discrepancies_; }

 private:
  Json checks_ = Json::array();
  Json paper_values_ = Json::array();
  Json discrepancies_ = Json::array();
  bool all_pass_ = true;
};

Json int_matrix_json(const std::array<long long, 4>& m) {
  return Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})});
}

// Compares a printed matrix with a recomputed image up to sign.
void compare_printed_matrix(Ledger& ledger, const std::string& id, const std::array<long long, 4>& printed,
                            const ProjMat2& recomputed) {
  const auto& field = recomputed.field();
  try {
    const ProjMat2 p = make_proj(field, printed[0], printed[1], printed[2], printed[3]);
    ledger.printed(id, "display", int_matrix_json(printed), report::matrix(recomputed), p == recomputed);
  } catch (const DomainError& e) {
    ledger.printed(id, "display", int_matrix_json(printed), report::matrix(recomputed), false,
                 std::string("printed matrix is not in SL(2): ") + e.what());
  }
}

std::string poly_text(const ZPoly& f) { return f.to_string("x"); }

// The manifold document with its min_poly replaced, reparsed from the original text
// so entries are reduced modulo the replacement.
std::optional<ManifoldSpec> spec_with_modulus(std::string_view spec_text, const ZPoly& modulus) {
  if (!modulus.is_monic()) return std::nullopt;
  RawJson doc = RawJson::parse(spec_text);
  RawJson coeffs = RawJson::array();
  for (const auto& c : modulus.coeffs()) coeffs.push_back(c.fits_slong_p() ? RawJson(c.get_si()) : RawJson(c.get_str()));
  doc["field"]["min_poly"] = coeffs;
  return parse_spec(doc.dump());
}

}  // namespace

ReplayConfig parse_config(std::string_view text) {
  RawJson doc;
  try {
    doc = RawJson::parse(text);
  } catch (const RawJson::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  ReplayConfig cfg;
  if (doc.contains("ideals")) {
    cfg.ideals.clear();
    for (const auto& i : doc.at("ideals"))
      cfg.ideals.push_back({get_or<std::uint64_t>(i, "p", 0), get_or<std::uint64_t>(i, "root", 0)});
  }
  if (doc.contains("witnesses"))
    for (const auto& [key, list] : doc.at("witnesses").items()) {
      auto& slot = cfg.witnesses[parse_prime_key(key)];
      for (const auto& w : list)
        slot.push_back(
            {Word(get_or<std::string>(w, "word", "")), report::parse_int_matrix(w.at("target"))});
    }
  if (doc.contains("gassmann")) {
    cfg.gassmann_q = get_or<std::uint64_t>(doc["gassmann"], "q", cfg.gassmann_q);
    cfg.gassmann_index = get_or<std::size_t>(doc["gassmann"], "index", cfg.gassmann_index);
  }
  if (doc.contains("index_subgroup")) {
    cfg.index_subgroup_q = get_or<std::uint64_t>(doc["index_subgroup"], "q", cfg.index_subgroup_q);
    cfg.index_subgroup_index = get_or<std::size_t>(doc["index_subgroup"], "index", cfg.index_subgroup_index);
  }
  if (doc.contains("sweep")) {
    cfg.sweep_p_max = get_or<std::uint64_t>(doc["sweep"], "p_max", cfg.sweep_p_max);
    cfg.sweep_f_set = get_or<std::vector<int>>(doc["sweep"], "f_set", cfg.sweep_f_set);
  }
  if (doc.contains("printed")) {
    const auto& pr = doc.at("printed");
    if (pr.contains("min_poly")) cfg.printed.min_poly = poly_from_json(pr.at("min_poly"));
    if (pr.contains("discriminant")) cfg.printed.discriminant = BigInt(pr.at("discriminant").get<std::string>());
    if (pr.contains("inertia_degrees"))
      for (const auto& [key, v] : pr.at("inertia_degrees").items())
        cfg.printed.inertia_degrees[parse_prime_key(key)] = v.get<std::vector<int>>();
    if (pr.contains("images"))
      for (const auto& [key, mats] : pr.at("images").items())
        for (const auto& [name, m] : mats.items())
          cfg.printed.images[parse_prime_key(key)][name] = report::parse_int_matrix(m);
    if (pr.contains("group_orders"))
      for (const auto& [key, v] : pr.at("group_orders").items())
        cfg.printed.group_orders[parse_prime_key(key)] = v.get<std::size_t>();
    if (pr.contains("gassmann_subgroup_order"))
      cfg.printed.gassmann_subgroup_order = pr.at("gassmann_subgroup_order").get<std::size_t>();
  }
  return cfg;
}

ReplayResult replay_all(std::string_view spec_text, std::string_view config_text) {
  Json rep;
  rep["tool"] = report::kToolName;
  rep["version"] = report::kToolVersion;
  rep["spec_sha256"] = report::sha256_hex(spec_text);
  rep["config_sha256"] = report::sha256_hex(config_text);
  Json stages = Json::object();
  Ledger ledger;

  auto finish = [&](bool complete, int exit_code, const std::string& error) {
    rep["stages"] = stages;
    rep["paper_values"] = ledger.paper_values();
    rep["discrepancies"] = ledger.discrepancies();
    rep["checks"] = ledger.checks();
    rep["complete"] = complete;
    if (!error.empty()) rep["error"] = error;
    rep["overall"] = complete && ledger.all_pass() ? "pass" : "fail";
    return ReplayResult{rep, exit_code, error};
  };

  try {
    const ReplayConfig cfg = parse_config(config_text);
    const auto spec = std::make_shared<const ManifoldSpec>(parse_spec(spec_text));
    const auto& f = spec->min_poly;
    rep["spec"] = Json{{"name", spec->name}, {"min_poly", report::coeffs(*f)}, {"min_poly_text", poly_text(*f)},
                       {"metadata", spec->metadata}};

    // Field data: discriminant and the printed minimal polynomial.
    const BigInt disc = poly_discriminant(*f);
    {
      Json s{{"discriminant", report::big(disc)}};
      if (cfg.printed.discriminant) {
        const bool eq = disc == *cfg.printed.discriminant;
        s["printed_discriminant"] = cfg.printed.discriminant->get_str();
        s["equal_to_printed"] = eq;
        ledger.printed("field.discriminant", "informational", cfg.printed.discriminant->get_str(), report::big(disc), eq,
                     "disc(f) may differ from the field discriminant by a square; recorded, not asserted");
      }
      if (cfg.printed.min_poly) {
        const ZPoly& printed = *cfg.printed.min_poly;
        Json detail{{"printed", report::coeffs(printed)}, {"printed_text", poly_text(printed)}};
        bool consistent = false;
        if (const auto alt = spec_with_modulus(spec_text, printed)) {
          const auto cert = verify_presentation_exact(*alt);
          consistent = cert.ok();
          detail["printed_discriminant"] = report::big(poly_discriminant(printed));
          detail["generator_determinants_one_mod_printed"] = cert.determinants_ok();
          detail["relators_trivial_mod_printed"] = cert.relators_ok();
        }
        detail["printed_consistent_with_generators"] = consistent;
        s["printed_min_poly"] = detail;
        ledger.printed("field.min_poly", "display", poly_text(printed), poly_text(*f), printed == *f,
                     printed == *f ? std::string{}
                                   : std::string("the printed polynomial is not satisfied by the generator matrices "
                                                 "(determinants/relators fail modulo it); the manifold file uses the polynomial "
                                                 "the matrices satisfy"));
      }
      stages["field"] = s;
    }

    // Splitting at the configured primes.
    {
      Json s = Json::array();
      for (const auto& choice : cfg.ideals) {
        const auto ideals = split_prime(f, choice.p);
        const auto degrees = inertia_degrees(ideals);
        const auto roots = find_linear_roots(*f, choice.p);
        Json entry{{"p", choice.p}, {"ideals", split_json(ideals)}, {"inertia_degrees", degrees},
                   {"degree_sum", std::accumulate(degrees.begin(), degrees.end(), 0)}, {"linear_roots", roots}};
        ledger.check("splitting." + std::to_string(choice.p) + ".degree_sum",
                     std::accumulate(degrees.begin(), degrees.end(), 0) == f->degree());
        if (const auto it = cfg.printed.inertia_degrees.find(choice.p); it != cfg.printed.inertia_degrees.end()) {
          auto printed = it->second;
          std::sort(printed.begin(), printed.end());
          ledger.printed("splitting." + std::to_string(choice.p) + ".inertia_degrees", "asserted", printed, degrees,
                       printed == degrees);
        }
        ledger.check("splitting." + std::to_string(choice.p) + ".ideal_t_minus_" + std::to_string(choice.root),
                     std::find(roots.begin(), roots.end(), choice.root) != roots.end());
        s.push_back(std::move(entry));
      }
      stages["splitting"] = s;
    }

    // Exact presentation over Z[t]/(f).
    {
      const auto cert = verify_presentation_exact(*spec);
      Json dets = Json::array();
      for (const auto& d : cert.determinants)
        dets.push_back(Json{{"generator", std::string(1, d.name)}, {"value", report::coeffs(d.det.rep())},
                            {"is_one", d.is_one}});
      Json rels = Json::array();
      for (const auto& r : cert.relators) rels.push_back(Json{{"word", r.word.letters()}, {"sign", r.sign}});
      stages["presentation"] = Json{{"word_order", to_string(cert.order)}, {"determinants", dets}, {"relators", rels},
                                    {"pass", cert.ok()}};
      ledger.check("presentation.determinants_one", cert.determinants_ok());
      ledger.check("presentation.relators_plus_minus_identity", cert.relators_ok());
    }

    // Congruence representations, surjectivity, p-rep certificates, witnesses.
    std::map<std::uint64_t, std::pair<CongruenceRep, GroupPtr>> reps;
    {
      Json s = Json::array();
      for (const auto& choice : cfg.ideals) {
        const std::string tag = std::to_string(choice.p);
        auto rep_p = build_congruence_rep(spec, degree_one_ideal(f, choice.p, choice.root));
        const auto group = enumerate_group(rep_p.field);
        Json images = Json::object();
        for (const auto& [name, m] : rep_p.images) images[std::string(1, name)] = report::matrix(m);
        const auto prep = certify_prep(rep_p, group);
        ledger.check("congruence." + tag + ".surjective", prep.surjectivity.surjective);
        ledger.check("congruence." + tag + ".prep", prep.overall);
        if (const auto it = cfg.printed.group_orders.find(choice.p); it != cfg.printed.group_orders.end())
          ledger.printed("congruence." + tag + ".group_order", "asserted", it->second, prep.surjectivity.closure_size,
                       it->second == prep.surjectivity.closure_size);

        if (const auto it = cfg.printed.images.find(choice.p); it != cfg.printed.images.end()) {
          for (const auto& [name, printed] : it->second) {
            std::optional<ProjMat2> recomputed;
            if (name.size() == 1 && rep_p.images.contains(name[0])) {
              recomputed = rep_p.images.at(name[0]);
            } else if (!spec->peripherals.empty() && (name == "mu" || name == "lambda")) {
              const auto& pp = spec->peripherals.front();
              recomputed = rep_p.image_of(name == "mu" ? pp.meridian : pp.longitude);
            }
            if (recomputed) compare_printed_matrix(ledger, "congruence." + tag + ".image." + name, printed, *recomputed);
          }
        }

        Json witnesses = Json::array();
        if (const auto it = cfg.witnesses.find(choice.p); it != cfg.witnesses.end()) {
          for (const auto& w : it->second) {
            const auto target = make_proj(rep_p.field, w.target[0], w.target[1], w.target[2], w.target[3]);
            const bool ok = verify_generation_witness(rep_p, w.word, target);
            witnesses.push_back(Json{{"word", w.word.letters()}, {"target", report::matrix(target)},
                                     {"image", report::matrix(rep_p.image_of(w.word))}, {"valid", ok}});
            ledger.check("congruence." + tag + ".witness." + w.word.letters(), ok);
          }
          // Lemma chain: the witnessed T and U generate the whole group.
          const ElementId tu[] = {group->id_of(unipotent_upper(rep_p.field)), group->id_of(unipotent_lower(rep_p.field))};
          witnesses.push_back(Json{{"unipotent_closure_size", subgroup_closure(*group, tu).order()}});
        }

        s.push_back(Json{{"ideal", rep_p.ideal.label()},
                         {"q", rep_p.field->order()},
                         {"images", images},
                         {"relators_trivial", true},
                         {"prep", prep_json(prep)},
                         {"witnesses", witnesses}});
        reps.emplace(choice.p, std::make_pair(std::move(rep_p), group));
      }
      stages["congruence"] = s;
    }

    auto rep_for_q = [&](std::uint64_t q) -> const std::pair<CongruenceRep, GroupPtr>* {
      for (const auto& [p, entry] : reps)
        if (entry.first.field->order() == q) return &entry;
      return nullptr;
    };
    auto group_for_q = [&](std::uint64_t q) {
      if (const auto* e = rep_for_q(q)) return e->second;
      return enumerate_group(field_for_q(q));
    };

    // Gassmann pair search.
    std::vector<GassmannPair> pairs;
    GroupPtr gassmann_group = group_for_q(cfg.gassmann_q);
    {
      const auto& g = *gassmann_group;
      const auto cc = conjugacy_classes(g);
      pairs = find_gassmann_pairs(g, cfg.gassmann_index);
      const std::size_t target = g.order() / cfg.gassmann_index;
      const auto classes = subgroup_conjugacy_classes(g, enumerate_subgroups(g, target));
      Json pj = Json::array();
      for (const auto& p : pairs) pj.push_back(pair_json(g, p));
      Json class_sizes = Json::array();
      for (const auto& c : classes) class_sizes.push_back(c.members.size());
      stages["gassmann"] = Json{{"q", cfg.gassmann_q},
                                {"index", cfg.gassmann_index},
                                {"group_order", g.order()},
                                {"conjugacy_classes", class_table_json(cc, g)},
                                {"subgroup_order", target},
                                {"subgroup_classes", classes.size()},
                                {"subgroup_class_sizes", class_sizes},
                                {"pairs", pj}};
      ledger.check("gassmann.exactly_one_pair", pairs.size() == 1);
      bool pair_ok = !pairs.empty();
      for (const auto& p : pairs)
        pair_ok = pair_ok && p.first.order() == p.second.order() && p.conjugators_checked == g.order() &&
                  intersection_vector(cc, p.first) == intersection_vector(cc, p.second) &&
                  !find_conjugator(g, p.first, p.second);
      ledger.check("gassmann.almost_conjugate_not_conjugate", pair_ok);
      if (cfg.printed.gassmann_subgroup_order)
        ledger.printed("gassmann.subgroup_order", "asserted", *cfg.printed.gassmann_subgroup_order,
                     pairs.empty() ? 0 : pairs.front().first.order(),
                     !pairs.empty() && pairs.front().first.order() == *cfg.printed.gassmann_subgroup_order);
    }

    // Index-n subgroup of PSL(2, q') and single-cusp persistence.
    {
      const auto* entry = rep_for_q(cfg.index_subgroup_q);
      const GroupPtr group = group_for_q(cfg.index_subgroup_q);
      const auto& g = *group;
      const std::size_t target = g.order() / cfg.index_subgroup_index;
      const auto classes = subgroup_conjugacy_classes(g, enumerate_subgroups(g, target));
      Json s{{"q", cfg.index_subgroup_q}, {"index", cfg.index_subgroup_index}, {"subgroup_order", target},
             {"subgroup_classes", classes.size()}};
      ledger.check("index_subgroup.exists", !classes.empty());
      if (entry && !spec->peripherals.empty()) {
        const Subgroup pbar = peripheral_subgroup(entry->first, g);
        s["peripheral_image"] = report::subgroup(g, pbar);
        Json per = Json::array();
        for (const auto& c : classes) {
          const auto persistence = cusp_persistence(g, c.representative, pbar);
          const bool transversal = persistence.remains() && common_transversal_check(g, c.representative, pbar);
          per.push_back(Json{{"subgroup", report::subgroup(g, c.representative)},
                             {"class_size", c.members.size()},
                             {"intersection_with_peripheral", intersect(pbar, c.representative).order()},
                             {"single_double_coset", persistence.single_double_coset},
                             {"index_matches", persistence.index_matches},
                             {"product_covers", persistence.product_covers},
                             {"common_transversal", transversal}});
          ledger.check("index_subgroup.cusp_remains." + std::to_string(c.representative.ids().front()),
                       persistence.remains());
          ledger.check("index_subgroup.transversal." + std::to_string(c.representative.ids().front()), transversal);
        }
        s["classes"] = per;
      }
      stages["index_subgroup"] = s;
    }

    // Cusp decompositions for the Gassmann subgroups.
    std::vector<std::pair<std::uint64_t, std::size_t>> bound_inputs;
    {
      Json s = Json::object();
      const auto* entry = rep_for_q(cfg.gassmann_q);
      if (entry && !spec->peripherals.empty()) {
        const auto& g = *gassmann_group;
        const Subgroup pbar = peripheral_subgroup(entry->first, g);
        s["peripheral_image"] = report::subgroup(g, pbar);
        Json covers = Json::array();
        for (const auto& p : pairs)
          for (const Subgroup* h : {&p.first, &p.second}) {
            const auto d = cusp_decomposition(g, *h, pbar);
            const bool remains = cusp_remains(g, *h, pbar);
            covers.push_back(Json{{"subgroup", report::subgroup(g, *h)}, {"decomposition", decomposition_json(g, d)},
                                  {"cusp_remains", remains}});
            ledger.check("cusps.gassmann_cover_single_cusp." + std::to_string(h->ids().front()),
                         remains && d.cusp_count() == 1 && d.entries.front().local_degree == d.index());
          }
        s["gassmann_covers"] = covers;
        const auto normal = cusp_decomposition(g, trivial_subgroup(g), pbar);
        const std::size_t normal_count = normal_cover_cusp_count(g, pbar);
        s["normal_cover"] = decomposition_json(g, normal);
        s["normal_cover_cusp_count"] = normal_count;
        ledger.check("cusps.normal_cover_sum_identity",
                     normal.local_degree_sum() == g.order() && normal_count * pbar.order() == g.order());
      }
      for (const auto& [p, e] : reps)
        if (!spec->peripherals.empty()) bound_inputs.emplace_back(e.first.field->order(), peripheral_subgroup(e.first, *e.second).order());
      stages["cusps"] = s;
    }

    // Cusp lower bounds, including the maximal abelian (Borel) image at q = 7.
    {
      Json s = Json::array();
      bound_inputs.emplace_back(7, 21);
      for (const auto& [q, order] : bound_inputs) {
        const auto b = cusp_lower_bound_check(q, order);
        s.push_back(Json{{"q", q}, {"peripheral_order", order}, {"exact_count", b.exact_count}, {"bound", b.bound},
                         {"pass", b.pass}});
        ledger.check("cusp_bound." + std::to_string(q) + "." + std::to_string(order), b.pass);
      }
      stages["cusp_bounds"] = s;
    }

    // Sweeps over primes 5 mod 168.
    {
      const auto div_rows = sweep_n_divisibility(cfg.sweep_p_max, cfg.sweep_f_set);
      const NthPowerOracle oracle;
      const auto power = sweep_nth_power_generation(oracle, cfg.sweep_p_max, cfg.sweep_f_set);
      Json div = Json::array();
      bool div_ok = true;
      for (const auto& r : div_rows) {
        div.push_back(Json{{"p", r.p}, {"f", r.f}, {"n_mod_7", r.n_mod_7}, {"asserted", r.asserted},
                           {"pass", r.pass()}});
        div_ok = div_ok && r.pass();
      }
      Json pw = Json::array();
      for (const auto& r : power.rows)
        pw.push_back(Json{{"p", r.p}, {"f", r.f}, {"n_mod_exponent", r.n_mod_exponent}, {"generates", r.generates}});
      const auto admissible = find_admissible_primes(cfg.sweep_p_max, disc);
      stages["sweeps"] = Json{{"p_max", cfg.sweep_p_max},
                              {"f_set", cfg.sweep_f_set},
                              {"admissible_primes", admissible},
                              {"n_divisibility", div},
                              {"group_exponent", oracle.exponent()},
                              {"nth_power_generation", pw},
                              {"residues_mod_exponent", power.residues}};
      ledger.check("sweeps.seven_does_not_divide_n", div_ok);
      ledger.check("sweeps.nth_powers_generate", power.all_pass());

      // Degree bookkeeping for the first admissible primes.
      Json degrees = Json::array();
      for (std::size_t i = 0; i < std::min<std::size_t>(admissible.size(), 2); ++i)
        for (int fdeg : cfg.sweep_f_set) {
          if (std::gcd(fdeg, 3) != 1) continue;
          BigInt q;
          mpz_ui_pow_ui(q.get_mpz_t(), admissible[i], static_cast<unsigned long>(fdeg));
          const BigInt psl = (q * q * q - q) / 2;
          degrees.push_back(Json{{"p", admissible[i]}, {"f", fdeg}, {"q", report::big(q)},
                                 {"psl_order", report::big(psl)}, {"cover_degree", report::big(cover_degree(q))},
                                 {"n_equals_psl_order", n_value(admissible[i], fdeg) == psl}});
          ledger.check("degrees." + std::to_string(admissible[i]) + "^" + std::to_string(fdeg),
                       cover_degree(q) == 11 * psl && n_value(admissible[i], fdeg) == psl);
        }
      stages["degrees"] = degrees;
    }
  } catch (const InternalError& e) {
    return finish(false, kExitMismatch, std::string("internal: ") + e.what());
  } catch (const Error& e) {
    return finish(false, kExitInputError, e.what());
  } catch (const RawJson::exception& e) {
    return finish(false, kExitInputError, e.what());
  }
  const auto result = finish(true, kExitPass, {});
  return {result.report, ledger.all_pass() ? kExitPass : kExitMismatch, {}};
}

Json run_split(const ManifoldSpec& spec, std::uint64_t p) {
  const auto ideals = split_prime(spec.min_poly, p);
  return Json{{"prime", p},
              {"discriminant", report::big(poly_discriminant(*spec.min_poly))},
              {"ideals", split_json(ideals)},
              {"inertia_degrees", inertia_degrees(ideals)},
              {"linear_roots", find_linear_roots(*spec.min_poly, p)}};
}

Json run_reduce(const ManifoldSpec& spec, std::uint64_t p, std::uint64_t root) {
  const auto shared = std::make_shared<const ManifoldSpec>(spec);
  const auto rep = build_congruence_rep(shared, degree_one_ideal(spec.min_poly, p, root));
  Json images = Json::object();
  for (const auto& [name, m] : rep.images) images[std::string(1, name)] = report::matrix(m);
  Json peripherals = Json::array();
  for (const auto& pp : spec.peripherals)
    peripherals.push_back(Json{{"meridian", pp.meridian.letters()},
                               {"meridian_image", report::matrix(rep.image_of(pp.meridian))},
                               {"longitude", pp.longitude.letters()},
                               {"longitude_image", report::matrix(rep.image_of(pp.longitude))}});
  return Json{{"ideal", rep.ideal.label()}, {"images", images}, {"peripherals", peripherals}, {"relators_trivial", true}};
}

Json run_prep(const ManifoldSpec& spec, std::uint64_t p, std::uint64_t root) {
  const auto shared = std::make_shared<const ManifoldSpec>(spec);
  const auto rep = build_congruence_rep(shared, degree_one_ideal(spec.min_poly, p, root));
  Json out = prep_json(certify_prep(rep));
  out["ideal"] = rep.ideal.label();
  return out;
}

Json run_gassmann(std::uint64_t q, std::size_t index) {
  const auto group = enumerate_group(field_for_q(q));
  const auto cc = conjugacy_classes(*group);
  Json pairs = Json::array();
  for (const auto& p : find_gassmann_pairs(*group, index)) pairs.push_back(pair_json(*group, p));
  return Json{{"q", q}, {"index", index}, {"group_order", group->order()},
              {"conjugacy_classes", class_table_json(cc, *group)}, {"pairs", pairs}};
}

Json run_cusps(std::uint64_t q, std::size_t subgroup_order, std::size_t peripheral_order) {
  const auto group = enumerate_group(field_for_q(q));
  const auto& g = *group;
  const auto peripherals = enumerate_subgroups(g, peripheral_order);
  if (peripherals.empty()) throw DomainError("no subgroup of order " + std::to_string(peripheral_order));
  const Subgroup& pbar = peripherals.front();
  const auto classes = subgroup_conjugacy_classes(g, enumerate_subgroups(g, subgroup_order));
  if (classes.empty()) throw DomainError("no subgroup of order " + std::to_string(subgroup_order));
  Json covers = Json::array();
  for (const auto& c : classes) {
    const auto d = cusp_decomposition(g, c.representative, pbar);
    const bool remains = cusp_remains(g, c.representative, pbar);
    Json entry{{"subgroup", report::subgroup(g, c.representative)},
               {"decomposition", decomposition_json(g, d)},
               {"cusp_remains", remains}};
    if (remains) entry["common_transversal"] = common_transversal_check(g, c.representative, pbar);
    covers.push_back(std::move(entry));
  }
  Json out{{"q", q}, {"group_order", g.order()}, {"peripheral_image", report::subgroup(g, pbar)}, {"covers", covers},
           {"normal_cover_cusp_count", normal_cover_cusp_count(g, pbar)}};
  if (peripheral_order <= q * (q - 1) / 2) {
    const auto b = cusp_lower_bound_check(q, peripheral_order);
    out["lower_bound"] = Json{{"exact_count", b.exact_count}, {"bound", b.bound}, {"pass", b.pass}};
  }
  return out;
}

Json run_sweep(std::uint64_t p_max, const std::vector<int>& f_set) {
  const NthPowerOracle oracle;
  Json div = Json::array();
  for (const auto& r : sweep_n_divisibility(p_max, f_set))
    div.push_back(Json{{"p", r.p}, {"f", r.f}, {"n_mod_7", r.n_mod_7}, {"asserted", r.asserted}, {"pass", r.pass()}});
  const auto power = sweep_nth_power_generation(oracle, p_max, f_set);
  Json pw = Json::array();
  for (const auto& r : power.rows)
    pw.push_back(Json{{"p", r.p}, {"f", r.f}, {"n_mod_exponent", r.n_mod_exponent}, {"generates", r.generates}});
  return Json{{"p_max", p_max}, {"f_set", f_set}, {"group_exponent", oracle.exponent()}, {"n_divisibility", div},
              {"nth_power_generation", pw}, {"residues_mod_exponent", power.residues}, {"all_pass", power.all_pass()}};
}

}  // namespace cuspcert
