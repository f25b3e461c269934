#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace pdef::report {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json rational(const Rational& q) { return to_string(q); }
Json rational(const ExtendedRational& q) { return to_string(q); }

Json presentation(const Presentation& p) {
  Json j;
  j["text"] = format_presentation(p);
  j["generators"] = p.rank();
  j["relators"] = p.relators().size();
  j["letters"] = p.total_length();
  if (p.tail()) {
    j["tail"] = Json{{"prime", p.tail()->prime},
                     {"sigma", rational(p.tail()->sigma)},
                     {"p_powers_only", p.tail()->p_powers_only}};
  }
  return j;
}

Json analysis(const Presentation& p, const PresentationAnalysis& a) {
  Json j;
  j["generators"] = p.rank();
  j["relators"] = p.relators().size();
  j["prime"] = a.prime;
  j["def"] = rational(a.def);
  j["def_p"] = rational(a.def_p);
  j["def_p_is_lower_bound"] = a.def_p_is_lower_bound;
  j["d_p"] = to_string(a.d_p);
  j["d_p_is_lower_bound"] = a.d_p_is_lower_bound;
  j["is_puchta"] = a.is_puchta;
  j["p_large_obstruction"] = a.p_large_obstruction;
  j["infinite_certificate"] = a.infinite_certificate;
  j["tail_sigma"] = a.tail_sigma ? rational(*a.tail_sigma) : Json(nullptr);
  return j;
}

namespace {

Json term_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  Json out = Json::array();
  for (const auto& [e, c] : m) out.push_back(Json{{"exponent", e}, {"count", c}});
  return out;
}

}  // namespace

Json gs_function(const GSFunction& f) {
  Json j;
  j["function"] = to_string(f);
  j["prime"] = f.prime;
  j["generators"] = f.generators;
  j["terms"] = term_map(f.terms);
  j["bounded_terms"] = term_map(f.bounded_terms);
  j["tail_sigma"] = f.tail_sigma ? rational(*f.tail_sigma) : Json(nullptr);
  j["polynomial"] = to_string(f.polynomial());
  j["interval_end"] = rational(f.tail_interval_end());
  return j;
}

Json verdict(const NegativityVerdict& v) {
  Json j;
  if (const auto* w = std::get_if<Witness>(&v)) {
    j["verdict"] = "witness";
    j["t"] = rational(w->t);
    j["value"] = rational(w->value);
  } else if (const auto* n = std::get_if<NonNegative>(&v)) {
    j["verdict"] = "nonnegative";
    j["kind"] = std::string(to_string(n->kind));
    j["a"] = rational(n->a);
    j["b"] = rational(n->b);
    if (n->kind == NonNegativeKind::Tangency) {
      j["tangency_factor"] = to_string(n->tangency_factor);
    }
  } else {
    j["verdict"] = "inconclusive";
    j["reason"] = std::get<Inconclusive>(v).reason;
  }
  return j;
}

Json kernel(const KernelPresentation& k) {
  Json j;
  j["prime"] = k.prime;
  const auto& src = k.source.presentation;
  Json theta = Json::object();
  for (std::size_t i = 0; i < src.rank(); ++i) {
    theta[src.alphabet().name(static_cast<std::uint32_t>(i))] =
        k.source.theta.values[i];
  }
  j["normalized_source"] = format_presentation(src);
  j["normalized_theta"] = theta;
  j["presentation"] = presentation(k.presentation);
  j["def_p"] = rational(p_deficiency(k.presentation, k.prime));
  j["recorded_def_p"] = rational(k.recorded_p_deficiency());
  Json prov = Json::array();
  for (std::size_t i = 0; i < k.provenance.size(); ++i) {
    const auto& pr = k.provenance[i];
    prov.push_back(Json{{"relator", i},
                        {"source_relator", pr.source_relator},
                        {"conjugating_power", pr.conjugating_power},
                        {"branch", std::string(to_string(pr.branch))},
                        {"recorded_valuation", pr.recorded_valuation}});
  }
  j["provenance"] = prov;
  return j;
}

Json descent(const DescentCertificate& c) {
  Json j;
  j["mode"] = std::string(to_string(c.mode));
  j["prime"] = c.prime;
  Json rows = Json::array();
  for (const auto& s : c.steps) {
    Json r;
    r["step"] = s.step;
    r["phase"] = std::string(to_string(s.phase));
    r["index_log_p"] = to_string(s.index_log_p);
    r["def_p"] = s.def_p ? rational(*s.def_p) : Json(nullptr);
    r["d_p"] = s.d_p ? Json(to_string(*s.d_p)) : Json(nullptr);
    if (s.ratio) {
      r["quotient_rank_log_p"] = to_string(*s.quotient_rank_log_p);
      r["rapid_index_log_p"] = to_string(*s.rapid_index_log_p);
      r["ratio"] = rational(*s.ratio);
      if (s.rank_surplus) r["rank_surplus"] = to_string(*s.rank_surplus);
    }
    if (c.mode == DescentMode::Explicit) {
      r["generators"] = s.generators;
      r["relators"] = s.relators;
      r["letters"] = s.letters;
    }
    rows.push_back(std::move(r));
  }
  j["steps"] = rows;
  j["infimum"] = c.infimum ? rational(*c.infimum) : Json(nullptr);
  j["truncated"] = c.truncated;
  if (c.truncated) j["truncation_reason"] = c.truncation_reason;
  return j;
}

Json exceptional_block(const ExceptionalBlock& b) {
  auto pairs = [](const auto& v) {
    Json a = Json::array();
    for (const auto& [k, l] : v) a.push_back(Json::array({k, l}));
    return a;
  };
  Json j;
  j["prime"] = b.prime;
  j["oracle"] = pairs(b.oracle);
  j["printed"] = pairs(b.printed);
  j["matches_printed"] = b.matches_printed();
  j["last_k_scanned"] = b.last_k_scanned;
  return j;
}

Json surjection(const SurjectionSpec& s) {
  Json j;
  j["source"] = format_presentation(s.source);
  j["target"] = format_presentation(s.target);
  Json images = Json::array();
  for (const auto& w : s.images) images.push_back(format_word(w, s.target.alphabet()));
  j["images"] = images;
  Json checks = Json::array();
  for (const auto& c : s.relator_checks) {
    Json r;
    r["source_relator"] = c.source_relator;
    r["image"] = format_word(c.image, s.target.alphabet());
    r["trivial"] = c.trivial;
    r["target_relator"] = c.target_relator ? Json(*c.target_relator) : Json(nullptr);
    checks.push_back(std::move(r));
  }
  j["relator_checks"] = checks;
  j["abelianization_surjective"] = s.abelianization_surjective;
  j["verified"] = s.verified();
  return j;
}

Json schedule(const TorsionSchedule& s) {
  Json j;
  j["rank"] = s.rank;
  j["prime"] = s.prime;
  j["slack"] = rational(s.slack);
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back(Json{{"word", format_word(e.word, s.presentation.alphabet())},
                           {"exponent", e.exponent}});
  }
  j["entries"] = entries;
  j["tail"] = Json{{"prime", s.tail.prime},
                   {"sigma", rational(s.tail.sigma)},
                   {"p_powers_only", s.tail.p_powers_only}};
  j["presentation"] = presentation(s.presentation);
  j["def_p"] = rational(p_deficiency(s.presentation, s.prime));
  return j;
}

Json alexander(const Presentation& p, const AlexanderMatrix& m,
               const AlexanderPolynomial& a) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(std::move(r));
  }
  j["generators"] = p.rank();
  j["matrix"] = rows;
  j["delta"] = to_string(a.delta);
  j["vanishes"] = a.vanishes;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : j.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string plain(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace pdef::report
