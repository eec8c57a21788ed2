#include "braidperm/io.hpp"

#include <stdexcept>

namespace braidperm {

Json perm_to_json(const Permutation& p) { return Json(p.images()); }

Json hom_to_json(const BraidHom& h) {
  Json sigma = Json::array(), cycles = Json::array();
  for (const auto& s : h.images()) {
    sigma.push_back(perm_to_json(s));
    cycles.push_back(s.to_string());
  }
  return Json{{"k", h.k()}, {"n", h.n()}, {"sigma", sigma}, {"cycles", cycles}};
}

BraidHom hom_from_json(const Json& j) {
  if (j.contains("representative")) return hom_from_json(j.at("representative"));
  if (j.contains("hom")) return hom_from_json(j.at("hom"));
  if (!j.contains("k") || !j.contains("n")) throw std::invalid_argument("homomorphism JSON needs k and n");
  const int k = j.at("k").get<int>(), n = j.at("n").get<int>();
  std::vector<Permutation> imgs;
  if (j.contains("sigma")) {
    for (const auto& s : j.at("sigma")) imgs.emplace_back(s.get<std::vector<int>>());
  } else if (j.contains("cycles")) {
    for (const auto& s : j.at("cycles")) imgs.push_back(Permutation::parse(s.get<std::string>(), n));
  } else {
    throw std::invalid_argument("homomorphism JSON needs sigma or cycles");
  }
  return BraidHom(k, n, std::move(imgs));
}

Json classification_to_json(const HomClassification& c) {
  return Json{{"cyclic", c.is_cyclic},       {"abelian", c.is_abelian},   {"transitive", c.is_transitive},
              {"primitive", c.is_primitive}, {"even", c.is_even},         {"ord_alpha", c.ord_alpha},
              {"ord_beta", c.ord_beta},      {"fixed_points", c.fixed_point_count},
              {"sigma1_type", c.sigma1_type.parts}};
}

Json record_to_json(const CensusRecord& r) {
  Json seeds = Json::object();
  if (r.seed_sigma1.degree() > 0) seeds["sigma1"] = perm_to_json(r.seed_sigma1);
  if (r.seed_alpha.degree() > 0) seeds["alpha"] = perm_to_json(r.seed_alpha);
  return Json{{"representative", hom_to_json(r.representative)},
              {"flags", classification_to_json(r.classification)},
              {"class_size", r.class_size_hint ? Json(*r.class_size_hint) : Json(nullptr)},
              {"seeds", seeds}};
}

Json bprime_to_json(const BPrimeHom& h) {
  Json c = Json::array();
  for (const auto& p : h.c) c.push_back(perm_to_json(p));
  return Json{{"k", h.k}, {"u", perm_to_json(h.u)}, {"v", perm_to_json(h.v)}, {"w", perm_to_json(h.w)}, {"c", c}};
}

Json bprime_record_to_json(const BPrimeRecord& r) {
  Json j = bprime_to_json(r.hom);
  j["image_order"] = r.image_order;
  j["image_is_alternating"] = r.image_is_alternating;
  j["tame_orbit"] = r.tame_orbit ? Json(*r.tame_orbit) : Json(nullptr);
  return j;
}

Json cochain_to_json(const Cochain& z) { return Json(z.h); }

Json invariants_to_json(const AbelianInvariants& inv) { return Json(inv.factors); }

}  // namespace braidperm
