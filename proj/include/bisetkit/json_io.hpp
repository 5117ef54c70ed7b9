#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bisetkit/biset.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/dress.hpp"
#include "bisetkit/green.hpp"
#include "bisetkit/homs.hpp"

namespace bisetkit {

using nlohmann::json;

inline json to_json(const ElementSet& s) { return s.to_vector(); }

inline ElementSet element_set_from_json(const json& j, int order) {
  require(j.is_array(), ErrorCode::InvalidInput, "subgroup must be an array of element indices");
  ElementSet s;
  for (const auto& e : j) {
    require(e.is_number_integer(), ErrorCode::InvalidInput, "element index must be an integer");
    int v = e.get<int>();
    require(v >= 0 && v < order, ErrorCode::InvalidInput, "element index out of range");
    s.insert(static_cast<Element>(v));
  }
  return s;
}

/// [numerators, denominator, conductor]: the value is sum_i num_i zeta^i / den.
inline json to_json(const Cyclotomic& z) {
  mpz_class den = 1;
  for (const auto& q : z.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  json nums = json::array();
  for (const auto& q : z.coords()) {
    mpz_class n = q.get_num() * (den / q.get_den());
    if (n.fits_slong_p())
      nums.push_back(n.get_si());
    else
      nums.push_back(n.get_str());
  }
  return json::array({nums, den.fits_slong_p() ? json(den.get_si()) : json(den.get_str()), z.conductor()});
}

inline json to_json(const CharacterVector& chi) {
  json values = json::array();
  for (const auto& v : chi.values) values.push_back(to_json(v.simplified()));
  return {{"group", chi.group.label()}, {"values", values}};
}

inline json group_json(const FiniteGroup& g) {
  json j;
  j["name"] = g.label();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["exponent"] = g.exponent();
  j["classes"] = element_classes(g).count();
  std::vector<int> orders;
  for (int x = 0; x < g.order(); ++x) orders.push_back(g.element_order(static_cast<Element>(x)));
  j["element_orders"] = orders;
  return j;
}

inline json lattice_json(const FiniteGroup& g) {
  const auto& lat = lattice(g);
  json classes = json::array();
  for (int c = 0; c < lat.class_count(); ++c) {
    const auto& rep = lat.class_rep(c);
    classes.push_back({{"id", c},
                       {"order", rep.size()},
                       {"length", lat.classes[c].members.size()},
                       {"normal", lat.classes[c].members.size() == 1},
                       {"representative", to_json(rep)}});
  }
  return {{"group", g.label()}, {"subgroups", lat.count()}, {"classes", classes}};
}

inline json automorphisms_json(const FiniteGroup& g) {
  auto a = automorphisms(g);
  return {{"group", g.label()}, {"aut", a.all.size()}, {"inner", a.inner_count}, {"out", a.out_order}};
}

/// {"left": name, "right": name, "terms": [{"subgroup": [...], "coeff": "p/q"}]}
inline json to_json(const BurnsideElement& x) {
  json terms = json::array();
  for (const auto& [c, q] : x.terms())
    terms.push_back({{"class", c}, {"subgroup", to_json(x.lattice_ref().class_rep(c))}, {"coeff", to_string(q)}});
  return {{"left", x.left().label()}, {"right", x.right().label()}, {"terms", terms}};
}

inline BurnsideElement burnside_from_json(const json& j, const FiniteGroup& left, const FiniteGroup& right) {
  require(j.is_object() && j.contains("terms") && j["terms"].is_array(), ErrorCode::InvalidInput,
          "biset element needs a \"terms\" array");
  auto p = direct_product(left, right);
  BurnsideElement x(left, right);
  for (const auto& t : j["terms"]) {
    require(t.contains("subgroup"), ErrorCode::InvalidInput, "term needs a \"subgroup\"");
    auto s = element_set_from_json(t["subgroup"], p.group.order());
    Rational q = 1;
    if (t.contains("coeff")) q = t["coeff"].is_string() ? parse_rational(t["coeff"].get<std::string>())
                                                        : Rational(t["coeff"].get<long>());
    x.add(lattice(p.group).class_id(s), q);
  }
  return x;
}

inline json to_json(const DressElement& x) {
  const auto& prod = x.product();
  json terms = json::array();
  for (const auto& [c, q] : x.terms()) {
    json elems = json::array();
    x.lattice_ref().class_rep(c).for_each(
        [&](Element e) { elems.push_back({prod.first(e), prod.second(e), prod.third(e)}); });
    terms.push_back({{"class", c}, {"elements", elems}, {"coeff", to_string(q)}});
  }
  return {{"G", prod.g.label()}, {"K", prod.k.label()}, {"C", prod.c.label()}, {"terms", terms}};
}

inline json to_json(const IdealReport& r) {
  json j = {{"backend", r.backend},
            {"group", r.group.label()},
            {"ambient", r.ambient_dim},
            {"ideal", r.ideal_dim},
            {"quotient", r.quotient_dim},
            {"basis", r.quotient_basis}};
  if (!r.determined) {
    j["ideal"] = nullptr;
    j["quotient"] = nullptr;
    j["determined"] = false;
    j["nonzero_lower_bound"] = r.quotient_basis.size();
  }
  return j;
}

inline json to_json(const BoucWord& w) {
  const auto& d = w.data;
  json factors = json::array();
  const char* names[] = {"Ind", "Inf", "Iso", "Def", "Res"};
  for (std::size_t i = 0; i < w.factors.size(); ++i)
    factors.push_back({{"kind", names[i]},
                       {"left_order", w.factors[i].left.order()},
                       {"right_order", w.factors[i].right.order()},
                       {"stabilizer", to_json(w.factors[i].stabilizer())}});
  return {{"D", to_json(d.d)}, {"C", to_json(d.c)}, {"B", to_json(d.b)}, {"A", to_json(d.a)},
          {"D/C", d.d_mod_c.group.order()}, {"B/A", d.b_mod_a.group.order()}, {"factors", factors}};
}

}  // namespace bisetkit
