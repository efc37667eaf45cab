#include "tsl/io.hpp"

#include "tsl/error.hpp"

namespace tsl::io {

namespace {

constexpr long long kSafeInteger = 9007199254740991LL;  // 2^53 - 1

[[noreturn]] void schema(std::string_view field, std::string_view what) {
  fail(ErrorKind::InvalidInput, "schema error at \"" + std::string(field) + "\": " + std::string(what));
}

const Json& member(const Json& j, std::string_view key, std::string_view where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) schema(std::string(where) + "." + std::string(key), "missing field");
  return *it;
}

std::size_t size_from_json(const Json& j, std::string_view field) {
  Integer z = integer_from_json(j, field);
  if (z < 0 || !z.fits_ulong_p()) schema(field, "expected a nonnegative integer");
  return z.get_ui();
}

std::int64_t int64_from_json(const Json& j, std::string_view field) {
  Integer z = integer_from_json(j, field);
  if (!z.fits_slong_p()) schema(field, "integer out of range");
  return z.get_si();
}

const Json& array_member(const Json& j, std::string_view key, std::string_view where) {
  const Json& a = member(j, key, where);
  if (!a.is_array()) schema(std::string(where) + "." + std::string(key), "expected an array");
  return a;
}

template <class T, class F>
std::vector<T> vector_from_json(const Json& j, std::string_view field, F&& element) {
  if (!j.is_array()) schema(field, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(element(j[i], std::string(field) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t dim_from_json(const Json& j) {
  std::size_t dim = size_from_json(member(j, "dim", "$"), "$.dim");
  if (dim < 1) schema("$.dim", "dimension must be at least 1");
  return dim;
}

Json vectors_to_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Integer integer_from_json(const Json& j, std::string_view field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      schema(field, "malformed integer \"" + j.get<std::string>() + "\"");
    }
  }
  schema(field, "expected an integer or a decimal string");
}

Rational rational_from_json(const Json& j, std::string_view field) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, field));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      schema(field, "malformed rational \"" + j.get<std::string>() + "\"");
    }
  }
  schema(field, "expected an integer or a \"p/q\" string");
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  const std::size_t dim = dim_from_json(j);
  const bool has_v = j.contains("vertices");
  const bool has_h = j.contains("inequalities");
  if (!has_v && !has_h) schema("$", "need \"vertices\" or \"inequalities\"");

  auto read_vector = [&](const Json& row, const std::string& where) {
    auto v = vector_from_json<Rational>(row, where, rational_from_json);
    if (v.size() != dim) schema(where, "length differs from dim");
    return v;
  };
  std::vector<RationalVector> vertices;
  if (has_v) vertices = vector_from_json<RationalVector>(j["vertices"], "$.vertices", read_vector);
  std::vector<Facet> facets;
  if (has_h) {
    facets = vector_from_json<Facet>(j["inequalities"], "$.inequalities", [&](const Json& f, const std::string& where) {
      auto normal = vector_from_json<Integer>(member(f, "normal", where), where + ".normal", integer_from_json);
      if (normal.size() != dim) schema(where + ".normal", "length differs from dim");
      return Facet{std::move(normal), integer_from_json(member(f, "offset", where), where + ".offset")};
    });
  }
  if (has_v && has_h) return LatticePolytope::from_both(std::move(vertices), std::move(facets), dim);
  if (has_v) return LatticePolytope::from_vertices(std::move(vertices), dim);
  return LatticePolytope::from_facets(std::move(facets), dim);
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  const std::size_t dim = dim_from_json(j);
  auto rays = vector_from_json<IntegerVector>(array_member(j, "rays", "$"), "$.rays",
                                              [&](const Json& r, const std::string& where) {
                                                auto v = vector_from_json<Integer>(r, where, integer_from_json);
                                                if (v.size() != dim) schema(where, "length differs from dim");
                                                return v;
                                              });
  auto cones = vector_from_json<std::vector<std::size_t>>(
      array_member(j, "max_cones", "$"), "$.max_cones", [&](const Json& c, const std::string& where) {
        return vector_from_json<std::size_t>(c, where, size_from_json);
      });
  return Fan(dim, std::move(rays), std::move(cones));
}

BundleSpec bundle_from_json(const Json& j) {
  if (!j.is_object()) schema("$", "expected an object");
  BundleSpec spec;
  spec.genus = int64_from_json(member(j, "genus", "$"), "$.genus");
  spec.twist_r = int64_from_json(member(j, "twist_r", "$"), "$.twist_r");
  spec.deg_B = integer_from_json(member(j, "deg_B", "$"), "$.deg_B");
  spec.components = vector_from_json<BundleComponent>(
      array_member(j, "components", "$"), "$.components", [&](const Json& c, const std::string& where) {
        return BundleComponent{int64_from_json(member(c, "rank", where), where + ".rank"),
                               integer_from_json(member(c, "degree", where), where + ".degree"),
                               rational_from_json(member(c, "weight", where), where + ".weight")};
      });
  spec.validate();
  return spec;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p() && abs(z.get_si()) <= kSafeInteger) return z.get_si();
  return to_string(z);
}

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const RationalPolynomial& p) { return Json{{"coeffs", to_json(p.coeffs())}}; }

Json to_json(const VectorPolynomial& p) { return Json{{"coeffs", vectors_to_json(p.coeffs())}}; }

Json to_json(const LatticePolytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json normal = Json::array();
    for (const auto& n : f.normal) normal.push_back(to_json(n));
    facets.push_back(Json{{"normal", normal}, {"offset", to_json(f.offset)}});
  }
  return Json{{"dim", p.dim()}, {"vertices", vectors_to_json(p.vertices())}, {"inequalities", facets}};
}

Json to_json(const ObstructionReport& r) {
  return Json{{"vectors", vectors_to_json(r.ono_vectors)},
              {"all_zero", r.all_zero},
              {"rank", r.rank},
              {"pairwise_proportional", r.pairwise_proportional},
              {"verdict", std::string(r.verdict())}};
}

Json to_json(const LaurentSeries& s) { return Json{{"min_exp", s.min_exp}, {"coeffs", to_json(s.coeffs)}}; }

Json to_json(const SpanComparison& s) {
  return Json{{"equal", s.equal}, {"rank_a", s.rank_a}, {"rank_b", s.rank_b}, {"rank_union", s.rank_union}};
}

Json to_json(const ExpansionPair& e) { return Json{{"a", to_json(e.a())}, {"b", to_json(e.b())}}; }

Json to_json(const HilbertWeightTable& t) {
  Json values = Json::array();
  for (const auto& row : t.values) values.push_back(to_json(row));
  Json coeffs = Json::array();
  for (const auto& row : t.coefficients) coeffs.push_back(to_json(row));
  return Json{{"r_max", t.r_max},
              {"k_max", t.k_max},
              {"values", values},
              {"coefficients", coeffs},
              {"top_coefficient_vanishes", t.top_coefficient_vanishes},
              {"sign_a_m_top", t.sign_a_m_top},
              {"sign_f1", t.sign_f1},
              {"signs_agree", t.signs_agree},
              {"chow_signs_agree", t.chow_signs_agree}};
}

Json to_json(const FanoReport& r) {
  const auto& s = r.polytope_summary;
  Json out{{"polytope_summary",
            Json{{"dim", s.dim},
                 {"vertices", vectors_to_json(s.vertices)},
                 {"facet_count", s.facet_count},
                 {"volume", to_json(s.volume)}}},
           {"is_reflexive", r.is_reflexive},
           {"barycenter", to_json(r.barycenter)},
           {"ke_character_vanishes", r.ke_character_vanishes},
           {"is_symmetric", r.is_symmetric},
           {"automorphism_count", r.automorphism_count},
           {"fixed_space_dim", r.fixed_space_dim},
           {"ke_verdict", std::string(to_string(r.ke_verdict))}};
  if (r.obstruction) {
    out["chow_obstructed"] = r.chow_obstructed;
    out["obstruction"] = to_json(*r.obstruction);
    out["laurent_functionals"] = vectors_to_json(r.laurent_functionals);
    out["span_check"] = to_json(*r.span_check);
    out["ke_but_obstructed"] = r.ke_but_obstructed();
  }
  return out;
}

Json to_json(const BundleMeasures& m) {
  return Json{{"mu_total", to_json(m.mu_total)},
              {"mu", to_json(m.mu)},
              {"weight_sum", to_json(m.weight_sum)},
              {"chi_det_twist", to_json(m.chi_det_twist)},
              {"mu_twist", to_json(m.mu_twist)}};
}

Json to_json(const BundleFunctional& f) {
  return Json{{"value", to_json(f.value)},
              {"vanishes", f.vanishes},
              {"sign", f.sign},
              {"polystable_slopes", f.polystable_slopes},
              {"caveat", f.caveat}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tsl::io
