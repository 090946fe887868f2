#include "mgt/json_io.hpp"

#include <fstream>

namespace mgt {

Json to_json(const RootOfUnity& x) { return Json{{"order", x.order()}, {"exp", x.exponent()}}; }

RootOfUnity root_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("exp"))
    fail(ErrorKind::ParseError, "root of unity needs {order, exp}");
  return RootOfUnity(j["order"].get<long long>(), j["exp"].get<long long>());
}

Json to_json(const FiniteAbelianGroup& g) { return Json{{"orders", g.orders()}}; }

FiniteAbelianGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders"))
    fail(ErrorKind::ParseError, "group needs {orders}");
  return FiniteAbelianGroup(j["orders"].get<std::vector<long long>>());
}

Json to_json(const QuadraticForm& q) {
  Json values = Json::array();
  const auto& g = q.group();
  for (long long i = 0; i < g.order(); ++i) {
    const auto& v = q.table()[static_cast<std::size_t>(i)];
    values.push_back(Json{{"elem", g.coords_of(i)}, {"order", v.order()}, {"exp", v.exponent()}});
  }
  return Json{{"group", to_json(g)}, {"values", values}};
}

QuadraticForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("values"))
    fail(ErrorKind::ParseError, "form needs {group, values}");
  auto g = group_from_json(j["group"]);
  std::vector<RootOfUnity> table(static_cast<std::size_t>(g.order()));
  std::vector<char> seen(table.size(), 0);
  for (const auto& entry : j["values"]) {
    auto coords = entry["elem"].get<std::vector<long long>>();
    long long idx = g.index_of(coords);
    table[static_cast<std::size_t>(idx)] =
        RootOfUnity(entry["order"].get<long long>(), entry["exp"].get<long long>());
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  for (char s : seen)
    if (!s) fail(ErrorKind::ParseError, "form table is missing entries");
  return QuadraticForm(g, std::move(table));
}

Json to_json(const Homomorphism& f) {
  return Json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"matrix", f.matrix()}};
}

Homomorphism hom_from_json(const Json& j) {
  return Homomorphism(group_from_json(j["source"]), group_from_json(j["target"]),
                      j["matrix"].get<std::vector<std::vector<long long>>>());
}

Json to_json(const Cochain& c) {
  return Json{{"group", to_json(c.group())},
              {"degree", c.degree()},
              {"modulus", c.modulus()},
              {"table", c.table()}};
}

Cochain cochain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("degree") ||
      !j.contains("modulus") || !j.contains("table"))
    fail(ErrorKind::ParseError, "cochain needs {group, degree, modulus, table}");
  return Cochain(group_from_json(j["group"]), j["degree"].get<int>(),
                 j["modulus"].get<long long>(), j["table"].get<std::vector<long long>>());
}

Json to_json(const Subgroup& s) {
  Json elems = Json::array();
  for (long long idx : s.element_indices()) elems.push_back(s.parent().coords_of(idx));
  return Json{{"order", s.order()}, {"elements", elems}, {"generators", s.generators()}};
}

Json to_json(const Polarization& p) {
  return Json{{"lagrangian", to_json(p.lagrangian)},
              {"summand", to_json(p.l_abstract)},
              {"iso", to_json(p.iso)}};
}

Json to_json(const CohomologyGroup& h) {
  Json reps = Json::array();
  for (const auto& r : h.representatives) reps.push_back(to_json(r));
  return Json{{"degree", h.degree},
              {"coefficients", h.coefficients.full_scalars
                                   ? Json("scalars")
                                   : Json("mu" + std::to_string(h.coefficients.modulus))},
              {"invariant_factors", h.invariant_factors},
              {"order", h.order()},
              {"representatives", reps}};
}

Json to_json(const AbelianThreeCocycle& x) {
  return Json{{"group", to_json(x.group)},
              {"modulus", x.modulus()},
              {"tau", to_json(x.tau)},
              {"b", x.b}};
}

Json to_json(const CenterClassification& c) {
  return Json{{"metric_group", to_json(c.metric.form())},
              {"cocycle_pair", to_json(c.cocycle_pair)}};
}

Json to_json(const SpinReport& r) {
  return Json{{"p", r.space.p},
              {"dim", r.space.dim},
              {"gamma_order", r.gamma_order},
              {"o_order", r.o_order},
              {"surjective", r.surjective},
              {"kernel_is_scalars", r.kernel_is_scalars},
              {"pin_order", r.pin_order},
              {"spin_order", r.spin_order},
              {"so_order", r.so_order},
              {"ker_norm_order", r.ker_no_order},
              {"pin_covers_norm_kernel", r.pin_covers_ker_no},
              {"pin_kernel_pm_one", r.pin_kernel_pm_one},
              {"norm_diagram_commutes", r.norm_diagram_commutes},
              {"reflections_ok", r.reflections_ok},
              {"reflection_norms_match", r.reflection_norms_match},
              {"reflections_generate_o", r.cartan_dieudonne_ok}};
}

Json to_json(const SpinorModuleReport& r) {
  return Json{{"p", r.p},
              {"half_dim", r.half},
              {"cl_dim", r.cl_dim},
              {"end_dim", r.end_dim},
              {"relations_ok", r.relations_ok},
              {"bijective", r.bijective}};
}

Json to_json(const TorsorReport& r) {
  return Json{{"l", r.l},
              {"coefficient_modulus", r.coefficient_modulus},
              {"h4_invariant_factors", r.h4_factors},
              {"h3_invariant_factors", r.h3_factors},
              {"torsor_size", r.torsor_size}};
}

Json to_json(const EmReport& r) {
  return Json{{"group", to_json(r.group)},
              {"modulus", r.modulus},
              {"cocycle_count", r.cocycle_count},
              {"coboundary_count", r.coboundary_count},
              {"class_count", r.class_count},
              {"form_count", r.form_count},
              {"surjective", r.surjective},
              {"bijective", r.bijective}};
}

Json to_json(const SplitCheckReport& r) {
  return Json{{"n", r.n},
              {"p", r.p},
              {"brute_force_order", r.brute_force_order},
              {"formula_order", r.formula_order},
              {"equal", r.equal},
              {"so_order", r.so_order},
              {"so_index", r.so_index}};
}

QuadraticForm parse_form_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::ParseError, "form spec must look like ev:<group>, split:<n>,<p>, "
                                "trivial:<group> or file:<path>");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "ev") {
    return evaluation_form(FiniteAbelianGroup::parse(rest)).form();
  }
  if (kind == "split") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      fail(ErrorKind::ParseError, "split form spec must be split:<n>,<p>");
    long long n = 0, p = 0;
    try {
      n = std::stoll(rest.substr(0, comma));
      p = std::stoll(rest.substr(comma + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad split form spec '" + spec + "'");
    }
    return split_form(n, p).form();
  }
  if (kind == "trivial") {
    return trivial_form(FiniteAbelianGroup::parse(rest));
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) fail(ErrorKind::ParseError, "cannot open form file '" + rest + "'");
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      fail(ErrorKind::ParseError, std::string("bad form file: ") + e.what());
    }
    return form_from_json(j);
  }
  fail(ErrorKind::ParseError, "unknown form spec kind '" + kind + "'");
}

}  // namespace mgt
