#include "parakov/report.hpp"

#include <json.hpp>

namespace parakov {

namespace {

SolutionRecord exp_integral_record(const RatFunc& f) {
  SolutionRecord s;
  s.fields = {{"type", "exp_integral"}, {"f", f.to_string()}};
  return s;
}

GroupDescription dense_group(size_t dim) {
  GroupDescription g;
  if (dim == 0) {
    g.tag = "SL2_full";
    g.notes.push_back("Zariski-dense in SL2; integrability space is trivial");
  } else {
    g.tag = "SL2_dspace";
    g.notes.push_back("Zariski-dense in SL2; integrability space has dimension " +
                      std::to_string(dim));
  }
  return g;
}

}  // namespace

Report run_pipeline(const RatFunc& r, bool want_group, bool want_dspace) {
  Report rep;
  KovacicResult kr = classify(r);
  rep.case_id = kr.case_id;
  rep.screen = kr.screen.notes;
  rep.diagnostics = kr.trace;

  if (kr.case_id == 1) {
    const RatFunc& f = kr.case1->f;
    rep.solutions.push_back(exp_integral_record(f));
    UnipotentData uni;
    if (want_group) {
      rep.group = case1_group(*kr.case1, &uni);
      rep.has_group = true;
    } else {
      uni = unipotent_part(f);
    }
    if (uni.has_rational_h) {
      SolutionRecord s;
      s.fields = {{"type", "exp_integral_times_rational"},
                  {"f", (-f).to_string()},
                  {"h", uni.h.to_string()}};
      rep.solutions.push_back(s);
    }
    for (const auto& d : uni.diagnostics) rep.diagnostics.push_back(d);
  } else if (kr.case_id == 2) {
    const Case2Certificate& c = *kr.case2;
    SolutionRecord s;
    s.fields = {{"type", "quadratic_riccati"},
                {"a", c.a.to_string()},
                {"b", c.b.to_string()},
                {"discriminant", c.discriminant.to_string()}};
    rep.solutions.push_back(s);
    if (want_group) {
      rep.group = case2_group(c);
      rep.has_group = true;
    }
  } else if (kr.case_id == 3) {
    const Case3Certificate& c = *kr.case3;
    SolutionRecord s;
    s.fields = {{"type", "algebraic_riccati"}, {"n", std::to_string(c.n)}};
    for (const auto& p : c.min_poly) s.min_poly.push_back(p.to_string());
    rep.solutions.push_back(s);
    if (want_group) {
      rep.group = case3_group(c);
      rep.has_group = true;
    }
  }

  if (want_dspace || (want_group && kr.case_id == 4)) {
    rep.dspace = integrability_space(r);
    rep.has_dspace = true;
    for (const auto& d : rep.dspace.diagnostics) rep.diagnostics.push_back(d);
    if (kr.case_id != 4)
      rep.diagnostics.push_back(
          "integrability space computed outside the dense case; maximality "
          "statement applies when the group is dense");
  }
  if (want_group && kr.case_id == 4) {
    rep.group = dense_group(rep.dspace.basis.size());
    rep.has_group = true;
  }
  return rep;
}

std::string report_to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["case"] = rep.case_id;
  j["screen"] = rep.screen;
  nlohmann::ordered_json sols = nlohmann::ordered_json::array();
  for (const auto& s : rep.solutions) {
    nlohmann::ordered_json rec;
    for (const auto& [k, v] : s.fields) rec[k] = v;
    if (!s.min_poly.empty()) rec["min_poly"] = s.min_poly;
    sols.push_back(rec);
  }
  j["solutions"] = sols;
  if (rep.has_group) {
    nlohmann::ordered_json g;
    g["tag"] = rep.group.tag;
    if (rep.group.order > 0) g["order"] = rep.group.order;
    g["relations"] = rep.group.relations;
    g["notes"] = rep.group.notes;
    j["group"] = g;
  }
  if (rep.has_dspace) {
    nlohmann::ordered_json d;
    d["dim"] = rep.dspace.basis.size();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& e : rep.dspace.basis) {
      nlohmann::ordered_json el;
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& c : e.a) a.push_back(c.to_string());
      el["a"] = a;
      el["b"] = e.b.to_string();
      basis.push_back(el);
    }
    d["basis"] = basis;
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const auto& c : rep.dspace.certs) {
      nlohmann::ordered_json cj;
      cj["B"] = {{c.B[0][0].to_string(), c.B[0][1].to_string()},
                 {c.B[1][0].to_string(), c.B[1][1].to_string()}};
      cj["zero_curvature"] = c.zero_curvature;
      certs.push_back(cj);
    }
    d["certificates"] = certs;
    nlohmann::ordered_json ker = nlohmann::ordered_json::array();
    for (const auto& k : rep.dspace.kernel) ker.push_back(k.to_string());
    d["kernel"] = ker;
    j["dspace"] = d;
  }
  j["diagnostics"] = rep.diagnostics;
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& rep) {
  std::string out;
  out += "case: " + std::to_string(rep.case_id) + "\n";
  for (const auto& s : rep.screen) out += "screen: " + s + "\n";
  for (const auto& s : rep.solutions) {
    out += "solution:\n";
    for (const auto& [k, v] : s.fields) out += "  " + k + " = " + v + "\n";
    if (!s.min_poly.empty()) {
      out += "  min_poly (coefficients of w^0..w^n):\n";
      for (const auto& p : s.min_poly) out += "    " + p + "\n";
    }
  }
  if (rep.has_group) {
    out += "group: " + rep.group.tag + "\n";
    if (rep.group.order > 0)
      out += "  order: " + std::to_string(rep.group.order) + "\n";
    for (const auto& r : rep.group.relations) out += "  relation: " + r + "\n";
    for (const auto& n : rep.group.notes) out += "  note: " + n + "\n";
  }
  if (rep.has_dspace) {
    out += "integrability space dimension: " +
           std::to_string(rep.dspace.basis.size()) + "\n";
    for (size_t i = 0; i < rep.dspace.basis.size(); ++i) {
      const auto& e = rep.dspace.basis[i];
      out += "  basis[" + std::to_string(i) + "]: a = (";
      for (size_t k = 0; k < e.a.size(); ++k) {
        if (k) out += ", ";
        out += e.a[k].to_string();
      }
      out += "), b = " + e.b.to_string() + "\n";
      if (i < rep.dspace.certs.size()) {
        const auto& c = rep.dspace.certs[i];
        out += "  connection[" + std::to_string(i) +
               "]: zero_curvature = " + (c.zero_curvature ? "true" : "false") +
               "\n";
        out += "    B = [[" + c.B[0][0].to_string() + ", " +
               c.B[0][1].to_string() + "], [" + c.B[1][0].to_string() + ", " +
               c.B[1][1].to_string() + "]]\n";
      }
    }
    for (const auto& k : rep.dspace.kernel)
      out += "  variational kernel: " + k.to_string() + "\n";
  }
  for (const auto& d : rep.diagnostics) out += "note: " + d + "\n";
  return out;
}

}  // namespace parakov
