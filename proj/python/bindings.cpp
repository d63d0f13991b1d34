#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socle/extensions.hpp"
#include "socle/kummer.hpp"
#include "socle/parse.hpp"
#include "socle/scenarios.hpp"

namespace py = pybind11;
using namespace socle;

namespace {

std::string status_name(SysStatus s) {
  switch (s) {
    case SysStatus::CertifiedIndependent: return "certified-independent";
    case SysStatus::DependenceWitness: return "dependence-witness";
    default: return "inconclusive";
  }
}

py::dict system_dict(const ClassSystem& sys) {
  py::dict d;
  d["rank"] = sys.rank;
  d["status"] = status_name(sys.status);
  d["support_complete"] = sys.support_complete;
  py::list primes;
  for (const auto& q : sys.primes) primes.append(q.to_string());
  d["primes"] = primes;
  d["witness"] = sys.witness;
  if (sys.witness_alpha)
    d["witness_alpha"] = sys.witness_alpha->to_string();
  else
    d["witness_alpha"] = py::none();
  d["note"] = sys.note;
  return d;
}

py::dict rank_op(const std::string& field, const std::string& elems, long p,
                 ClassKind kind, bool relative) {
  auto K = parse_function_field(field);
  auto A = parse_element_list(K, elems);
  if (kind == ClassKind::Kummer) {
    require_kummer_request(K, Int(p));
    return system_dict(relative ? kummer_relative_rank(A, Int(p))
                                : kummer_rank(A, Int(p)));
  }
  require_artin_schreier_request(K, Int(p));
  return system_dict(relative ? as_relative_rank(A, Int(p))
                              : as_rank(A, Int(p)));
}

GroupPtr lookup_group(const std::string& name, const std::string& catalog) {
  if (catalog.empty()) return Catalog::builtin().get(name);
  return Catalog::from_file(catalog).get(name);
}

Subgroup subgroup_from(const GroupPtr& G, const std::vector<int>& members) {
  if (members.empty()) return trivial_subgroup(G);
  return make_subgroup(G, members);
}

}  // namespace

PYBIND11_MODULE(_socle, m) {
  m.doc() =
      "exact certificates for multiplicative/additive class independence, "
      "p-socles and p-Frattini quotients, and linear disjointness";

  // translators run newest-first, so the base class must be registered first
  py::register_exception<Error>(m, "SocleError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<SemanticError>(m, "SemanticError");

  m.def(
      "kummer_rank",
      [](const std::string& field, const std::string& elems, long p) {
        return rank_op(field, elems, p, ClassKind::Kummer, false);
      },
      py::arg("field"), py::arg("elems"), py::arg("p"),
      "Rank of multiplicative classes modulo p-th powers.");
  m.def(
      "kummer_relative_rank",
      [](const std::string& field, const std::string& elems, long p) {
        return rank_op(field, elems, p, ClassKind::Kummer, true);
      },
      py::arg("field"), py::arg("elems"), py::arg("p"),
      "Rank modulo the subgroup generated by pure-T and pure-U elements.");
  m.def(
      "as_rank",
      [](const std::string& field, const std::string& elems, long p) {
        return rank_op(field, elems, p, ClassKind::ArtinSchreier, false);
      },
      py::arg("field"), py::arg("elems"), py::arg("p"),
      "Rank of additive classes modulo p-th-power shifts.");
  m.def(
      "as_relative_rank",
      [](const std::string& field, const std::string& elems, long p) {
        return rank_op(field, elems, p, ClassKind::ArtinSchreier, true);
      },
      py::arg("field"), py::arg("elems"), py::arg("p"),
      "Relative additive rank over the pure parts.");

  m.def(
      "wp_solve",
      [](const std::string& field, const std::string& b, long p) {
        auto K = parse_function_field(field);
        require_artin_schreier_request(K, Int(p));
        auto r = wp_solve(parse_element(K, b), Int(p));
        py::dict d;
        d["solved"] = r.solved();
        d["alpha"] = r.alpha ? py::object(py::str(r.alpha->to_string()))
                             : py::object(py::none());
        if (r.obstruction) {
          py::dict o;
          o["reason"] = r.obstruction->reason;
          o["prime"] = r.obstruction->prime
                           ? py::object(py::str(r.obstruction->prime->to_string()))
                           : py::object(py::none());
          o["pole_order"] = r.obstruction->pole_order;
          o["farkas"] = r.obstruction->farkas;
          d["obstruction"] = o;
        } else {
          d["obstruction"] = py::none();
        }
        return d;
      },
      py::arg("field"), py::arg("b"), py::arg("p"),
      "Solve alpha^p - alpha = b or certify the obstruction.");

  m.def(
      "membership",
      [](const std::string& field, const std::string& b,
         const std::string& elems, long p) {
        auto K = parse_function_field(field);
        require_kummer_request(K, Int(p));
        auto res = pth_root_membership(parse_element(K, b),
                                       parse_element_list(K, elems), Int(p));
        py::dict d;
        d["verdict"] = res.verdict == MemberVerdict::Member ? "member"
                       : res.verdict == MemberVerdict::NonMember
                           ? "non-member"
                           : "inconclusive";
        d["nu"] = res.nu;
        d["alpha"] = res.alpha ? py::object(py::str(res.alpha->to_string()))
                               : py::object(py::none());
        d["witness_prime"] =
            res.witness_prime
                ? py::object(py::str(res.witness_prime->to_string()))
                : py::object(py::none());
        d["note"] = res.note;
        return d;
      },
      py::arg("field"), py::arg("b"), py::arg("elems"), py::arg("p"),
      "Decide b in <A>*(F*)^p with certificates.");

  m.def(
      "frattini",
      [](const std::string& group, long p, const std::string& catalog) {
        auto G = lookup_group(group, catalog);
        auto [phi, rank] = frattini_p(G, p);
        py::dict d;
        d["group_order"] = G->order();
        d["phi_order"] = phi.size();
        d["phi_members"] = phi.members;
        d["rank"] = rank;
        return d;
      },
      py::arg("group"), py::arg("p"), py::arg("catalog") = "",
      "p-Frattini subgroup and elementary abelian quotient rank.");

  m.def(
      "relative_frattini",
      [](const std::string& group, const std::vector<int>& members, long p,
         const std::string& catalog) {
        auto G = lookup_group(group, catalog);
        auto phi = relative_frattini(G, subgroup_from(G, members), p);
        py::dict d;
        d["phi_order"] = phi.size();
        d["phi_members"] = phi.members;
        return d;
      },
      py::arg("group"), py::arg("subgroup"), py::arg("p"),
      py::arg("catalog") = "", "H*Phi^p(G) with members.");

  m.def(
      "socle",
      [](const std::string& group, const std::vector<int>& members, long p,
         const std::string& catalog) {
        auto G = lookup_group(group, catalog);
        auto s = socle_subgroup(G, subgroup_from(G, members), p);
        py::dict d;
        d["phi_order"] = s.phi.size();
        d["phi_members"] = s.phi.members;
        d["rank"] = s.rank;
        return d;
      },
      py::arg("group"), py::arg("subgroup"), py::arg("p"),
      py::arg("catalog") = "",
      "Phi^p(G,H) and the rank of the p-socle it cuts out.");

  m.def(
      "disjoint",
      [](const std::string& field, const std::string& gens1,
         const std::string& gens2) {
        auto K = parse_base_field(field);
        auto scratch = FunctionFieldDescriptor::make(K, {"__t"}, {});
        auto lift = [&](const std::string& text) {
          std::vector<FieldElement> out;
          for (const auto& r : parse_element_list(scratch, text)) {
            if (!r.is_constant())
              throw SemanticError("generator is not in the field tower");
            out.push_back(r.constant_value());
          }
          return out;
        };
        ExtensionInstance inst;
        inst.ambient = K;
        inst.sub1_gens = lift(gens1);
        inst.sub2_gens = lift(gens2);
        auto rep = disjointness_check(inst);
        py::dict d;
        d["dim1"] = rep.dim1;
        d["dim2"] = rep.dim2;
        d["dim_compositum"] = rep.dim_compositum;
        d["linearly_disjoint"] = rep.linearly_disjoint;
        return d;
      },
      py::arg("field"), py::arg("gens1"), py::arg("gens2"),
      "Linear disjointness of two subfields inside a common tower.");

  m.def("scenario_names", [] { return scenario_names(); });
  m.def(
      "run_scenario",
      [](const std::string& name, long p, const std::string& base, long n,
         long k, int max_order) {
        ScenarioOptions o;
        o.p = p;
        o.base = base;
        o.n = n;
        o.k = k;
        o.max_order = max_order;
        auto rep = run_scenario(name, o);
        py::dict d;
        d["scenario"] = rep.scenario;
        d["params"] = rep.params;
        d["exit_code"] = report_exit_code(rep);
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict row;
          row["claim"] = r.claim;
          row["computed"] = r.computed;
          row["expected"] = r.expected;
          row["provenance"] = r.provenance;
          row["verdict"] = r.verdict;
          rows.append(row);
        }
        d["rows"] = rows;
        return d;
      },
      py::arg("name"), py::arg("p") = 0, py::arg("base") = "",
      py::arg("n") = 0, py::arg("k") = 0, py::arg("max_order") = 0,
      "Run a named scenario and return its report.");
}
