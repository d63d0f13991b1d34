#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socle/extensions.hpp"
#include "socle/kummer.hpp"
#include "socle/parse.hpp"
#include "socle/scenarios.hpp"

using namespace socle;

namespace {

std::string fmt_vec(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string status_name(SysStatus s) {
  switch (s) {
    case SysStatus::CertifiedIndependent: return "certified-independent";
    case SysStatus::DependenceWitness: return "dependence-witness";
    default: return "inconclusive";
  }
}

void add(ScenarioReport& rep, const std::string& claim,
         const std::string& computed, const std::string& verdict) {
  rep.rows.push_back({claim, computed, "", "derived", verdict});
}

void emit_system(ScenarioReport& rep, const ClassSystem& sys) {
  add(rep, "rank", std::to_string(sys.rank),
      sys.status == SysStatus::Inconclusive ? "inconclusive" : "pass");
  add(rep, "status", status_name(sys.status),
      sys.status == SysStatus::Inconclusive ? "inconclusive" : "pass");
  add(rep, "certified primes", std::to_string(sys.primes.size()), "pass");
  add(rep, "prime support complete", sys.support_complete ? "true" : "false",
      sys.support_complete ? "pass" : "inconclusive");
  if (!sys.witness.empty())
    add(rep, "dependence witness", fmt_vec(sys.witness), "pass");
  if (sys.witness_alpha)
    add(rep, "witness alpha", sys.witness_alpha->to_string(), "pass");
  if (!sys.note.empty()) add(rep, "note", sys.note, "pass");
}

struct CommonOpts {
  std::string field, elems, format = "human";
  long p = 0;
  int jobs = 1;
};

Subgroup parse_subgroup(const GroupPtr& G, const std::string& text) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) members.push_back(std::stoi(tok));
  if (members.empty()) return trivial_subgroup(G);
  return make_subgroup(G, members);
}

std::vector<FieldElement> parse_tower_elements(const FieldPtr& K,
                                               const std::string& text) {
  auto scratch = FunctionFieldDescriptor::make(K, {"__t"}, {});
  std::vector<FieldElement> out;
  for (const auto& r : parse_element_list(scratch, text)) {
    if (!r.is_constant())
      throw SemanticError("generator is not an element of the field tower: " +
                          r.to_string());
    out.push_back(r.constant_value());
  }
  return out;
}

int finish(const ScenarioReport& rep, const std::string& format) {
  std::cout << emit_report(rep, format);
  return report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "socle-lab: exact certificates for multiplicative/additive class "
      "independence, p-socles and p-Frattini quotients, and linear "
      "disjointness"};
  app.require_subcommand(1);

  CommonOpts co;
  std::string group_name, subgroup_spec, target, gens1, gens2, catalog_path;
  std::string scenario_name;
  int max_order = 0;
  long opt_n = 0, opt_k = 0;
  std::string opt_base;

  auto add_common = [&](CLI::App* cmd, bool with_field) {
    if (with_field) {
      cmd->add_option("--field", co.field, "field descriptor")->required();
      cmd->add_option("--elems", co.elems, "comma-separated elements")
          ->required();
    }
    cmd->add_option("--p", co.p, "the prime p")->required();
    cmd->add_option("--format", co.format, "human|jsonl");
    cmd->add_option("--jobs", co.jobs, "worker threads");
  };

  auto* c_kr = app.add_subcommand("kummer-rank",
                                  "rank of multiplicative classes mod p-th "
                                  "powers");
  add_common(c_kr, true);
  auto* c_krel = app.add_subcommand(
      "kummer-relative",
      "rank mod the subgroup generated by pure-T and pure-U elements");
  add_common(c_krel, true);
  auto* c_as = app.add_subcommand("as-rank",
                                  "rank of additive classes mod p-th-power "
                                  "shifts (characteristic p)");
  add_common(c_as, true);
  auto* c_wp = app.add_subcommand("wp-solve",
                                  "solve alpha^p - alpha = b or certify the "
                                  "obstruction");
  add_common(c_wp, true);
  auto* c_mem = app.add_subcommand("membership",
                                   "decide b in <A>*(F*)^p with certificates");
  add_common(c_mem, true);
  c_mem->add_option("--target", target, "the element b")->required();

  auto* c_fr = app.add_subcommand("frattini", "p-Frattini subgroup and rank");
  c_fr->add_option("--group", group_name, "catalog group name")->required();
  add_common(c_fr, false);
  c_fr->add_option("--catalog", catalog_path, "catalog file");

  auto* c_rfr = app.add_subcommand("relative-frattini", "H·Phi^p(G)");
  c_rfr->add_option("--group", group_name, "catalog group name")->required();
  c_rfr->add_option("--subgroup", subgroup_spec,
                    "comma-separated member indices");
  add_common(c_rfr, false);
  c_rfr->add_option("--catalog", catalog_path, "catalog file");

  auto* c_soc = app.add_subcommand("socle",
                                   "p-socle data of a subgroup: Phi^p(G,H) "
                                   "and the elementary abelian rank");
  c_soc->add_option("--group", group_name, "catalog group name")->required();
  c_soc->add_option("--subgroup", subgroup_spec,
                    "comma-separated member indices");
  add_common(c_soc, false);
  c_soc->add_option("--catalog", catalog_path, "catalog file");

  auto* c_dis = app.add_subcommand("disjoint",
                                   "linear disjointness inside a common "
                                   "tower");
  c_dis->add_option("--field", co.field, "tower descriptor")->required();
  c_dis->add_option("--gens1", gens1, "generators of the first subfield")
      ->required();
  c_dis->add_option("--gens2", gens2, "generators of the second subfield")
      ->required();
  c_dis->add_option("--format", co.format, "human|jsonl");

  auto* c_sc = app.add_subcommand("scenario", "run a named scenario");
  c_sc->add_option("name", scenario_name, "scenario name, or 'all'")
      ->required();
  c_sc->add_option("--p", co.p, "prime override");
  c_sc->add_option("--base", opt_base, "base-field override");
  c_sc->add_option("--n", opt_n, "family-size override");
  c_sc->add_option("--k", opt_k, "basis-size override");
  c_sc->add_option("--max-order", max_order, "group-order bound");
  c_sc->add_option("--format", co.format, "human|jsonl");
  c_sc->add_option("--jobs", co.jobs, "worker threads");
  c_sc->add_option("--catalog", catalog_path, "catalog file");

  auto* c_ex = app.add_subcommand("explore",
                                  "scan for socle-equation failures outside "
                                  "the core hypothesis");
  c_ex->add_option("--max-order", max_order, "group-order bound");
  c_ex->add_option("--p", co.p, "the prime p");
  c_ex->add_option("--format", co.format, "human|jsonl");
  c_ex->add_option("--catalog", catalog_path, "catalog file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    Catalog custom;
    const Catalog* cat = nullptr;
    if (!catalog_path.empty()) {
      custom = Catalog::from_file(catalog_path);
      cat = &custom;
    }

    if (c_sc->parsed()) {
      ScenarioOptions so;
      so.p = co.p;
      so.base = opt_base;
      so.n = opt_n;
      so.k = opt_k;
      so.max_order = max_order;
      so.catalog = cat;
      std::vector<std::string> names;
      if (scenario_name == "all") {
        names = scenario_names();
      } else {
        names = {scenario_name};
      }
      std::vector<ScenarioReport> reps;
      if (co.jobs > 1 && names.size() > 1) {
        std::vector<std::future<ScenarioReport>> futs;
        for (const auto& n : names)
          futs.push_back(std::async(std::launch::async,
                                    [&so, n] { return run_scenario(n, so); }));
        for (auto& f : futs) reps.push_back(f.get());
      } else {
        for (const auto& n : names) reps.push_back(run_scenario(n, so));
      }
      for (const auto& r : reps) std::cout << emit_report(r, co.format);
      return reports_exit_code(reps);
    }

    if (c_ex->parsed()) {
      ScenarioOptions so;
      so.p = co.p;
      so.max_order = max_order;
      so.catalog = cat;
      auto rep = run_scenario("prop24-explore", so);
      return finish(rep, co.format);
    }

    ScenarioReport rep;
    if (c_kr->parsed() || c_krel->parsed() || c_as->parsed() ||
        c_wp->parsed() || c_mem->parsed()) {
      auto K = parse_function_field(co.field);
      auto elems = parse_element_list(K, co.elems);
      Int p(co.p);
      if (c_kr->parsed() || c_krel->parsed() || c_mem->parsed())
        require_kummer_request(K, p);
      if (c_as->parsed() || c_wp->parsed())
        require_artin_schreier_request(K, p);

      try {
        if (c_kr->parsed()) {
          rep.scenario = "kummer-rank";
          emit_system(rep, kummer_rank(elems, p));
        } else if (c_krel->parsed()) {
          rep.scenario = "kummer-relative";
          emit_system(rep, kummer_relative_rank(elems, p));
        } else if (c_as->parsed()) {
          rep.scenario = "as-rank";
          emit_system(rep, as_rank(elems, p));
        } else if (c_wp->parsed()) {
          rep.scenario = "wp-solve";
          auto res = wp_solve(elems.at(0), p);
          if (res.solved()) {
            add(rep, "alpha", res.alpha->to_string(), "pass");
          } else {
            add(rep, "obstruction", res.obstruction->reason, "pass");
            if (res.obstruction->prime)
              add(rep, "obstruction prime", res.obstruction->prime->to_string(),
                  "pass");
            if (res.obstruction->reason == "pole-order")
              add(rep, "pole order",
                  std::to_string(res.obstruction->pole_order), "pass");
            if (!res.obstruction->farkas.empty())
              add(rep, "farkas certificate", fmt_vec(res.obstruction->farkas),
                  "pass");
          }
        } else {
          rep.scenario = "membership";
          auto b = parse_element(K, target);
          auto res = pth_root_membership(b, elems, p);
          std::string v = res.verdict == MemberVerdict::Member ? "member"
                          : res.verdict == MemberVerdict::NonMember
                              ? "non-member"
                              : "inconclusive";
          add(rep, "verdict", v,
              res.verdict == MemberVerdict::Inconclusive ? "inconclusive"
                                                         : "pass");
          if (res.verdict == MemberVerdict::Member) {
            add(rep, "exponents", fmt_vec(res.nu), "pass");
            if (res.alpha) add(rep, "alpha", res.alpha->to_string(), "pass");
          }
          if (res.witness_prime)
            add(rep, "witness prime", res.witness_prime->to_string(), "pass");
          if (!res.note.empty()) add(rep, "note", res.note, "pass");
        }
      } catch (const Error& e) {
        rep.rows.push_back({"computation", std::string(e.what()),
                            "no error", "derived", "fail"});
      }
      return finish(rep, co.format);
    }

    if (c_fr->parsed() || c_rfr->parsed() || c_soc->parsed()) {
      const Catalog& use = cat ? *cat : Catalog::builtin();
      const auto& G = use.get(group_name);
      try {
        if (c_fr->parsed()) {
          rep.scenario = "frattini";
          auto [phi, rank] = frattini_p(G, co.p);
          add(rep, "group order", std::to_string(G->order()), "pass");
          add(rep, "frattini order", std::to_string(phi.size()), "pass");
          add(rep, "rank", std::to_string(rank), "pass");
        } else if (c_rfr->parsed()) {
          rep.scenario = "relative-frattini";
          auto H = parse_subgroup(G, subgroup_spec);
          auto phi = relative_frattini(G, H, co.p);
          add(rep, "subgroup order", std::to_string(H.size()), "pass");
          add(rep, "relative frattini order", std::to_string(phi.size()),
              "pass");
        } else {
          rep.scenario = "socle";
          auto H = parse_subgroup(G, subgroup_spec);
          auto s = socle_subgroup(G, H, co.p);
          add(rep, "phi order", std::to_string(s.phi.size()), "pass");
          add(rep, "socle rank", std::to_string(s.rank), "pass");
        }
      } catch (const Error& e) {
        rep.rows.push_back({"computation", std::string(e.what()),
                            "no error", "derived", "fail"});
      }
      return finish(rep, co.format);
    }

    // disjoint
    rep.scenario = "disjoint";
    auto K = parse_base_field(co.field);
    ExtensionInstance inst;
    inst.ambient = K;
    inst.sub1_gens = parse_tower_elements(K, gens1);
    inst.sub2_gens = parse_tower_elements(K, gens2);
    try {
      auto d = disjointness_check(inst);
      add(rep, "dim of first subfield", std::to_string(d.dim1), "pass");
      add(rep, "dim of second subfield", std::to_string(d.dim2), "pass");
      add(rep, "dim of compositum", std::to_string(d.dim_compositum), "pass");
      add(rep, "linearly disjoint", d.linearly_disjoint ? "true" : "false",
          "pass");
    } catch (const Error& e) {
      rep.rows.push_back(
          {"computation", std::string(e.what()), "no error", "derived",
           "fail"});
    }
    return finish(rep, co.format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return 3;
  } catch (const UnknownScenarioError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
