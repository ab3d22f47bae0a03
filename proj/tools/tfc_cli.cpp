// Batch front end over the JSON wire formats. Every subcommand maps to one
// library operation or to a scripted demo; all randomness is seeded.
//
// Exit codes: 0 success, 1 domain error, 2 parse error. Errors are reported
// as machine-readable JSON on stdout.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfc/json_io.hpp"
#include "tfc/tfc.hpp"

using nlohmann::json;
using namespace tfc;

namespace {

struct ParseFailure : std::runtime_error {
  explicit ParseFailure(const std::string& what) : std::runtime_error(what) {}
};

json load_json(const std::string& arg) {
  try {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
      return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ParseFailure("cannot open input file '" + arg + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseFailure(e.what());
  }
}

template <class T>
T load_as(const std::string& arg) {
  try {
    return load_json(arg).get<T>();
  } catch (const ForcingError& e) {
    throw ParseFailure(e.what());
  } catch (const json::exception& e) {
    throw ParseFailure(e.what());
  }
}

Word3 parse_word3(const std::string& s) {
  try {
    return Word3::parse(s);
  } catch (const ForcingError& e) {
    throw ParseFailure(e.what());
  }
}

Word2 parse_word2(const std::string& s) {
  try {
    return Word2::parse(s);
  } catch (const ForcingError& e) {
    throw ParseFailure(e.what());
  }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json validation_json(const ValidationReport& r) {
  return json{{"valid", r.valid}, {"diagnostics", r.issues}};
}

// --- demo helpers ----------------------------------------------------------

std::vector<Word3> common_nodes(const TCondition& a, const TCondition& b,
                                std::size_t depth) {
  auto na = nodes_at_depth(a, depth, depth);
  auto nb = nodes_at_depth(b, depth, depth);
  std::set<std::string> in_b;
  for (const auto& w : nb) in_b.insert(w.str());
  std::vector<Word3> out;
  for (const auto& w : na)
    if (in_b.count(w.str())) out.push_back(w);
  return out;
}

int finish_demo(json result, bool ok) {
  result["ok"] = ok;
  emit(result);
  return ok ? 0 : 1;
}

int demo_antichain(int pairs, std::uint64_t seed) {
  Rng rng(seed);
  int incompatible = 0, brute_checked = 0;
  for (int i = 0; i < pairs; ++i) {
    OddLevelPredicate a, b;
    std::size_t first_diff = 0;
    do {
      a = gen_odd_predicate(rng);
      b = gen_odd_predicate(rng);
      first_diff = 0;
      while (first_diff < 4 && a.contains(first_diff) == b.contains(first_diff))
        ++first_diff;
    } while (first_diff >= 4);  // keep the clash visible at depth 8
    TCondition pa = antichain_condition(a);
    TCondition pb = antichain_condition(b);
    if (is_incompatible(meet(pa, pb))) ++incompatible;
    if (common_nodes(pa, pb, 8).empty()) ++brute_checked;
  }
  return finish_demo(json{{"demo", "antichain"},
                          {"pairs", pairs},
                          {"incompatible", incompatible},
                          {"no_common_node_at_depth_8", brute_checked}},
                     incompatible == pairs && brute_checked == pairs);
}

int demo_lemma23(const Word2& sigma, std::uint64_t seed) {
  Rng rng(seed);
  TCondition p = gen_condition(rng, /*strict=*/true);
  TCondition q = extend_decided(p, sigma);
  bool ok = leq(q, p) && decided_prefix(q) == decided_prefix(p).concat(sigma);
  DecisionPair pair = refute_pure_decision(p);
  Word2 d0 = decided_prefix(pair.q0);
  Word2 d1 = decided_prefix(pair.q1);
  ok = ok && d0[pair.k] != d1[pair.k] &&
       d0.prefix(pair.k) == d1.prefix(pair.k);
  return finish_demo(json{{"demo", "lemma23"},
                          {"p", p},
                          {"q", q},
                          {"decided_p", decided_prefix(p).str()},
                          {"decided_q", decided_prefix(q).str()},
                          {"refutation",
                           json{{"k", pair.k},
                                {"decided_q0", d0.str()},
                                {"decided_q1", d1.str()}}}},
                     ok);
}

int demo_lemma24(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  TCondition p = gen_condition(rng, /*strict=*/true);
  TCondition avoid = mn_witness(p, n);
  bool ok = leq(avoid, p);
  for (int s = 0; s < 20 && ok; ++s) {
    EventualReal z = branch(avoid, gen_selector(rng, /*ensure_two=*/true));
    ok = z.in_H() && !member_mn(z, n);
  }
  EventualReal flat = all_zero_branch(p);
  ok = ok && member_mn(flat, decided_prefix(p).size());

  TCondition ban = nn_witness(p, n);
  bool ok2 = leq(ban, p);
  for (int s = 0; s < 20 && ok2; ++s)
    ok2 = !member_nn(branch(ban, gen_selector(rng, false)), n);
  EventualReal no2 = non2_branch(p);
  ok2 = ok2 && member_nn(no2, p.stem.size());

  return finish_demo(json{{"demo", "lemma24"},
                          {"n", n},
                          {"p", p},
                          {"parity_witness", avoid},
                          {"parity_flat_branch", flat},
                          {"ban_witness", ban},
                          {"two_free_branch", no2}},
                     ok && ok2);
}

int demo_axiom_a(std::size_t k, const std::string& oracle_name,
                 std::uint64_t seed) {
  Rng rng(seed);
  TCondition p = gen_condition(rng, /*strict=*/true);
  DenseOracle oracle = builtin_oracle(oracle_name);
  AxiomARefinement out = axiomA_refine(p, k, oracle);
  std::size_t want = 1;
  for (std::size_t j = 0; j <= k; ++j) want *= 3;
  bool ok = leq_n(out.q, p, k) && out.witnesses.size() == want;
  for (std::size_t j = 0; j < out.nodes.size() && ok; ++j)
    ok = leq(restrict_to(out.q, out.nodes[j]), out.witnesses[j]);
  for (int s = 0; s < 20 && ok; ++s) {
    TCondition r = gen_refinement(rng, out.q);
    std::size_t depth = out.nodes[0].size();
    Word3 node = r.stem.size() >= depth ? r.stem.prefix(depth)
                                        : nodes_at_depth(r, depth, depth)[0];
    std::size_t j = 0;
    while (j < want && !(out.nodes[j] == node)) ++j;
    ok = j < want && leq(restrict_to(r, node), out.witnesses[j]);
  }
  return finish_demo(json{{"demo", "axiom-a"},
                          {"k", k},
                          {"oracle", oracle_name},
                          {"p", p},
                          {"q", out.q},
                          {"witnesses", out.witnesses.size()},
                          {"strict", is_strict(out.q)}},
                     ok);
}

int demo_iso_roundtrip(int count, std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (int i = 0; i < count && ok; ++i) {
    Word3 x;
    int blocks = rng.range(1, 8);
    for (int b = 0; b < blocks; ++b) {
      for (int j = rng.range(0, 6); j > 0; --j) x.push_back(rng.below(2));
      x.push_back(2);
    }
    auto seq = to_increasing_seq(x);
    for (std::size_t j = 1; j < seq.size() && ok; ++j) ok = seq[j] > seq[j - 1];
    ok = ok && from_increasing_seq(seq) == x;
  }
  return finish_demo(json{{"demo", "iso-roundtrip"}, {"count", count}}, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite tree-forcing combinatorics on the ternary alphabet"};
  app.require_subcommand(1);
  std::function<int()> action;

  // shared option storage
  std::string cond_arg, other_arg, node_arg, sigma_arg, real_arg, sel_arg;
  std::string set_arg = "Mn", oracle_arg = "identity", kind_arg = "T";
  std::string word2_arg, seq_arg, pred_arg, mutate_arg;
  std::size_t n_val = 0, k_val = 0, stages_val = 1, depth_val = 8;
  std::uint64_t seed_val = 7, rank_val = 0;
  long samples_val = 200;
  int pairs_val = 50, count_val = 300;

  auto* c_validate = app.add_subcommand("validate", "check a condition");
  c_validate->add_option("--cond", cond_arg)->required();
  bool strict_flag = false;
  c_validate->add_flag("--strict", strict_flag);
  c_validate->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      emit(validation_json(validate(p, strict_flag)));
      return 0;
    };
  });

  auto* c_norm = app.add_subcommand("normalize", "canonical form");
  c_norm->add_option("--cond", cond_arg)->required();
  c_norm->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      emit(json(normalize(p.stem, p.schedule)));
      return 0;
    };
  });

  // two forms: node membership (--cond/--node) and witness-set membership
  // of a real (--set/--n/--real)
  auto* c_member = app.add_subcommand("member", "node or witness-set membership");
  c_member->add_option("--cond", cond_arg);
  c_member->add_option("--node", node_arg);
  auto* mem_set_opt = c_member->add_option("--set", set_arg)
                          ->check(CLI::IsMember({"Mn", "Nn"}));
  c_member->add_option("--n", n_val);
  c_member->add_option("--real", real_arg);
  c_member->callback([&] {
    action = [&] {
      if (mem_set_opt->count() > 0) {
        if (real_arg.empty())
          throw ParseFailure("member --set needs --real (and --n)");
        auto z = load_as<EventualReal>(real_arg);
        bool m = set_arg == "Mn" ? member_mn(z, n_val) : member_nn(z, n_val);
        emit(json{{"member", m}});
        return 0;
      }
      if (cond_arg.empty() || node_arg.empty())
        throw ParseFailure("member needs --cond and --node (or --set form)");
      auto p = load_as<TCondition>(cond_arg);
      emit(json{{"member", member(p, parse_word3(node_arg))}});
      return 0;
    };
  });

  auto* c_restrict = app.add_subcommand("restrict", "restrict to a node");
  c_restrict->add_option("--cond", cond_arg)->required();
  c_restrict->add_option("--node", node_arg)->required();
  c_restrict->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      emit(json(restrict_to(p, parse_word3(node_arg))));
      return 0;
    };
  });

  auto* c_leq = app.add_subcommand("leq", "ordering (optionally fusion ordering)");
  c_leq->add_option("--q", cond_arg)->required();
  c_leq->add_option("--p", other_arg)->required();
  auto* leq_n_opt = c_leq->add_option("--n", n_val);
  c_leq->callback([&] {
    action = [&] {
      auto q = load_as<TCondition>(cond_arg);
      auto p = load_as<TCondition>(other_arg);
      json out{{"leq", leq(q, p)}};
      if (leq_n_opt->count() > 0) {
        out["n"] = n_val;
        out["leq_n"] = leq_n(q, p, n_val);
      }
      emit(out);
      return 0;
    };
  });

  auto* c_meet = app.add_subcommand("meet", "greatest common extension");
  c_meet->add_option("--p", cond_arg)->required();
  c_meet->add_option("--q", other_arg)->required();
  c_meet->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      auto q = load_as<TCondition>(other_arg);
      MeetResult m = meet(p, q);
      if (is_incompatible(m)) {
        const Incompatible& inc = std::get<Incompatible>(m);
        json out{{"compatible", false}};
        switch (inc.reason) {
          case Incompatible::Reason::stem_conflict:
            out["reason"] = "stem-conflict";
            break;
          case Incompatible::Reason::fixed_conflict:
            out["reason"] = "fixed-conflict";
            break;
          case Incompatible::Reason::no_splitting_tail:
            out["reason"] = "no-common-splitting-tail";
            break;
        }
        if (inc.level) out["level"] = *inc.level;
        emit(out);
      } else {
        emit(json{{"compatible", true}, {"meet", std::get<TCondition>(m)}});
      }
      return 0;
    };
  });

  auto* c_anti = app.add_subcommand("antichain", "condition from an odd-level predicate");
  c_anti->add_option("--a", pred_arg)->required();
  c_anti->callback([&] {
    action = [&] {
      emit(json(antichain_condition(load_as<OddLevelPredicate>(pred_arg))));
      return 0;
    };
  });

  auto* c_branch = app.add_subcommand("branch", "branch along a selector");
  c_branch->add_option("--cond", cond_arg)->required();
  c_branch->add_option("--sel", sel_arg)->required();
  c_branch->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      emit(json(branch(p, load_as<BranchSelector>(sel_arg))));
      return 0;
    };
  });

  auto* c_nodes = app.add_subcommand("nodes", "enumerate nodes at a depth");
  c_nodes->add_option("--cond", cond_arg)->required();
  c_nodes->add_option("--depth", depth_val)->required();
  std::size_t limit_val = kDefaultDepthLimit;
  c_nodes->add_option("--limit", limit_val);
  c_nodes->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      auto nodes = nodes_at_depth(p, depth_val, limit_val);
      std::vector<std::string> words;
      words.reserve(nodes.size());
      for (const auto& w : nodes) words.push_back(w.str());
      emit(json{{"depth", depth_val}, {"count", words.size()}, {"nodes", words}});
      return 0;
    };
  });

  auto* c_extend = app.add_subcommand("extend-cohen", "extend the decided prefix");
  c_extend->add_option("--cond", cond_arg)->required();
  c_extend->add_option("--sigma", sigma_arg)->required();
  c_extend->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      TCondition q = extend_decided(p, parse_word2(sigma_arg));
      emit(json{{"q", q}, {"decided", decided_prefix(q).str()}});
      return 0;
    };
  });

  auto* c_refute = app.add_subcommand("refute-pd", "opposite-deciding pair");
  c_refute->add_option("--cond", cond_arg)->required();
  c_refute->callback([&] {
    action = [&] {
      auto q = load_as<TCondition>(cond_arg);
      DecisionPair d = refute_pure_decision(q);
      emit(json{{"k", d.k}, {"q0", d.q0}, {"q1", d.q1}});
      return 0;
    };
  });

  auto* c_graft = app.add_subcommand("graft", "copy a donor above a splitting level");
  c_graft->add_option("--cond", cond_arg)->required();
  c_graft->add_option("--k", k_val)->required();
  c_graft->add_option("--pj", other_arg)->required();
  c_graft->callback([&] {
    action = [&] {
      auto q = load_as<TCondition>(cond_arg);
      auto donor = load_as<TCondition>(other_arg);
      TCondition g = graft_one(q, k_val, donor);
      emit(json{{"q", g}, {"strict", is_strict(g)}});
      return 0;
    };
  });

  auto* c_axa = app.add_subcommand("axiom-a", "one amalgamation round");
  c_axa->add_option("--cond", cond_arg)->required();
  c_axa->add_option("--k", k_val)->required();
  c_axa->add_option("--oracle", oracle_arg);
  c_axa->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      AxiomARefinement out = axiomA_refine(p, k_val, builtin_oracle(oracle_arg));
      std::vector<std::string> nodes;
      for (const auto& t : out.nodes) nodes.push_back(t.str());
      emit(json{{"q", out.q},
                {"witnesses", out.witnesses},
                {"nodes", nodes},
                {"strict", is_strict(out.q)}});
      return 0;
    };
  });

  auto* c_qp = app.add_subcommand("quasi-pure", "stem-preserving fusion stages");
  c_qp->add_option("--cond", cond_arg)->required();
  c_qp->add_option("--stages", stages_val)->required();
  c_qp->add_option("--oracle", oracle_arg);
  c_qp->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      QuasiPureResult out =
          quasi_pure_refine(p, stages_val, builtin_oracle(oracle_arg));
      json steps = json::array();
      for (const auto& s : out.log) {
        json step{{"stage", s.stage}, {"node", s.node.str()}, {"refined", s.refined}};
        if (s.witness) step["witness"] = *s.witness;
        steps.push_back(step);
      }
      emit(json{{"q", out.q}, {"log", steps}});
      return 0;
    };
  });

  auto* c_wit = app.add_subcommand("witness", "avoid one witness set below a condition");
  c_wit->add_option("--set", set_arg)->check(CLI::IsMember({"Mn", "Nn"}));
  c_wit->add_option("--n", n_val)->required();
  c_wit->add_option("--cond", cond_arg)->required();
  c_wit->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      TCondition w = set_arg == "Mn" ? mn_witness(p, n_val) : nn_witness(p, n_val);
      emit(json(w));
      return 0;
    };
  });

  auto* c_mem = app.add_subcommand("member-set", "witness-set membership of a real");
  c_mem->add_option("--set", set_arg)->check(CLI::IsMember({"Mn", "Nn"}));
  c_mem->add_option("--n", n_val)->required();
  c_mem->add_option("--real", real_arg)->required();
  c_mem->callback([&] {
    action = [&] {
      auto z = load_as<EventualReal>(real_arg);
      bool m = set_arg == "Mn" ? member_mn(z, n_val) : member_nn(z, n_val);
      emit(json{{"member", m}});
      return 0;
    };
  });

  auto* c_come = app.add_subcommand("comeager-branch",
                                    "branch hitting the union of the family");
  c_come->add_option("--cond", cond_arg)->required();
  c_come->add_option("--set", set_arg)->check(CLI::IsMember({"Mn", "Nn"}));
  c_come->callback([&] {
    action = [&] {
      auto p = load_as<TCondition>(cond_arg);
      EventualReal z = set_arg == "Mn" ? all_zero_branch(p) : non2_branch(p);
      emit(json(z));
      return 0;
    };
  });

  auto* c_isob = app.add_subcommand("iso-b", "length-lex rank of binary words");
  auto* w2opt = c_isob->add_option("--word2", word2_arg);
  auto* rkopt = c_isob->add_option("--n", rank_val);
  c_isob->callback([&] {
    action = [&] {
      if (w2opt->count() > 0)
        emit(json{{"n", lex_rank(parse_word2(word2_arg))}});
      else if (rkopt->count() > 0)
        emit(json{{"word2", lex_unrank(rank_val).str()}});
      else
        throw ParseFailure("iso-b needs --word2 or --n");
      return 0;
    };
  });

  auto* c_isophi = app.add_subcommand("iso-phi", "word ending in 2 -> increasing sequence");
  c_isophi->add_option("--word", node_arg)->required();
  c_isophi->callback([&] {
    action = [&] {
      emit(incr_json(to_increasing_seq(parse_word3(node_arg))));
      return 0;
    };
  });

  auto* c_isoinv = app.add_subcommand("iso-phi-inv", "increasing sequence -> word");
  c_isoinv->add_option("--seq", seq_arg)->required();
  c_isoinv->callback([&] {
    action = [&] {
      json j = load_json(seq_arg);
      std::vector<std::uint64_t> s;
      try {
        s = j.is_array() ? j.get<std::vector<std::uint64_t>>() : incr_from_json(j);
      } catch (const json::exception& e) {
        throw ParseFailure(e.what());
      }
      emit(json{{"word", from_increasing_seq(s).str()}});
      return 0;
    };
  });

  auto* c_ccp = app.add_subcommand("check-coding-pair", "property-check a coding pair");
  c_ccp->add_option("--kind", kind_arg)->check(CLI::IsMember({"T", "HechlerOmega"}));
  c_ccp->add_option("--samples", samples_val);
  c_ccp->add_option("--seed", seed_val);
  c_ccp->add_option("--mutate", mutate_arg)
      ->check(CLI::IsMember({"truncated-code", "shifted-alignment", "flipped-realizer"}));
  c_ccp->callback([&] {
    action = [&] {
      std::optional<CodingPairMutation> mutation;
      if (mutate_arg == "truncated-code")
        mutation = CodingPairMutation::truncated_code;
      else if (mutate_arg == "shifted-alignment")
        mutation = CodingPairMutation::shifted_alignment;
      else if (mutate_arg == "flipped-realizer")
        mutation = CodingPairMutation::flipped_realizer;
      CodingPairReport rep;
      if (kind_arg == "T") {
        auto cp = tree_coding_pair();
        if (mutation) cp = apply_mutation(cp, *mutation);
        rep = check_coding_pair(cp, tree_coding_harness(), samples_val, seed_val);
      } else {
        auto cp = hechler_coding_pair();
        if (mutation) cp = apply_mutation(cp, *mutation);
        rep = check_coding_pair(cp, hechler_coding_harness(), samples_val, seed_val);
      }
      emit(json{{"kind", kind_arg},
                {"samples", rep.samples},
                {"ok", rep.ok()},
                {"counterexamples", rep.counterexamples}});
      return rep.ok() == mutate_arg.empty() ? 0 : 1;
    };
  });

  auto* c_demo = app.add_subcommand("demo", "scripted end-to-end scenarios");
  c_demo->require_subcommand(1);

  auto* d_anti = c_demo->add_subcommand("antichain");
  d_anti->add_option("--pairs", pairs_val);
  d_anti->add_option("--seed", seed_val);
  d_anti->callback([&] { action = [&] { return demo_antichain(pairs_val, seed_val); }; });

  auto* d_l23 = c_demo->add_subcommand("lemma23");
  d_l23->add_option("--sigma", sigma_arg)->required();
  d_l23->add_option("--seed", seed_val);
  d_l23->callback([&] {
    action = [&] { return demo_lemma23(parse_word2(sigma_arg), seed_val); };
  });

  auto* d_l24 = c_demo->add_subcommand("lemma24");
  d_l24->add_option("--n", n_val);
  d_l24->add_option("--seed", seed_val);
  d_l24->callback([&] { action = [&] { return demo_lemma24(n_val, seed_val); }; });

  auto* d_axa = c_demo->add_subcommand("axiom-a");
  d_axa->add_option("--k", k_val);
  d_axa->add_option("--oracle", oracle_arg);
  d_axa->add_option("--seed", seed_val);
  d_axa->callback([&] {
    action = [&] { return demo_axiom_a(k_val, oracle_arg, seed_val); };
  });

  auto* d_iso = c_demo->add_subcommand("iso-roundtrip");
  d_iso->add_option("--count", count_val);
  d_iso->add_option("--seed", seed_val);
  d_iso->callback([&] {
    action = [&] { return demo_iso_roundtrip(count_val, seed_val); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ParseFailure& e) {
    emit(json{{"error", "parse"}, {"detail", e.what()}});
    return 2;
  } catch (const OracleViolation& e) {
    emit(json{{"error", "oracle"}, {"detail", e.what()}});
    return 1;
  } catch (const ForcingError& e) {
    emit(json{{"error", "domain"}, {"detail", e.what()}});
    return 1;
  } catch (const json::exception& e) {
    emit(json{{"error", "parse"}, {"detail", e.what()}});
    return 2;
  }
}
