#include "acs/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <random>

#include "acs/adaptive.hpp"
#include "acs/adversary.hpp"
#include "acs/combinatorics.hpp"
#include "acs/json_io.hpp"
#include "acs/nonadaptive.hpp"
#include "acs/oracle.hpp"

namespace acs {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// rng() % bound is deterministic across platforms, unlike
// std::uniform_int_distribution; the slight modulo bias is irrelevant here.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Antichain random_antichain(int n, int k, std::uint64_t seed) {
  check_ground_set(n);
  if (k < 1) throw ContractError("random_antichain: k must be >= 1");
  std::mt19937_64 rng(seed);

  if (n <= 6) {
    const auto all = enumerate_antichains(n, k);
    if (all.empty())
      throw UnsupportedRegimeError("random_antichain: no k-antichain on [n]");
    return all[bounded(rng, all.size())];
  }

  const Mask full = full_mask(n);
  for (int attempt = 0; attempt < 10'000'000; ++attempt) {
    std::vector<Mask> members;
    for (int i = 0; i < k; ++i)
      members.push_back(static_cast<Mask>(rng()) & full);
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      continue;
    Family f{n, std::move(members)};
    if (is_antichain(f)) return f;
  }
  throw ResourceError("random_antichain: rejection sampling did not converge");
}

namespace {

json solve_report(Oracle& oracle, const SolveResult& r, long long bound) {
  json transcript = json::array();
  for (const auto& e : oracle.log().entries)
    transcript.push_back(json{{"query", elements_of(e.query)}, {"answer", e.answer}});
  return json{{"schema_version", kSchemaVersion},
              {"found", family_to_json(r.found)},
              {"queries_used", r.queries_used},
              {"bound", bound},
              {"transcript", std::move(transcript)}};
}

struct CliState {
  int n = 0, k = 0, m = 0, size_a = 0;
  std::string family_str, hidden_str, answers_str;
  bool random = false;
  std::uint64_t seed = 0;
  int json_indent = 2;
  std::uint64_t node_budget = 50'000'000;
  json result;
};

Antichain resolve_hidden(const CliState& st) {
  if (!st.hidden_str.empty())
    return family_from_json(json::parse(st.hidden_str));
  if (st.random) return random_antichain(st.n, st.k, st.seed);
  throw ContractError("provide --hidden or --random");
}

Family resolve_family_or_build(const CliState& st) {
  if (!st.family_str.empty())
    return family_from_json(json::parse(st.family_str));
  return build_family(st.n, st.k);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"hidden-antichain identification toolkit"};
  app.require_subcommand(1);
  CliState st;

  app.add_option("--seed", st.seed, "seed for randomized hidden antichains");
  app.add_option("--json-indent", st.json_indent, "JSON output indentation");

  auto add_n = [&](CLI::App* c) { c->add_option("--n", st.n)->required(); };
  auto add_k = [&](CLI::App* c) { c->add_option("--k", st.k)->required(); };

  auto* nonadaptive = app.add_subcommand("nonadaptive");
  auto* na_build = nonadaptive->add_subcommand("build");
  add_n(na_build);
  add_k(na_build);
  na_build->callback([&] {
    st.result = json{{"schema_version", kSchemaVersion},
                     {"n", st.n},
                     {"k", st.k},
                     {"h", h_formula(st.n, st.k)},
                     {"family", family_to_json(build_family(st.n, st.k))}};
  });

  auto* na_verify = nonadaptive->add_subcommand("verify");
  add_n(na_verify);
  add_k(na_verify);
  na_verify->add_option("--family", st.family_str);
  na_verify->callback([&] {
    const Family f = resolve_family_or_build(st);
    st.result = json{{"schema_version", kSchemaVersion},
                     {"n", st.n},
                     {"k", st.k},
                     {"family_size", f.members.size()},
                     {"identifying", verify_identifying(f, st.n, st.k)}};
  });

  auto* na_decode = nonadaptive->add_subcommand("decode");
  add_n(na_decode);
  add_k(na_decode);
  na_decode->add_option("--family", st.family_str);
  na_decode->add_option("--answers", st.answers_str)->required();
  na_decode->callback([&] {
    const Family f = resolve_family_or_build(st);
    const auto answers = json::parse(st.answers_str).get<std::vector<bool>>();
    st.result = json{{"schema_version", kSchemaVersion},
                     {"antichain", family_to_json(decode(st.n, st.k, f, answers))}};
  });

  auto* adaptive = app.add_subcommand("adaptive");
  auto* ad_solve = adaptive->add_subcommand("solve");
  add_n(ad_solve);
  add_k(ad_solve);
  ad_solve->add_option("--hidden", st.hidden_str);
  ad_solve->add_flag("--random", st.random);
  ad_solve->callback([&] {
    const Antichain hidden = resolve_hidden(st);
    if (static_cast<int>(hidden.members.size()) != st.k)
      throw ContractError("hidden antichain must have exactly k members");
    AntichainOracle oracle(hidden);
    const SolveResult r = solve(oracle, st.k);
    long long bound = static_cast<long long>(st.k) * st.n;
    for (auto s : r.mc_sizes) bound += static_cast<long long>(s);
    st.result = solve_report(oracle, r, bound);
    st.result["hidden"] = family_to_json(hidden);
  });

  auto* ad_k2 = adaptive->add_subcommand("solve-k2");
  add_n(ad_k2);
  ad_k2->add_option("--hidden", st.hidden_str);
  ad_k2->add_flag("--random", st.random);
  ad_k2->callback([&] {
    st.k = 2;
    const Antichain hidden = resolve_hidden(st);
    if (hidden.members.size() != 2)
      throw ContractError("hidden antichain must have exactly 2 members");
    AntichainOracle oracle(hidden);
    const SolveResult r = solve_k2(oracle);
    st.result = solve_report(oracle, r, 2LL * st.n);
    st.result["hidden"] = family_to_json(hidden);
  });

  auto* ad_exact = adaptive->add_subcommand("exact-f");
  add_n(ad_exact);
  add_k(ad_exact);
  ad_exact->add_option("--node-budget", st.node_budget);
  ad_exact->callback([&] {
    ExactFOptions opts;
    opts.node_budget = st.node_budget;
    st.result = json{{"schema_version", kSchemaVersion},
                     {"n", st.n},
                     {"k", st.k},
                     {"f", exact_f(st.n, st.k, opts)}};
  });

  auto* adversary = app.add_subcommand("adversary");
  auto* adv_play = adversary->add_subcommand("play");
  add_n(adv_play);
  add_k(adv_play);
  adv_play->callback([&] {
    const PlayResult r = play_theorem5(st.n, st.k);
    st.result = json{{"schema_version", kSchemaVersion},
                     {"queries_used", r.candidate_queries},
                     {"lower_bound", r.lower_bound},
                     {"ok", r.ok}};
  });

  auto* adv_conf = adversary->add_subcommand("confusion");
  add_n(adv_conf);
  add_k(adv_conf);
  adv_conf->add_option("--family", st.family_str)->required();
  adv_conf->callback([&] {
    const Family f = family_from_json(json::parse(st.family_str));
    const auto pair = confusion_pair(f, st.n, st.k);
    st.result = json{{"schema_version", kSchemaVersion},
                     {"confused", pair.has_value()}};
    st.result["pair"] =
        pair ? json::array({family_to_json(pair->first), family_to_json(pair->second)})
             : json();
  });

  auto* adv_cert = adversary->add_subcommand("certificate-k2");
  add_n(adv_cert);
  adv_cert->add_option("--size-a", st.size_a)->required();
  adv_cert->callback([&] {
    const K2Certificate c = k2_first_query_certificate(st.n, st.size_a);
    st.result = json{{"schema_version", kSchemaVersion},
                     {"lower_bound", c.lower_bound},
                     {"threshold", c.threshold},
                     {"ok", c.lower_bound > c.threshold}};
  });

  auto* comb = app.add_subcommand("comb");
  auto* comb_g = comb->add_subcommand("g");
  add_n(comb_g);
  comb_g->add_option("--m", st.m)->required();
  comb_g->callback([&] {
    const GBruteResult r = g_bruteforce(st.n, st.m);
    st.result = json{{"schema_version", kSchemaVersion},
                     {"g_bruteforce", r.value},
                     {"g_formula", g_formula(st.n, st.m)},
                     {"witness", family_to_json(r.witness)}};
  });

  auto* comb_mc = comb->add_subcommand("mc");
  comb_mc->add_option("--family", st.family_str)->required();
  comb_mc->callback([&] {
    const Family f = family_from_json(json::parse(st.family_str));
    st.result = json{{"schema_version", kSchemaVersion},
                     {"minimal_covers", family_to_json(minimal_covers(f))}};
  });

  auto* comb_count = comb->add_subcommand("count-antichains");
  add_n(comb_count);
  comb_count->callback([&] {
    st.result = json{{"schema_version", kSchemaVersion},
                     {"A", antichain_pair_count(st.n)}};
  });

  auto* comb_h = comb->add_subcommand("exact-h");
  add_n(comb_h);
  add_k(comb_h);
  comb_h->callback([&] {
    st.result = json{{"schema_version", kSchemaVersion},
                     {"h", exact_h_search(st.n, st.k)}};
  });

  for (auto* group : {nonadaptive, adaptive, adversary, comb}) {
    group->require_subcommand(1);
    group->fallthrough();
    for (auto* sub : group->get_subcommands({})) sub->fallthrough();
  }

  std::vector<const char*> argv;
  argv.push_back("acs");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help() << std::flush;
    return 64;
  } catch (const ResourceError& e) {
    out << json{{"schema_version", kSchemaVersion},
                {"error", {{"type", "resource"}, {"message", e.what()}}}}
               .dump(st.json_indent)
        << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << json{{"schema_version", kSchemaVersion},
                {"error", {{"type", "contract"}, {"message", e.what()}}}}
               .dump(st.json_indent)
        << "\n";
    return 1;
  }

  out << st.result.dump(st.json_indent) << "\n";
  return 0;
}

}  // namespace acs
